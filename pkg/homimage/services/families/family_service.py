"""
Family Service for the named structure families
"""
import logging
from typing import Callable, Dict, List, Tuple

from homimage.core.exceptions import KindViolation, RangeError
from homimage.models.models import FamilyName, Kind, LoopModel, Shape, Structure
from homimage.services.structures.structure_service import structure_service

logger = logging.getLogger(__name__)

REFLEXIVE_GRAPH = Kind(shape=Shape.GRAPH, model=LoopModel.REFLEXIVE)
REFLEXIVE_DIGRAPH = Kind(shape=Shape.DIGRAPH, model=LoopModel.REFLEXIVE)
REFLEXIVE_TOURNAMENT = Kind(shape=Shape.TOURNAMENT, model=LoopModel.REFLEXIVE)


class FamilyService:
    """Generators for complete, empty, subcomplete and parity families (0-indexed)"""

    def complete_graph(self, n: int, model: LoopModel = LoopModel.REFLEXIVE) -> Structure:
        self._check_size(n)
        edges = [(u, v) for u in range(n) for v in range(n) if u != v]
        return Structure.from_edges(n, edges + self._loops(n, model))

    def empty_graph(self, n: int, model: LoopModel = LoopModel.REFLEXIVE) -> Structure:
        self._check_size(n)
        return Structure.from_edges(n, self._loops(n, model))

    def subcomplete_graph(self, n: int, k: int) -> Structure:
        """Reflexive K_n without the edges {0,1}, {2,3}, ..., {2k-2,2k-1}"""
        self._check_subcomplete(n, k)
        removed = {(2 * i, 2 * i + 1) for i in range(k)} | {(2 * i + 1, 2 * i) for i in range(k)}
        complete = self.complete_graph(n, LoopModel.REFLEXIVE)
        return Structure.from_edges(n, complete.edges - removed)

    def complete_digraph(self, n: int, model: LoopModel = LoopModel.REFLEXIVE) -> Structure:
        # same edge set as the complete graph; kept separate for the digraph kind
        return self.complete_graph(n, model)

    def subcomplete_digraph(self, n: int, k: int) -> Structure:
        """Reflexive complete digraph without (0,1), (2,3), ..., (2k-2,2k-1); reverse edges stay"""
        self._check_subcomplete(n, k)
        removed = {(2 * i, 2 * i + 1) for i in range(k)}
        complete = self.complete_digraph(n, LoopModel.REFLEXIVE)
        return Structure.from_edges(n, complete.edges - removed)

    def bidirect(self, graph: Structure) -> Structure:
        """A reflexive graph read as a digraph with each edge in both directions"""
        structure_service.validate(graph, REFLEXIVE_GRAPH)
        return graph

    def parity_tournament(self, n: int) -> Structure:
        """
        Reflexive tournament on odd n: for u < v the edge points u -> v when
        v - u is odd and v -> u when it is even.
        """
        if n < 1 or n % 2 == 0:
            raise RangeError(f"parity tournaments need odd n >= 1, got {n}")
        edges = [(v, v) for v in range(n)]
        for u in range(n):
            for v in range(u + 1, n):
                edges.append((u, v) if (v - u) % 2 else (v, u))
        return Structure.from_edges(n, edges)

    def build(
        self, name: FamilyName, params: List[int], model: LoopModel = LoopModel.REFLEXIVE
    ) -> Tuple[Structure, Kind]:
        """Look a family up by name; `bidirect n k` bidirects subcomplete_graph(n, k)"""
        builders: Dict[FamilyName, Tuple[int, Callable[..., Structure], Kind]] = {
            FamilyName.COMPLETE_GRAPH: (
                1, lambda n: self.complete_graph(n, model), Kind(shape=Shape.GRAPH, model=model)
            ),
            FamilyName.EMPTY_GRAPH: (
                1, lambda n: self.empty_graph(n, model), Kind(shape=Shape.GRAPH, model=model)
            ),
            FamilyName.SUBCOMPLETE_GRAPH: (2, self.subcomplete_graph, REFLEXIVE_GRAPH),
            FamilyName.COMPLETE_DIGRAPH: (
                1, lambda n: self.complete_digraph(n, model), Kind(shape=Shape.DIGRAPH, model=model)
            ),
            FamilyName.SUBCOMPLETE_DIGRAPH: (2, self.subcomplete_digraph, REFLEXIVE_DIGRAPH),
            FamilyName.BIDIRECT: (
                2, lambda n, k: self.bidirect(self.subcomplete_graph(n, k)), REFLEXIVE_DIGRAPH
            ),
            FamilyName.PARITY_TOURNAMENT: (1, self.parity_tournament, REFLEXIVE_TOURNAMENT),
        }
        arity, builder, kind = builders[name]
        if len(params) != arity:
            raise RangeError(f"family {name.value} takes {arity} integer parameter(s)")
        if kind.model == LoopModel.PLAIN:
            raise KindViolation(f"family {name.value} is defined for reflexive or irreflexive models")
        structure = builder(*params)
        logger.debug(f"Built {name.value}{tuple(params)} with {len(structure.edges)} edges")
        return structure, kind

    @staticmethod
    def _loops(n: int, model: LoopModel) -> List[Tuple[int, int]]:
        return [(v, v) for v in range(n)] if model == LoopModel.REFLEXIVE else []

    @staticmethod
    def _check_size(n: int) -> None:
        if n < 0:
            raise RangeError(f"vertex count must be nonnegative, got {n}")

    @staticmethod
    def _check_subcomplete(n: int, k: int) -> None:
        if k < 0 or 2 * k > n:
            raise RangeError(f"subcomplete families need 0 <= 2k <= n, got n={n}, k={k}")


# Service instance
family_service = FamilyService()
