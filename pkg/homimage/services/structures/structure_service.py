"""
Structure Service for validating, restricting and canonicalizing finite binary structures
"""
import logging
from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from homimage.core.exceptions import KindViolation, OutOfRange
from homimage.models.models import Kind, LoopModel, Mapping, Shape, Structure
from homimage.utils.bit_utils import bits, mask_of, popcount

logger = logging.getLogger(__name__)

CanonicalKey = Tuple[int, Tuple[int, ...]]


class StructureService:
    """Kind checks, induced substructures and isomorphism via canonical labeling"""

    def validate(self, structure: Structure, kind: Kind) -> None:
        """Raise KindViolation at the first lexicographic pair that breaks the kind"""
        if kind.shape == Shape.TOURNAMENT and kind.model == LoopModel.PLAIN:
            raise KindViolation("tournaments must be reflexive or irreflexive")

        for u in structure.vertices:
            for v in structure.vertices:
                reason = self._pair_violation(structure, kind, u, v)
                if reason is not None:
                    logger.debug(f"Kind {kind} violated at ({u}, {v}): {reason}")
                    raise KindViolation(reason, (u, v))

    def _pair_violation(self, structure: Structure, kind: Kind, u: int, v: int) -> Optional[str]:
        forward = structure.has_edge(u, v)
        if u == v:
            if kind.model == LoopModel.REFLEXIVE and not forward:
                return "missing loop in reflexive model"
            if kind.model == LoopModel.IRREFLEXIVE and forward:
                return "loop in irreflexive model"
            return None

        backward = structure.has_edge(v, u)
        if kind.shape == Shape.GRAPH and forward != backward:
            return "asymmetric edge in graph"
        if kind.shape == Shape.TOURNAMENT and forward == backward:
            return "tournament pair must have exactly one direction"
        return None

    def satisfies(self, structure: Structure, kind: Kind) -> bool:
        try:
            self.validate(structure, kind)
            return True
        except KindViolation:
            return False

    def infer_kind(self, structure: Structure) -> Kind:
        """Most specific kind the structure satisfies (tournament, graph, digraph)"""
        for shape in (Shape.TOURNAMENT, Shape.GRAPH, Shape.DIGRAPH):
            for model in (LoopModel.REFLEXIVE, LoopModel.IRREFLEXIVE, LoopModel.PLAIN):
                kind = Kind(shape=shape, model=model)
                if shape == Shape.TOURNAMENT and model == LoopModel.PLAIN:
                    continue
                if self.satisfies(structure, kind):
                    return kind
        # every structure is a plain digraph
        return Kind(shape=Shape.DIGRAPH, model=LoopModel.PLAIN)

    def induced(self, structure: Structure, vertices: Iterable[int]) -> Structure:
        """Substructure on the given vertices, relabeled in ascending order"""
        chosen = sorted(set(vertices))
        for v in chosen:
            if not 0 <= v < structure.n:
                raise OutOfRange(f"vertex {v} not in structure of size {structure.n}")
        position = {v: i for i, v in enumerate(chosen)}
        edges = (
            (position[u], position[v])
            for u, v in structure.edges
            if u in position and v in position
        )
        return Structure.from_edges(len(chosen), edges)

    def relabel(self, structure: Structure, mapping: Sequence[int]) -> Structure:
        """Image of a structure under a bijection given as mapping[old] = new"""
        return Structure.from_edges(
            structure.n, ((mapping[u], mapping[v]) for u, v in structure.edges)
        )

    def are_isomorphic(self, first: Structure, second: Structure) -> bool:
        if first.n != second.n or len(first.edges) != len(second.edges):
            return False
        return self.canonical_key(first) == self.canonical_key(second)

    def canonical_form(self, structure: Structure) -> Structure:
        n, rows = self.canonical_key(structure)
        return Structure.from_masks(n, rows)

    def canonical_key(self, structure: Structure) -> CanonicalKey:
        rows, _ = self._canonical_rows(structure.n, structure.out_masks, structure.in_masks)
        return structure.n, rows

    def canonical_labeling(self, structure: Structure) -> Tuple[Structure, Mapping]:
        """Canonical form plus an isomorphism from the input onto it"""
        rows, position = self._canonical_rows(
            structure.n, structure.out_masks, structure.in_masks
        )
        mapping = Mapping(
            source_size=structure.n, target_size=structure.n, values=tuple(position)
        )
        return Structure.from_masks(structure.n, rows), mapping

    def is_connected(self, structure: Structure) -> bool:
        """Connectivity of the underlying undirected loopless graph"""
        if structure.n <= 1:
            return True
        graph = nx.Graph()
        graph.add_nodes_from(structure.vertices)
        graph.add_edges_from(structure.non_loop_edges())
        return nx.is_connected(graph)

    # Canonical labeling: individualization-refinement over an ordered equitable
    # partition, taking the minimum relabeled row tuple over all leaves.
    # Transposition-twins inside a cell are branched on once.

    def _canonical_rows(
        self, n: int, out: Sequence[int], inn: Sequence[int]
    ) -> Tuple[Tuple[int, ...], List[int]]:
        if n == 0:
            return (), []

        groups: dict = {}
        for v in range(n):
            groups.setdefault((out[v] >> v & 1,), []).append(v)
        cells = [groups[key] for key in sorted(groups)]
        cells = self._refine(out, inn, cells)

        best: List = [None, None]
        self._search(n, out, inn, cells, best)
        return best[0], best[1]

    def _refine(self, out: Sequence[int], inn: Sequence[int], cells: List[List[int]]) -> List[List[int]]:
        while True:
            cell_masks = [mask_of(cell) for cell in cells]
            refined: List[List[int]] = []
            for cell in cells:
                if len(cell) == 1:
                    refined.append(cell)
                    continue
                split: dict = {}
                for v in cell:
                    signature = tuple(
                        (popcount(out[v] & m), popcount(inn[v] & m)) for m in cell_masks
                    )
                    split.setdefault(signature, []).append(v)
                refined.extend(split[signature] for signature in sorted(split))
            if len(refined) == len(cells):
                return refined
            cells = refined

    def _search(self, n: int, out, inn, cells: List[List[int]], best: List) -> None:
        target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
        if target is None:
            order = [cell[0] for cell in cells]
            position = [0] * n
            for i, v in enumerate(order):
                position[v] = i
            rows = tuple(
                sum(1 << position[w] for w in bits(out[v])) for v in order
            )
            if best[0] is None or rows < best[0]:
                best[0], best[1] = rows, position
            return

        cell = cells[target]
        for v in self._twin_representatives(out, inn, cell):
            rest = [w for w in cell if w != v]
            individualized = cells[:target] + [[v], rest] + cells[target + 1:]
            self._search(n, out, inn, self._refine(out, inn, individualized), best)

    def _twin_representatives(self, out, inn, cell: List[int]) -> List[int]:
        representatives: List[int] = []
        for v in cell:
            if not any(self._are_twins(out, inn, r, v) for r in representatives):
                representatives.append(v)
        return representatives

    @staticmethod
    def _are_twins(out, inn, u: int, w: int) -> bool:
        pair = ~((1 << u) | (1 << w))
        return (
            out[u] & pair == out[w] & pair
            and inn[u] & pair == inn[w] & pair
            and (out[u] >> u & 1) == (out[w] >> w & 1)
            and (out[u] >> w & 1) == (out[w] >> u & 1)
        )


# Service instance
structure_service = StructureService()
