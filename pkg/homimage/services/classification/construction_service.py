"""
Construction Service for the explicit epimorphisms behind the wqo verdicts
"""
import itertools
import logging
from typing import List, Optional

from homimage.core.exceptions import PreconditionViolated, VerificationFailed
from homimage.models.models import Kind, LoopModel, Mapping, Shape, Strength, Structure
from homimage.services.decomposition.decomposition_service import decomposition_service
from homimage.services.families.family_service import family_service
from homimage.services.homomorphism.hom_service import homomorphism_service
from homimage.services.structures.structure_service import structure_service

logger = logging.getLogger(__name__)

REFLEXIVE_GRAPH = Kind(shape=Shape.GRAPH, model=LoopModel.REFLEXIVE)
REFLEXIVE_DIGRAPH = Kind(shape=Shape.DIGRAPH, model=LoopModel.REFLEXIVE)


class ConstructionService:
    def complete_strong_epimorphism(self, structure: Structure, n: int, directed: bool = False) -> Mapping:
        """
        Strong epimorphism onto the reflexive complete graph (or digraph) on n vertices.

        Graphs need n(n-1)/2 disjoint edges, one per edge of K_n; digraphs need
        n^2 disjoint edges, one per ordered pair including the loop pairs.
        Every vertex outside the chosen edges goes to 0.
        """
        if n < 1 or structure.n < n:
            raise PreconditionViolated(f"need 1 <= n <= {structure.n}, got {n}")
        if directed:
            targets = [(x, y) for x in range(n) for y in range(n)]
            target = family_service.complete_digraph(n, LoopModel.REFLEXIVE)
        else:
            structure_service.validate(structure, REFLEXIVE_GRAPH)
            targets = list(itertools.combinations(range(n), 2))
            target = family_service.complete_graph(n, LoopModel.REFLEXIVE)

        disjoint = decomposition_service.max_disjoint_edges(structure)
        if disjoint.size < len(targets):
            raise PreconditionViolated(
                f"{len(targets)} disjoint edges needed, only {disjoint.size} available"
            )

        values = [0] * structure.n
        for (a, b), (x, y) in zip(disjoint.pairs, targets):
            values[a], values[b] = x, y
        return self._verified(structure, target, values, Strength.STRONG)

    def subcomplete_epimorphism(self, graph: Structure, n: int, k: int) -> Mapping:
        """Epimorphism of a reflexive graph with k disjoint non-edges onto N(n, k), 2k < n"""
        structure_service.validate(graph, REFLEXIVE_GRAPH)
        if not 2 * k < n <= graph.n:
            raise PreconditionViolated(f"need 2k < n <= {graph.n}, got n={n}, k={k}")
        nonedges = decomposition_service.max_disjoint_nonedges(graph)
        if nonedges.size < k:
            raise PreconditionViolated(f"{k} disjoint non-edges needed, only {nonedges.size} available")

        values = self._spread(graph.n, n, k, nonedges.pairs[:k])
        for i, (a, b) in enumerate(nonedges.pairs[:k]):
            values[a], values[b] = 2 * i, 2 * i + 1
        return self._verified(graph, family_service.subcomplete_graph(n, k), values, Strength.STANDARD)

    def subcomplete_digraph_epimorphism(self, digraph: Structure, n: int, k: int) -> Mapping:
        """Epimorphism of a reflexive digraph with k disjoint partial pairs onto N->(n, k), 2k < n"""
        structure_service.validate(digraph, REFLEXIVE_DIGRAPH)
        if not 2 * k < n <= digraph.n:
            raise PreconditionViolated(f"need 2k < n <= {digraph.n}, got n={n}, k={k}")
        partial = decomposition_service.max_disjoint_partial_pairs(digraph)
        if partial.size < k:
            raise PreconditionViolated(f"{k} disjoint partial pairs needed, only {partial.size} available")

        values = self._spread(digraph.n, n, k, partial.pairs[:k])
        for i, (a, b) in enumerate(partial.pairs[:k]):
            # only 2i+1 -> 2i survives in the target pair
            if digraph.has_edge(a, b):
                values[a], values[b] = 2 * i + 1, 2 * i
            else:
                values[a], values[b] = 2 * i, 2 * i + 1
        target = family_service.subcomplete_digraph(n, k)
        return self._verified(digraph, target, values, Strength.STANDARD)

    def three_one_strong_epimorphism(self, graph: Structure) -> Optional[Mapping]:
        """Strong epimorphism onto N(3,1) from a non-edge between two non-isolated vertices"""
        structure_service.validate(graph, REFLEXIVE_GRAPH)
        if graph.n < 3:
            return None
        active = self._non_isolated(graph)
        for u, v in itertools.combinations(active, 2):
            if graph.has_edge(u, v):
                continue
            values = [2] * graph.n
            values[u], values[v] = 0, 1
            return self._verified(graph, family_service.subcomplete_graph(3, 1), values, Strength.STRONG)
        return None

    def disjoint_union_shape(self, graph: Structure) -> bool:
        """True when the non-isolated vertices induce a complete graph"""
        structure_service.validate(graph, REFLEXIVE_GRAPH)
        active = self._non_isolated(graph)
        return all(graph.has_edge(u, v) for u, v in itertools.combinations(active, 2))

    @staticmethod
    def _non_isolated(graph: Structure) -> List[int]:
        return [v for v in graph.vertices if graph.out_masks[v] & ~(1 << v)]

    @staticmethod
    def _spread(size: int, n: int, k: int, pairs) -> List[int]:
        # vertices outside the pairs cycle through the complete part 2k..n-1
        paired = {v for pair in pairs for v in pair}
        values = [0] * size
        rest = [v for v in range(size) if v not in paired]
        for i, v in enumerate(rest):
            values[v] = 2 * k + i % (n - 2 * k)
        return values

    @staticmethod
    def _verified(source: Structure, target: Structure, values: List[int], strength: Strength) -> Mapping:
        mapping = Mapping(source_size=source.n, target_size=target.n, values=tuple(values))
        if not homomorphism_service.is_epimorphism(mapping, source, target, strength):
            logger.error(f"Constructed map {mapping} is not a {strength.value} epimorphism")
            raise VerificationFailed(f"constructed map is not a {strength.value} epimorphism")
        return mapping


# Service instance
construction_service = ConstructionService()
