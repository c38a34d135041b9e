"""
Homomorphism Service for deciding and enumerating (strong) epimorphisms
"""
import itertools
import logging
from typing import FrozenSet, List, Optional, Set, Tuple

from homimage.core.config import settings
from homimage.core.exceptions import BoundExceeded, SizeMismatch
from homimage.models.models import Kind, LoopModel, Mapping, Shape, Strength, Structure
from homimage.services.structures.structure_service import structure_service
from homimage.utils.bit_utils import bits, popcount
from homimage.utils.combinatorics import set_partitions

logger = logging.getLogger(__name__)


class _EpimorphismSearch:
    """
    Backtracking over source vertices (descending degree, then index) with
    target values tried in ascending order. Prunes on edge consistency with
    the already assigned vertices, on surjectivity (uncovered targets may not
    outnumber unassigned sources) and, for strong searches, on edge coverage
    (uncovered target edges may not outnumber source edges that still have an
    unassigned endpoint).
    """

    def __init__(self, source: Structure, target: Structure, strong: bool):
        self.s_out = source.out_masks
        self.s_in = source.in_masks
        self.t_out = target.out_masks
        self.n = source.n
        self.m = target.n
        self.strong = strong

        self.order = sorted(
            source.vertices,
            key=lambda v: (-(popcount(self.s_out[v]) + popcount(self.s_in[v])), v),
        )
        loops = [t for t in target.vertices if target.has_loop(t)]
        self.domains = [
            loops if source.has_loop(v) else list(target.vertices) for v in source.vertices
        ]

        self.values = [-1] * self.n
        self.assigned = 0
        self.hits = [0] * self.m
        self.uncovered = self.m
        self.edge_hits = [[0] * self.m for _ in range(self.m)]
        self.uncovered_edges = len(target.edges)
        self.open_edges = len(source.edges)

    def run(self) -> Optional[Tuple[int, ...]]:
        reachable = set()
        for domain in self.domains:
            reachable.update(domain)
        if len(reachable) < self.m:
            return None
        if self._extend(0):
            return tuple(self.values)
        return None

    def _extend(self, depth: int) -> bool:
        if depth == self.n:
            return self.uncovered == 0 and (not self.strong or self.uncovered_edges == 0)

        v = self.order[depth]
        remaining = self.n - depth - 1
        for t in self.domains[v]:
            if not self._consistent(v, t):
                continue
            closed = self._assign(v, t)
            feasible = self.uncovered <= remaining and (
                not self.strong or self.uncovered_edges <= self.open_edges
            )
            if feasible and self._extend(depth + 1):
                return True
            self._unassign(v, t, closed)
        return False

    def _consistent(self, v: int, t: int) -> bool:
        values, t_out = self.values, self.t_out
        for w in bits(self.s_out[v] & self.assigned):
            if not t_out[t] >> values[w] & 1:
                return False
        for w in bits(self.s_in[v] & self.assigned):
            if not t_out[values[w]] >> t & 1:
                return False
        return True

    def _assign(self, v: int, t: int) -> List[Tuple[int, int]]:
        self.values[v] = t
        self.assigned |= 1 << v
        self.hits[t] += 1
        if self.hits[t] == 1:
            self.uncovered -= 1

        closed = [(v, w) for w in bits(self.s_out[v] & self.assigned)]
        closed.extend((w, v) for w in bits(self.s_in[v] & self.assigned & ~(1 << v)))
        self.open_edges -= len(closed)
        if self.strong:
            for x, y in closed:
                a, b = self.values[x], self.values[y]
                self.edge_hits[a][b] += 1
                if self.edge_hits[a][b] == 1:
                    self.uncovered_edges -= 1
        return closed

    def _unassign(self, v: int, t: int, closed: List[Tuple[int, int]]) -> None:
        if self.strong:
            for x, y in closed:
                a, b = self.values[x], self.values[y]
                self.edge_hits[a][b] -= 1
                if self.edge_hits[a][b] == 0:
                    self.uncovered_edges += 1
        self.open_edges += len(closed)
        self.hits[t] -= 1
        if self.hits[t] == 0:
            self.uncovered += 1
        self.assigned &= ~(1 << v)
        self.values[v] = -1


class HomomorphismService:
    """Standard and strong homomorphic image orderings"""

    def image_edges(self, mapping: Mapping, structure: Structure) -> FrozenSet[Tuple[int, int]]:
        if mapping.source_size != structure.n:
            raise SizeMismatch(
                f"mapping has {mapping.source_size} sources, structure has {structure.n} vertices"
            )
        return frozenset((mapping[u], mapping[v]) for u, v in structure.edges)

    def is_homomorphism(self, mapping: Mapping, source: Structure, target: Structure) -> bool:
        self._check_sizes(mapping, source, target)
        return all(target.has_edge(mapping[u], mapping[v]) for u, v in source.edges)

    def is_epimorphism(
        self, mapping: Mapping, source: Structure, target: Structure, strength: Strength
    ) -> bool:
        if strength == Strength.STRONG:
            return self.is_strong_epimorphism(mapping, source, target)
        return mapping.is_surjective and self.is_homomorphism(mapping, source, target)

    def is_strong_epimorphism(self, mapping: Mapping, source: Structure, target: Structure) -> bool:
        self._check_sizes(mapping, source, target)
        return mapping.is_surjective and self.image_edges(mapping, source) == target.edges

    def find_epimorphism(
        self, source: Structure, target: Structure, strength: Strength
    ) -> Optional[Mapping]:
        """First (strong) epimorphism source -> target in search order, if any"""
        if target.n > source.n:
            return None
        if target.n == 0:
            return Mapping.identity(0) if source.n == 0 else None
        strong = strength == Strength.STRONG
        if strong and len(target.edges) > len(source.edges):
            return None

        values = _EpimorphismSearch(source, target, strong).run()
        if values is None:
            logger.debug(f"No {strength.value} epimorphism {source.n} -> {target.n}")
            return None
        return Mapping(source_size=source.n, target_size=target.n, values=values)

    def enumerate_epimorphisms(
        self, source: Structure, target: Structure, strength: Strength
    ) -> List[Mapping]:
        """Every (strong) epimorphism, by exhaustive iteration over all maps"""
        if source.n > settings.oracle_max_vertices:
            raise BoundExceeded(
                f"oracle enumeration limited to {settings.oracle_max_vertices} source vertices"
            )
        if target.n > source.n or (target.n == 0 and source.n > 0):
            return []

        epimorphisms = []
        for values in itertools.product(range(target.n), repeat=source.n):
            mapping = Mapping(source_size=source.n, target_size=target.n, values=values)
            if self.is_epimorphism(mapping, source, target, strength):
                epimorphisms.append(mapping)
        return epimorphisms

    def precedes(self, smaller: Structure, larger: Structure, strength: Strength) -> bool:
        """smaller <= larger iff some (strong) epimorphism maps larger onto smaller"""
        return self.find_epimorphism(larger, smaller, strength) is not None

    def quotient(self, structure: Structure, labels: Tuple[int, ...]) -> Structure:
        """Image of a structure under the kernel given by block labels"""
        size = max(labels) + 1 if labels else 0
        return Structure.from_edges(size, ((labels[u], labels[v]) for u, v in structure.edges))

    def homomorphic_images(
        self, structure: Structure, strength: Strength, kind: Optional[Kind] = None
    ) -> List[Structure]:
        """
        All (strong) homomorphic images of a structure within a kind, up to isomorphism.

        Strong images are exactly the quotients by a kernel. Standard images
        are the quotients together with every structure of the kind obtained
        from a quotient by adding edges.
        """
        if structure.n > settings.images_max_vertices:
            raise BoundExceeded(
                f"image enumeration limited to {settings.images_max_vertices} vertices"
            )
        kind = kind or structure_service.infer_kind(structure)
        structure_service.validate(structure, kind)
        if strength == Strength.STANDARD:
            bound = self._closure_bound(kind)
            if structure.n > bound:
                logger.error(f"Standard image closure for {kind} refused at {structure.n} vertices")
                raise BoundExceeded(f"standard images of {kind} limited to {bound} vertices")

        frontier: List[Structure] = []
        seen: Set = set()
        for labels in set_partitions(structure.n):
            image = self.quotient(structure, labels)
            if not self._extendable(image, kind):
                continue
            key = structure_service.canonical_key(image)
            if key not in seen:
                seen.add(key)
                frontier.append(structure_service.canonical_form(image))

        if strength == Strength.STANDARD:
            pending = list(frontier)
            while pending:
                current = pending.pop()
                for grown in self._additions(current, kind):
                    key = structure_service.canonical_key(grown)
                    if key not in seen:
                        seen.add(key)
                        canonical = structure_service.canonical_form(grown)
                        frontier.append(canonical)
                        pending.append(canonical)

        images = [s for s in frontier if structure_service.satisfies(s, kind)]
        images.sort(key=lambda s: structure_service.canonical_key(s))
        logger.debug(f"{len(images)} {strength.value} images for structure of size {structure.n}")
        return images

    @staticmethod
    def _closure_bound(kind: Kind) -> int:
        # tournaments admit no edge additions
        if kind.shape == Shape.TOURNAMENT:
            return settings.images_max_vertices
        if kind.shape == Shape.GRAPH:
            return settings.closure_max_graph_vertices
        if kind.model == LoopModel.PLAIN:
            return settings.closure_max_plain_digraph_vertices
        return settings.closure_max_digraph_vertices

    @staticmethod
    def _extendable(image: Structure, kind: Kind) -> bool:
        # only edge additions follow, so anything already breaking the kind is final
        if kind.model == LoopModel.IRREFLEXIVE and not image.is_irreflexive:
            return False
        if kind.model == LoopModel.REFLEXIVE and not image.is_reflexive:
            return False
        if kind.shape == Shape.GRAPH:
            return all(image.has_edge(v, u) for u, v in image.edges)
        if kind.shape == Shape.TOURNAMENT:
            return not any(image.has_edge(v, u) for u, v in image.non_loop_edges())
        return True

    @staticmethod
    def _additions(image: Structure, kind: Kind) -> List[Structure]:
        grown = []
        edges = image.edges
        for u in image.vertices:
            for v in image.vertices:
                if (u, v) in edges:
                    continue
                if u == v:
                    if kind.model == LoopModel.PLAIN:
                        grown.append(Structure.from_edges(image.n, edges | {(u, u)}))
                    continue
                if kind.shape == Shape.GRAPH:
                    if u < v:
                        grown.append(Structure.from_edges(image.n, edges | {(u, v), (v, u)}))
                elif kind.shape == Shape.TOURNAMENT:
                    if (v, u) not in edges:
                        grown.append(Structure.from_edges(image.n, edges | {(u, v)}))
                else:
                    grown.append(Structure.from_edges(image.n, edges | {(u, v)}))
        return grown

    @staticmethod
    def _check_sizes(mapping: Mapping, source: Structure, target: Structure) -> None:
        if mapping.source_size != source.n or mapping.target_size != target.n:
            raise SizeMismatch(
                f"mapping {mapping.source_size}->{mapping.target_size} does not fit "
                f"structures of sizes {source.n} and {target.n}"
            )


# Service instance
homomorphism_service = HomomorphismService()
