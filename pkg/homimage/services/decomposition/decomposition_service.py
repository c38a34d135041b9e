"""
Decomposition Service for empty/complete/bounded splits, vertex types and signatures
"""
import itertools
import logging
import random
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from homimage.core.exceptions import (
    InvalidDecomposition,
    OutOfRange,
    PreconditionViolated,
    TableMismatch,
    VerificationFailed,
)
from homimage.models.models import (
    Decomposition,
    DisjointPairs,
    Kind,
    LoopModel,
    Mapping,
    Shape,
    Signature,
    Structure,
)
from homimage.services.homomorphism.hom_service import homomorphism_service
from homimage.services.structures.structure_service import structure_service

logger = logging.getLogger(__name__)

REFLEXIVE_GRAPH = Kind(shape=Shape.GRAPH, model=LoopModel.REFLEXIVE)

# (e_to_c, c_to_e) settings in search order
FLAG_ORDER = ((False, False), (False, True), (True, False), (True, True))

_EMPTY, _COMPLETE = 0, 1


def _type_order(structure: Structure) -> Tuple[int, Tuple[int, ...]]:
    return structure.n, structure.out_masks


class DecompositionService:
    """Recognition and use of decompositions into an empty, a complete and a bounded part"""

    # Disjoint pair bounds

    def max_disjoint_edges(self, structure: Structure) -> DisjointPairs:
        """Largest set of non-loop edges with pairwise distinct endpoints"""
        pairs = self._max_matching(structure.n, structure.non_loop_edges())
        oriented = tuple(sorted((u, v) if structure.has_edge(u, v) else (v, u) for u, v in pairs))
        return DisjointPairs(size=len(oriented), pairs=oriented)

    def max_disjoint_nonedges(self, graph: Structure) -> DisjointPairs:
        structure_service.validate(graph, REFLEXIVE_GRAPH)
        pairs = self._max_matching(
            graph.n,
            ((u, v) for u, v in itertools.combinations(graph.vertices, 2) if not graph.has_edge(u, v)),
        )
        return DisjointPairs(size=len(pairs), pairs=pairs)

    def max_disjoint_partial_pairs(self, structure: Structure) -> DisjointPairs:
        """Largest set of disjoint pairs that are not connected in both directions"""
        pairs = self._max_matching(
            structure.n,
            (
                (u, v)
                for u, v in itertools.combinations(structure.vertices, 2)
                if not (structure.has_edge(u, v) and structure.has_edge(v, u))
            ),
        )
        return DisjointPairs(size=len(pairs), pairs=pairs)

    @staticmethod
    def _max_matching(n: int, pairs: Iterable[Tuple[int, int]]) -> Tuple[Tuple[int, int], ...]:
        graph = nx.Graph()
        graph.add_nodes_from(range(n))
        graph.add_edges_from(pairs)
        matching = nx.max_weight_matching(graph, maxcardinality=True)
        return tuple(sorted((min(u, v), max(u, v)) for u, v in matching))

    # Decompositions

    def check_decomposition(self, structure: Structure, decomposition: Decomposition) -> None:
        """Raise InvalidDecomposition unless every part and cross condition holds"""
        e_set, c_set, f_set = decomposition.e_set, decomposition.c_set, decomposition.f_set
        listed = list(e_set) + list(c_set) + list(f_set)
        if sorted(listed) != list(structure.vertices):
            raise InvalidDecomposition(
                f"parts must partition 0..{structure.n - 1}, got e={e_set} c={c_set} f={f_set}"
            )

        for x, y in itertools.combinations(e_set, 2):
            if structure.has_edge(x, y) or structure.has_edge(y, x):
                raise InvalidDecomposition(f"empty part contains edge between {x} and {y}")
        for x in c_set:
            if not structure.has_loop(x):
                raise InvalidDecomposition(f"complete part vertex {x} has no loop")
        for x, y in itertools.combinations(c_set, 2):
            if not (structure.has_edge(x, y) and structure.has_edge(y, x)):
                raise InvalidDecomposition(f"complete part misses an edge between {x} and {y}")
        for x in e_set:
            for z in c_set:
                if structure.has_edge(x, z) != decomposition.e_to_c:
                    raise InvalidDecomposition(f"pair ({x}, {z}) breaks the empty-to-complete flag")
                if structure.has_edge(z, x) != decomposition.c_to_e:
                    raise InvalidDecomposition(f"pair ({z}, {x}) breaks the complete-to-empty flag")

    def find_decomposition(
        self, structure: Structure, bound: int, *, use_e: bool = True, use_c: bool = True
    ) -> Optional[Decomposition]:
        """
        First decomposition with a bounded part of at most `bound` vertices.

        Bounded parts are tried smallest first, lexicographically within a size;
        for each, the four cross-flag settings in FLAG_ORDER; the remaining
        vertices are then placed in ascending order, empty part first.
        """
        for size in range(min(bound, structure.n) + 1):
            for f_set in itertools.combinations(structure.vertices, size):
                fixed = set(f_set)
                rest = [v for v in structure.vertices if v not in fixed]
                for e_to_c, c_to_e in FLAG_ORDER:
                    parts = self._place(structure, rest, e_to_c, c_to_e, use_e, use_c)
                    if parts is None:
                        continue
                    e_set = [v for v, part in zip(rest, parts) if part == _EMPTY]
                    c_set = [v for v, part in zip(rest, parts) if part == _COMPLETE]
                    both = bool(e_set) and bool(c_set)
                    decomposition = Decomposition(
                        e_set=e_set,
                        c_set=c_set,
                        f_set=f_set,
                        e_to_c=e_to_c and both,
                        c_to_e=c_to_e and both,
                    )
                    logger.debug(f"Decomposition found with bounded part {f_set}")
                    return decomposition
        return None

    def _place(
        self,
        structure: Structure,
        rest: Sequence[int],
        e_to_c: bool,
        c_to_e: bool,
        use_e: bool,
        use_c: bool,
    ) -> Optional[List[int]]:
        options = []
        if use_e:
            options.append(_EMPTY)
        if use_c:
            options.append(_COMPLETE)
        parts: List[int] = []

        def compatible(v: int, part: int) -> bool:
            if part == _COMPLETE and not structure.has_loop(v):
                return False
            for w, other in zip(rest, parts):
                forward, backward = structure.has_edge(v, w), structure.has_edge(w, v)
                if part == _EMPTY and other == _EMPTY:
                    if forward or backward:
                        return False
                elif part == _COMPLETE and other == _COMPLETE:
                    if not (forward and backward):
                        return False
                elif part == _EMPTY:
                    if forward != e_to_c or backward != c_to_e:
                        return False
                elif backward != e_to_c or forward != c_to_e:
                    return False
            return True

        def extend(i: int) -> bool:
            if i == len(rest):
                return True
            for part in options:
                if compatible(rest[i], part):
                    parts.append(part)
                    if extend(i + 1):
                        return True
                    parts.pop()
            return False

        return parts if extend(0) else None

    # Types and signatures

    def vertex_type(self, structure: Structure, f_set: Iterable[int], vertex: int) -> Structure:
        """
        Structure on F + [v] with F in ascending order and v placed last.

        Types are labeled by the positions of F, so they are only comparable
        across structures that list their bounded parts in corresponding order.
        """
        order = sorted(set(f_set))
        for v in order + [vertex]:
            if not 0 <= v < structure.n:
                raise OutOfRange(f"vertex {v} not in structure of size {structure.n}")
        if vertex in order:
            raise OutOfRange(f"vertex {vertex} belongs to the bounded part")
        order.append(vertex)
        position = {v: i for i, v in enumerate(order)}
        return Structure.from_edges(
            len(order),
            ((position[u], position[v]) for u, v in structure.edges if u in position and v in position),
        )

    def tau_signature(self, structure: Structure, decomposition: Decomposition) -> Signature:
        """
        Bounded part of a decomposition with the type counts of E and C.

        The signature is relative to the ascending labeling of F: an
        isomorphism that fixes F pointwise keeps it, one that permutes F may not.
        """
        self.check_decomposition(structure, decomposition)
        e_types = [self.vertex_type(structure, decomposition.f_set, v) for v in decomposition.e_set]
        c_types = [self.vertex_type(structure, decomposition.f_set, v) for v in decomposition.c_set]

        table = sorted(set(e_types) | set(c_types), key=_type_order)
        both = bool(decomposition.e_set) and bool(decomposition.c_set)
        return Signature(
            f_structure=structure_service.induced(structure, decomposition.f_set),
            e_to_c=decomposition.e_to_c and both,
            c_to_e=decomposition.c_to_e and both,
            type_table=tuple(table),
            e_counts=tuple(e_types.count(t) for t in table),
            c_counts=tuple(c_types.count(t) for t in table),
        )

    def dominates(self, smaller: Signature, larger: Signature) -> bool:
        """Componentwise smaller <= larger over the union of realized types"""
        if smaller.f_structure != larger.f_structure:
            raise TableMismatch("signatures are over different bounded parts")
        if (smaller.e_to_c, smaller.c_to_e) != (larger.e_to_c, larger.c_to_e):
            raise TableMismatch("signatures have different cross flags")

        for t in set(smaller.type_table) | set(larger.type_table):
            e1, c1 = smaller.counts_for(t)
            e2, c2 = larger.counts_for(t)
            if e1 > e2 or c1 > c2:
                return False
        return True

    def epi_from_dominance(
        self,
        target: Structure,
        target_decomposition: Decomposition,
        source: Structure,
        source_decomposition: Decomposition,
    ) -> Mapping:
        """
        Strong epimorphism source -> target built from dominating signatures.

        The bounded parts correspond in ascending order; every type class of
        the source is sent onto the same class of the target, position by
        position, with surplus vertices going to the class's least vertex.
        """
        small = self.tau_signature(target, target_decomposition)
        large = self.tau_signature(source, source_decomposition)
        try:
            dominated = self.dominates(small, large)
        except TableMismatch as e:
            raise PreconditionViolated(str(e))
        if not dominated:
            raise PreconditionViolated("target signature is not dominated by the source signature")
        for t in set(small.type_table) | set(large.type_table):
            e1, c1 = small.counts_for(t)
            e2, c2 = large.counts_for(t)
            if (e1 == 0) != (e2 == 0) or (c1 == 0) != (c2 == 0):
                raise PreconditionViolated("signatures realize different type classes")

        values = [0] * source.n
        for s, t in zip(source_decomposition.f_set, target_decomposition.f_set):
            values[s] = t
        for part in ("e_set", "c_set"):
            source_classes = self._classes(source, source_decomposition, getattr(source_decomposition, part))
            target_classes = self._classes(target, target_decomposition, getattr(target_decomposition, part))
            for type_structure, members in source_classes.items():
                onto = target_classes[type_structure]
                for i, v in enumerate(members):
                    values[v] = onto[i] if i < len(onto) else onto[0]

        mapping = Mapping(source_size=source.n, target_size=target.n, values=tuple(values))
        if not homomorphism_service.is_strong_epimorphism(mapping, source, target):
            logger.error(f"Dominance map {mapping} is not a strong epimorphism")
            raise VerificationFailed("constructed dominance map is not a strong epimorphism")
        return mapping

    def _classes(
        self, structure: Structure, decomposition: Decomposition, part: Sequence[int]
    ) -> Dict[Structure, List[int]]:
        classes: Dict[Structure, List[int]] = {}
        for v in part:
            classes.setdefault(self.vertex_type(structure, decomposition.f_set, v), []).append(v)
        return classes

    def reconstruct(self, signature: Signature) -> Tuple[Structure, Decomposition]:
        """Build the structure a signature describes: F, then the empty part, then the complete part"""
        f = signature.f_structure.n
        edges = set(signature.f_structure.edges)
        e_set: List[int] = []
        c_set: List[int] = []
        kinds: List[Structure] = []

        next_vertex = f
        for counts, bucket in ((signature.e_counts, e_set), (signature.c_counts, c_set)):
            for type_structure, count in zip(signature.type_table, counts):
                for _ in range(count):
                    bucket.append(next_vertex)
                    kinds.append(type_structure)
                    next_vertex += 1

        for v, type_structure in zip(e_set + c_set, kinds):
            for a, b in type_structure.edges:
                u = v if a == f else a
                w = v if b == f else b
                edges.add((u, w))
        for x, y in itertools.combinations(c_set, 2):
            edges.update({(x, y), (y, x)})
        for x in e_set:
            for z in c_set:
                if signature.e_to_c:
                    edges.add((x, z))
                if signature.c_to_e:
                    edges.add((z, x))

        decomposition = Decomposition(
            e_set=e_set,
            c_set=c_set,
            f_set=range(f),
            e_to_c=signature.e_to_c,
            c_to_e=signature.c_to_e,
        )
        return Structure.from_edges(next_vertex, edges), decomposition

    def random_dominating_pair(
        self, rng: random.Random, max_f: int = 2, max_part: int = 6
    ) -> Tuple[Structure, Decomposition, Structure, Decomposition]:
        """
        Sample (D1, dec1, D2, dec2) whose signatures share F, flags and support
        with D1's counts dominated by D2's; part sizes stay within max_part.
        """
        f = rng.randint(0, max_f)
        f_structure = Structure.from_edges(
            f, [(u, v) for u in range(f) for v in range(f) if rng.random() < 0.5]
        )
        e_types = self._random_types(rng, f_structure, rng.randint(0, min(3, max_part)), loop=None)
        c_types = self._random_types(rng, f_structure, rng.randint(0, min(3, max_part)), loop=True)

        e_small, e_large = self._dominating_counts(rng, len(e_types), max_part)
        c_small, c_large = self._dominating_counts(rng, len(c_types), max_part)
        both = bool(e_types) and bool(c_types)
        e_to_c = both and rng.random() < 0.5
        c_to_e = both and rng.random() < 0.5

        table = sorted(set(e_types) | set(c_types), key=_type_order)

        def signature(e_counts: List[int], c_counts: List[int]) -> Signature:
            e_map = dict(zip(e_types, e_counts))
            c_map = dict(zip(c_types, c_counts))
            return Signature(
                f_structure=f_structure,
                e_to_c=e_to_c,
                c_to_e=c_to_e,
                type_table=tuple(table),
                e_counts=tuple(e_map.get(t, 0) for t in table),
                c_counts=tuple(c_map.get(t, 0) for t in table),
            )

        small, small_decomposition = self.reconstruct(signature(e_small, c_small))
        large, large_decomposition = self.reconstruct(signature(e_large, c_large))
        return small, small_decomposition, large, large_decomposition

    @staticmethod
    def _random_types(
        rng: random.Random, f_structure: Structure, count: int, loop: Optional[bool]
    ) -> List[Structure]:
        f = f_structure.n
        types: List[Structure] = []
        for _ in range(4 * count):
            if len(types) == count:
                break
            edges = set(f_structure.edges)
            for u in range(f):
                if rng.random() < 0.5:
                    edges.add((u, f))
                if rng.random() < 0.5:
                    edges.add((f, u))
            has_loop = loop if loop is not None else rng.random() < 0.5
            if has_loop:
                edges.add((f, f))
            candidate = Structure.from_edges(f + 1, edges)
            if candidate not in types:
                types.append(candidate)
        return types

    @staticmethod
    def _dominating_counts(rng: random.Random, classes: int, max_part: int) -> Tuple[List[int], List[int]]:
        if classes == 0:
            return [], []
        large = [1] * classes
        for _ in range(rng.randint(0, max_part - classes)):
            large[rng.randrange(classes)] += 1
        small = [rng.randint(1, count) for count in large]
        return small, large


# Service instance
decomposition_service = DecompositionService()
