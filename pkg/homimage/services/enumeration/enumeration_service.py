"""
Enumeration Service for isomorphism-class representatives and antichain checks
"""
import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Sequence, Tuple, Union

import networkx as nx

from homimage.core.config import settings
from homimage.core.exceptions import BoundExceeded, KindViolation, RangeError
from homimage.models.models import (
    AntichainSearchResult,
    Kind,
    LoopModel,
    Shape,
    Strength,
    Structure,
    StructureClass,
)
from homimage.services.classification.classification_service import classification_service
from homimage.services.homomorphism.hom_service import homomorphism_service
from homimage.services.structures.structure_service import CanonicalKey, structure_service

logger = logging.getLogger(__name__)

Target = Union[StructureClass, Kind]


def _attachments(kind: Kind, size: int) -> List[Tuple[bool, Tuple[Tuple[bool, bool], ...]]]:
    """Every (loop, [(old -> new, new -> old) per old vertex]) pattern allowed by the kind"""
    loops = {LoopModel.REFLEXIVE: [True], LoopModel.IRREFLEXIVE: [False]}.get(kind.model, [False, True])
    if kind.shape == Shape.GRAPH:
        per_vertex = [(False, False), (True, True)]
    elif kind.shape == Shape.TOURNAMENT:
        per_vertex = [(True, False), (False, True)]
    else:
        per_vertex = [(False, False), (True, False), (False, True), (True, True)]
    return [
        (loop, pattern)
        for loop in loops
        for pattern in itertools.product(per_vertex, repeat=size)
    ]


def _extend_parent(parent: Structure, kind: Kind) -> List[Tuple[CanonicalKey, Structure]]:
    """Canonical forms of every one-vertex extension of a parent representative"""
    new = parent.n
    extensions = []
    for loop, pattern in _attachments(kind, parent.n):
        edges = set(parent.edges)
        if loop:
            edges.add((new, new))
        for u, (into, out_of) in enumerate(pattern):
            if into:
                edges.add((u, new))
            if out_of:
                edges.add((new, u))
        child = Structure.from_edges(new + 1, edges)
        extensions.append((structure_service.canonical_key(child), child))
    return extensions


class EnumerationService:
    """Canonical augmentation plus the ideal and antichain tools built on it"""

    def resolve_kind(self, target: Target) -> Kind:
        kind = target.kind if isinstance(target, StructureClass) else target
        if kind.shape == Shape.TOURNAMENT and kind.model == LoopModel.PLAIN:
            raise KindViolation("tournaments must be reflexive or irreflexive")
        return kind

    def bound_for(self, kind: Kind) -> int:
        if kind.shape == Shape.GRAPH:
            return settings.max_graph_vertices
        if kind.shape == Shape.TOURNAMENT:
            return settings.max_tournament_vertices
        return settings.max_digraph_vertices

    def enumerate_structures(self, target: Target, n: int) -> List[Structure]:
        """One canonical representative per isomorphism class on n vertices, sorted by canonical key"""
        return self._levels(target, n)[-1]

    def enumerate_up_to(self, target: Target, max_n: int) -> List[Structure]:
        return [s for level in self._levels(target, max_n) for s in level]

    def _levels(self, target: Target, n: int) -> List[List[Structure]]:
        kind = self.resolve_kind(target)
        if n < 0:
            raise RangeError(f"vertex count must be nonnegative, got {n}")
        bound = self.bound_for(kind)
        if n > bound:
            raise BoundExceeded(f"enumeration of {kind} limited to {bound} vertices")

        levels = [[Structure(n=0)]]
        for size in range(1, n + 1):
            levels.append(self._augment(levels[-1], kind))
            logger.debug(f"{len(levels[-1])} {kind} classes on {size} vertices")
        return levels

    def _augment(self, parents: Sequence[Structure], kind: Kind) -> List[Structure]:
        if settings.workers > 1 and len(parents) > 1:
            with ProcessPoolExecutor(max_workers=settings.workers) as pool:
                batches = list(pool.map(_extend_parent, parents, itertools.repeat(kind)))
        else:
            batches = [_extend_parent(parent, kind) for parent in parents]

        found: Dict[CanonicalKey, Structure] = {}
        for batch in batches:
            for key, child in batch:
                if key not in found:
                    found[key] = structure_service.canonical_form(child)
        return [found[key] for key in sorted(found)]

    def ideal_members(
        self, structure_class: StructureClass, strength: Strength, obstruction: Structure, max_n: int
    ) -> List[Structure]:
        """Enumerated members of Av(obstruction) with at most max_n vertices"""
        structure_service.validate(obstruction, structure_class.kind)
        members = [
            candidate
            for candidate in self.enumerate_up_to(structure_class, max_n)
            if classification_service.avoids(candidate, obstruction, strength)
        ]
        logger.info(f"{len(members)} members of the ideal up to {max_n} vertices")
        return members

    def verify_antichain(self, structures: Sequence[Structure], strength: Strength) -> bool:
        self._check_engine_bound(structures)
        for first, second in itertools.combinations(structures, 2):
            if self._comparable(first, second, strength):
                return False
        return True

    def find_antichain(
        self, structures: Sequence[Structure], strength: Strength, size: int
    ) -> AntichainSearchResult:
        """
        A `size`-element antichain among the candidates. Exact maximum-clique search
        on the incomparability graph up to settings.antichain_exact_limit candidates,
        a greedy pass in index order above it.
        """
        self._check_engine_bound(structures)
        count = len(structures)
        incomparable = nx.Graph()
        incomparable.add_nodes_from(range(count))
        for i, j in itertools.combinations(range(count), 2):
            if not self._comparable(structures[i], structures[j], strength):
                incomparable.add_edge(i, j)

        greedy = count > settings.antichain_exact_limit
        if greedy:
            chosen: List[int] = []
            for i in range(count):
                if all(incomparable.has_edge(i, j) for j in chosen):
                    chosen.append(i)
        else:
            clique, _ = nx.max_weight_clique(incomparable, weight=None)
            chosen = sorted(clique)

        if size < 0 or len(chosen) < size:
            logger.info(f"No antichain of size {size} among {count} candidates (best {len(chosen)})")
            return AntichainSearchResult(greedy=greedy, candidates=count)
        members = [structures[i] for i in chosen[:size]]
        return AntichainSearchResult(members=members, greedy=greedy, candidates=count)

    def _comparable(self, first: Structure, second: Structure, strength: Strength) -> bool:
        if structure_service.are_isomorphic(first, second):
            return True
        return homomorphism_service.precedes(first, second, strength) or homomorphism_service.precedes(
            second, first, strength
        )

    @staticmethod
    def _check_engine_bound(structures: Sequence[Structure]) -> None:
        largest = max((s.n for s in structures), default=0)
        if largest > settings.engine_max_vertices:
            raise BoundExceeded(
                f"pairwise comparison limited to {settings.engine_max_vertices} vertices, got {largest}"
            )


# Service instance
enumeration_service = EnumerationService()
