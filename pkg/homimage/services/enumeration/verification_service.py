"""
Verification Service for exhaustive and sampled checks of the ordering results
"""
import itertools
import logging
import random
import time
from typing import Callable, Dict, Optional, Tuple, Union

from homimage.core.config import settings
from homimage.core.exceptions import HomImageError, UnknownTag, VerificationFailed
from homimage.models.models import (
    Kind,
    LoopModel,
    PropositionReport,
    PropositionTag,
    ReportOutcome,
    Shape,
    Strength,
    Structure,
)
from homimage.services.classification.classification_service import classification_service
from homimage.services.classification.construction_service import construction_service
from homimage.services.decomposition.decomposition_service import decomposition_service
from homimage.services.enumeration.enumeration_service import enumeration_service
from homimage.services.families.family_service import family_service
from homimage.services.homomorphism.hom_service import homomorphism_service
from homimage.services.structures.structure_service import structure_service
from homimage.services.structures.text_format import format_structure

logger = logging.getLogger(__name__)

REFLEXIVE_GRAPH = Kind(shape=Shape.GRAPH, model=LoopModel.REFLEXIVE)
REFLEXIVE_DIGRAPH = Kind(shape=Shape.DIGRAPH, model=LoopModel.REFLEXIVE)
REFLEXIVE_TOURNAMENT = Kind(shape=Shape.TOURNAMENT, model=LoopModel.REFLEXIVE)
PLAIN_DIGRAPH = Kind(shape=Shape.DIGRAPH, model=LoopModel.PLAIN)

DEFAULT_BOUNDS = {
    PropositionTag.SUBCOMPLETE_GRAPH_IMAGES: 6,
    PropositionTag.SUBCOMPLETE_DIGRAPH_IMAGES: 5,
    PropositionTag.TOURNAMENT_RIGIDITY: 7,
    PropositionTag.DOMINANCE_EPIMORPHISM: 6,  # largest part size
    PropositionTag.BOUNDED_DISJOINT_EDGES: 4,
    PropositionTag.BOUNDED_PARTIAL_PAIRS: 4,
    PropositionTag.PARTIAL_ORDER: 3,
    PropositionTag.COMPLETE_GRAPH_CONSTRUCTION: 7,
    PropositionTag.SUBCOMPLETE_CONSTRUCTION: 5,
}

# (checked, counterexample text, detail)
CheckResult = Tuple[int, Optional[str], Optional[str]]


class VerificationService:
    """Runs one named check up to a bound and reports pass or fail with a counterexample"""

    def __init__(self):
        self._checks: Dict[PropositionTag, Callable[[int, int], CheckResult]] = {
            PropositionTag.SUBCOMPLETE_GRAPH_IMAGES: self._subcomplete_graph_images,
            PropositionTag.SUBCOMPLETE_DIGRAPH_IMAGES: self._subcomplete_digraph_images,
            PropositionTag.TOURNAMENT_RIGIDITY: self._tournament_rigidity,
            PropositionTag.DOMINANCE_EPIMORPHISM: self._dominance_epimorphism,
            PropositionTag.BOUNDED_DISJOINT_EDGES: self._bounded_disjoint_edges,
            PropositionTag.BOUNDED_PARTIAL_PAIRS: self._bounded_partial_pairs,
            PropositionTag.PARTIAL_ORDER: self._partial_order,
            PropositionTag.COMPLETE_GRAPH_CONSTRUCTION: self._complete_graph_construction,
            PropositionTag.SUBCOMPLETE_CONSTRUCTION: self._subcomplete_construction,
        }

    def resolve_tag(self, tag: Union[PropositionTag, str]) -> PropositionTag:
        try:
            return PropositionTag(tag)
        except ValueError:
            raise UnknownTag(f"unknown proposition tag '{tag}'")

    def verify_proposition(
        self, tag: Union[PropositionTag, str], bound: int, seed: Optional[int] = None
    ) -> PropositionReport:
        tag = self.resolve_tag(tag)
        seed = settings.default_seed if seed is None else seed

        started = time.perf_counter()
        try:
            checked, counterexample, detail = self._checks[tag](bound, seed)
        except HomImageError as e:
            logger.error(f"Verification of {tag.value} aborted: {e.message}")
            raise
        elapsed = time.perf_counter() - started

        outcome = ReportOutcome.PASS if counterexample is None else ReportOutcome.FAIL
        logger.info(f"{tag.value} up to {bound}: {outcome.value} after {checked} checks in {elapsed:.2f}s")
        return PropositionReport(
            tag=tag.value,
            bound=bound,
            outcome=outcome,
            elapsed=round(elapsed, 4),
            checked=checked,
            counterexample=counterexample,
            detail=detail,
        )

    def _subcomplete_graph_images(self, bound: int, seed: int) -> CheckResult:
        checked = 0
        for n in range(1, bound + 1):
            for k in range(n // 2 + 1):
                graph = family_service.subcomplete_graph(n, k)
                for image in homomorphism_service.homomorphic_images(graph, Strength.STANDARD, REFLEXIVE_GRAPH):
                    if structure_service.are_isomorphic(image, graph):
                        continue
                    checked += 1
                    shape = classification_service.recognize_subcomplete_graph(image)
                    if shape is None or shape.proper:
                        return checked, format_structure(image, REFLEXIVE_GRAPH), f"image of N({n},{k})"
        return checked, None, None

    def _subcomplete_digraph_images(self, bound: int, seed: int) -> CheckResult:
        checked = 0
        for n in range(1, bound + 1):
            for k in range(n // 2 + 1):
                digraph = family_service.subcomplete_digraph(n, k)
                for image in homomorphism_service.homomorphic_images(digraph, Strength.STANDARD, REFLEXIVE_DIGRAPH):
                    if structure_service.are_isomorphic(image, digraph):
                        continue
                    checked += 1
                    shape = classification_service.recognize_subcomplete_digraph(image)
                    if shape is None or shape.proper:
                        return checked, format_structure(image, REFLEXIVE_DIGRAPH), f"image of N->({n},{k})"
        return checked, None, None

    def _tournament_rigidity(self, bound: int, seed: int) -> CheckResult:
        trivial = structure_service.canonical_key(family_service.parity_tournament(1))
        checked = 0
        for m in range(3, bound + 1, 2):
            tournament = family_service.parity_tournament(m)
            expected = {trivial, structure_service.canonical_key(tournament)}
            images = homomorphism_service.homomorphic_images(tournament, Strength.STANDARD, REFLEXIVE_TOURNAMENT)
            checked += 1
            found = {structure_service.canonical_key(image) for image in images}
            if found != expected:
                extra = [i for i in images if structure_service.canonical_key(i) not in expected]
                if extra:
                    return checked, format_structure(extra[0], REFLEXIVE_TOURNAMENT), f"extra image of T_{m}"
                return checked, format_structure(tournament, REFLEXIVE_TOURNAMENT), "missing image"
        return checked, None, None

    def _dominance_epimorphism(self, bound: int, seed: int) -> CheckResult:
        rng = random.Random(seed)
        for sample in range(settings.dominance_samples):
            small, small_dec, large, large_dec = decomposition_service.random_dominating_pair(
                rng, max_f=2, max_part=bound
            )
            try:
                decomposition_service.epi_from_dominance(small, small_dec, large, large_dec)
            except VerificationFailed:
                return sample + 1, format_structure(large, PLAIN_DIGRAPH), f"sample {sample} with seed {seed}"
        return settings.dominance_samples, None, None

    def _bounded_disjoint_edges(self, bound: int, seed: int) -> CheckResult:
        checked = 0
        for digraph in enumeration_service.enumerate_up_to(PLAIN_DIGRAPH, bound):
            size = decomposition_service.max_disjoint_edges(digraph).size
            for limit in range(size, 3):
                checked += 1
                if decomposition_service.find_decomposition(digraph, 2 * limit, use_c=False) is None:
                    return checked, format_structure(digraph, PLAIN_DIGRAPH), f"bounded part {2 * limit}"
        return checked, None, None

    def _bounded_partial_pairs(self, bound: int, seed: int) -> CheckResult:
        checked = 0
        for digraph in enumeration_service.enumerate_up_to(REFLEXIVE_DIGRAPH, bound):
            size = decomposition_service.max_disjoint_partial_pairs(digraph).size
            for limit in range(size, 3):
                checked += 1
                if decomposition_service.find_decomposition(digraph, 2 * limit, use_e=False) is None:
                    return checked, format_structure(digraph, REFLEXIVE_DIGRAPH), f"bounded part {2 * limit}"
        return checked, None, None

    def _partial_order(self, bound: int, seed: int) -> CheckResult:
        structures = enumeration_service.enumerate_up_to(PLAIN_DIGRAPH, bound)
        count = len(structures)
        checked = 0
        for strength in Strength:
            below = [
                [homomorphism_service.precedes(a, b, strength) for b in structures] for a in structures
            ]
            for i in range(count):
                checked += 1
                if not below[i][i]:
                    return checked, format_structure(structures[i], PLAIN_DIGRAPH), f"{strength.value} reflexivity"
            for i, j in itertools.combinations(range(count), 2):
                checked += 1
                if below[i][j] and below[j][i]:
                    return checked, format_structure(structures[i], PLAIN_DIGRAPH), f"{strength.value} antisymmetry"
            for i, j, k in itertools.product(range(count), repeat=3):
                if below[i][j] and below[j][k]:
                    checked += 1
                    if not below[i][k]:
                        return checked, format_structure(structures[i], PLAIN_DIGRAPH), f"{strength.value} transitivity"
        return checked, None, None

    def _complete_graph_construction(self, bound: int, seed: int) -> CheckResult:
        checked = 0
        for graph in enumeration_service.enumerate_up_to(REFLEXIVE_GRAPH, bound):
            disjoint = decomposition_service.max_disjoint_edges(graph).size
            for n in (2, 3):
                if disjoint < n * (n - 1) // 2:
                    continue
                checked += 1
                try:
                    construction_service.complete_strong_epimorphism(graph, n)
                except VerificationFailed:
                    return checked, format_structure(graph, REFLEXIVE_GRAPH), f"onto K_{n}"
        return checked, None, None

    def _subcomplete_construction(self, bound: int, seed: int) -> CheckResult:
        checked = 0
        cases = (
            (REFLEXIVE_GRAPH, decomposition_service.max_disjoint_nonedges,
             construction_service.subcomplete_epimorphism),
            (REFLEXIVE_DIGRAPH, decomposition_service.max_disjoint_partial_pairs,
             construction_service.subcomplete_digraph_epimorphism),
        )
        for kind, pairs_of, construct in cases:
            limit = min(bound, enumeration_service.bound_for(kind))
            for structure in enumeration_service.enumerate_up_to(kind, limit):
                available = pairs_of(structure).size
                for n in range(1, structure.n + 1):
                    for k in range(min(available, (n - 1) // 2) + 1):
                        checked += 1
                        try:
                            construct(structure, n, k)
                        except VerificationFailed:
                            return checked, format_structure(structure, kind), f"onto subcomplete ({n},{k})"
        return checked, None, None


# Service instance
verification_service = VerificationService()
