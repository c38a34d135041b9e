"""
Classification Service for single-obstruction avoidance classes
"""
import itertools
import logging
from typing import List, Optional

from homimage.core.config import settings
from homimage.core.exceptions import NotAnAntichainVerdict, VerificationFailed
from homimage.models.models import (
    Kind,
    LoopModel,
    Outcome,
    Shape,
    Strength,
    Structure,
    StructureClass,
    SubcompleteShape,
    Verdict,
    WitnessFamily,
    WitnessFamilyName,
)
from homimage.services.families.family_service import family_service
from homimage.services.homomorphism.hom_service import homomorphism_service
from homimage.services.structures.structure_service import structure_service

logger = logging.getLogger(__name__)

REFLEXIVE_GRAPH = Kind(shape=Shape.GRAPH, model=LoopModel.REFLEXIVE)
REFLEXIVE_DIGRAPH = Kind(shape=Shape.DIGRAPH, model=LoopModel.REFLEXIVE)

# Theorem citations carried on verdicts
EMPTY_OBSTRUCTION = "empty obstruction"
IRREFLEXIVE_COMPLETE = "Thm 3.1"
IRREFLEXIVE_COMPLETE_DIGRAPH = "Thm 4.5"
PARTIAL_SUBCOMPLETE_GRAPH = "Thm 3.4"
COMPLETE_GRAPH_STRONG = "Thm 3.6"
NOT_SUBCOMPLETE_STRONG = "Thm 3.5"
PROPER_SUBCOMPLETE_STRONG = "Prop 3.2"
THREE_ONE_STRONG = "Sec 3, Av(N3,1)"
OPEN_SUBCOMPLETE_STRONG = "Sec 3, open"
COMPLETE_DIGRAPH = "Thm 4.1"
COMPLETE_DIGRAPH_PLAIN_STRONG = "Thm 4.2"
PARTIAL_SUBCOMPLETE_DIGRAPH = "Thm 4.7"
COMPLETE_DIGRAPH_STRONG = "Thm 4.8"
TRIVIAL_TOURNAMENT = "Prop 5.1"
PARITY_TOURNAMENTS = "Thm 5.2"

DEFAULT_FAMILIES = {
    StructureClass.IRREFLEXIVE_GRAPHS: WitnessFamilyName.IRREFLEXIVE_COMPLETE_GRAPHS,
    StructureClass.REFLEXIVE_GRAPHS: WitnessFamilyName.PROPER_SUBCOMPLETE_GRAPHS,
    StructureClass.DIGRAPHS: WitnessFamilyName.PROPER_SUBCOMPLETE_DIGRAPHS,
    StructureClass.IRREFLEXIVE_DIGRAPHS: WitnessFamilyName.IRREFLEXIVE_COMPLETE_DIGRAPHS,
    StructureClass.REFLEXIVE_DIGRAPHS: WitnessFamilyName.PROPER_SUBCOMPLETE_DIGRAPHS,
    StructureClass.REFLEXIVE_TOURNAMENTS: WitnessFamilyName.PARITY_TOURNAMENTS,
}


class ClassificationService:
    """Verdicts for Av(obstruction) in each structure class, with antichain witnesses"""

    def recognize_subcomplete_graph(self, graph: Structure) -> Optional[SubcompleteShape]:
        """(n, k, proper) when every vertex lies in at most one non-edge"""
        structure_service.validate(graph, REFLEXIVE_GRAPH)
        nonedges = [
            (u, v) for u, v in itertools.combinations(graph.vertices, 2) if not graph.has_edge(u, v)
        ]
        return self._disjoint_shape(graph.n, nonedges)

    def recognize_subcomplete_digraph(self, digraph: Structure) -> Optional[SubcompleteShape]:
        structure_service.validate(digraph, REFLEXIVE_DIGRAPH)
        unidirectional = []
        for u, v in itertools.combinations(digraph.vertices, 2):
            forward, backward = digraph.has_edge(u, v), digraph.has_edge(v, u)
            if not (forward or backward):
                return None
            if forward != backward:
                unidirectional.append((u, v))
        return self._disjoint_shape(digraph.n, unidirectional)

    @staticmethod
    def _disjoint_shape(n: int, pairs) -> Optional[SubcompleteShape]:
        touched = [v for pair in pairs for v in pair]
        if len(touched) != len(set(touched)):
            return None
        k = len(pairs)
        return SubcompleteShape(n=n, k=k, proper=2 * k == n)

    def avoids(self, structure: Structure, obstruction: Structure, strength: Strength) -> bool:
        return not homomorphism_service.precedes(obstruction, structure, strength)

    def classify(self, structure_class: StructureClass, strength: Strength, obstruction: Structure) -> Verdict:
        structure_service.validate(obstruction, structure_class.kind)
        n = obstruction.n

        if n == 0:
            return self._not_wqo(DEFAULT_FAMILIES[structure_class], n, EMPTY_OBSTRUCTION)

        if structure_class == StructureClass.IRREFLEXIVE_GRAPHS:
            return self._not_wqo(WitnessFamilyName.IRREFLEXIVE_COMPLETE_GRAPHS, n, IRREFLEXIVE_COMPLETE)
        if structure_class == StructureClass.IRREFLEXIVE_DIGRAPHS:
            return self._not_wqo(WitnessFamilyName.IRREFLEXIVE_COMPLETE_DIGRAPHS, n, IRREFLEXIVE_COMPLETE_DIGRAPH)
        if structure_class == StructureClass.REFLEXIVE_GRAPHS:
            return self._classify_reflexive_graph(strength, obstruction)
        if structure_class == StructureClass.DIGRAPHS:
            return self._classify_digraph(strength, obstruction)
        if structure_class == StructureClass.REFLEXIVE_DIGRAPHS:
            return self._classify_reflexive_digraph(strength, obstruction)

        if n == 1:
            return Verdict(outcome=Outcome.WQO, finite_ideal=True, theorem_tag=TRIVIAL_TOURNAMENT)
        return self._not_wqo(WitnessFamilyName.PARITY_TOURNAMENTS, n, PARITY_TOURNAMENTS)

    def _classify_reflexive_graph(self, strength: Strength, obstruction: Structure) -> Verdict:
        n = obstruction.n
        shape = self.recognize_subcomplete_graph(obstruction)
        proper_family = WitnessFamilyName.PROPER_SUBCOMPLETE_GRAPHS

        if strength == Strength.STANDARD:
            if shape is not None and not shape.proper:
                return Verdict(
                    outcome=Outcome.WQO, finite_ideal=shape.k == 0, theorem_tag=PARTIAL_SUBCOMPLETE_GRAPH
                )
            return self._not_wqo(proper_family, n, PARTIAL_SUBCOMPLETE_GRAPH)

        if shape is None:
            return self._not_wqo(proper_family, n, NOT_SUBCOMPLETE_STRONG)
        if shape.k == 0:
            return Verdict(outcome=Outcome.WQO, finite_ideal=n == 1, theorem_tag=COMPLETE_GRAPH_STRONG)
        if shape.proper:
            return self._not_wqo(proper_family, n, PROPER_SUBCOMPLETE_STRONG)
        if (shape.n, shape.k) == (3, 1):
            return Verdict(outcome=Outcome.WQO, theorem_tag=THREE_ONE_STRONG)
        return Verdict(outcome=Outcome.OPEN, theorem_tag=OPEN_SUBCOMPLETE_STRONG)

    def _classify_digraph(self, strength: Strength, obstruction: Structure) -> Verdict:
        n = obstruction.n
        tag = COMPLETE_DIGRAPH if strength == Strength.STANDARD else COMPLETE_DIGRAPH_PLAIN_STRONG
        if self._is_reflexive_complete(obstruction):
            return Verdict(outcome=Outcome.WQO, finite_ideal=strength == Strength.STANDARD, theorem_tag=tag)
        if obstruction.is_reflexive:
            return self._not_wqo(WitnessFamilyName.IRREFLEXIVE_COMPLETE_DIGRAPHS, n, tag)
        return self._not_wqo(WitnessFamilyName.PROPER_SUBCOMPLETE_DIGRAPHS, n, tag)

    def _classify_reflexive_digraph(self, strength: Strength, obstruction: Structure) -> Verdict:
        n = obstruction.n
        shape = self.recognize_subcomplete_digraph(obstruction)
        proper_family = WitnessFamilyName.PROPER_SUBCOMPLETE_DIGRAPHS

        if strength == Strength.STANDARD:
            if shape is not None and not shape.proper:
                return Verdict(
                    outcome=Outcome.WQO, finite_ideal=shape.k == 0, theorem_tag=PARTIAL_SUBCOMPLETE_DIGRAPH
                )
            return self._not_wqo(proper_family, n, PARTIAL_SUBCOMPLETE_DIGRAPH)

        if shape is not None and shape.k == 0:
            return Verdict(outcome=Outcome.WQO, finite_ideal=n == 1, theorem_tag=COMPLETE_DIGRAPH_STRONG)
        if shape is not None and not shape.proper:
            return self._not_wqo(WitnessFamilyName.BIDIRECTED_SUBCOMPLETE_GRAPHS, n, COMPLETE_DIGRAPH_STRONG)
        return self._not_wqo(proper_family, n, COMPLETE_DIGRAPH_STRONG)

    @staticmethod
    def _is_reflexive_complete(structure: Structure) -> bool:
        return len(structure.edges) == structure.n * structure.n

    def _not_wqo(self, name: WitnessFamilyName, n: int, tag: str) -> Verdict:
        return Verdict(outcome=Outcome.NOT_WQO, witness_family=self.witness_family(name, n), theorem_tag=tag)

    @staticmethod
    def witness_family(name: WitnessFamilyName, n: int) -> WitnessFamily:
        """The family started at its smallest member strictly larger than n vertices"""
        if name in (WitnessFamilyName.IRREFLEXIVE_COMPLETE_GRAPHS, WitnessFamilyName.IRREFLEXIVE_COMPLETE_DIGRAPHS):
            return WitnessFamily(name=name, start=n + 1)
        if name == WitnessFamilyName.PARITY_TOURNAMENTS:
            start = n + 1 if n % 2 == 0 else n + 2
            return WitnessFamily(name=name, start=max(start, 3), step=2)
        return WitnessFamily(name=name, start=n + 1 if n % 2 else n + 2, step=2)

    def family_member(self, family: WitnessFamily, index: int) -> Structure:
        m = family.start + index * family.step
        if family.name == WitnessFamilyName.PROPER_SUBCOMPLETE_GRAPHS:
            return family_service.subcomplete_graph(m, m // 2)
        if family.name == WitnessFamilyName.PROPER_SUBCOMPLETE_DIGRAPHS:
            return family_service.subcomplete_digraph(m, m // 2)
        if family.name == WitnessFamilyName.BIDIRECTED_SUBCOMPLETE_GRAPHS:
            return family_service.bidirect(family_service.subcomplete_graph(m, m // 2))
        if family.name == WitnessFamilyName.IRREFLEXIVE_COMPLETE_GRAPHS:
            return family_service.complete_graph(m, LoopModel.IRREFLEXIVE)
        if family.name == WitnessFamilyName.IRREFLEXIVE_COMPLETE_DIGRAPHS:
            return family_service.complete_digraph(m, LoopModel.IRREFLEXIVE)
        return family_service.parity_tournament(m)

    def canonical_antichain(
        self, structure_class: StructureClass, strength: Strength, obstruction: Structure, count: int
    ) -> List[Structure]:
        """
        First `count` witness family members that avoid the obstruction and are
        pairwise incomparable, both checked with the engine. Members failing a
        check are skipped, at most settings.witness_max_skips times.
        """
        verdict = self.classify(structure_class, strength, obstruction)
        if verdict.outcome != Outcome.NOT_WQO:
            raise NotAnAntichainVerdict(f"verdict is {verdict.outcome.value}, not not-wqo")

        members: List[Structure] = []
        skips = 0
        index = 0
        while len(members) < count:
            candidate = self.family_member(verdict.witness_family, index)
            index += 1
            if self._fits(candidate, members, obstruction, strength):
                members.append(candidate)
                continue
            skips += 1
            logger.warning(f"Witness member of size {candidate.n} failed verification, skipping")
            if skips > settings.witness_max_skips:
                logger.error(f"Antichain for {verdict.witness_family.name.value} failed to verify")
                raise VerificationFailed(
                    f"{verdict.witness_family.name.value} members did not verify as an antichain"
                )
        logger.info(f"Verified {len(members)} antichain members from {verdict.witness_family.name.value}")
        return members

    def _fits(self, candidate: Structure, members: List[Structure], obstruction: Structure, strength: Strength) -> bool:
        if not self.avoids(candidate, obstruction, strength):
            return False
        return all(
            not homomorphism_service.precedes(member, candidate, strength)
            and not homomorphism_service.precedes(candidate, member, strength)
            for member in members
        )


# Service instance
classification_service = ClassificationService()
