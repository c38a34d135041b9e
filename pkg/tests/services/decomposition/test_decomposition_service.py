import random

import pytest
from hypothesis import given, settings as hypothesis_settings

from homimage.core.exceptions import (
    InvalidDecomposition,
    KindViolation,
    OutOfRange,
    PreconditionViolated,
    TableMismatch,
)
from homimage.models.models import Decomposition, LoopModel, Signature, Structure
from homimage.services.decomposition.decomposition_service import decomposition_service
from homimage.services.families.family_service import family_service
from homimage.services.homomorphism.hom_service import homomorphism_service
from homimage.services.structures.structure_service import structure_service
from tests.helpers import digraph, graph, plain_digraphs

LOOP = Structure.from_edges(1, [(0, 0)])
POINT = Structure(n=1)


def complete_part_signature(count: int) -> Signature:
    return Signature(
        f_structure=Structure(n=0),
        type_table=(POINT, LOOP),
        e_counts=(0, 0),
        c_counts=(0, count),
    )


class TestDisjointPairs:
    def test_directed_path(self):
        result = decomposition_service.max_disjoint_edges(digraph(4, [(0, 1), (1, 2), (2, 3)]))
        assert result.size == 2
        assert result.pairs == ((0, 1), (2, 3))

    def test_edges_keep_their_orientation(self):
        result = decomposition_service.max_disjoint_edges(digraph(2, [(1, 0)]))
        assert result.pairs == ((1, 0),)

    def test_loops_do_not_count(self):
        assert decomposition_service.max_disjoint_edges(family_service.empty_graph(4)).size == 0

    def test_nonedges_of_subcomplete_graph(self):
        result = decomposition_service.max_disjoint_nonedges(family_service.subcomplete_graph(6, 2))
        assert result.size == 2
        assert result.pairs == ((0, 1), (2, 3))

    def test_nonedges_need_a_reflexive_graph(self):
        with pytest.raises(KindViolation):
            decomposition_service.max_disjoint_nonedges(family_service.subcomplete_digraph(4, 1))

    def test_partial_pairs(self):
        assert decomposition_service.max_disjoint_partial_pairs(family_service.subcomplete_digraph(5, 2)).size == 2
        assert decomposition_service.max_disjoint_partial_pairs(family_service.complete_digraph(5)).size == 0
        assert decomposition_service.max_disjoint_partial_pairs(family_service.empty_graph(5)).size == 2


class TestFindDecomposition:
    def test_subcomplete_digraph_with_four_vertex_bound(self):
        decomposition = decomposition_service.find_decomposition(family_service.subcomplete_digraph(6, 2), 4)
        assert decomposition == Decomposition(e_set=(), c_set=(1, 3, 4, 5), f_set=(0, 2))

    def test_subcomplete_digraph_with_one_vertex_bound(self):
        assert decomposition_service.find_decomposition(family_service.subcomplete_digraph(6, 2), 1) is None

    def test_empty_part_only(self):
        decomposition = decomposition_service.find_decomposition(family_service.empty_graph(5), 0)
        assert decomposition == Decomposition(e_set=(0, 1, 2, 3, 4))

    def test_star_with_cross_flags(self):
        # hub 0 is complete; leaves are empty and point both ways to it
        star = graph(4, [(0, 1), (0, 2), (0, 3)], reflexive=False)
        star = Structure.from_edges(4, star.edges | {(0, 0)})
        decomposition = decomposition_service.find_decomposition(star, 0)
        assert decomposition == Decomposition(e_set=(1, 2, 3), c_set=(0,), e_to_c=True, c_to_e=True)

    def test_without_complete_part(self):
        assert decomposition_service.find_decomposition(family_service.complete_graph(3), 0, use_c=False) is None
        found = decomposition_service.find_decomposition(family_service.complete_graph(3), 0)
        assert found == Decomposition(c_set=(0, 1, 2))

    @hypothesis_settings(max_examples=100, deadline=None)
    @given(plain_digraphs(max_n=5))
    def test_found_decompositions_are_valid(self, structure):
        decomposition = decomposition_service.find_decomposition(structure, 2)
        if decomposition is not None:
            decomposition_service.check_decomposition(structure, decomposition)
            assert len(decomposition.f_set) <= 2


class TestCheckDecomposition:
    def test_parts_must_partition(self):
        with pytest.raises(InvalidDecomposition):
            decomposition_service.check_decomposition(family_service.complete_graph(3), Decomposition(c_set=(0, 1)))

    def test_empty_part_must_be_edgeless(self):
        with pytest.raises(InvalidDecomposition):
            decomposition_service.check_decomposition(family_service.complete_graph(2), Decomposition(e_set=(0, 1)))

    def test_complete_part_needs_loops(self):
        with pytest.raises(InvalidDecomposition):
            decomposition_service.check_decomposition(
                family_service.complete_graph(2, LoopModel.IRREFLEXIVE), Decomposition(c_set=(0, 1))
            )

    def test_cross_flags_must_match(self):
        structure = Structure.from_edges(2, [(1, 1), (0, 1)])
        decomposition_service.check_decomposition(structure, Decomposition(e_set=(0,), c_set=(1,), e_to_c=True))
        with pytest.raises(InvalidDecomposition):
            decomposition_service.check_decomposition(structure, Decomposition(e_set=(0,), c_set=(1,)))


class TestSignatures:
    def test_vertex_type_places_the_vertex_last(self):
        structure = digraph(3, [(2, 0)])
        assert decomposition_service.vertex_type(structure, [0], 2) == Structure.from_edges(2, [(1, 0)])

    def test_vertex_type_rejects_bounded_vertices(self):
        with pytest.raises(OutOfRange):
            decomposition_service.vertex_type(digraph(3, []), [0], 0)
        with pytest.raises(OutOfRange):
            decomposition_service.vertex_type(digraph(3, []), [0], 3)

    def test_signature_counts_types(self):
        structure = digraph(4, [(1, 0), (2, 0)])
        signature = decomposition_service.tau_signature(structure, Decomposition(e_set=(1, 2, 3), f_set=(0,)))
        assert signature.f_structure == POINT
        assert signature.type_table == (Structure(n=2), Structure.from_edges(2, [(1, 0)]))
        assert signature.e_counts == (1, 2)
        assert signature.c_counts == (0, 0)

    def test_signature_follows_the_labeling_of_the_bounded_part(self):
        structure = digraph(4, [(0, 1), (2, 0)])
        decomposition = Decomposition(e_set=(2, 3), f_set=(0, 1))
        signature = decomposition_service.tau_signature(structure, decomposition)

        swapped_outside = structure_service.relabel(structure, [0, 1, 3, 2])
        assert decomposition_service.tau_signature(swapped_outside, decomposition) == signature

        swapped_inside = structure_service.relabel(structure, [1, 0, 2, 3])
        relabeled = decomposition_service.tau_signature(swapped_inside, decomposition)
        assert relabeled != signature
        assert structure_service.are_isomorphic(relabeled.f_structure, signature.f_structure)

    def test_reconstruct_inverts_signature(self):
        rng = random.Random(7)
        for _ in range(20):
            small, small_decomposition, _, _ = decomposition_service.random_dominating_pair(rng)
            signature = decomposition_service.tau_signature(small, small_decomposition)
            rebuilt, rebuilt_decomposition = decomposition_service.reconstruct(signature)
            assert decomposition_service.tau_signature(rebuilt, rebuilt_decomposition) == signature

    def test_dominance(self):
        assert decomposition_service.dominates(complete_part_signature(2), complete_part_signature(4))
        assert not decomposition_service.dominates(complete_part_signature(4), complete_part_signature(2))

    def test_dominance_needs_equal_bounded_parts(self):
        other = Signature(f_structure=POINT, type_table=(), e_counts=(), c_counts=())
        with pytest.raises(TableMismatch):
            decomposition_service.dominates(complete_part_signature(1), other)


class TestEpimorphismFromDominance:
    def test_complete_onto_smaller_complete(self):
        large, large_decomposition = decomposition_service.reconstruct(complete_part_signature(4))
        small, small_decomposition = decomposition_service.reconstruct(complete_part_signature(2))
        mapping = decomposition_service.epi_from_dominance(small, small_decomposition, large, large_decomposition)
        assert homomorphism_service.is_strong_epimorphism(mapping, large, small)

    def test_undominated_target_is_rejected(self):
        large, large_decomposition = decomposition_service.reconstruct(complete_part_signature(4))
        small, small_decomposition = decomposition_service.reconstruct(complete_part_signature(2))
        with pytest.raises(PreconditionViolated):
            decomposition_service.epi_from_dominance(large, large_decomposition, small, small_decomposition)

    def test_support_must_agree(self):
        target, target_decomposition = decomposition_service.reconstruct(complete_part_signature(2))
        source, source_decomposition = decomposition_service.reconstruct(
            Signature(f_structure=Structure(n=0), type_table=(POINT, LOOP), e_counts=(1, 0), c_counts=(0, 2))
        )
        with pytest.raises(PreconditionViolated):
            decomposition_service.epi_from_dominance(target, target_decomposition, source, source_decomposition)

    def test_seeded_random_pairs(self):
        rng = random.Random(2024)
        for _ in range(100):
            small, small_decomposition, large, large_decomposition = decomposition_service.random_dominating_pair(
                rng, max_f=2, max_part=6
            )
            mapping = decomposition_service.epi_from_dominance(small, small_decomposition, large, large_decomposition)
            assert homomorphism_service.is_strong_epimorphism(mapping, large, small)
