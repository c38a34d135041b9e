import pytest

from homimage.core.exceptions import BoundExceeded, UnknownTag, VerificationFailed
from homimage.models.models import PropositionTag, ReportOutcome
from homimage.services.classification.construction_service import construction_service
from homimage.services.enumeration.verification_service import DEFAULT_BOUNDS, verification_service

QUICK_BOUNDS = {
    PropositionTag.SUBCOMPLETE_GRAPH_IMAGES: 4,
    PropositionTag.SUBCOMPLETE_DIGRAPH_IMAGES: 3,
    PropositionTag.TOURNAMENT_RIGIDITY: 5,
    PropositionTag.DOMINANCE_EPIMORPHISM: 6,
    PropositionTag.BOUNDED_DISJOINT_EDGES: 3,
    PropositionTag.BOUNDED_PARTIAL_PAIRS: 3,
    PropositionTag.PARTIAL_ORDER: 2,
    PropositionTag.COMPLETE_GRAPH_CONSTRUCTION: 5,
    PropositionTag.SUBCOMPLETE_CONSTRUCTION: 4,
}


@pytest.mark.parametrize("tag", list(PropositionTag), ids=[t.value for t in PropositionTag])
def test_checks_pass_at_small_bounds(tag):
    report = verification_service.verify_proposition(tag, QUICK_BOUNDS[tag], seed=1)
    assert report.outcome == ReportOutcome.PASS
    assert report.tag == tag.value
    assert report.checked > 0
    assert report.counterexample is None


@pytest.mark.slow
@pytest.mark.parametrize("tag", list(PropositionTag), ids=[t.value for t in PropositionTag])
def test_checks_pass_at_default_bounds(tag):
    report = verification_service.verify_proposition(tag, DEFAULT_BOUNDS[tag])
    assert report.outcome == ReportOutcome.PASS


def test_tag_given_as_text():
    report = verification_service.verify_proposition("partial-order", 1)
    assert report.outcome == ReportOutcome.PASS


def test_unknown_tag():
    with pytest.raises(UnknownTag):
        verification_service.verify_proposition("four-colour", 3)


def test_bound_errors_propagate():
    with pytest.raises(BoundExceeded):
        verification_service.verify_proposition(PropositionTag.BOUNDED_DISJOINT_EDGES, 9)


def test_failed_construction_is_reported_with_a_counterexample(monkeypatch):
    def broken(structure, n, directed=False):
        raise VerificationFailed("broken")

    monkeypatch.setattr(construction_service, "complete_strong_epimorphism", broken)
    report = verification_service.verify_proposition(PropositionTag.COMPLETE_GRAPH_CONSTRUCTION, 3)
    assert report.outcome == ReportOutcome.FAIL
    assert report.counterexample.startswith("kind graph\nmodel reflexive\n")
    assert report.detail == "onto K_2"
