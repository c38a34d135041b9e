import json

import pytest

from homimage.cli.main import main
from homimage.models.models import Kind
from homimage.services.families.family_service import family_service
from homimage.services.structures.text_format import format_structure, parse_structure
from tests.helpers import REFLEXIVE_GRAPH


@pytest.fixture
def write_structure(tmp_path):
    def write(name, structure, kind: Kind = REFLEXIVE_GRAPH):
        path = tmp_path / f"{name}.st"
        path.write_text(format_structure(structure, kind))
        return str(path)

    return write


def blocks(text: str):
    return [block for block in text.strip().split("\n\n") if block]


class TestCompare:
    def test_complete_below_empty_in_standard_order(self, write_structure, capsys):
        k2 = write_structure("k2", family_service.complete_graph(2))
        e2 = write_structure("e2", family_service.empty_graph(2))
        assert main(["compare", k2, e2]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out == ["A < B", "witness: 0->0 1->1"]

    def test_incomparable_in_strong_order(self, write_structure, capsys):
        k2 = write_structure("k2", family_service.complete_graph(2))
        e2 = write_structure("e2", family_service.empty_graph(2))
        assert main(["compare", k2, e2, "--strength", "strong"]) == 1
        assert capsys.readouterr().out.strip() == "incomparable"

    def test_isomorphic_and_record_output(self, write_structure, capsys):
        c4 = write_structure("c4", family_service.subcomplete_graph(4, 2))
        assert main(["compare", c4, c4, "--format", "record"]) == 0
        record = json.loads(capsys.readouterr().out)
        assert record["relation"] == "A = B (isomorphic)"
        assert record["witness"]["values"] == [0, 1, 2, 3]


class TestImages:
    def test_strong_images_of_proper_subcomplete_graph(self, obstruction_dir, capsys):
        assert main(["images", str(obstruction_dir / "n42.st"), "--strength", "strong"]) == 0
        images = blocks(capsys.readouterr().out)
        assert len(images) == 5
        assert all(block.startswith("# image ") for block in images)
        assert parse_structure(images[0])[1] == REFLEXIVE_GRAPH

    def test_dot_output(self, obstruction_dir, capsys):
        assert main(["images", str(obstruction_dir / "t3.st"), "--dot"]) == 0
        assert capsys.readouterr().out.count("digraph S") == 2


class TestClassify:
    def test_verdict_lines(self, obstruction_dir, capsys):
        assert main(["classify", str(obstruction_dir / "n42.st"), "--class", "reflexive-graphs"]) == 0
        assert capsys.readouterr().out.splitlines() == [
            "outcome: not-wqo",
            "finite_ideal: false",
            "witness_family: proper-subcomplete-graphs start=6 step=2",
            "theorem_tag: Thm 3.4",
        ]

    def test_witness_members_follow_the_verdict(self, obstruction_dir, capsys):
        argv = ["classify", str(obstruction_dir / "t3.st"), "--class", "reflexive-tournaments", "--witness", "1"]
        assert main(argv) == 0
        out = capsys.readouterr().out
        verdict, member = out.split("\n\n", 1)
        assert "outcome: not-wqo" in verdict
        structure, _ = parse_structure(member)
        assert structure == family_service.parity_tournament(5)

    def test_open_verdict_as_record(self, obstruction_dir, capsys):
        argv = ["classify", str(obstruction_dir / "n41.st"), "--class", "reflexive-graphs", "--strength", "strong",
                "--format", "record"]
        assert main(argv) == 0
        record = json.loads(capsys.readouterr().out)
        assert record["outcome"] == "open"
        assert record["witness_family"] is None

    def test_missing_class(self, obstruction_dir, capsys):
        assert main(["classify", str(obstruction_dir / "n42.st")]) == 2
        assert capsys.readouterr().err.startswith("error [PRECONDITION_VIOLATED]")

    def test_obstruction_outside_class(self, obstruction_dir, capsys):
        assert main(["classify", str(obstruction_dir / "t3.st"), "--class", "reflexive-graphs"]) == 2
        assert "KIND_VIOLATION" in capsys.readouterr().err


class TestFamily:
    def test_parity_tournament(self, capsys):
        assert main(["family", "parity-tournament", "3"]) == 0
        structure, kind = parse_structure(capsys.readouterr().out)
        assert structure == family_service.parity_tournament(3)
        assert kind.shape.value == "tournament"

    def test_irreflexive_complete_graph(self, capsys):
        assert main(["family", "complete-graph", "3", "--model", "irreflexive"]) == 0
        assert "model irreflexive" in capsys.readouterr().out

    def test_bad_parameters(self, capsys):
        assert main(["family", "subcomplete-graph", "3", "2"]) == 2
        assert capsys.readouterr().err.startswith("error [RANGE_ERROR]")

    def test_error_as_record(self, capsys):
        assert main(["family", "parity-tournament", "4", "--format", "record"]) == 2
        record = json.loads(capsys.readouterr().err)
        assert record == {"success": False, "message": record["message"], "error_code": "RANGE_ERROR"}


class TestEnumeration:
    def test_enumerate_class(self, capsys):
        assert main(["enumerate", "3", "--class", "irreflexive-graphs"]) == 0
        assert len(blocks(capsys.readouterr().out)) == 4

    def test_enumerate_kind_and_model_as_records(self, capsys):
        assert main(["enumerate", "2", "--kind", "digraph", "--model", "plain", "--format", "record"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 10
        assert all(json.loads(line)["n"] == 2 for line in lines)

    def test_enumerate_needs_a_kind(self, capsys):
        assert main(["enumerate", "2"]) == 2

    def test_enumerate_bound(self, capsys):
        assert main(["enumerate", "9", "--class", "digraphs"]) == 2
        assert "BOUND_EXCEEDED" in capsys.readouterr().err

    def test_ideal(self, write_structure, capsys):
        k2 = write_structure("k2", family_service.complete_graph(2))
        assert main(["ideal", k2, "--class", "reflexive-graphs", "--strength", "strong", "--max-n", "3"]) == 0
        assert len(blocks(capsys.readouterr().out)) == 4

    def test_antichain_from_files(self, write_structure, capsys):
        k2 = write_structure("k2", family_service.complete_graph(2))
        e2 = write_structure("e2", family_service.empty_graph(2))
        assert main(["antichain", k2, e2, "--size", "2", "--strength", "strong"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("found (exact search over 2 candidates)")

    def test_antichain_absent(self, write_structure, capsys):
        k1 = write_structure("k1", family_service.complete_graph(1))
        k2 = write_structure("k2", family_service.complete_graph(2))
        assert main(["antichain", k1, k2, "--size", "2"]) == 1
        assert capsys.readouterr().out.strip() == "absent (exact search over 2 candidates)"

    def test_antichain_from_ideal(self, write_structure, capsys):
        k3 = write_structure("k3", family_service.complete_graph(3))
        argv = ["antichain", "--class", "reflexive-graphs", "--strength", "strong", "--obstruction", k3,
                "--max-n", "3", "--size", "2", "--format", "record"]
        assert main(argv) == 0
        record = json.loads(capsys.readouterr().out)
        assert record["found"] is True
        assert len(record["members"]) == 2

    def test_verify(self, capsys):
        assert main(["verify", "partial-order", "--bound", "1"]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "PO bound=1: pass"

    def test_verify_record(self, capsys):
        assert main(["verify", "tournament-rigidity", "--bound", "5", "--format", "record"]) == 0
        assert json.loads(capsys.readouterr().out)["outcome"] == "pass"


class TestErrors:
    def test_parse_error(self, tmp_path, capsys):
        path = tmp_path / "bad.st"
        path.write_text("kind graph\nmodel reflexive\nvertices 2\nedge 1 0\n")
        assert main(["images", str(path)]) == 2
        assert capsys.readouterr().err.startswith("error [PARSE_ERROR]: line 4:")

    def test_binary_file(self, tmp_path, capsys):
        path = tmp_path / "binary.st"
        path.write_bytes(b"\xff\xfe\x00kind graph\n")
        assert main(["compare", str(path), str(path)]) == 2
        assert capsys.readouterr().err.startswith("error [PARSE_ERROR]")

    def test_unknown_verify_tag(self, capsys):
        assert main(["verify", "P9.9"]) == 2
        assert "UNKNOWN_TAG" in capsys.readouterr().err

    def test_missing_file(self, tmp_path, capsys):
        assert main(["images", str(tmp_path / "absent.st")]) == 2
        assert "IO_ERROR" in capsys.readouterr().err

    def test_version(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["--version"])
        assert info.value.code == 0
        assert capsys.readouterr().out.startswith("homimage ")


class TestDocumentedCommands:
    def test_proper_subcomplete_graphs_are_incomparable(self, write_structure, capsys):
        n42 = write_structure("n42", family_service.subcomplete_graph(4, 2))
        n63 = write_structure("n63", family_service.subcomplete_graph(6, 3))
        assert main(["compare", n42, n63, "--strength", "standard"]) == 1
        assert capsys.readouterr().out.strip() == "incomparable"

    def test_partial_subcomplete_graph_below_a_larger_one(self, write_structure, capsys):
        n62 = write_structure("n62", family_service.subcomplete_graph(6, 2))
        n82 = write_structure("n82", family_service.subcomplete_graph(8, 2))
        assert main(["compare", n62, n82, "--strength", "standard"]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "A < B"
        assert out[1].startswith("witness: ")

    def test_classify_partial_subcomplete_graph(self, obstruction_dir, capsys):
        argv = ["classify", "--class", "reflexive-graphs", "--strength", "standard", str(obstruction_dir / "n62.st")]
        assert main(argv) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "outcome: wqo"
        assert "theorem_tag: Thm 3.4" in out

    def test_classify_parity_tournament(self, obstruction_dir, capsys):
        argv = ["classify", "--class", "reflexive-tournaments", "--strength", "standard", str(obstruction_dir / "t3.st")]
        assert main(argv) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "outcome: not-wqo"
        assert "witness_family: parity-tournaments start=5 step=2" in out
        assert "theorem_tag: Thm 5.2" in out

    def test_classify_open_region(self, obstruction_dir, capsys):
        argv = ["classify", "--class", "reflexive-graphs", "--strength", "strong", str(obstruction_dir / "n51.st")]
        assert main(argv) == 0
        assert capsys.readouterr().out.splitlines()[0] == "outcome: open"

    def test_family_subcomplete_graph(self, capsys):
        assert main(["family", "subcomplete-graph", "6", "2"]) == 0
        structure, _ = parse_structure(capsys.readouterr().out)
        assert structure == family_service.subcomplete_graph(6, 2)

    def test_verify_tournament_rigidity(self, capsys):
        assert main(["verify", "P5.1", "--bound", "7"]) == 0
        assert capsys.readouterr().out.splitlines()[0] == "P5.1 bound=7: pass"

    def test_family_parity_tournament_of_even_order(self, capsys):
        assert main(["family", "parity-tournament", "4"]) == 2
