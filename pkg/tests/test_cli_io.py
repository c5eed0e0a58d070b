"""Document serialization, the command line, and SVG rendering."""

import io
import json
import xml.dom.minidom
from fractions import Fraction as F
from pathlib import Path

import pytest

from quadshadow.kernel import Point2
from quadshadow.quadrangle import Quadrangle
from quadshadow.checker import PlanarDiagram, decide_depiction
from quadshadow.generators import gen_general_position_diagram
from quadshadow.cli_io import (
    InvariantViolation,
    ParseError,
    emit_diagram,
    emit_scene,
    emit_verdict,
    emit_witness,
    parse_diagram,
    parse_scene,
    parse_verdict,
    parse_witness,
    render_svg,
    run_cli,
)

DATA = Path(__file__).parent / "data"
DILATION = DATA / "dilation.json"
PERTURBED = DATA / "perturbed.json"
WITNESS = DATA / "witness.json"
SCENE = DATA / "scene.json"

A = Point2.affine


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_cli(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


# --- document round-trips -----------------------------------------------------

def test_diagram_round_trip_is_byte_identical():
    text = DILATION.read_text()
    assert emit_diagram(parse_diagram(text)) == text


def test_witness_round_trip_is_byte_identical():
    text = WITNESS.read_text()
    assert emit_witness(parse_witness(text)) == text


def test_scene_round_trip_is_byte_identical():
    text = SCENE.read_text()
    assert emit_scene(parse_scene(text)) == text


def test_verdict_round_trip():
    for path in (DILATION, PERTURBED):
        v = decide_depiction(parse_diagram(path.read_text()))
        assert parse_verdict(emit_verdict(v)) == v
    # a witness reference survives too
    v = decide_depiction(parse_diagram(DILATION.read_text()))
    text = emit_verdict(v, witness_ref="w.json")
    assert json.loads(text)["witness"] == "w.json"
    assert parse_verdict(text) == v


def test_emit_canonicalizes_coordinates():
    doc = json.loads(DILATION.read_text())
    doc["O"] = ["6/2", "0/5", "2/2"]  # same point as ["3", "0", "1"]
    d = parse_diagram(json.dumps(doc))
    assert d.O == A(3, 0)
    assert json.loads(emit_diagram(d))["O"] == ["3", "0", "1"]


def test_rationals_are_strings_in_documents():
    doc = json.loads(WITNESS.read_text())
    assert all(isinstance(c, str) for c in doc["O1"])
    assert doc["version"] == 1
    assert WITNESS.read_text().endswith("}\n")


# --- parse rejections -----------------------------------------------------------

def test_parse_rejects_malformed_json():
    with pytest.raises(ParseError) as exc:
        parse_diagram("{not json")
    assert "line 1" in str(exc.value)


def test_parse_rejects_wrong_version():
    doc = json.loads(DILATION.read_text())
    doc["version"] = 2
    with pytest.raises(ParseError):
        parse_diagram(json.dumps(doc))


def test_parse_rejects_missing_and_unknown_fields():
    doc = json.loads(DILATION.read_text())
    del doc["O"]
    with pytest.raises(ParseError):
        parse_diagram(json.dumps(doc))
    doc = json.loads(DILATION.read_text())
    doc["extra"] = 1
    with pytest.raises(ParseError):
        parse_diagram(json.dumps(doc))


def test_parse_rejects_non_string_coordinates():
    doc = json.loads(DILATION.read_text())
    doc["O"] = [3.0, 0, 1]
    with pytest.raises(ParseError):
        parse_diagram(json.dumps(doc))
    doc["O"] = [True, False, True]
    with pytest.raises(ParseError):
        parse_diagram(json.dumps(doc))


def test_parse_rejects_geometric_invariant_violations():
    doc = json.loads(DILATION.read_text())
    doc["O"] = doc["quad1"]["P"]  # center equal to a vertex
    with pytest.raises(InvariantViolation):
        parse_diagram(json.dumps(doc))
    doc = json.loads(DILATION.read_text())
    doc["quad1"]["Q"] = doc["quad1"]["P"]
    with pytest.raises(InvariantViolation):
        parse_diagram(json.dumps(doc))
    doc = json.loads(DILATION.read_text())
    doc["O"] = ["0", "0", "0"]
    with pytest.raises(InvariantViolation):
        parse_diagram(json.dumps(doc))


# --- exit codes -------------------------------------------------------------------

def test_check_correct_diagram_exits_zero():
    code, out, _ = run("check", str(DILATION))
    assert code == 0
    doc = json.loads(out)
    assert doc["correct"] is True
    assert doc["reason"] == "correct"
    assert doc["diagonal_pairs"] == {"A": True, "B": True, "C": True}


def test_check_incorrect_diagram_exits_one():
    code, out, _ = run("check", str(PERTURBED))
    assert code == 1
    doc = json.loads(out)
    assert doc["correct"] is False
    assert doc["applicable"] is True


def test_check_inapplicable_diagram_exits_two(tmp_path):
    doc = json.loads(DILATION.read_text())
    doc["quad2"]["Q"] = ["-9", "4", "1"]  # off the ray through O and Q1
    p = tmp_path / "off.json"
    p.write_text(json.dumps(doc))
    code, out, _ = run("check", str(p))
    assert code == 2
    parsed = json.loads(out)
    assert parsed["applicable"] is False
    assert parsed["diagonal_pairs"] is None


def test_invalid_document_exits_two(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"version": 1}')
    code, _, err = run("check", str(p))
    assert code == 2
    assert "error:" in err


def test_usage_errors_exit_sixty_four():
    code, _, err = run("frobnicate")
    assert code == 64
    assert "usage:" in err
    code, _, err = run("fuzz", "--count", "5")  # missing --seed
    assert code == 64
    code, _, err = run("qset", str(DILATION), "1,2")  # two coordinates
    assert code == 64
    code, _, err = run("qset", str(DILATION), "0,0,0")
    assert code == 64


def test_missing_file_exits_sixty_six():
    code, _, err = run("check", "no/such/file.json")
    assert code == 66
    assert "error:" in err


def test_help_exits_zero():
    code, _, _ = run("--help")
    assert code == 0


def test_domain_failure_exits_one():
    # the dilation is correct but not in general position, so the axis
    # route has no witness to offer
    code, _, err = run("lift", str(DILATION), "--method", "axis")
    assert code == 1
    assert "error:" in err


# --- subcommand behavior --------------------------------------------------------------

def test_lift_matches_stored_witness():
    code, out, _ = run("lift", str(DILATION))
    assert code == 0
    assert out == WITNESS.read_text()


def test_lift_rejects_equal_displacements():
    code, _, err = run("lift", str(DILATION), "--c1", "2", "--c2", "2")
    assert code == 1
    code, _, err = run("lift", str(DILATION), "--c1", "nope")
    assert code == 64


def test_project_reproduces_the_diagram():
    code, out, _ = run("project", str(SCENE))
    assert code == 0
    assert out == DILATION.read_text()


def test_axis_document_frozen():
    code, out, _ = run("axis", str(DILATION))
    assert code == 0
    doc = json.loads(out)
    assert doc["axis"] == ["0", "0", "1"]
    assert doc["quad1"]["QR"] == ["0", "1", "0"]
    assert doc["quad1"] == doc["quad2"]


def test_axis_fails_for_incorrect_diagram():
    code, _, err = run("axis", str(PERTURBED))
    assert code == 1


def test_qset_traces_both_quadrangles():
    code, out, _ = run("qset", str(DILATION), "0,0,1")
    assert code == 0
    doc = json.loads(out)
    assert doc["line"] == ["0", "0", "1"]
    assert doc["quad1"]["PQ"] == ["1", "0", "0"]
    assert doc["quad1"]["SQ"] == ["1", "-1", "0"]
    assert doc["quad1"]["RP"] == ["1", "1", "0"]
    assert set(doc["quad2"]) == {"QR", "RP", "PQ", "SP", "SQ", "SR"}


def test_qset_rejects_line_through_vertex():
    code, _, err = run("qset", str(DILATION), "1,-1,0")  # through P1
    assert code == 1


def test_fuzz_summary_lines():
    code, out, _ = run("fuzz", "--count", "5", "--seed", "3")
    assert code == 0
    assert out == "5/5 verdicts correct\n"
    code, out, _ = run("fuzz", "--count", "4", "--seed", "9", "--mode", "incorrect")
    assert code == 0
    assert out == "4/4 verdicts incorrect\n"
    code, out, _ = run("fuzz", "--count", "4", "--seed", "1", "--mode", "desargues")
    assert code == 0
    assert out == "4/4 configurations consistent\n"
    code, _, _ = run("fuzz", "--count", "0", "--seed", "1")
    assert code == 64


# --- rendering --------------------------------------------------------------------------

def test_render_writes_well_formed_svg(tmp_path):
    target = tmp_path / "figure.svg"
    code, _, _ = run("render", str(DILATION), "--out", str(target))
    assert code == 0
    svg = target.read_text()
    xml.dom.minidom.parseString(svg)
    assert svg.startswith("<svg ")
    assert svg.endswith("</svg>\n")


def test_render_is_deterministic():
    d = parse_diagram(DILATION.read_text())
    assert render_svg(d) == render_svg(d)


def test_render_marker_and_arrow_counts_for_the_dilation():
    svg = render_svg(parse_diagram(DILATION.read_text()))
    assert svg.count('class="vertex"') == 8
    assert svg.count('class="center"') == 1
    # B1=(0,0) and B2=(-3,0); the other diagonal points are ideal
    assert svg.count('class="diagonal"') == 2
    # two shared ideal diagonal directions plus the ideal axis
    assert svg.count('<g class="arrow">') == 3
    assert ">o</text>" in svg
    assert "A1=A2" in svg and "C1=C2" in svg


def test_render_affine_diagram_has_no_arrows():
    d = gen_general_position_diagram(0, correct=True)
    svg = render_svg(d)
    assert '<g class="arrow">' not in svg
    assert svg.count('class="vertex"') + svg.count('class="diagonal"') >= 10
    xml.dom.minidom.parseString(svg)


def test_render_merges_coincident_labels():
    svg = render_svg(parse_diagram(DILATION.read_text()))
    # every marker label is unique in the picture
    assert svg.count(">B1</text>") == 1
    assert svg.count(">B2</text>") == 1
