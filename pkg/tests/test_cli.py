from __future__ import annotations

import json
import math
import subprocess
import sys

import jsonschema
import pytest

from minorspex.canon import canonical_form
from minorspex.cli import EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, build_parser, dispatch, schema
from minorspex.config import RunConfig
from minorspex.constructions import complete, cycle, star
from minorspex.graph import from_graph6, to_graph6

SUBCOMMANDS = ["construct", "invariants", "minor", "rho", "bounds", "decompose", "spex", "ex", "sat", "verify"]


@pytest.fixture
def g6_files(tmp_path):
    paths = {}
    for name, g in {"C5": cycle(5), "K3": complete(3), "K4": complete(4), "K14": star(4)}.items():
        p = tmp_path / f"{name}.g6"
        p.write_text(to_graph6(g) + "\n")
        paths[name] = str(p)
    return paths


def run(capsys, argv):
    code = dispatch(argv)
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, argv):
    code, out = run(capsys, argv)
    assert code == EXIT_OK, out
    payload = json.loads(out)
    jsonschema.validate(payload, schema())
    return payload


def test_minor_prints_yes(capsys, g6_files):
    code, out = run(capsys, ["minor", "--host", g6_files["C5"], "--pattern", g6_files["K3"]])
    assert (code, out.strip()) == (EXIT_OK, "yes")
    code, out = run(capsys, ["minor", "--host", g6_files["C5"], "--pattern", g6_files["K4"]])
    assert (code, out.strip()) == (EXIT_OK, "no")


def test_spex_example(capsys, g6_files):
    payload = run_json(capsys, ["spex", "-n", "6", "--family", g6_files["K3"]])
    assert abs(payload["value"] - math.sqrt(5)) <= 1e-9
    assert payload["extremal"] == [canonical_form(star(5)).decode()]


def test_verify_reports_asserted_equality(capsys):
    payload = run_json(capsys, ["verify", "--theorem", "lemma3.2", "-n", "9"])
    assert payload["verdict"]["passed"]
    assert payload["verdict"]["asserted"]["set_equality"] is True


@pytest.mark.parametrize(
    "argv",
    [
        ["construct", "book", "2", "8"],
        ["construct", "g-down", "8", "3", "1"],
        ["construct", "named", "petersen"],
        ["invariants", "--family", "K5", "--family", "K3,3"],
        ["--output", "json", "minor", "--host", "petersen", "--pattern", "K5", "--witness"],
        ["rho", "K2,8", "--perron"],
        ["bounds", "D~{", "--family", "K5"],
        ["decompose", "C7"],
        ["decompose", "K4"],
        ["ex", "-n", "7", "--family", "K4", "--connected"],
        ["sat", "-n", "5", "--family", "K3"],
        ["verify", "--theorem", "thm1.1-lb", "-n", "10", "--family", "W5"],
        ["verify", "--theorem", "thm1.6", "-n", "7", "--k", "4"],
    ],
)
def test_json_output_validates(capsys, argv):
    run_json(capsys, argv)


def test_every_subcommand_has_help(capsys):
    for sub in SUBCOMMANDS:
        assert dispatch([sub, "--help"]) == EXIT_OK
        assert "usage" in capsys.readouterr().out


def test_numbers_are_printed_with_nine_decimals(capsys):
    code, out = run(capsys, ["rho", "K2,8"])
    assert "4.0" in out and code == EXIT_OK
    code, out = run(capsys, ["rho", "D}o"])
    assert json.loads(out)["rho"] == round(json.loads(out)["rho"], 9)


def test_graph6_output_and_file(capsys, tmp_path, g6_files):
    out_path = tmp_path / "ext.g6"
    code, out = run(capsys, ["--output", "graph6", "ex", "-n", "7", "--family", g6_files["K14"], "--g6-out", str(out_path)])
    assert code == EXIT_OK
    lines = out.split()
    assert lines and all(from_graph6(s).n == 7 for s in lines)
    assert out_path.read_text().split() == lines


def test_exit_codes(capsys, tmp_path):
    assert dispatch(["frobnicate"]) == EXIT_USAGE
    assert dispatch(["spex", "-n"]) == EXIT_USAGE
    assert dispatch(["minor", "--host", str(tmp_path / "missing.g6"), "--pattern", "K3"]) == EXIT_USAGE
    assert dispatch(["minor", "--host", "not-a-graph", "--pattern", "K3"]) == EXIT_DOMAIN
    bad = tmp_path / "bad.g6"
    bad.write_text("")
    assert dispatch(["rho", str(bad)]) == EXIT_USAGE
    assert dispatch(["spex", "-n", "6", "--family", "K1,4"]) == EXIT_DOMAIN
    assert dispatch(["spex", "-n", "13", "--family", "K4"]) == EXIT_DOMAIN
    assert dispatch(["verify", "--theorem", "lemma3.2", "-n", "4"]) == EXIT_DOMAIN
    assert dispatch(["--tol", "1e-3", "--epsilon", "1e-9", "rho", "K4"]) == EXIT_USAGE
    assert dispatch(["construct", "tesseract"]) == EXIT_USAGE
    capsys.readouterr()


def test_run_config_validation():
    assert RunConfig(workers=1).output == "json"
    with pytest.raises(ValueError):
        RunConfig(tolerance=1e-3, epsilon=1e-9)
    with pytest.raises(ValueError):
        RunConfig(workers=0)
    with pytest.raises(ValueError):
        RunConfig(output="xml")


def test_family_file_with_isolated_vertex_warns(capsys, tmp_path, caplog):
    p = tmp_path / "fam.g6"
    # K_3 plus an isolated vertex
    p.write_text("Cw\n")
    payload = run_json(capsys, ["invariants", "--family", str(p)])
    assert payload["members"] == ["Bw"]
    assert "isolated" in caplog.text


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "minorspex.cli", "minor", "--host", "C5", "--pattern", "K3"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "yes"


def test_parser_lists_all_subcommands():
    text = build_parser().format_help()
    assert all(s in text for s in SUBCOMMANDS)
