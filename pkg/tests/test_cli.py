import json
import subprocess
import sys

import jsonschema
import pytest

from conftest import GOLDEN
from sigmaset.cli import main
from sigmaset.textio import format_set, parse_set


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, "--format", "json", *argv)
    doc = json.loads(out)
    jsonschema.validate(doc, ENVELOPE)
    return code, doc


ENVELOPE = {
    "type": "object",
    "required": ["command", "inputs", "result", "diagnostics"],
    "properties": {
        "command": {"type": "string"},
        "inputs": {"type": "object"},
        "diagnostics": {"type": "array", "items": {"type": "string"}},
    },
}
SET = {"type": "string", "pattern": r"^\{.*\}$"}
TABLE = {
    "type": "object",
    "required": ["rows", "cols", "cells"],
    "properties": {
        "rows": {"type": "array", "items": SET},
        "cols": {"type": "array", "items": SET},
        "cells": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["result", "annihilation"],
                    "additionalProperties": False,
                    "properties": {"result": SET, "annihilation": {"type": "integer", "minimum": 0}},
                },
            },
        },
    },
}
SPACE = {
    "type": "object",
    "required": ["base", "cardinality", "members"],
    "properties": {"cardinality": {"type": "integer"}, "members": {"type": "array", "items": SET}},
}
CONJECTURE = {
    "type": "object",
    "required": ["cases", "all_match"],
    "properties": {
        "all_match": {"type": "boolean"},
        "cases": {
            "type": "array",
            "items": {"type": "object", "required": ["params", "observed", "predicted", "match"]},
        },
    },
}
SOLVE = {
    "type": "object",
    "required": ["fusionable", "closed_form", "solutions"],
    "properties": {
        "fusionable": {"type": "boolean"},
        "closed_form": {
            "oneOf": [
                {"type": "null"},
                {"type": "object", "required": ["s1", "s2"],
                 "properties": {"s1": SET, "s2": SET}},
            ]
        },
        "solutions": {"type": "array", "items": SET},
    },
}


def assert_round_trips(strings):
    for s in strings:
        assert format_set(parse_set(s)) == s


# eval ------------------------------------------------------------------------


def test_eval_fusion(capsys):
    assert run(capsys, "eval", "{1,2,3*,4} + {2,3,4*}")[:2] == (0, "{1, 2}\n")


def test_eval_antiset(capsys):
    assert run(capsys, "eval", "~{1,2,3}")[:2] == (0, "{1*, 2*, 3*}\n")


def test_eval_proper_class(capsys):
    code, out, err = run(capsys, "eval", "{1} | {1*}")
    assert code == 2 and out == ""
    assert "proper sigma-class" in err


def test_eval_parse_error(capsys):
    code, _, err = run(capsys, "eval", "{1,2} + {3")
    assert code == 1 and "parse error" in err


def test_eval_not_entire(capsys):
    assert run(capsys, "eval", "~{1_0}")[0] == 2


def test_eval_show_annihilation(capsys):
    code, out, _ = run(capsys, "eval", "--show-annihilation", "({1*,2*} + {1,2}) + {1}")
    assert code == 0
    assert out.splitlines() == [
        "{1}",
        "annihilation ({1*, 2*} + {1, 2}) = 2",
        "annihilation (({1*, 2*} + {1, 2}) + {1}) = 0",
    ]


def test_eval_json(capsys):
    code, doc = run_json(capsys, "eval", "--show-annihilation", "{1,2} + {1*}")
    assert code == 0
    assert doc["result"]["value"] == "{2}"
    assert doc["result"]["fusions"][0]["annihilation"] == 1


def test_format_flag_after_subcommand(capsys):
    code, out, _ = run(capsys, "eval", "--format", "json", "{1}")
    assert json.loads(out)["result"]["value"] == "{1}"


# table -----------------------------------------------------------------------


@pytest.mark.parametrize("text,golden", [("{1,2}", "table_12.txt"), ("{1,2,3}", "table_123.txt")])
def test_table_text_golden(capsys, text, golden):
    code, out, _ = run(capsys, "table", "--set", text)
    assert code == 0
    assert out == (GOLDEN / golden).read_text()


def test_table_json_golden(capsys):
    code, doc = run_json(capsys, "table", "--set", "{1,2}")
    assert code == 0
    jsonschema.validate(doc["result"], TABLE)
    assert doc == json.loads((GOLDEN / "table_12.json").read_text())
    assert_round_trips(doc["result"]["rows"] + doc["result"]["cols"])


def test_table_diagonal_text(capsys):
    _, out, _ = run(capsys, "table", "--set", "{1,2}")
    lines = out.splitlines()
    diag = [lines[i + 1].split(" | ")[i + 1].strip() for i in range(4)]
    assert diag == ["{}^0_0", "{}^1_1", "{}^2_1", "{}^3_2"]


def test_table_not_entire(capsys):
    assert run(capsys, "table", "--set", "{1_0}")[0] == 2


def test_table_size_limit(capsys):
    assert run(capsys, "table", "--set", "{1,2,3,4,5,6}")[0] == 3


# space -----------------------------------------------------------------------


def test_space_cardinality_only(capsys):
    assert run(capsys, "space", "--set", "{1,2}", "--cardinality-only")[:2] == (0, "9\n")


def test_meta_space_cardinality(capsys):
    out = run(capsys, "space", "--set", "{1,2}", "--zero-part", "{1_0,2_0}", "--cardinality-only")
    assert out[:2] == (0, "36\n")


def test_space_of_empty_set(capsys):
    code, out, _ = run(capsys, "space", "--set", "{}")
    assert code == 0 and out.splitlines() == ["cardinality: 1", "{}"]


def test_space_json(capsys):
    code, doc = run_json(capsys, "space", "--set", "{1}", "--zero-part", "{1_0}")
    jsonschema.validate(doc["result"], SPACE)
    assert doc["result"]["cardinality"] == 6
    assert_round_trips(doc["result"]["members"])


def test_space_errors(capsys):
    assert run(capsys, "space", "--set", "{1_0}")[0] == 2
    assert run(capsys, "space", "--set", "{1}", "--zero-part", "{2}")[0] == 2
    assert run(capsys, "space", "--set", "{1,2,3,4,5,6,7,8,9,10,11}")[0] == 3


# conjecture ------------------------------------------------------------------


def test_conjecture_cardinality(capsys):
    code, out, _ = run(capsys, "conjecture", "cardinality", "--max-n", "5")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 7
    assert [int(line.split("observed=")[1].split()[0]) for line in lines[:6]] == [
        1, 3, 9, 27, 81, 243,
    ]
    assert lines[-1] == "all match: yes (6/6)"


def test_conjecture_loop(capsys):
    code, out, _ = run(capsys, "conjecture", "loop", "--max-n", "3")
    assert code == 0
    last = out.splitlines()[3]
    assert "closure=yes identity=yes inverses=yes commutative=yes associative=no" in last
    assert "witness=({1*}, {1}, {1})" in last


def test_conjecture_meta_json(capsys):
    code, doc = run_json(capsys, "conjecture", "meta", "--max-a", "2", "--max-b", "2")
    assert code == 0
    jsonschema.validate(doc["result"], CONJECTURE)
    assert len(doc["result"]["cases"]) == 9 and doc["result"]["all_match"]


def test_conjecture_loop_json(capsys):
    code, doc = run_json(capsys, "conjecture", "loop", "--max-n", "2")
    jsonschema.validate(doc["result"], CONJECTURE)
    case = doc["result"]["cases"][2]
    assert case["observed"]["associative"] is False
    assert case["observed"]["witnesses"] == [["{1*}", "{1}", "{1}"]]


def test_conjecture_mismatch_exit_code(capsys, monkeypatch):
    from sigmaset import spaces
    from sigmaset.spaces import CardinalityReport, CardinalityRow

    monkeypatch.setattr(
        spaces, "check_cardinality_conjecture",
        lambda n: CardinalityReport((CardinalityRow({"n": 1}, 2, 3),)),
    )
    code, out, _ = run(capsys, "conjecture", "cardinality", "--max-n", "1")
    assert code == 4 and "MISMATCH" in out


def test_conjecture_size_limit(capsys):
    assert run(capsys, "conjecture", "cardinality", "--max-n", "9")[0] == 3
    assert run(capsys, "conjecture", "meta", "--max-a", "6", "--max-b", "6")[0] == 3
    assert run(capsys, "conjecture", "loop", "--max-n", "9")[0] == 3


# solve -----------------------------------------------------------------------


def test_solve_exhaustive(capsys):
    code, out, _ = run(
        capsys, "solve", "--universe", "{1,2}", "--m", "{1,2*}", "--n", "{1}", "--exhaustive"
    )
    assert code == 0
    assert [l for l in out.splitlines() if l.startswith("solution:")] == [
        "solution: {2}", "solution: {1, 2}",
    ]


def test_solve_not_fusionable(capsys):
    code, out, err = run(capsys, "solve", "--universe", "{1,2}", "--m", "{1*}", "--n", "{1}")
    assert code == 5
    assert "not fusionable" in err and "no solution" in out


def test_solve_six_element(capsys):
    code, out, _ = run(
        capsys, "solve", "--universe", "{1,2,3,4,5,6}", "--m", "{1,2,3*,4*,5,6*}", "--n", "{1,2}"
    )
    assert code == 0
    assert "S1: {1, 2, 3, 4, 5*, 6}" in out.splitlines()
    assert "S2: {3, 4, 5*, 6}" in out.splitlines()


def test_solve_json(capsys):
    code, doc = run_json(
        capsys, "solve", "--universe", "{1,2}", "--m", "{1,2*}", "--n", "{1}", "--exhaustive"
    )
    jsonschema.validate(doc["result"], SOLVE)
    assert doc["result"] == {
        "fusionable": True,
        "closed_form": {"s1": "{1, 2}", "s2": "{2}"},
        "solutions": ["{2}", "{1, 2}"],
    }


def test_solve_domain_errors(capsys):
    assert run(capsys, "solve", "--universe", "{1_0}", "--m", "{}", "--n", "{}")[0] == 2
    assert run(capsys, "solve", "--universe", "{1}", "--m", "{2}", "--n", "{}")[0] == 2
    assert run(capsys, "solve", "--universe", "{1", "--m", "{}", "--n", "{}")[0] == 1


def test_solve_exhaustive_size_limit(capsys):
    universe = "{" + ",".join(str(i) for i in range(1, 10)) + "}"
    assert run(capsys, "solve", "--universe", universe, "--m", "{}", "--n", "{1}", "--exhaustive")[0] == 3


def test_error_envelope_in_json(capsys):
    code, doc = run_json(capsys, "eval", "{1} | {1*}")
    assert code == 2 and doc["result"] is None
    assert doc["diagnostics"][0].startswith("domain error")


# whole program ------------------------------------------------------------------


INVOCATIONS = [
    ["table", "--set", "{1,2,3}"],
    ["--format", "json", "space", "--set", "{1,2}", "--zero-part", "{1_0}"],
    ["--format", "json", "conjecture", "loop", "--max-n", "3"],
]


@pytest.mark.parametrize("argv", INVOCATIONS)
def test_output_is_byte_identical(capsys, argv):
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "sigmaset", "eval", "{1,2,3*,4} + {2,3,4*}"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "{1, 2}\n"
