import json
import subprocess
import sys
from fractions import Fraction

import pytest

from lseries_vanish.cli import main, parse_function_document
from lseries_vanish.errors import ParseError
from lseries_vanish.okada import decide_vanishing


def write(tmp_path, q, values, name="f.json"):
    path = tmp_path / name
    path.write_text(json.dumps({"modulus": q, "values": values}))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--format", "json")
    return code, json.loads(out.out)


def test_decide_examples(tmp_path, capsys):
    code, doc = run_json(capsys, "decide", write(tmp_path, 4, ["2", "-6", "2", "2"]))
    assert code == 0 and doc["decision"] == "vanishing"
    assert doc["schema"] == "lseries-vanish/1"
    assert doc["numeric"]["contains_zero"]
    assert doc["theorem1_agrees"] is True

    code, doc = run_json(capsys, "decide", write(tmp_path, 4, ["1", "-2", "1", "0"]))
    assert code == 1 and doc["decision"] == "nonvanishing"
    assert doc["numeric"]["value"]["midpoint"].startswith("0.346573590279972654708616")
    assert doc["okada"]["condition_b_residuals"] == {"2": "-2"}

    code, doc = run_json(capsys, "decide", write(tmp_path, 3, ["1", "1", "1"]))
    assert code == 2 and doc["decision"] == "pole" and doc["residue"] == "1"


def test_decide_text_and_routes(tmp_path, capsys):
    path = write(tmp_path, 4, ["2", "-6", "2", "2"])
    code, out = run(capsys, "decide", path)
    assert code == 0 and "decision: vanishing" in out.out
    for route in ("okada", "theorem1"):
        code, doc = run_json(capsys, "decide", path, "--route", route)
        assert code == 0 and doc["theorem1_agrees"] is None


def test_round_trip_reproduces_residuals(tmp_path, capsys):
    values = ["1/3", "-2", "5/7", "0", "1", "-1/2", "2", "-3/4", "0", "0", "1", "-1"]
    total = sum(Fraction(v) for v in values)
    values[-1] = str(Fraction(values[-1]) - total)
    path = write(tmp_path, 12, values)
    code, doc = run_json(capsys, "decide", path)
    cert = decide_vanishing(parse_function_document((tmp_path / "f.json").read_text()))
    assert {int(k): Fraction(v) for k, v in doc["okada"]["condition_a_residuals"].items()} == cert.condition_a_residuals
    assert {int(k): Fraction(v) for k, v in doc["okada"]["condition_b_residuals"].items()} == cert.condition_b_residuals
    # echoed input re-parses to the same function
    again = parse_function_document(json.dumps(doc["input"]))
    assert again.values == tuple(Fraction(v) for v in values)


def test_output_is_deterministic(tmp_path, capsys):
    path = write(tmp_path, 6, ["1", "-1", "2", "0", "-3", "1"])
    first = run(capsys, "decide", path, "--format", "json")[1].out
    second = run(capsys, "decide", path, "--format", "json")[1].out
    assert first == second


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[1, 2]",
        '{"modulus": 2}',
        '{"modulus": 2, "values": ["1"]}',
        '{"modulus": 2, "values": [0.5, "-1/2"]}',
        '{"modulus": 2, "values": [true, "1"]}',
        '{"modulus": 2, "values": ["1/0", "1"]}',
        '{"modulus": 2, "values": ["x", "1"]}',
        '{"modulus": 0, "values": []}',
    ],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_function_document(text)


def test_parse_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"modulus": 2, "values": [0.5, "-1/2"]}')
    assert run(capsys, "decide", str(bad))[0] == 64
    assert run(capsys, "decide", str(tmp_path / "missing.json"))[0] == 64
    with pytest.raises(SystemExit) as exc:
        main(["decide", str(bad), "--precision", "20000"])
    assert exc.value.code == 64
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 64


def test_precondition_exit_code(capsys):
    assert run(capsys, "epsilon", "--q", "12", "--r", "3", "--p", "5")[0] == 65
    assert run(capsys, "kernel", "--q", "0")[0] == 65


def test_kernel_examples(capsys):
    code, doc = run_json(capsys, "kernel", "--q", "4")
    assert code == 0 and doc["dimension"] == 1 and doc["basis"] == [["1", "-3", "1", "1"]]
    for q in ("7", "1"):
        assert run_json(capsys, "kernel", "--q", q)[1]["dimension"] == 0


def test_eval_examples(tmp_path, capsys):
    path = write(tmp_path, 2, ["1", "-1"])
    code, doc = run_json(capsys, "eval", path)
    assert code == 0 and doc["reports"][0]["value"]["midpoint"].startswith("0.69314718055994530941")
    code, doc = run_json(capsys, "eval", path, "--s", "2")
    assert doc["reports"][0]["value"]["midpoint"].startswith("0.82246703342411321823")
    code, doc = run_json(capsys, "eval", path, "--method", "all", "--terms", "2000")
    assert [r["method"] for r in doc["reports"]] == ["digamma", "hurwitz", "fourier_log", "partial_sum"]
    code, doc = run_json(capsys, "eval", write(tmp_path, 3, ["1", "0", "1"], "p.json"))
    assert code == 2 and doc["residue"] == "2/3"
    assert run(capsys, "eval", path, "--s", "abc")[0] == 64


def test_epsilon_example(capsys):
    code, out = run(capsys, "epsilon", "--q", "4", "--r", "4", "--p", "2")
    assert code == 0 and out.out.strip() == "3"
    code, doc = run_json(capsys, "epsilon", "--q", "12", "--p", "3")
    assert {(e["r"], e["value"]) for e in doc["table"]} >= {(3, "3/2"), (4, "0")}


def test_characters_example(capsys):
    code, doc = run_json(capsys, "characters", "--q", "4")
    assert code == 0 and len(doc["characters"]) == 2
    assert doc["characters"][1]["log_values"] == [0, None, 1, None]
    code, out = run(capsys, "characters", "--q", "4")
    assert "1 0 -1 0" in out.out


def test_fourier_command(tmp_path, capsys):
    code, doc = run_json(capsys, "fourier", write(tmp_path, 2, ["1", "-1"]))
    assert code == 0 and doc["hat"] == [["-1"], ["0"]]


def test_selftest_level1(capsys):
    code, doc = run_json(capsys, "selftest", "--level", "1")
    assert code == 0 and doc["passed"]


def test_console_entry_point(tmp_path):
    path = write(tmp_path, 4, ["1", "-3", "1", "1"])
    proc = subprocess.run(
        [sys.executable, "-m", "lseries_vanish", "decide", path, "--format", "json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["decision"] == "vanishing"
