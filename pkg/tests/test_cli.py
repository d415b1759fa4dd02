import io
import json
from pathlib import Path

import pytest

from gclt.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, build_parser, parse_span, run

DATA = Path(__file__).parent / "data"


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_classify_json():
    code, out, _ = invoke("classify", "28")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["cclt"] is False
    assert data["aclt"] is True


def test_classify_one():
    _, out, _ = invoke("classify", "1")
    data = json.loads(out)
    assert all(data[flag] for flag in ("cyclic", "abelian", "cclt", "aclt"))


def test_classify_csv():
    _, out, _ = invoke("--format", "csv", "classify", "28")
    assert out == "n,cyclic,abelian,cclt,aclt\n28,false,false,false,true\n"


def test_classify_text():
    _, out, _ = invoke("--format", "text", "classify", "6")
    assert "cclt: true (n=pq)" in out


def test_range_csv():
    code, out, _ = invoke("range", "1..12", "--csv")
    lines = out.splitlines()
    assert code == EXIT_OK
    assert lines[0] == "n,cyclic,abelian,cclt,aclt"
    assert len(lines) == 13
    assert lines[8] == "8,false,false,false,true"


def test_range_json():
    _, out, _ = invoke("range", "27..28")
    assert [row["n"] for row in json.loads(out)] == [27, 28]


@pytest.mark.parametrize("span", ["12..1", "1-5", "a..b"])
def test_bad_range(span):
    code, out, err = invoke("range", span)
    assert code == EXIT_USAGE
    assert out == ""
    assert "error" in json.loads(err)


def test_parse_span():
    assert parse_span("3..17") == (3, 17)


def test_witness_command():
    code, out, _ = invoke("witness", "8", "--kind", "cclt", "--verify")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["spec"] == "C2xC2xC2"
    assert data["failing_divisor"] == 4
    assert data["verified"] is True


def test_large_witness_verification_needs_slow():
    code, out, _ = invoke("witness", "243", "--kind", "aclt", "--verify")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["spec"] == "M(27,9,4)"
    assert data["verified"] is False


@pytest.mark.slow
def test_large_witness_verified_with_slow():
    code, out, _ = invoke("witness", "243", "--kind", "aclt", "--verify", "--slow")
    assert code == EXIT_OK
    assert json.loads(out)["verified"] is True


def test_witness_for_aclt_number():
    code, _, err = invoke("witness", "28", "--kind", "aclt")
    assert code == EXIT_USAGE
    assert "ACLT number" in json.loads(err)["error"]


def test_group_command():
    code, out, _ = invoke("group", "D3", "--predicates", "--subgroups")
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["order"] == 6
    assert data["predicates"]["cclt"] is True
    assert len(data["subgroups"]) == 6


def test_group_parse_error():
    code, _, err = invoke("group", "Z5")
    assert code == EXIT_USAGE
    assert "position 0" in json.loads(err)["error"]


def test_catalog_command():
    code, out, _ = invoke("catalog", "28")
    assert code == EXIT_OK
    assert json.loads(out)[0]["recipes"] == ["C28", "C2xC14", "D14", "Dic7"]


def test_unsupported_order_lists_supported():
    code, _, err = invoke("catalog", "36")
    assert code == EXIT_USAGE
    assert "supported: 1, 2, 3" in json.loads(err)["error"]


def test_xgraph_files(tmp_path):
    dot, doc = tmp_path / "x28.dot", tmp_path / "x28.json"
    code, out, _ = invoke("xgraph", "28", "--dot", str(dot), "--json", str(doc))
    assert code == EXIT_OK
    assert dot.read_text() == (DATA / "x28.dot").read_text()
    assert json.loads(doc.read_text())["connected"] is True
    assert json.loads(out)["complete"] is False


def test_xgraph_partial_order():
    code, _, _ = invoke("xgraph", "24")
    assert code == EXIT_USAGE


def test_verify_command():
    code, out, _ = invoke("--format", "text", "verify", "cclt-numbers", "--max-order", "12")
    assert code == EXIT_OK
    assert out.splitlines()[-1].endswith("0 failed")


def test_verify_failure_exit_code(monkeypatch):
    from gclt import suites
    from gclt.models import CheckResult

    monkeypatch.setitem(
        suites.SUITES, "hereditary", lambda max_order, slow: iter([CheckResult(suite="hereditary", name="x", passed=False)])
    )
    code, _, _ = invoke("verify", "hereditary")
    assert code == EXIT_FAILED


@pytest.mark.parametrize("argv", [[], ["frobnicate"], ["verify", "bogus"], ["witness", "8"]])
def test_usage_errors(argv):
    code, _, err = invoke(*argv)
    assert code == EXIT_USAGE
    assert "usage" in err


def test_help_exits_cleanly():
    code, out, _ = invoke("--help")
    assert code == EXIT_OK


def test_small_bound_ignored():
    code, out, _ = invoke("--bound", "10", "group", "C12")
    assert code == EXIT_OK
    assert json.loads(out)["order"] == 12


def test_parser_lists_every_command():
    parser = build_parser()
    commands = parser._subparsers._group_actions[0].choices
    assert set(commands) == {"classify", "range", "group", "witness", "catalog", "xgraph", "verify", "serve"}
