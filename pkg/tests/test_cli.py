import io
import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from eulermgn.cli import run

GOLDEN = Path(__file__).parent / "golden"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_compact_csv():
    code, out, _ = call("chi", "compact", "--genus", "2", "--max-n", "7", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,value"
    assert lines[-1] == "7,533019"
    assert len(lines) == 9


def test_series_coeffs():
    code, out, _ = call("series", "--name", "D", "--order", "8", "--format", "coeffs")
    assert code == 0
    row = [line.split() for line in out.splitlines()[1:]]
    assert row[4] == ["4", "7/24"]


def test_series_egf_csv():
    code, out, _ = call("series", "--name", "K2", "--order", "8", "--values", "egf", "--format", "csv")
    assert code == 0
    assert out.strip().splitlines()[-1] == "7,533019"


def test_series_conflicting_flags():
    code, _, err = call("series", "--name", "D", "--format", "egf", "--values", "coeffs")
    assert code == 2 and "conflicts" in err


@pytest.mark.parametrize(
    "argv, golden",
    [
        (("oracle", "quotient", "--n", "6", "--group", "klein", "--format", "json"), "oracle_klein6.json"),
        (("chi", "compact", "--genus", "2", "--max-n", "7", "--format", "json"), "chi_compact_g2.json"),
    ],
)
def test_json_golden(argv, golden):
    code, out, _ = call(*argv)
    assert code == 0
    assert json.loads(out) == json.loads((GOLDEN / golden).read_text())


@pytest.mark.parametrize(
    "argv",
    [
        ("chi", "open", "--genus", "2", "--n", "7", "--format", "json"),
        ("quotient", "Prod3ModKlein", "4", "4", "7", "--format", "json"),
        ("series", "--name", "E", "--order", "6", "--format", "json"),
        ("oracle", "trees", "--n", "4", "--format", "json"),
        ("oracle", "quotient", "--n", "7", "--group", "sj:3", "--format", "json"),
    ],
)
def test_json_schema_and_roundtrip(argv):
    code, out, _ = call(*argv)
    assert code == 0
    record = json.loads(out)
    assert {"kind", "inputs", "value", "provenance"} <= record.keys()
    values = record["value"] if isinstance(record["value"], list) else [record["value"]]
    for text in values:
        assert str(Fraction(text)) == text


def test_chi_open_methods_agree():
    outs = set()
    for method in ("closed", "strata"):
        code, out, _ = call("chi", "open", "--genus", "2", "--n", "4", "--method", method, "--format", "csv")
        assert code == 0
        outs.add(out.splitlines()[-1])
    assert outs == {"2,4,-4"}


def test_quotient_table_output():
    code, out, _ = call("quotient", "M0ModSj", "8", "--j", "6")
    assert code == 0 and "= 0" in out


def test_oracle_custom_group():
    code, out, _ = call("oracle", "quotient", "--n", "6", "--group", "custom:(3 4);(5 6)", "--format", "csv")
    assert code == 0
    assert out.splitlines()[-1].endswith(",-2")


def test_oracle_trees():
    code, out, _ = call("oracle", "trees", "--n", "4", "--format", "json")
    record = json.loads(out)
    assert record["value"] == "7" and record["audit"]["trees"] == 26


@pytest.mark.parametrize(
    "argv",
    [
        ("quotient", "Prod2ModKlein", "4", "7"),
        ("quotient", "Bogus", "4"),
        ("chi", "open", "--genus", "0", "--n", "2"),
        ("chi", "open", "--genus", "0", "--n", "5", "--method", "strata"),
        ("chi", "compact", "--genus", "2", "--max-n", "12"),
        ("oracle", "quotient", "--n", "5", "--group", "nope"),
        ("oracle", "quotient", "--n", "5", "--group", "custom:(1 9)"),
        ("oracle", "trees", "--n", "1"),
        ("chi", "open", "--genus", "5", "--n", "3"),
        ("nonsense",),
        (),
    ],
)
def test_usage_and_domain_errors_exit_2(argv):
    code, _, _ = call(*argv)
    assert code == 2


def test_verify_suite_passes():
    code, out, _ = call("verify", "--suite", "strata", "k1")
    assert code == 0
    lines = out.splitlines()
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert lines[-1].endswith("checks passed")


def test_verify_failure_exit_code(monkeypatch):
    from eulermgn import verify
    from eulermgn.verify import CheckResult

    monkeypatch.setitem(verify.SUITES, "strata", lambda: [CheckResult("strata", "broken", False, "1", "2")])
    code, out, _ = call("verify", "--suite", "strata")
    assert code == 1
    assert "FAIL strata: broken (expected 1, got 2)" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "eulermgn", "chi", "open", "--genus", "1", "--n", "5"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert "= -2" in proc.stdout
