import io
import json
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

import leibkit
import leibkit.enumeration
import leibkit.radicals
from leibkit.algebra import LeibnizAlgebra
from leibkit.cli import main
from leibkit.constructions import counterexample, heisenberg_example, sl2
from leibkit.corpus import build_corpus
from leibkit.errors import LeibnizViolationError, ParseError
from leibkit.exactla import GF, QQ
from leibkit.io import dumps, load, loads

DATA = Path(leibkit.__file__).parent / "data"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


# -- file format -------------------------------------------------------------

def test_round_trip_named_algebras():
    for A in (counterexample(2), heisenberg_example(3), sl2(QQ), LeibnizAlgebra.abelian(GF(5), 0)):
        B = loads(dumps(A))
        assert B.sc == A.sc and B.field == A.field and dumps(B) == dumps(A)


def test_round_trip_corpus():
    for _, A in build_corpus(random_count=5, derived_limit=1):
        assert loads(dumps(A)).sc == A.sc


@settings(max_examples=60, deadline=None)
@given(st.lists(st.fractions(min_value=-50, max_value=50, max_denominator=9), min_size=4, max_size=4))
def test_rational_coefficients_round_trip(coeffs):
    # random coefficients rarely satisfy the Leibniz identity; only the format is under test
    A = LeibnizAlgebra(QQ, (((coeffs[0], coeffs[1]), (0, 0)), ((0, 0), (coeffs[2], coeffs[3]))), check=False)
    B = loads(dumps(A), check=False)
    assert B.sc == A.sc


def test_comments_and_default_labels():
    A = loads("# leading comment\nleibniz-sc 1\nfield GF 3\ndim 2  # two\np 0 1 : 1*2\np 1 0 : 1*1\n")
    assert A.basis_labels == ("b0", "b1")
    assert A.sc[0][1] == (0, 2)


@pytest.mark.parametrize(
    "text,line",
    [
        ("", 0),
        ("# only a comment\n", 0),
        ("leibniz-sc 2\nfield Q\ndim 1\n", 1),
        ("leibniz-sc 1\nfield GF 4\ndim 1\n", 2),
        ("leibniz-sc 1\nfield R\ndim 1\n", 2),
        ("leibniz-sc 1\nfield GF 2\nsize 1\n", 3),
        ("leibniz-sc 1\nfield GF 2\ndim 2\np 0 2 : 0*1\n", 4),
        ("leibniz-sc 1\nfield GF 2\ndim 2\np 0 0 : 0*2\n", 4),
        ("leibniz-sc 1\nfield GF 2\ndim 2\np 0 0 : 0*1\np 0 0 : 1*1\n", 5),
        ("leibniz-sc 1\nfield GF 2\ndim 2\np 0 0 : 0*1 + 0*1\n", 4),
        ("leibniz-sc 1\nfield GF 2\ndim 2\np 0 0 : 01\n", 4),
        ("leibniz-sc 1\nfield Q\ndim 1\np 0 0 : 0*1/0\n", 4),
        ("leibniz-sc 1\nfield Q\ndim 2\nbasis a a\n", 4),
        ("leibniz-sc 1\nfield Q\ndim 1\np 0 0 : 0*1\nbasis a\n", 5),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as exc:
        loads(text)
    assert exc.value.line == line


def test_violating_file():
    with pytest.raises(LeibnizViolationError):
        load(DATA / "violating.lz")
    A = load(DATA / "violating.lz", check=False)
    assert A.dim == 2


def test_shipped_files_match_builders():
    assert load(DATA / "counterex2.lz").sc == counterexample(2).sc
    assert load(DATA / "counterex3.lz").sc == counterexample(3).sc
    assert load(DATA / "heis2.lz").sc == heisenberg_example(2).sc
    assert load(DATA / "sl2_q.lz").sc == sl2(QQ).sc
    assert load(DATA / "sl2_gf5.lz").sc == sl2(GF(5)).sc


# -- command line ------------------------------------------------------------

def test_validate():
    assert run("validate", str(DATA / "counterex2.lz")) == (0, "ok: GF(2), dim 5\n")
    code, out = run("validate", str(DATA / "violating.lz"))
    assert code == 1 and out == "Leibniz identity fails on basis triple (0, 0, 0)\n"
    code, out = run("validate", "--json", str(DATA / "violating.lz"))
    assert json.loads(out) == {"valid": False, "witness": [0, 0, 0]}


def test_usage_and_parse_errors(tmp_path, capsys):
    assert run()[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("validate", str(tmp_path / "missing.lz"))[0] == 2
    bad = tmp_path / "bad.lz"
    bad.write_text("leibniz-sc 1\nfield GF 9\ndim 1\n")
    assert run("report", str(bad))[0] == 2
    assert "line 2" in capsys.readouterr().err
    code, _ = run("check", "no_such_check", str(DATA / "counterex2.lz"))
    assert code == 2 and "trip_eq" in capsys.readouterr().err
    assert run("report", str(DATA / "violating.lz"))[0] == 1
    # --unchecked skips validation on load; checks that only use products still run
    assert run("check", "--unchecked", "engel", str(DATA / "violating.lz"))[0] == 0


def test_report_text_and_json():
    code, out = run("report", str(DATA / "counterex2.lz"))
    assert code == 0 and "F(A) = [z]" in out and "F is ideal: false" in out
    code, out = run("report", "--json", str(DATA / "counterex2.lz"))
    data = json.loads(out)
    assert data["field"] == "GF(2)" and data["F(A)"]["span"] == "[z]" and data["F is ideal"] is False
    code, out = run("report", str(DATA / "sl2_q.lz"))
    assert code == 0 and "Cartan subalgebra (heuristic) = [h]" in out


def test_check_command():
    code, out = run("check", "trip_eq", str(DATA / "heis2_H.lz"))
    assert code == 0 and out == "trip_eq: not-applicable (needs Phi(A) = 0)\n"
    code, out = run("check", "all", str(DATA / "counterex2.lz"))
    assert code == 0 and len(out.splitlines()) == len(leibkit.CHECKS)
    code, out = run("check", "--json", "socreln", str(DATA / "sl2_gf5.lz"))
    assert code == 0 and json.loads(out)[0]["status"] == "pass"


def test_guard_flags(monkeypatch, fresh_caches):
    path = str(DATA / "counterex2.lz")
    code, out = run("check", "trip_eq", "--max-enum", "10", path)
    assert code == 0 and out.startswith("trip_eq: unsupported")
    code, out = run("check", "trip_eq", "--max-enum", "10", "--force", path)
    assert out.startswith("trip_eq: pass")
    leibkit.enumeration.clear_caches()
    leibkit.radicals.clear_caches()
    monkeypatch.setenv("LEIBKIT_MAX_ENUM", "10")
    assert run("check", "trip_eq", path)[1].startswith("trip_eq: unsupported")


def test_example_command(tmp_path):
    target = tmp_path / "c.lz"
    assert run("example", "counter", "--p", "2", "-o", str(target)) == (0, "")
    assert load(target).sc == counterexample(2).sc
    code, out = run("example", "sl2")
    assert code == 0 and loads(out).sc == sl2(QQ).sc
    for name in ("type1", "type2", "typestar", "heisenberg"):
        code, out = run("example", name, "--p", "3")
        assert code == 0 and loads(out).field == GF(3)
    assert run("example", "heisenberg")[0] == 2
    assert run("example", "sl2", "--p", "4")[0] == 2
    assert run("example", "sl2", "--p", "2")[0] == 2


def test_console_script_exit_codes():
    cmd = [sys.executable, "-m", "leibkit.cli", "validate", str(DATA / "violating.lz")]
    proc = subprocess.run(cmd, capture_output=True, text=True)
    assert proc.returncode == 1
