"""The thin-client CLI: output, exit codes, file round trips."""
import csv

import pytest

from pentasolve.cli import main
from pentasolve.core import penta_matvec
from pentasolve.fileformat import parse_penta

from conftest import FIXTURE_DIR

ALL_FIXTURES = ("n10_reference.penta", "n4_zero_pivot.penta",
                "identity4.penta", "n10_backward.penta")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_solve_reference_prints_the_solution(capsys):
    code, out, _ = run(capsys, "solve",
                       str(FIXTURE_DIR / "n10_reference.penta"),
                       "--alg", "ptrans1")
    assert code == 0
    lines = dict(line.split(":", 1) for line in out.strip().splitlines()
                 if ":" in line)
    assert lines["algorithm"].strip() == "PTRANS-I"
    values = [float(v) for v in lines["solution"].split()]
    assert max(abs(x - v) for x, v in zip(values, range(1, 11))) <= 1e-10
    assert float(lines["determinant"]) == pytest.approx(1061233, rel=1e-10)
    assert len(lines["pivots"].split()) == 10


def test_solve_zero_pivot_without_fallback_exits_4(capsys):
    code, _, err = run(capsys, "solve",
                       str(FIXTURE_DIR / "n4_zero_pivot.penta"),
                       "--alg", "ptrans1")
    assert code == 4
    assert "index 2" in err


def test_solve_auto_rescues_and_prints_exact_ones(capsys):
    code, out, _ = run(capsys, "solve",
                       str(FIXTURE_DIR / "n4_zero_pivot.penta"),
                       "--alg", "auto")
    assert code == 0
    assert "algorithm: SPTRANS-I" in out
    assert "solution: 1 1 1 1" in out
    assert "pivots: 3 p -2 (8*p - 21)/p" in out
    assert "rescued pivot indices: 2" in out


def test_solve_singular_prints_no_solutions_and_exits_3(capsys, tmp_path):
    bad = tmp_path / "singular.penta"
    bad.write_text("PENTA 4\n"
                   "1 4 1 1\n"
                   "2 2 1 0\n"
                   "1 0 0 0\n"
                   "0 2 1 1\n"
                   "0 0 1 1\n"
                   "1 1 1 1\n")
    code, out, _ = run(capsys, "solve", str(bad), "--alg", "auto")
    assert code == 3
    assert "No solutions" in out


def test_solve_parse_error_exits_2(capsys, tmp_path):
    bad = tmp_path / "bad.penta"
    bad.write_text("what is this\n")
    code, _, err = run(capsys, "solve", str(bad))
    assert code == 2
    assert "error" in err


def test_solve_missing_file_exits_2(capsys):
    code, _, err = run(capsys, "solve", "/nonexistent/nowhere.penta")
    assert code == 2


def test_det_prints_exact_fraction(capsys):
    code, out, _ = run(capsys, "det",
                       str(FIXTURE_DIR / "n4_zero_pivot.penta"))
    assert code == 0
    assert out.splitlines()[0] == "126"
    code, out, _ = run(capsys, "det",
                       str(FIXTURE_DIR / "n10_reference.penta"))
    assert out.splitlines()[0] == "1061233"
    code, out, _ = run(capsys, "det", str(FIXTURE_DIR / "identity4.penta"))
    assert out.splitlines()[0] == "1"


def test_gen_example3_writes_a_consistent_file(capsys, tmp_path):
    out_path = tmp_path / "fam.penta"
    code, out, _ = run(capsys, "gen-example3", "--n", "10",
                       "--out", str(out_path))
    assert code == 0
    doc = parse_penta(out_path.read_text(), exact=True)
    assert doc.n == 10
    assert penta_matvec(doc.system, [1] * 10) == list(doc.rhs)


def test_gen_example3_rejects_small_n(capsys, tmp_path):
    code, _, err = run(capsys, "gen-example3", "--n", "5",
                       "--out", str(tmp_path / "x.penta"))
    assert code == 2
    assert "n >= 6" in err


def test_bench_table_and_csv(capsys, tmp_path):
    csv_path = tmp_path / "rows.csv"
    code, out, _ = run(capsys, "bench", "--sizes", "50,100",
                       "--algs", "ptrans1,ptrans2",
                       "--csv", str(csv_path))
    assert code == 0
    assert "PTRANS-I" in out and "PTRANS-II" in out
    with open(csv_path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 4
    assert {row["n"] for row in rows} == {"50", "100"}
    for row in rows:
        assert float(row["max_abs_error"]) <= 1e-8
        assert int(row["op_count"]) == 19 * int(row["n"]) - 29


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_solve_round_trip_reproduces_the_rhs(capsys, name):
    # Parse the printed solution back and push it through the matrix; the
    # result must match the file's right-hand side.
    path = FIXTURE_DIR / name
    code, out, _ = run(capsys, "solve", str(path), "--alg", "auto")
    assert code == 0
    lines = dict(line.split(":", 1) for line in out.strip().splitlines()
                 if ":" in line)
    x = [float(v) for v in lines["solution"].split()]
    doc = parse_penta(path.read_text())
    if doc.backward:
        rebuilt = penta_matvec(doc.system.forward, x[::-1])
    else:
        rebuilt = penta_matvec(doc.system, x)
    norm = max(abs(v) for v in doc.rhs) or 1.0
    assert max(abs(u - v) for u, v in zip(rebuilt, doc.rhs)) <= 1e-8 * norm
