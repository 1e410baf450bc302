"""Acceptance criteria, one test each.

Every test appends a single PASS/FAIL line to ``ACCEPTANCE_LINES``; the lines
are printed in a separate section at the end of the pytest run.  Runtime
budgets are part of the criterion: overrunning one is a failure.
"""

import time
from fractions import Fraction

import pytest

from bridge_census import formulas as F
from bridge_census import tables
from bridge_census.cli import main
from bridge_census.verify import run_oracle_suite, run_recursion_suite, scan_median_conjecture
from conftest import ACCEPTANCE_LINES


def record(n, title, ok, detail, elapsed=None, budget=None):
    if budget is not None and elapsed > budget:
        ok = False
        detail += f"; over budget ({elapsed:.1f} s > {budget} s)"
    timing = f" [{elapsed:.2f} s]" if elapsed is not None else ""
    ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {n}. {title}: {detail}{timing}")
    assert ok, detail


def _cli_csv(capsys, quantity, c_max):
    assert main(["table", "--quantity", quantity, "--min", "3", "--max", str(c_max), "--format", "csv"]) == 0
    return tables.parse_csv(capsys.readouterr().out, quantity)


def _deviations(got, want):
    out = []
    got_rows = {c: (dict(zip(got.b_values, vals)), total) for c, vals, total in got.rows}
    for c, vals, total in want.rows:
        cells, got_total = got_rows.get(c, ({}, None))
        for b, v in zip(want.b_values, vals):
            if cells.get(b, 0) != v:
                out.append(f"c={c} b={b}: printed {v}, computed {cells.get(b, 0)}")
        if total is not None and got_total != total:
            out.append(f"c={c} total: printed {total}, computed {got_total}")
    if [r[0] for r in got.rows] != [r[0] for r in want.rows]:
        out.append("row sets differ")
    return out


def test_1_golden_tables(capsys, data_dir):
    t0 = time.perf_counter()
    devs = []
    for name, quantity, c_max in [("golden_e.csv", "e", 12), ("golden_ep.csv", "ep", 12),
                                  ("golden_k.csv", "k", 20)]:
        want = tables.parse_csv((data_dir / name).read_text(), quantity)
        devs += [f"{quantity} {d}" for d in _deviations(_cli_csv(capsys, quantity, c_max), want)]
    elapsed = time.perf_counter() - t0
    detail = "all three tables match" if not devs else f"{len(devs)} deviation(s): " + "; ".join(devs)
    record(1, "golden tables", not devs, detail, elapsed, 1)


def test_2_oracle_equivalence():
    t0 = time.perf_counter()
    rep = run_oracle_suite(18, workers=1)
    elapsed = time.perf_counter() - t0
    detail = f"{rep.checks_run} exact checks for 3 <= c <= 18, {len(rep.failures)} failures"
    if rep.failures:
        detail += ": " + "; ".join(f"{f.what} expected {f.expected} got {f.actual}" for f in rep.failures[:5])
    record(2, "enumeration vs closed forms", rep.passed, detail, elapsed, 30)


def test_3_recursions():
    t0 = time.perf_counter()
    rep = run_recursion_suite(400)
    elapsed = time.perf_counter() - t0
    detail = f"{rep.checks_run} checks for 3 <= c <= 400, {len(rep.failures)} failures"
    record(3, "recursions vs closed forms", rep.passed, detail, elapsed, 10)


def test_4_mean():
    gap = abs(float(F.mean_braid(200) - (Fraction(200, 3) + Fraction(11, 9))))
    m3, m4 = F.mean_braid(3), F.mean_braid(4)
    ok = m3 == 2 and m4 == 3 and gap < 1e-6
    record(4, "mean spot values", ok, f"mean(3)={m3}, mean(4)={m4}, gap at 200 = {gap:.3e}")


def test_5_variance():
    gap = abs(float(F.variance_braid(200) - (Fraction(400, 27) - Fraction(10, 81))))
    v3, v4 = F.variance_braid(3), F.variance_braid(4)
    ok = v3 == 0 and v4 == 0 and gap < 1e-4
    record(5, "variance spot values", ok, f"var(3)={v3}, var(4)={v4}, gap at 200 = {gap:.3e}")


def test_6_unique_argmax():
    t0 = time.perf_counter()
    bad = []
    for c in range(3, 1001):
        winners = F.braid_argmax(c, F.k_row(c))
        if winners != [F.predicted_mode(c)]:
            bad.append(f"c={c}: argmax {winners}, predicted {F.predicted_mode(c)}")
    elapsed = time.perf_counter() - t0
    detail = "unique argmax = ceil(c/3)+1 for 3 <= c <= 1000" if not bad else \
        f"{len(bad)} exception(s): " + "; ".join(bad)
    record(6, "unique argmax is the mode", not bad, detail, elapsed, 60)


def test_7_log_concavity_and_differences():
    bad = []
    for c in range(7, 401):
        row = {b: F.e_closed(c, b) for b in range(1, F.max_braid(c) + 2)}
        bad += [f"log-concavity c={c} b={b}" for b in range(3, F.max_braid(c))
                if row[b] ** 2 < row[b - 1] * row[b + 1]]
        if c >= 8:
            m = F.predicted_mode(c)
            if row[m] - row[m - 1] != F.diff_below_mode(c):
                bad.append(f"dif1 c={c}")
            if row[m] - row[m + 1] != F.diff_above_mode(c):
                bad.append(f"dif2 c={c}")
    detail = "log-concave for 7..400, both identities exact for 8..400" if not bad else "; ".join(bad[:10])
    record(7, "log-concavity and difference identities", not bad, detail)


def _scan(n, title, max_c, budget):
    t0 = time.perf_counter()
    res = scan_median_conjecture(max_c)
    elapsed = time.perf_counter() - t0
    detail = f"median = ceil(c/3)+1 for 3 <= c <= {max_c}" if res.holds else \
        f"{len(res.violations)} violation(s): " + "; ".join(f"c={c} median {m}" for c, m, _ in res.violations[:10])
    record(n, title, res.holds, detail, elapsed, budget)


def test_8_median_scan_fast_tier():
    _scan("8a", "median scan, fast tier", 1000, 60)


@pytest.mark.slow
def test_8_median_scan_full():
    _scan("8b", "median scan, full", 10_000, 30 * 60)


def test_9_divisibility():
    t0 = time.perf_counter()
    bad = [(c, b) for c in range(3, 1001) for b in range(2, F.max_braid(c) + 1)
           if (F.e_closed(c, b) + F.ep_closed(c, b)) % 4]
    elapsed = time.perf_counter() - t0
    record(9, "4 | e + e_p", not bad, "holds for every b, 3 <= c <= 1000" if not bad else f"fails at {bad[:10]}",
           elapsed)
