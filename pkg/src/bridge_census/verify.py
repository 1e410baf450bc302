"""Verification suites: enumeration vs formulas, theorem checks, median scan."""

from __future__ import annotations

import sys
import time
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import formulas as F
from .enumeration import census, enum_cap

__all__ = [
    "ConjectureScanResult",
    "Failure",
    "VerificationReport",
    "run_oracle_suite",
    "run_recursion_suite",
    "run_theorem_suite",
    "scan_median_conjecture",
]


@dataclass(frozen=True)
class Failure:
    what: str
    expected: object
    actual: object


@dataclass
class VerificationReport:
    suite_name: str
    checks_run: int = 0
    failures: list[Failure] = field(default_factory=list)
    elapsed_ms: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, what: str, expected, actual) -> bool:
        self.checks_run += 1
        if expected != actual:
            self.failures.append(Failure(what, expected, actual))
            return False
        return True

    def merge(self, other: VerificationReport) -> VerificationReport:
        return VerificationReport(
            suite_name=self.suite_name,
            checks_run=self.checks_run + other.checks_run,
            failures=self.failures + other.failures,
            elapsed_ms=self.elapsed_ms + other.elapsed_ms,
            notes=self.notes + other.notes,
        )

    def to_json(self) -> dict:
        return {
            "suite": self.suite_name,
            "checks": self.checks_run,
            "failures": [
                {"what": f.what, "expected": _jsonable(f.expected), "actual": _jsonable(f.actual)}
                for f in self.failures
            ],
            "elapsed_ms": round(self.elapsed_ms, 3),
            "notes": list(self.notes),
        }

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"[{status}] {self.suite_name}: {self.checks_run} checks, "
                 f"{len(self.failures)} failures, {self.elapsed_ms:.1f} ms"]
        lines += [f"  note: {n}" for n in self.notes]
        lines += [f"  FAILED {f.what}: expected {f.expected}, got {f.actual}" for f in self.failures]
        return "\n".join(lines)


def _jsonable(x):
    if isinstance(x, (int, str, bool)) or x is None:
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return str(x)


def run_oracle_suite(max_enum_c: int, workers: int = 1) -> VerificationReport:
    """Compare brute-force enumeration against every closed form for 3 <= c <= max_enum_c."""
    if not 3 <= max_enum_c <= enum_cap():
        raise ValueError(f"max_enum_c must lie in [3, {enum_cap()}], got {max_enum_c}")
    rep = VerificationReport("oracle")
    t0 = time.perf_counter()
    for c in range(3, max_enum_c + 1):
        cen = census(c, workers=workers)
        rep.notes.append(f"{cen.e} tuples at c={c}")
        for b in range(1, F.max_braid(c) + 3):
            e, ep, k = cen.per_braid.get(b, (0, 0, 0))
            rep.check(f"e({c},{b})", F.e_closed(c, b), e)
            rep.check(f"e_p({c},{b})", F.ep_closed(c, b), ep)
            rep.check(f"k({c},{b})", F.k_closed(c, b), k)
        stray = [b for b in cen.per_braid if not 2 <= b <= F.max_braid(c)]
        rep.check(f"braid indices outside [2, n] at c={c}", [], stray)
        rep.check(f"e({c})", F.e_total(c), cen.e)
        rep.check(f"e_p({c})", F.ep_total(c), cen.e_p)
        rep.check(f"|K_{c}|", (F.e_total(c) + F.ep_total(c)) // 4, cen.k)
        rep.check(f"tbi({c})", F.tbi(c), cen.tbi)
        rep.check(f"tbi_p({c})", F.tbi_p(c), cen.tbi_p)
        rep.check(f"tbi2({c})", F.tbi2(c), cen.tbi2)
        rep.check(f"tbi_p2({c})", F.tbi_p2(c), cen.tbi_p2)
    rep.elapsed_ms = (time.perf_counter() - t0) * 1e3
    return rep


def run_recursion_suite(max_c: int = 400) -> VerificationReport:
    """Check every recurrence against its closed form for 3 <= c <= max_c."""
    rep = VerificationReport("recursion")
    t0 = time.perf_counter()
    for c in range(3, max_c + 1):
        for b in range(0, F.max_braid(c) + 3):
            rep.check(f"e_rec({c},{b})", F.e_closed(c, b), F.e_recursive(c, b))
            rep.check(f"e_p_rec({c},{b})", F.ep_closed(c, b), F.ep_recursive(c, b))
        rep.check(f"tbi_rec({c})", F.tbi(c), F.tbi_recursive(c))
        rep.check(f"tbi_p_rec({c})", F.tbi_p(c), F.tbi_p_recursive(c))
        rep.check(f"tbi2_rec({c})", F.tbi2(c), F.tbi2_recursive(c))
        rep.check(f"tbi_p2_rec({c})", F.tbi_p2(c), F.tbi_p2_recursive(c))
        if c >= 6:
            rep.check(f"tbi2 source term({c})", F.tbi2_source_term(c),
                      4 * F.tbi(c - 2) + 4 * F.tbi(c - 3) + 2 * F.e_total(c - 2) + 2 * F.e_total(c - 3))
    rep.elapsed_ms = (time.perf_counter() - t0) * 1e3
    return rep


def run_theorem_suite(max_c: int) -> VerificationReport:
    """Mode, log-concavity, difference identities, row sums, moments, asymptotics."""
    if max_c < 8:
        raise ValueError(f"max_c must be >= 8, got {max_c}")
    rep = VerificationReport("theorems")
    t0 = time.perf_counter()
    prev_gap: dict[int, Fraction] = {}
    for c in range(3, max_c + 1):
        n = F.max_braid(c)
        bs = range(2, n + 1)
        e_row = [F.e_closed(c, b) for b in bs]
        ep_row = [F.ep_closed(c, b) for b in bs]
        k_row = F.k_row_closed(c)

        rep.check(f"row sum e({c})", F.e_total(c), sum(e_row))
        rep.check(f"row sum e_p({c})", F.ep_total(c), sum(ep_row))
        rep.check(f"no e({c},b) beyond n", 0, F.e_closed(c, n + 1) + F.ep_closed(c, n + 1))
        bad = [b for b, x, y in zip(bs, e_row, ep_row) if (x + y) % 4]
        rep.check(f"4 | e+e_p at c={c}", [], bad)
        rep.check(f"fast k-row({c})", k_row, F.k_row(c))
        rep.check(f"sum b*(e+e_p) at c={c}", F.tbi(c) + F.tbi_p(c),
                  sum(b * (x + y) for b, x, y in zip(bs, e_row, ep_row)))
        rep.check(f"sum b^2*(e+e_p) at c={c}", F.tbi2(c) + F.tbi_p2(c),
                  sum(b * b * (x + y) for b, x, y in zip(bs, e_row, ep_row)))

        winners = F.braid_argmax(c, k_row)
        mode = F.predicted_mode(c)
        rep.check(f"mode({c}) is a maximizer", True, mode in winners)
        if len(winners) > 1:
            rep.notes.append(f"c={c}: braid indices {winners} tie for the maximum")

        if c >= 7:
            bad = [b for b in range(3, n) if F.e_closed(c, b) ** 2 < F.e_closed(c, b - 1) * F.e_closed(c, b + 1)]
            rep.check(f"log-concave e({c},.)", [], bad)
        if c >= 8:
            rep.check(f"dif1({c})", F.diff_below_mode(c), F.e_closed(c, mode) - F.e_closed(c, mode - 1))
            rep.check(f"dif2({c})", F.diff_above_mode(c), F.e_closed(c, mode) - F.e_closed(c, mode + 1))

        count = F.e_total(c) + F.ep_total(c)
        mean = Fraction(F.tbi(c) + F.tbi_p(c), count)
        var = Fraction(F.tbi2(c) + F.tbi_p2(c), count) - mean ** 2
        rep.check(f"mean closed form({c})", F.mean_braid_closed(c), mean)
        rep.check(f"variance closed form({c})", F.variance_braid_closed(c), var)
        gap = abs(mean - Fraction(c, 3) - Fraction(11, 9))
        if c >= 32:
            rep.check(f"mean gap shrinks c={c - 2}->{c}", True, gap < prev_gap[c - 2])
        prev_gap[c] = gap
    if max_c >= 200:
        rep.check("|mean - (c/3 + 11/9)| < 1e-6 at c=200", True,
                  abs(float(F.mean_braid(200) - Fraction(200, 3) - Fraction(11, 9))) < 1e-6)
        rep.check("|var - (2c/27 - 10/81)| < 1e-4 at c=200", True,
                  abs(float(F.variance_braid(200) - Fraction(400, 27) + Fraction(10, 81))) < 1e-4)
    rep.elapsed_ms = (time.perf_counter() - t0) * 1e3
    return rep


@dataclass
class ConjectureScanResult:
    max_c_checked: int
    violations: list[tuple[int, Fraction, int]] = field(default_factory=list)
    elapsed_ms: float = 0.0
    ambiguous: list[int] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "max_c_checked": self.max_c_checked,
            "violations": [
                {"c": c, "median": str(m), "conjectured": p} for c, m, p in self.violations
            ],
            "elapsed_ms": round(self.elapsed_ms, 3),
            "ambiguous_c": list(self.ambiguous),
        }


def _scan_chunk(cs: range) -> tuple[list[tuple[int, Fraction, int]], list[int]]:
    # Returns (violations, c values where more than one index meets the median inequalities).
    out, ambiguous = [], []
    for c in cs:
        row = F.k_row(c)
        med = F.median_braid(c, row)
        if len(F.median_indices(row, start=2)) > 1:
            ambiguous.append(c)
        if med != F.predicted_mode(c):
            out.append((c, med, F.predicted_mode(c)))
    return out, ambiguous


def scan_median_conjecture(
    max_c: int,
    *,
    min_c: int = 3,
    workers: int = 1,
    progress: Callable[[int], None] | None = None,
    progress_every: int = 100,
) -> ConjectureScanResult:
    """Compare the median of each k-row with ``ceil(c/3) + 1``; collect every violation."""
    if max_c < 3:
        raise ValueError(f"max_c must be >= 3, got {max_c}")
    t0 = time.perf_counter()
    # blocks end on multiples of progress_every so progress lines read 100, 200, ...
    edges = [min_c] + list(range((min_c // progress_every + 1) * progress_every + 1, max_c + 1, progress_every))
    blocks = [range(lo, min(hi, max_c + 1)) for lo, hi in zip(edges, edges[1:] + [max_c + 1])]
    result = ConjectureScanResult(max_c)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = pool.map(_scan_chunk, blocks)
            for blk, (found, amb) in zip(blocks, chunks):
                result.violations += found
                result.ambiguous += amb
                if progress:
                    progress(blk[-1])
    else:
        for blk in blocks:
            found, amb = _scan_chunk(blk)
            result.violations += found
            result.ambiguous += amb
            if progress:
                progress(blk[-1])
    result.elapsed_ms = (time.perf_counter() - t0) * 1e3
    return result


def stderr_progress(c: int) -> None:
    print(f"checked c <= {c}", file=sys.stderr, flush=True)
