"""Exact counting and moment formulas for 2-bridge knots by braid index.

Everything here is integer or :class:`fractions.Fraction` arithmetic.
Closed forms are total functions: outside their support they return 0, and
binomials with a negative argument or ``k > n`` vanish.  Each recurrence has
a memoized counterpart (``*_recursive``) seeded with the small-``c`` values
listed by direct inspection of the tuple sets, so the two routes can be
checked against each other.
"""

from __future__ import annotations

import threading
import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import kernels
from .errors import DomainError, ModeMismatch, ModeTieWarning

__all__ = [
    "DistributionSummary",
    "binom",
    "braid_argmax",
    "ceil_div",
    "diff_below_mode",
    "diff_above_mode",
    "e_closed",
    "e_recursive",
    "e_total",
    "e_total_recursive",
    "ep_closed",
    "ep_recursive",
    "ep_total",
    "ep_total_recursive",
    "epsilon",
    "k_closed",
    "k_row",
    "k_row_closed",
    "max_braid",
    "mean_braid",
    "mean_braid_closed",
    "median_braid",
    "median_index",
    "median_indices",
    "mode_braid",
    "predicted_mode",
    "summary",
    "tbi",
    "tbi2",
    "tbi2_recursive",
    "tbi2_source_term",
    "tbi_p",
    "tbi_p2",
    "tbi_p2_recursive",
    "tbi_p_recursive",
    "tbi_recursive",
    "variance_braid",
    "variance_braid_closed",
]


# -- integer helpers ---------------------------------------------------------

def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def max_braid(c: int) -> int:
    """``n = ceil((c + 1) / 2)``, the largest braid index at crossing number c."""
    return ceil_div(c + 1, 2)


def predicted_mode(c: int) -> int:
    return ceil_div(c, 3) + 1


def binom(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def _sign(x: int) -> int:
    # (-1)**x by parity
    return -1 if x % 2 else 1


def _pow2(e: int) -> Fraction | int:
    return 1 << e if e >= 0 else Fraction(1, 1 << -e)


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


def _as_int(x: Fraction | int) -> int:
    if isinstance(x, Fraction):
        if x.denominator != 1:
            raise ArithmeticError(f"expected an integer, got {x}")
        return x.numerator
    return x


def _require(c: int) -> None:
    if c < 3:
        raise DomainError(f"crossing number must be >= 3, got {c}")


# -- closed forms --------------------------------------------------------------

def e_closed(c: int, b: int) -> int:
    """Number of even continued fractions with crossing number c and braid index b."""
    if c >= 3 and c % 2 == 1 and b == 2:
        return 2
    if c >= 3 and 3 <= b <= max_braid(c):
        return (1 << (b - 2)) * binom(c - b, b - 2)
    return 0


def ep_closed(c: int, b: int) -> int:
    """Palindromic or anti-palindromic subset of :func:`e_closed`."""
    if 2 <= b <= max_braid(c):
        if c % 2 == 0 and b % 2 == 1:
            return (1 << ((b - 1) // 2)) * binom((c - b - 1) // 2, (b - 3) // 2)
        if c % 2 == 1 and b % 2 == 0:
            return (1 << (b // 2)) * binom((c - b - 1) // 2, (b - 2) // 2)
    return 0


def e_total(c: int) -> int:
    _require(c)
    return _exact_div(2 * ((1 << (c - 2)) - _sign(c - 2)), 3)


def ep_total(c: int) -> int:
    _require(c)
    h = (c - 1) // 2
    return _exact_div(2 * ((1 << h) - _sign(h)), 3)


def k_closed(c: int, b: int) -> int:
    """Number of 2-bridge knots (mirrors identified) with crossing c, braid b.

    Evaluates the four-case formula in reading order and checks it against
    ``(e + e_p) / 4``.
    """
    n = max_braid(c)
    if c >= 3 and c % 2 == 1 and b == 2:
        value = Fraction(1)
    elif c >= 3 and 3 <= b <= n and (c + b) % 2 == 0:
        value = _pow2(b - 4) * binom(c - b, b - 2)
    elif c >= 3 and 3 <= b <= n and c % 2 == 0 and b % 2 == 1:
        value = (_pow2(b - 4) * binom(c - b, b - 2)
                 + _pow2((b - 5) // 2) * binom((c - b - 1) // 2, (b - 3) // 2))
    elif c >= 3 and 3 <= b <= n and c % 2 == 1 and b % 2 == 0:
        value = (_pow2(b - 4) * binom(c - b, b - 2)
                 + _pow2((b - 4) // 2) * binom((c - b - 1) // 2, (b - 2) // 2))
    else:
        value = Fraction(0)
    value = _as_int(value)
    quarter = e_closed(c, b) + ep_closed(c, b)
    if 4 * value != quarter:
        raise ArithmeticError(f"k({c},{b}) = {value} disagrees with (e + e_p)/4 = {Fraction(quarter, 4)}")
    return value


def k_row_closed(c: int) -> list[int]:
    """``[k_{c,2}, ..., k_{c,n}]`` from :func:`k_closed`."""
    return [k_closed(c, b) for b in range(2, max_braid(c) + 1)]


def k_row(c: int) -> list[int]:
    """Same row as :func:`k_row_closed`, via the incremental kernel."""
    return kernels.k_row(c)


def tbi(c: int) -> int:
    """Sum of braid indices over all even continued fractions at crossing c."""
    _require(c)
    return _exact_div((6 * c + 22) * (1 << (c - 2)) + (6 * c - 46) * _sign(c), 27)


def tbi_p(c: int) -> int:
    _require(c)
    if c % 2 == 0:
        h = c // 2
        return _exact_div((3 * c + 13) * (1 << h) + (12 * c + 14) * _sign(h), 27)
    h = (c - 1) // 2
    return _exact_div((6 * c + 14) * (1 << h) - (12 * c + 8) * _sign(h), 27)


def tbi2(c: int) -> int:
    _require(c)
    return _exact_div((3 * c * c + 24 * c + 37) * (1 << (c - 1))
                      + (12 * c * c + 30 * c - 302) * _sign(c), 81)


def tbi_p2(c: int) -> int:
    _require(c)
    if c % 2 == 1:
        h = (c - 1) // 2
        return _exact_div((6 * c * c + 36 * c + 14) * (1 << h)
                          - (24 * c * c + 24 * c + 8) * _sign(h), 81)
    h = c // 2
    return _exact_div((3 * c * c + 30 * c + 43) * (1 << h)
                      + (24 * c * c + 48 * c + 38) * _sign(h), 81)


def tbi2_source_term(c: int) -> int:
    """Inhomogeneous term of the tbi^2 recurrence in simplified form."""
    return _exact_div((6 * c + 17) * (1 << (c - 3)) + 8 * _sign(c), 9)


# -- recurrences ---------------------------------------------------------------

# Small-c values read off the explicit tuple sets for c <= 6.
_E_SEED = {3: {2: 2}, 4: {3: 2}, 5: {2: 2, 3: 4}}
_EP_SEED = {3: {2: 2}, 4: {3: 2}, 5: {2: 2}, 6: {3: 2}}
_TBI_SEED = {3: 4, 4: 6, 5: 16}
_TBI_P_SEED = {3: 4, 4: 6, 5: 4, 6: 6}
_TBI2_SEED = {3: 8, 4: 18, 5: 44}
_TBI_P2_SEED = {3: 8, 4: 18, 5: 8, 6: 18}


class _RowTable:
    """Bottom-up memo of rows ``c -> [value at b = 0, 1, ...]``.

    Readers see only fully built rows; extension is serialized by a lock.
    """

    def __init__(self, seed, first_recursive, step):
        self._rows: dict[int, list[int]] = {}
        for c in range(first_recursive):
            row = [0] * (c // 2 + 3)
            for b, v in seed.get(c, {}).items():
                row[b] = v
            self._rows[c] = row
        self._next = first_recursive
        self._step = step
        self._lock = threading.Lock()

    def get(self, c: int, b: int) -> int:
        row = self.row(c)
        return row[b] if 0 <= b < len(row) else 0

    def row(self, c: int) -> list[int]:
        if c < 0:
            return []
        if c >= self._next:
            with self._lock:
                while self._next <= c:
                    self._rows[self._next] = self._step(self, self._next)
                    self._next += 1
        return self._rows[c]


def _e_step(table: _RowTable, c: int) -> list[int]:
    g = table.get
    return [0, 0] + [g(c - 2, b) + 2 * g(c - 2, b - 1) + 2 * g(c - 3, b - 1)
                     for b in range(2, c // 2 + 3)]


def _ep_step(table: _RowTable, c: int) -> list[int]:
    g = table.get
    return [0, 0] + [g(c - 2, b) + 2 * g(c - 4, b - 2) for b in range(2, c // 2 + 3)]


_E_TABLE = _RowTable(_E_SEED, 6, _e_step)
_EP_TABLE = _RowTable(_EP_SEED, 7, _ep_step)


def e_recursive(c: int, b: int) -> int:
    if b <= 1:
        return 0
    return _E_TABLE.get(c, b)


def ep_recursive(c: int, b: int) -> int:
    if b <= 1:
        return 0
    return _EP_TABLE.get(c, b)


def e_total_recursive(c: int) -> int:
    return sum(_E_TABLE.row(c))


def ep_total_recursive(c: int) -> int:
    return sum(_EP_TABLE.row(c))


class _SeqTable:
    """Bottom-up memo of an integer sequence indexed by c."""

    def __init__(self, seed, first_recursive, step):
        self._values = dict(seed)
        self._next = first_recursive
        self._step = step
        self._lock = threading.Lock()

    def __call__(self, c: int) -> int:
        _require(c)
        if c >= self._next:
            with self._lock:
                while self._next <= c:
                    self._values[self._next] = self._step(self._next)
                    self._next += 1
        return self._values[c]


tbi_recursive = _SeqTable(
    _TBI_SEED, 6,
    lambda c: 3 * tbi_recursive(c - 2) + 2 * tbi_recursive(c - 3) + (1 << (c - 3)),
)
tbi_p_recursive = _SeqTable(
    _TBI_P_SEED, 7,
    lambda c: tbi_p_recursive(c - 2) + 2 * tbi_p_recursive(c - 4) + 4 * ep_total_recursive(c - 4),
)
tbi2_recursive = _SeqTable(
    _TBI2_SEED, 6,
    lambda c: (3 * tbi2_recursive(c - 2) + 2 * tbi2_recursive(c - 3)
               + 4 * tbi_recursive(c - 2) + 4 * tbi_recursive(c - 3)
               + 2 * e_total_recursive(c - 2) + 2 * e_total_recursive(c - 3)),
)
tbi_p2_recursive = _SeqTable(
    _TBI_P2_SEED, 7,
    lambda c: (tbi_p2_recursive(c - 2) + 2 * tbi_p2_recursive(c - 4)
               + 8 * tbi_p_recursive(c - 4) + 8 * ep_total_recursive(c - 4)),
)


# -- moments -------------------------------------------------------------------

def mean_braid_closed(c: int) -> Fraction:
    """Average braid index from the four-case closed form (by c mod 4)."""
    _require(c)
    base = Fraction(c, 3) + Fraction(11, 9)
    r = c % 4
    if r == 0:
        corr = Fraction((1 << (c // 2)) + 9 * c - 16,
                        9 * ((1 << (c - 2)) + (1 << ((c - 2) // 2))))
    elif r == 1:
        corr = Fraction(19 - 9 * c - (1 << ((c + 3) // 2)),
                        9 * ((1 << (c - 2)) + (1 << ((c - 1) // 2))))
    elif r == 2:
        corr = Fraction((1 << (c // 2)) + 3 * c - 8,
                        9 * ((1 << (c - 2)) + (1 << ((c - 2) // 2)) - 2))
    else:
        corr = Fraction(5 - 3 * c - (1 << ((c + 3) // 2)),
                        9 * ((1 << (c - 2)) + (1 << ((c - 1) // 2)) + 2))
    return base + corr


def mean_braid(c: int) -> Fraction:
    """Exact average braid index of 2-bridge knots with crossing number c."""
    _require(c)
    value = Fraction(tbi(c) + tbi_p(c), e_total(c) + ep_total(c))
    closed = mean_braid_closed(c)
    if value != closed:
        raise ArithmeticError(f"mean at c={c}: moment quotient {value} != closed form {closed}")
    return value


def epsilon(c: int) -> Fraction:
    """Correction term of the variance beyond ``2c/27 - 10/81``."""
    _require(c)
    p = lambda e: 1 << e  # noqa: E731
    r = c % 4
    if r == 0:
        num = ((3 * c - 13) * p(3 * c // 2) + (21 * c - 74) * p(c)
               - (42 * c - 40) * p(c // 2) - (324 * c * c - 1152 * c + 1024))
        den = p(2 * c - 2) + p(3 * c // 2) + p(c)
    elif r == 1:
        num = ((3 * c - 1) * p((3 * c + 1) // 2) + (15 * c - 13) * p(c)
               - (69 * c - 175) * p((c + 3) // 2) - (324 * c * c - 1368 * c + 1444))
        den = p(2 * c - 2) + p((3 * c + 1) // 2) + p(c + 1)
    elif r == 2:
        num = ((3 * c - 13) * p(3 * c // 2) - (18 * c * c - 105 * c + 142) * p(c)
               - (18 * c * c - 75 * c + 28) * p((c + 2) // 2) + (108 * c * c - 600 * c + 640))
        den = p(2 * c - 2) + p(3 * c // 2) - 3 * p(c) - p((c + 6) // 2) + 16
    else:
        num = ((3 * c - 1) * p((3 * c + 1) // 2) + (18 * c * c - 105 * c + 97) * p(c)
               + (18 * c * c - 129 * c + 169) * p((c + 3) // 2) + (108 * c * c - 816 * c + 964))
        den = p(2 * c - 2) + p((3 * c + 1) // 2) + 6 * p(c) + 4 * p((c + 3) // 2) + 16
    return Fraction(num, 81 * den)


def variance_braid_closed(c: int) -> Fraction:
    return Fraction(2 * c, 27) - Fraction(10, 81) + epsilon(c)


def variance_braid(c: int) -> Fraction:
    """Exact variance: second-moment quotient minus squared mean."""
    _require(c)
    count = e_total(c) + ep_total(c)
    second = Fraction(tbi2(c) + tbi_p2(c), count)
    value = second - mean_braid(c) ** 2
    closed = variance_braid_closed(c)
    if value != closed:
        raise ArithmeticError(f"variance at c={c}: moment route {value} != closed form {closed}")
    return value


# -- mode and median -----------------------------------------------------------

def braid_argmax(c: int, row: list[int] | None = None) -> list[int]:
    """All braid indices attaining the maximum of the k-row."""
    _require(c)
    if row is None:
        row = k_row_closed(c)
    top = max(row)
    return [b for b, v in enumerate(row, start=2) if v == top]


def mode_braid(c: int, verify: bool = False) -> int:
    """The mode ``ceil(c/3) + 1`` of the braid-index distribution.

    With ``verify`` the k-row is scanned: a prediction that is not a maximizer
    raises :class:`ModeMismatch`; a tie for the maximum emits
    :class:`ModeTieWarning` naming every maximizer.
    """
    _require(c)
    mode = predicted_mode(c)
    if verify:
        winners = braid_argmax(c)
        if mode not in winners:
            raise ModeMismatch(f"c={c}: predicted mode {mode} but argmax is {winners}")
        if len(winners) > 1:
            warnings.warn(f"c={c}: braid indices {winners} tie for the maximum", ModeTieWarning, stacklevel=2)
    return mode


def median_indices(seq: list[int], start: int = 1) -> list[int]:
    """Every index m whose prefix sum through m and suffix sum from m are
    both at least half the total."""
    total = sum(seq)
    out = []
    prefix = 0
    for i, x in enumerate(seq):
        before = prefix
        prefix += x
        if 2 * prefix >= total and 2 * (total - before) >= total:
            out.append(start + i)
    return out


def median_index(seq: list[int], start: int = 1) -> Fraction:
    """Median index of a nonnegative integer sequence whose first index is ``start``.

    If several indices qualify (the mass splits exactly in half between
    them) the largest is returned.  If none qualifies, the median is
    ``m' + 1/2`` where the prefix through m' is exactly half the total.
    """
    if not seq or sum(seq) <= 0 or any(x < 0 for x in seq):
        raise ValueError("median needs a nonnegative sequence with positive total")
    found = median_indices(seq, start)
    if found:
        return Fraction(found[-1])
    total = sum(seq)
    prefix = 0
    for i, x in enumerate(seq):
        prefix += x
        if 2 * prefix == total:
            return Fraction(2 * (start + i) + 1, 2)
    raise ValueError(f"sequence {seq!r} has no median")


def median_braid(c: int, row: list[int] | None = None) -> Fraction:
    """Median braid index over ``(k_{c,b})`` for ``b = 2..n``."""
    _require(c)
    if row is None:
        row = k_row(c)
    return median_index(row, start=2)


# -- difference identities near the mode -----------------------------------------

def diff_below_mode(c: int) -> int:
    """Closed form of ``e(c, ceil(c/3)+1) - e(c, ceil(c/3))`` for ``c >= 8``."""
    r, rem = divmod(c, 3)
    if rem == 0:
        v = Fraction(1 << (r - 1), r) * binom(2 * r + 1, r - 1)
    elif rem == 1:
        v = Fraction(1 << (r - 1), r) * binom(2 * r, r - 1)
    else:
        v = Fraction((1 << (r - 1)) * (5 * r + 4), (r + 1) * (r + 2)) * binom(2 * r, r)
    return _as_int(v)


def diff_above_mode(c: int) -> int:
    """Closed form of ``e(c, ceil(c/3)+1) - e(c, ceil(c/3)+2)`` for ``c >= 8``."""
    r, rem = divmod(c, 3)
    if rem == 0:
        v = Fraction(1 << (r - 1), r) * binom(2 * r - 2, r - 1)
    elif rem == 1:
        v = Fraction((1 << r) * (7 * r - 5), r * (r + 1)) * binom(2 * r - 2, r - 1)
    else:
        v = Fraction(1 << (r + 2), r + 1) * binom(2 * r - 1, r - 1)
    return _as_int(v)


# -- summary -------------------------------------------------------------------

@dataclass(frozen=True)
class DistributionSummary:
    c: int
    n: int
    counts: dict[int, int]
    mean: Fraction
    variance: Fraction
    mode: int
    median: Fraction
    argmax: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def summary(c: int) -> DistributionSummary:
    """Counts, mean, variance, mode and median of the braid index at crossing c."""
    _require(c)
    row = k_row_closed(c)
    n = max_braid(c)
    winners = tuple(braid_argmax(c, row))
    mode = predicted_mode(c)
    if mode not in winners:
        raise ModeMismatch(f"c={c}: predicted mode {mode} but argmax is {list(winners)}")
    return DistributionSummary(
        c=c,
        n=n,
        counts=dict(zip(range(2, n + 1), row)),
        mean=mean_braid(c),
        variance=variance_braid(c),
        mode=mode,
        median=median_braid(c, row),
        argmax=winners,
    )
