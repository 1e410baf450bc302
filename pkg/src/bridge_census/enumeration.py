"""Brute-force enumeration of even continued fractions by crossing number.

This is the independent oracle for every counting formula: tuples are
generated straight from the definition ``c = 2*sum|a_i| - l`` and nothing
here consults a closed form.
"""

from __future__ import annotations

import os
from collections.abc import Iterator
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .cf import EvenCF, is_canonical
from .errors import DomainError, LimitExceeded
from .kernels import census_length

__all__ = [
    "CensusCounts",
    "EnumFilter",
    "census",
    "enum_cap",
    "enumerate_tuples",
]

DEFAULT_ENUM_CAP = 24
CAP_ENV = "BRIDGE_CENSUS_ENUM_CAP"


def enum_cap() -> int:
    """Largest crossing number the census will enumerate (env-overridable)."""
    raw = os.environ.get(CAP_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_ENUM_CAP
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"{CAP_ENV} must be an integer, got {raw!r}") from None


@dataclass(frozen=True)
class EnumFilter:
    crossing: int
    braid: int | None = None
    palindromic_only: bool = False
    dedupe: bool = False

    def __post_init__(self):
        if self.crossing < 3:
            raise DomainError(f"crossing number must be >= 3, got {self.crossing}")
        if self.braid is not None and self.braid < 2:
            raise DomainError(f"braid index must be >= 2, got {self.braid}")


def _tuples_of_length(c: int, length: int) -> Iterator[tuple[int, ...]]:
    # Depth-first with values tried in increasing order, so output is lexicographic.
    # Every entry after position i adds at least 1 to the crossing count.
    a = [0] * length
    last = length - 1

    def dfs(pos, cp):
        remaining = last - pos
        prev_neg = pos > 0 and a[pos - 1] < 0
        if pos == last:
            for sign in (-1, 1):
                s = 1 if pos and prev_neg != (sign < 0) else 0
                need = c - cp + s
                if need >= 2 and need % 2 == 0:
                    a[pos] = sign * need
                    yield tuple(a)
            return
        for sign in (-1, 1):
            s = 1 if pos and prev_neg != (sign < 0) else 0
            vmax = (c - cp - remaining + s) // 2
            magnitudes = range(vmax, 0, -1) if sign < 0 else range(1, vmax + 1)
            for v in magnitudes:
                a[pos] = 2 * sign * v
                yield from dfs(pos + 1, cp + 2 * v - s)

    yield from dfs(0, 0)


def enumerate_tuples(flt: EnumFilter, cap: int | None = None) -> Iterator[EvenCF]:
    """Stream every tuple in E(c) matching ``flt`` exactly once.

    Order is by length, then lexicographic.  With ``cap`` set, yielding more
    than ``cap`` tuples raises :class:`LimitExceeded`.
    """
    c = flt.crossing
    emitted = 0
    for length in range(2, c, 2):
        for t in _tuples_of_length(c, length):
            if flt.braid is not None or flt.palindromic_only:
                rev = t[::-1]
                if flt.palindromic_only and not (t == rev or t == tuple(-x for x in rev)):
                    continue
                if flt.braid is not None:
                    half_sum = sum(abs(x) for x in t) // 2
                    ell = sum(1 for x, y in zip(t, t[1:]) if (x < 0) != (y < 0))
                    if half_sum - ell + 1 != flt.braid:
                        continue
            if flt.dedupe and not is_canonical(t):
                continue
            if cap is not None and emitted >= cap:
                raise LimitExceeded(f"enumeration cap of {cap} tuples reached at c={c}")
            emitted += 1
            yield EvenCF(t)


@dataclass
class CensusCounts:
    """Per-braid-index tallies for one crossing number.

    ``per_braid`` maps ``b -> (e(c,b), e_p(c,b), k_{c,b})``; the moment sums
    are accumulated per tuple during enumeration.  Instances for disjoint
    partitions of the same ``c`` merge with ``+``.
    """

    c: int
    per_braid: dict[int, tuple[int, int, int]] = field(default_factory=dict)
    tbi: int = 0
    tbi_p: int = 0
    tbi2: int = 0
    tbi_p2: int = 0

    @property
    def e(self) -> int:
        return sum(v[0] for v in self.per_braid.values())

    @property
    def e_p(self) -> int:
        return sum(v[1] for v in self.per_braid.values())

    @property
    def k(self) -> int:
        return sum(v[2] for v in self.per_braid.values())

    def __add__(self, other: CensusCounts) -> CensusCounts:
        if other.c != self.c:
            raise ValueError("cannot merge censuses of different crossing numbers")
        merged = dict(self.per_braid)
        for b, (e, ep, k) in other.per_braid.items():
            e0, ep0, k0 = merged.get(b, (0, 0, 0))
            merged[b] = (e0 + e, ep0 + ep, k0 + k)
        return CensusCounts(
            c=self.c,
            per_braid=dict(sorted(merged.items())),
            tbi=self.tbi + other.tbi,
            tbi_p=self.tbi_p + other.tbi_p,
            tbi2=self.tbi2 + other.tbi2,
            tbi_p2=self.tbi_p2 + other.tbi_p2,
        )

    def check_divisibility(self) -> None:
        for b, (e, ep, k) in self.per_braid.items():
            if 4 * k != e + ep:
                raise ArithmeticError(f"4*k != e + e_p at c={self.c}, b={b}: {k}, {e}, {ep}")

    def to_json(self) -> dict:
        return {
            "c": self.c,
            "e": self.e,
            "e_p": self.e_p,
            "k_total": self.k,
            "per_braid": [
                {"b": b, "e_cb": e, "ep_cb": ep, "k_cb": k}
                for b, (e, ep, k) in sorted(self.per_braid.items())
            ],
        }


def _census_part(c: int, length: int) -> CensusCounts:
    e_b, ep_b, k_b, mom = census_length(c, length)
    per_braid = {b: (e_b[b], ep_b[b], k_b[b]) for b in range(len(e_b)) if e_b[b]}
    return CensusCounts(c, per_braid, *mom)


def census(c: int, *, cap: int | None = None, workers: int = 1) -> CensusCounts:
    """Exhaustively count E(c), E_p(c) and orbit classes per braid index.

    Work is split by tuple length; with ``workers > 1`` the partitions run on
    a thread pool (the compiled kernel releases the GIL).
    """
    limit = enum_cap() if cap is None else cap
    if c < 3:
        raise DomainError(f"crossing number must be >= 3, got {c}")
    if c > limit:
        raise LimitExceeded(f"c={c} exceeds enumeration cap {limit} (set {CAP_ENV} to raise it)")
    lengths = list(range(2, c, 2))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda L: _census_part(c, L), lengths))
    else:
        parts = [_census_part(c, L) for L in lengths]
    total = CensusCounts(c)
    for part in parts:
        total = total + part
    total.check_divisibility()
    return total
