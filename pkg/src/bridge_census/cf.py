"""Even continued fraction tuples and their knot invariants.

A 2-bridge knot diagram is encoded by a tuple ``(2a_1, ..., 2a_{2m})`` of
nonzero even integers.  Entries are stored at full (doubled) value, so the
tuple printed is the tuple stored.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from math import gcd

from .errors import DegenerateFraction, ParseError, ValidationError

__all__ = [
    "EvenCF",
    "KnotInvariants",
    "OrbitClass",
    "SchubertFraction",
    "SymmetryKind",
    "cf_to_fraction",
    "invariants",
    "orbit",
    "parse_cf",
    "schubert_related",
    "sign_changes",
]

INT64_MAX = 2**63 - 1

_TOKEN = re.compile(r"[+-]?\d+")


@dataclass(frozen=True, order=True)
class EvenCF:
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise ValidationError("tuple must not be empty")
        if len(entries) % 2:
            raise ValidationError(f"tuple length must be even, got {len(entries)}")
        for x in entries:
            if not isinstance(x, int) or isinstance(x, bool):
                raise ValidationError(f"entry {x!r} is not an integer")
            if x == 0 or x % 2:
                raise ValidationError(f"entry must be nonzero even, got {x}")
            if abs(x) > INT64_MAX:
                raise ValidationError(f"entry {x} exceeds 64-bit magnitude")

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __str__(self):
        return self.render()

    def render(self) -> str:
        return ",".join(str(x) for x in self.entries)

    @property
    def halves(self) -> tuple[int, ...]:
        return tuple(x // 2 for x in self.entries)

    def reversed(self) -> EvenCF:
        return EvenCF(self.entries[::-1])

    def negated(self) -> EvenCF:
        return EvenCF(tuple(-x for x in self.entries))

    def is_palindrome(self) -> bool:
        return self.entries == self.entries[::-1]

    def is_antipalindrome(self) -> bool:
        return self.entries == tuple(-x for x in self.entries[::-1])


def parse_cf(text: str) -> EvenCF:
    """Parse ``"2,-4,2,2"`` (brackets and whitespace optional) into an EvenCF."""
    body = text.strip()
    if body[:1] in "[(" and body[-1:] in "])":
        body = body[1:-1]
    body = body.strip()
    if not body:
        raise ValidationError("tuple must not be empty")
    values = []
    for token in body.split(","):
        token = token.strip()
        if not _TOKEN.fullmatch(token):
            raise ParseError(f"malformed token {token!r}")
        values.append(int(token))
    return EvenCF(tuple(values))


@dataclass(frozen=True)
class KnotInvariants:
    sign_changes: int
    half_sum: int
    crossing_number: int
    braid_index: int


def sign_changes(cf: EvenCF) -> int:
    e = cf.entries
    return sum(1 for x, y in zip(e, e[1:]) if (x < 0) != (y < 0))


def invariants(cf: EvenCF) -> KnotInvariants:
    ell = sign_changes(cf)
    s = sum(abs(x) for x in cf.entries) // 2
    return KnotInvariants(
        sign_changes=ell,
        half_sum=s,
        crossing_number=2 * s - ell,
        braid_index=s - ell + 1,
    )


class SymmetryKind(enum.Enum):
    PALINDROME = "Palindrome"
    ANTIPALINDROME = "AntiPalindrome"
    GENERIC = "Generic"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class OrbitClass:
    members: frozenset[EvenCF]
    canonical: EvenCF
    symmetry_kind: SymmetryKind

    def __len__(self):
        return len(self.members)

    def sorted_members(self) -> list[EvenCF]:
        return sorted(self.members)


def orbit(cf: EvenCF) -> OrbitClass:
    """Return the set of tuples representing the same knot or its mirror.

    The four maps are identity, negated reverse, negation and reverse.  The
    canonical member is the lexicographic minimum.
    """
    members = frozenset({cf, cf.reversed().negated(), cf.negated(), cf.reversed()})
    if cf.is_palindrome():
        kind = SymmetryKind.PALINDROME
    elif cf.is_antipalindrome():
        kind = SymmetryKind.ANTIPALINDROME
    else:
        kind = SymmetryKind.GENERIC
    return OrbitClass(members=members, canonical=min(members), symmetry_kind=kind)


def is_canonical(entries: tuple[int, ...]) -> bool:
    rev = entries[::-1]
    return entries <= rev and entries <= tuple(-x for x in entries) and entries <= tuple(-x for x in rev)


@dataclass(frozen=True)
class SchubertFraction:
    p: int
    q: int

    def __str__(self):
        return f"{self.p}/{self.q}"


def cf_to_fraction(cf: EvenCF) -> SchubertFraction:
    """Evaluate ``x_1 + 1/(x_2 + 1/(... + 1/x_n))`` exactly.

    The result is reduced with a positive denominator.
    """
    entries = cf.entries
    p, q = entries[-1], 1
    for x in reversed(entries[:-1]):
        if p == 0:
            raise DegenerateFraction(f"zero denominator while evaluating {cf}")
        p, q = x * p + q, p
    if q == 0:
        raise DegenerateFraction(f"zero denominator while evaluating {cf}")
    g = gcd(p, q)
    p, q = p // g, q // g
    if q < 0:
        p, q = -p, -q
    return SchubertFraction(p, q)


def schubert_related(f1: SchubertFraction, f2: SchubertFraction) -> str | None:
    """Which Schubert relation links two fractions up to mirror, if any.

    Returns ``"q=+-q'"`` or ``"qq'=+-1"`` when ``|p|`` agrees and the
    corresponding congruence holds mod ``|p|``; otherwise ``None``.
    """
    p = abs(f1.p)
    if p != abs(f2.p):
        return None
    q1, q2 = f1.q % p, f2.q % p
    if q1 == q2 or (q1 + q2) % p == 0:
        return "q=+-q'"
    prod = (q1 * q2) % p
    if prod == 1 % p or prod == (p - 1) % p:
        return "qq'=+-1"
    return None
