"""Exact set algebra on the cyclic group Z_n.

Every subset of Z_n is carried around as a :class:`ResidueSet` and every
subgroup as a :class:`Subgroup` in divisor-generator form.  Quotients
Z_n / <d> are materialised as Z_d through ``x -> x mod d``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import gcd
from itertools import combinations
from typing import Iterable


class InvalidInput(ValueError):
    """Raised when an operation's precondition does not hold.

    ``kind`` is a short machine-readable tag such as ``"invalid-modulus"``
    or ``"incompatible-operands"``; the CLI maps every instance to exit 2.
    """

    def __init__(self, kind: str, message: str):
        super().__init__(f"{kind}: {message}")
        self.kind = kind
        self.message = message


@lru_cache(maxsize=4096)
def divisors(n: int) -> tuple[int, ...]:
    """Positive divisors of ``n`` in increasing order."""
    if n < 1:
        raise InvalidInput("invalid-modulus", f"modulus must be >= 1, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of ``n`` (ascending)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_prime(p: int) -> bool:
    return p >= 2 and prime_factors(p) == [p]


@dataclass(frozen=True, order=True)
class ResidueSet:
    modulus: int
    elements: tuple[int, ...]

    def __post_init__(self):
        if self.modulus < 1:
            raise InvalidInput("invalid-modulus", f"modulus must be >= 1, got {self.modulus}")
        prev = -1
        for e in self.elements:
            if not (0 <= e < self.modulus) or e <= prev:
                raise InvalidInput(
                    "invalid-set",
                    f"elements must be strictly increasing in [0, {self.modulus}); got {self.elements}",
                )
            prev = e

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x: int) -> bool:
        return x % self.modulus in self.members

    def __str__(self) -> str:
        return format_set(self)

    @cached_property
    def members(self) -> frozenset[int]:
        return frozenset(self.elements)

    @cached_property
    def mask(self) -> int:
        """Bit vector over Z_n with bit ``e`` set for each element ``e``."""
        m = 0
        for e in self.elements:
            m |= 1 << e
        return m

    def translate(self, g: int) -> "ResidueSet":
        return normalize(self.modulus, (e + g for e in self.elements))

    def negate(self) -> "ResidueSet":
        return normalize(self.modulus, (-e for e in self.elements))

    def scale(self, u: int) -> "ResidueSet":
        """Image under the endomorphism ``x -> u x``."""
        return normalize(self.modulus, (u * e for e in self.elements))

    def with_zero(self) -> "ResidueSet":
        return normalize(self.modulus, (0, *self.elements))

    def without_zero(self) -> "ResidueSet":
        return ResidueSet(self.modulus, tuple(e for e in self.elements if e != 0))

    def is_full(self) -> bool:
        return len(self.elements) == self.modulus


@dataclass(frozen=True)
class Subgroup:
    """The subgroup <generator> of Z_modulus, generator a positive divisor."""

    modulus: int
    generator: int

    def __post_init__(self):
        if self.modulus < 1:
            raise InvalidInput("invalid-modulus", f"modulus must be >= 1, got {self.modulus}")
        if self.generator < 1 or self.modulus % self.generator:
            raise InvalidInput(
                "invalid-subgroup",
                f"generator {self.generator} is not a positive divisor of {self.modulus}",
            )

    @classmethod
    def of(cls, modulus: int, element: int) -> "Subgroup":
        """The subgroup generated by an arbitrary element."""
        return cls(modulus, gcd(element % modulus, modulus) or modulus)

    @property
    def order(self) -> int:
        return self.modulus // self.generator

    def is_trivial(self) -> bool:
        return self.generator == self.modulus

    def is_whole(self) -> bool:
        return self.generator == 1

    def __contains__(self, x: int) -> bool:
        return x % self.generator == 0

    def elements(self) -> ResidueSet:
        return ResidueSet(self.modulus, tuple(range(0, self.modulus, self.generator)))

    def __le__(self, other: "Subgroup") -> bool:
        return self.modulus == other.modulus and self.generator % other.generator == 0

    def __lt__(self, other: "Subgroup") -> bool:
        return self <= other and self.generator != other.generator

    def __str__(self) -> str:
        return format_subgroup(self)


def normalize(modulus: int, raw: Iterable[int]) -> ResidueSet:
    if modulus < 1:
        raise InvalidInput("invalid-modulus", f"modulus must be >= 1, got {modulus}")
    return ResidueSet(modulus, tuple(sorted({x % modulus for x in raw})))


def full_set(n: int) -> ResidueSet:
    return ResidueSet(n, tuple(range(n)))


def _check_same(a: ResidueSet | Subgroup, b: ResidueSet | Subgroup) -> None:
    if a.modulus != b.modulus:
        raise InvalidInput(
            "incompatible-operands", f"moduli differ: {a.modulus} vs {b.modulus}"
        )


def is_inverse_closed(X: ResidueSet) -> bool:
    n = X.modulus
    members = X.members
    return all((n - x) % n in members for x in X.elements)


def sumset(A: ResidueSet, B: ResidueSet) -> ResidueSet:
    _check_same(A, B)
    return normalize(A.modulus, (a + b for a in A.elements for b in B.elements))


def difference_set(X: ResidueSet) -> ResidueSet:
    """X - X; always inverse-closed and contains 0."""
    if not X.elements:
        raise InvalidInput("empty-set", "difference set of the empty set")
    return normalize(X.modulus, (x - y for x in X.elements for y in X.elements))


def has_period(X: ResidueSet, d: int) -> bool:
    """True iff X + d = X."""
    n = X.modulus
    members = X.members
    return all((x + d) % n in members for x in X.elements)


def subgroup_of_periods(X: ResidueSet) -> Subgroup:
    """The subgroup of all g with X + g = X.

    Only divisors of n need testing: the periods form a subgroup <g> with
    g | n, and g is the least divisor that is a period.
    """
    if not X.elements:
        raise InvalidInput("empty-set", "subgroup of periods of the empty set")
    n = X.modulus
    for d in divisors(n):
        if d == n:
            break
        # a period subgroup of order n/d partitions X into cosets
        if len(X) % (n // d) == 0 and has_period(X, d):
            return Subgroup(n, d)
    return Subgroup(n, n)


def is_periodic(X: ResidueSet) -> bool:
    return not subgroup_of_periods(X).is_trivial()


def project(X: ResidueSet, H: Subgroup) -> ResidueSet:
    """Image of X in Z_n / H, represented in Z_d for H = <d>."""
    _check_same(X, H)
    return reduce_mod(X, H.generator)


def reduce_mod(X: ResidueSet, d: int) -> ResidueSet:
    """``{x mod d}`` for a divisor ``d`` of the modulus."""
    if d < 1 or X.modulus % d:
        raise InvalidInput("incompatible-operands", f"{d} does not divide {X.modulus}")
    return normalize(d, X.elements)


def meets_trivially(X: ResidueSet, d: int) -> bool:
    """True iff (X - X) ∩ <d> = {0}, i.e. the elements of X are distinct mod d."""
    return len({x % d for x in X.elements}) == len(X)


def generates(X: ResidueSet) -> bool:
    g = X.modulus
    for x in X.elements:
        g = gcd(g, x)
    return g == 1


# ---------------------------------------------------------------- text forms

_INT = re.compile(r"[+-]?\d+\Z")


def _parse_int(token: str, pos: int, text: str) -> int:
    if not _INT.match(token):
        raise InvalidInput("parse-error", f"bad token {token!r} at position {pos} in {text!r}")
    return int(token)


def parse_set(text: str) -> ResidueSet:
    """Parse ``"n:e1,e2,..."``; values are reduced mod n and deduplicated."""
    text = text.strip()
    head, sep, body = text.partition(":")
    if not sep:
        raise InvalidInput("parse-error", f"missing ':' at position {len(text)} in {text!r}")
    n = _parse_int(head.strip(), 0, text)
    if n < 1:
        raise InvalidInput("invalid-modulus", f"modulus must be >= 1, got {n}")
    values = []
    pos = len(head) + 1
    if body.strip():
        for tok in body.split(","):
            values.append(_parse_int(tok.strip(), pos, text))
            pos += len(tok) + 1
    return normalize(n, values)


def format_set(X: ResidueSet) -> str:
    return f"{X.modulus}:" + ",".join(map(str, X.elements))


def parse_subgroup(text: str) -> Subgroup:
    """Parse ``"n:<d>"`` (angle brackets optional)."""
    text = text.strip()
    head, sep, body = text.partition(":")
    if not sep:
        raise InvalidInput("parse-error", f"missing ':' at position {len(text)} in {text!r}")
    n = _parse_int(head.strip(), 0, text)
    d = _parse_int(body.strip().lstrip("<").rstrip(">"), len(head) + 1, text)
    if n < 1:
        raise InvalidInput("invalid-modulus", f"modulus must be >= 1, got {n}")
    return Subgroup.of(n, d)


def format_subgroup(H: Subgroup) -> str:
    return f"{H.modulus}:<{H.generator}>"


def connection_sets(n: int, degree: int, connected: bool = False) -> Iterable[ResidueSet]:
    """Every inverse-closed S ⊂ Z_n∖{0} with |S| = degree, in lexicographic pair order."""
    half = (n // 2,) if n % 2 == 0 else ()
    if degree % 2 and not half:
        return
    fixed = half if degree % 2 else ()
    for chosen in combinations(range(1, (n + 1) // 2), degree // 2):
        S = normalize(n, (*fixed, *chosen, *(n - c for c in chosen)))
        if not connected or generates(S):
            yield S
