"""Projections and lifts of circulant connection sets.

Everything is expressed on extended connection sets ``S_0 = S ∪ {0}``.

* ``f_project(S0, m)``: quotient by ``<n/m>`` when it meets ``S0 - S0`` trivially.
* ``g_project(S0, m)``: quotient by ``<n/m>`` when ``S0`` is a union of its cosets.
* ``enumerate_lifts(S0, m)``: the m-fold covers ``T(σ)_0 = {s + σ(s) n}``.
* ``g_lift(S0, m)``: the wreath-type lift ``{s + i n : 0 <= i < m}``.

``generate_family`` chains them, starting from a complete graph, to produce
the connection sets of the families ``G_{l,m}(n, p^l)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd, prod
from typing import Iterator, Optional, Sequence

from .zmod import (
    InvalidInput,
    ResidueSet,
    divisors,
    full_set,
    generates,
    has_period,
    is_inverse_closed,
    is_prime,
    meets_trivially,
    normalize,
    reduce_mod,
)


def _divisor_of(S0: ResidueSet, m: int) -> int:
    if m < 1 or S0.modulus % m:
        raise InvalidInput("incompatible-operands", f"{m} does not divide {S0.modulus}")
    return S0.modulus // m


def f_project(S0: ResidueSet, m: int) -> ResidueSet:
    """``S0 mod n/m``; requires ``(S0 - S0) ∩ <n/m> = {0}``."""
    d = _divisor_of(S0, m)
    if not meets_trivially(S0, d):
        raise InvalidInput("not-a-cover", f"(S0 - S0) meets <{d}> nontrivially")
    return reduce_mod(S0, d)


def g_project(S0: ResidueSet, m: int) -> ResidueSet:
    """``S0 mod n/m``; requires S0 to be ``<n/m>``-periodic."""
    d = _divisor_of(S0, m)
    if not has_period(S0, d):
        raise InvalidInput("not-periodic", f"set is not <{d}>-periodic")
    return reduce_mod(S0, d)


@dataclass(frozen=True)
class FeasibleLift:
    """A feasible map σ on S0, stored as ``(s, σ(s))`` pairs in the order of S0."""

    base_modulus: int
    factor: int
    assignment: tuple[tuple[int, int], ...]

    def sigma(self, s: int) -> int:
        return dict(self.assignment)[s]

    @property
    def lifted(self) -> ResidueSet:
        n = self.base_modulus
        return normalize(n * self.factor, (s + v * n for s, v in self.assignment))

    def is_connected(self) -> bool:
        return generates(self.lifted)


def _pairs(S0: ResidueSet) -> tuple[list[int], bool]:
    """Representatives s < n/2 of the pairs {s, -s} in S0∖{0}, and whether n/2 ∈ S0."""
    if 0 not in S0.members:
        raise InvalidInput("invalid-input", "extended connection set must contain 0")
    if not is_inverse_closed(S0):
        raise InvalidInput("invalid-connection-set", "set is not inverse-closed")
    n = S0.modulus
    reps = [s for s in S0.elements if 0 < s and 2 * s < n]
    return reps, n % 2 == 0 and n // 2 in S0.members


def count_lifts(S0: ResidueSet, m: int) -> int:
    """Number of feasible maps S0 -> {0..m-1}, without enumerating them."""
    if m < 1:
        raise InvalidInput("invalid-input", f"lift factor must be >= 1, got {m}")
    reps, half = _pairs(S0)
    if half and m % 2 == 0:
        return 0
    return m ** len(reps)


def enumerate_lifts(S0: ResidueSet, m: int, require_connected: bool = False) -> Iterator[FeasibleLift]:
    """Every feasible σ: S0 -> {0..m-1}, in lexicographic order of σ on the representatives.

    σ(-s) = m - 1 - σ(s) is forced; n/2, if present, must map to (m - 1)/2,
    so there are no lifts at all when m is even.
    """
    if m < 1:
        raise InvalidInput("invalid-input", f"lift factor must be >= 1, got {m}")
    reps, half = _pairs(S0)
    n = S0.modulus
    if half and m % 2 == 0:
        return
    for values in product(range(m), repeat=len(reps)):
        sigma = {0: 0}
        for s, v in zip(reps, values):
            sigma[s] = v
            sigma[n - s] = m - 1 - v
        if half:
            sigma[n // 2] = (m - 1) // 2
        lift = FeasibleLift(n, m, tuple((s, sigma[s]) for s in S0.elements))
        if require_connected and not lift.is_connected():
            continue
        yield lift


def f_lifts(S0: ResidueSet, m: int, require_connected: bool = False) -> list[ResidueSet]:
    """The set family ``f̄_m(S0)`` as sorted distinct residue sets."""
    return sorted({L.lifted for L in enumerate_lifts(S0, m, require_connected)})


def g_lift(S0: ResidueSet, m: int) -> ResidueSet:
    if m < 1:
        raise InvalidInput("invalid-input", f"lift factor must be >= 1, got {m}")
    n = S0.modulus
    return normalize(n * m, (s + i * n for s in S0.elements for i in range(m)))


def is_f_lift(X: ResidueSet, Y: ResidueSet, m: int) -> bool:
    """Membership test ``X ∈ f̄_m(Y)`` without enumerating the family."""
    n = Y.modulus
    return (
        X.modulus == n * m
        and len(X) == len(Y)
        and 0 in X.members
        and is_inverse_closed(X)
        and 0 in Y.members
        and is_inverse_closed(Y)
        and reduce_mod(X, n) == Y
    )


def is_g_lift(X: ResidueSet, Y: ResidueSet, m: int) -> bool:
    return X.modulus == Y.modulus * m and X == g_lift(Y, m)


# ----------------------------------------------------------------- families


@dataclass(frozen=True)
class FamilySpec:
    p: int
    l_seq: tuple[int, ...]
    m_seq: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise InvalidInput("invalid-input", f"{self.p} is not prime")
        if not self.l_seq or len(self.l_seq) != len(self.m_seq):
            raise InvalidInput("invalid-input", "l and m sequences must be nonempty and of equal length")
        if any(x < 1 for x in self.l_seq + self.m_seq):
            raise InvalidInput("invalid-input", "sequence entries must be positive")
        if self.m < 2:
            raise InvalidInput("invalid-input", "product of the m sequence must be >= 2")

    @property
    def t(self) -> int:
        return len(self.l_seq)

    @property
    def l(self) -> int:
        return sum(self.l_seq)

    @property
    def m(self) -> int:
        return prod(self.m_seq)

    @property
    def n(self) -> int:
        return self.p**self.l * self.m


def _compositions(total: int) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in _compositions(total - first):
            yield (first,) + rest


def _factorizations(m: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of ``parts`` positive integers with product m."""
    if parts == 1:
        yield (m,)
        return
    for d in divisors(m):
        for rest in _factorizations(m // d, parts - 1):
            yield (d,) + rest


def family_specs(p: int, l: int, m: int) -> list[FamilySpec]:
    """Every (l, m) splitting with sum l and product m."""
    return [
        FamilySpec(p, ls, ms)
        for ls in _compositions(l)
        for ms in _factorizations(m, len(ls))
    ]


def generate_family(spec: FamilySpec, budget: Optional[int] = None) -> Iterator[ResidueSet]:
    """Distinct extended connection sets of ``G_{l,m}(n, p^l)``, depth first.

    Starts at the complete set on ``p^{l_t}`` points, applies the connected
    ``f̄_{m_t}`` lifts and then alternately ``ḡ_{p^{l_i}}`` and connected
    ``f̄_{m_i}`` lifts for ``i = t-1, ..., 1``.  At most ``budget`` sets are
    yielded.
    """
    p, ls, ms = spec.p, spec.l_seq, spec.m_seq
    t = spec.t
    seen: set[ResidueSet] = set()

    def rec(X: ResidueSet, i: int) -> Iterator[ResidueSet]:
        # X is a member at level i (1-based), ready for ḡ_{p^{l_{i-1}}}
        if i == 1:
            if X not in seen:
                seen.add(X)
                yield X
            return
        W = g_lift(X, p ** ls[i - 2])
        for L in enumerate_lifts(W, ms[i - 2], require_connected=True):
            yield from rec(L.lifted, i - 1)

    base = full_set(p ** ls[-1])
    emitted = 0
    for L in enumerate_lifts(base, ms[-1], require_connected=True):
        for X in rec(L.lifted, t):
            yield X
            emitted += 1
            if budget is not None and emitted >= budget:
                return


def family_union(p: int, l: int, m: int, budget: Optional[int] = None) -> set[ResidueSet]:
    """Union of ``generate_family`` over every splitting of (l, m)."""
    out: set[ResidueSet] = set()
    for spec in family_specs(p, l, m):
        out.update(generate_family(spec, budget))
    return out


def multiplier_closure(sets: Sequence[ResidueSet] | set[ResidueSet]) -> set[ResidueSet]:
    """Close a family of subsets of Z_n under ``x -> u x`` with gcd(u, n) = 1."""
    out: set[ResidueSet] = set()
    for X in sets:
        n = X.modulus
        for u in range(1, n + 1):
            if gcd(u, n) == 1:
                out.add(X.scale(u))
    return out


def composite(S0: ResidueSet, ops: Sequence[tuple[str, int]]) -> set[ResidueSet]:
    """The set family obtained by applying ``ops`` to S0 in order.

    Each op is ``("f", m)`` for all of ``f̄_m`` or ``("g", m)`` for ``ḡ_m``.
    """
    family = {S0}
    for kind, m in ops:
        if kind == "g":
            family = {g_lift(X, m) for X in family}
        elif kind == "f":
            family = {L.lifted for X in family for L in enumerate_lifts(X, m)}
        else:
            raise InvalidInput("invalid-input", f"unknown lift kind {kind!r}")
    return family


def in_composite(X: ResidueSet, S0: ResidueSet, ops: Sequence[tuple[str, int]]) -> bool:
    """Whether X belongs to ``composite(S0, ops)``, by peeling the lifts off X."""
    for kind, m in reversed(ops):
        if X.modulus % m:
            return False
        W = reduce_mod(X, X.modulus // m)
        if kind == "g":
            if X != g_lift(W, m):
                return False
        elif kind == "f":
            if not is_f_lift(X, W, m):
                return False
        else:
            raise InvalidInput("invalid-input", f"unknown lift kind {kind!r}")
        X = W
    return X == S0
