"""Pyramidal sets and their admissible subgroup series in Z_n.

A series is stored by the generators of its subgroups,
``H_j = <g_j>`` with ``g_0 > g_1 > ... >= g_{2t} = 1`` (each dividing the
previous).  Working with generators turns every quotient ``X / H_j`` into a
plain reduction ``X mod g_j``.

Condition (T2) is read strictly: the subgroup of periods of ``X / H_{2i-1}``
must be exactly ``H_{2i} / H_{2i-1}``.  With that reading ``H_{2i}`` is
determined by ``H_{2i-1}``, so a series is a path of choices of the
odd-indexed subgroups and the search below enumerates all of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .zmod import (
    InvalidInput,
    ResidueSet,
    Subgroup,
    difference_set,
    divisors,
    generates,
    is_inverse_closed,
    is_prime,
    meets_trivially,
    reduce_mod,
    subgroup_of_periods,
)


def _log(p: int, x: int) -> Optional[int]:
    """``e`` with ``p**e == x``, or None."""
    e = 0
    while x > 1 and x % p == 0:
        x //= p
        e += 1
    return e if x == 1 else None


@dataclass(frozen=True)
class AdmissibleSeries:
    modulus: int
    p: int
    l: int
    subgroups: tuple[Subgroup, ...]
    h_seq: tuple[int, ...]
    k_seq: tuple[int, ...]
    l_seq: tuple[int, ...]
    m_seq: tuple[int, ...]

    @property
    def t(self) -> int:
        return len(self.l_seq)

    @property
    def generators(self) -> tuple[int, ...]:
        return tuple(H.generator for H in self.subgroups)

    @property
    def periodic(self) -> bool:
        return not self.subgroups[0].is_trivial()

    def __len__(self) -> int:
        """Length ``2t`` of the series."""
        return 2 * self.t

    @classmethod
    def from_generators(cls, n: int, p: int, l: int, gens: Sequence[int]) -> "AdmissibleSeries":
        """Build a series from ``(g_0, ..., g_{2t})`` and derive h, k, l, m.

        ``n = p^l m``; ``h_0`` and ``k_0 = m`` are read off ``g_0 = p^{h_0} m``.

        Raises ``invalid-series`` when the chain is not a subgroup series of
        the required shape or when the generators do not factor as
        ``g_{2i-1} = p^{h_{i-1}} k_i``, ``g_{2i} = p^{h_i} k_i``.
        """
        gens = tuple(int(g) for g in gens)
        if len(gens) < 3 or len(gens) % 2 == 0:
            raise InvalidInput("invalid-series", f"need an odd number >= 3 of subgroups, got {len(gens)}")
        if gens[-1] != 1:
            raise InvalidInput("invalid-series", "last subgroup must be the whole group <1>")
        if gens[0] < 1 or n % gens[0]:
            raise InvalidInput("invalid-series", f"{gens[0]} does not divide {n}")
        for a, b in zip(gens, gens[1:]):
            if b < 1 or a % b:
                raise InvalidInput("invalid-series", f"<{a}> is not contained in <{b}>")
        degenerate = gens == (n, n, 1)
        for j in range(len(gens) - 2):
            if gens[j] == gens[j + 1] and not degenerate:
                raise InvalidInput("invalid-series", f"H_{j} = H_{j + 1}; inclusions must be strict")
        t = (len(gens) - 1) // 2
        m, r = divmod(n, p**l)
        if r:
            raise InvalidInput("invalid-series", f"p^l = {p ** l} does not divide {n}")
        h0 = _log(p, gens[0] // m) if gens[0] % m == 0 else None
        if h0 is None:
            raise InvalidInput("invalid-series", f"H_0 = <{gens[0]}> is not of the form <p^h m>")
        h, k = [h0], [m]
        for i in range(1, t + 1):
            odd, even = gens[2 * i - 1], gens[2 * i]
            q, r = divmod(odd, p ** h[-1])
            hi = _log(p, even // q) if q and not r and even % q == 0 else None
            if hi is None:
                raise InvalidInput("invalid-series", f"H_{2 * i - 1}, H_{2 * i} do not fit <p^h k>")
            k.append(q)
            h.append(hi)
        l_seq = tuple(h[i - 1] - h[i] for i in range(1, t + 1))
        m_seq = tuple(k[i - 1] // k[i] for i in range(1, t + 1))
        return cls(n, p, l, tuple(Subgroup(n, g) for g in gens), tuple(h), tuple(k), l_seq, m_seq)

    def __str__(self) -> str:
        parts = " < ".join(f"H{j}=<{g}>" for j, g in enumerate(self.generators))
        h = ",".join(map(str, self.h_seq))
        k = ",".join(map(str, self.k_seq))
        return f"{self.modulus}: {parts}; h=({h}); k=({k})"


def _check_set(S0: ResidueSet) -> None:
    if 0 not in S0.members:
        raise InvalidInput("invalid-input", "set must contain 0")


def _check_size(S0: ResidueSet, p: int, l: int) -> None:
    if not is_prime(p):
        raise InvalidInput("invalid-input", f"{p} is not prime")
    if l < 1:
        raise InvalidInput("invalid-input", f"exponent must be >= 1, got {l}")
    if len(S0) != p**l:
        raise InvalidInput("invalid-input", f"|S0| = {len(S0)} but p^l = {p ** l}")


def _conditions(X: ResidueSet, gens: tuple[int, ...]) -> bool:
    """(T1)-(T3) for an aperiodic-style series over X (``gens[0]`` = modulus)."""
    t = (len(gens) - 1) // 2
    for i in range(t):
        # (T1) via the difference set in the quotient by H_{2i}
        Xq = reduce_mod(X, gens[2 * i])
        step = gens[2 * i + 1]
        if any(d % step == 0 for d in difference_set(Xq).elements if d):
            return False
        # (T3), second half
        if len(Xq) != len(reduce_mod(X, step)):
            return False
    for i in range(1, t + 1):
        # (T2), strict: periods of X/H_{2i-1} are exactly H_{2i}/H_{2i-1}
        g = gens[2 * i - 1]
        if subgroup_of_periods(reduce_mod(X, g)).generator != gens[2 * i]:
            return False
    last = gens[2 * t - 1]
    return len(reduce_mod(X, last)) == last


def check_T_conditions(S0: ResidueSet, series: AdmissibleSeries | Sequence[int]) -> bool:
    """True iff ``series`` is an admissible subgroup series associated with S0.

    ``series`` is an :class:`AdmissibleSeries` or a plain generator tuple.
    The whole set ``Z_n`` is accepted only with the degenerate series
    ``<n> = <n> < <1>``.
    """
    _check_set(S0)
    n = S0.modulus
    if isinstance(series, AdmissibleSeries):
        if series.modulus != n:
            raise InvalidInput("invalid-series", f"series modulus {series.modulus} != {n}")
        gens = series.generators
    else:
        gens = tuple(int(g) for g in series)
        if len(gens) < 3 or len(gens) % 2 == 0 or gens[-1] != 1:
            raise InvalidInput("invalid-series", f"malformed series {gens}")
        if any(b < 1 or a % b for a, b in zip((n,) + gens, gens)):
            raise InvalidInput("invalid-series", f"not a subgroup chain of Z_{n}: {gens}")
    if S0.is_full():
        return gens == (n, n, 1)
    if any(a == b for a, b in zip(gens, gens[1:-1])):
        return False
    H0 = gens[0]
    if H0 == n:
        if subgroup_of_periods(S0).generator != n:
            return False
    elif any((x + H0) % n not in S0.members for x in S0.elements):
        return False
    return _conditions(reduce_mod(S0, H0), gens)


def _chains(X: ResidueSet) -> list[tuple[int, ...]]:
    """All (g_1, ..., g_{2t}) completing an admissible series for aperiodic X."""
    out: list[tuple[int, ...]] = []

    def rec(g: int, size: int, acc: tuple[int, ...]) -> None:
        for d in reversed(divisors(g)):
            if d == g:
                continue
            Y = reduce_mod(X, d)
            if len(Y) != size:
                continue
            period = subgroup_of_periods(Y).generator
            if period == d:
                continue
            if period == 1:
                out.append(acc + (d, 1))
            else:
                rec(period, len(reduce_mod(X, period)), acc + (d, period))

    rec(X.modulus, len(X), ())
    return out


def all_series(S0: ResidueSet, p: int, l: int) -> list[AdmissibleSeries]:
    """Every admissible series whose H_0 is the subgroup of periods of S0.

    Ordered by decreasing length, then by decreasing generators.  The
    ordering is a convention of this module.
    """
    _check_set(S0)
    _check_size(S0, p, l)
    n = S0.modulus
    if n % p**l:
        return []
    if S0.is_full():
        return [AdmissibleSeries.from_generators(n, p, l, (n, n, 1))]
    H0 = subgroup_of_periods(S0).generator
    X = reduce_mod(S0, H0)
    found = [AdmissibleSeries.from_generators(n, p, l, (H0,) + c) for c in _chains(X)]
    found.sort(key=lambda s: (-len(s.subgroups), [-g for g in s.generators]))
    return found


def longest_series(S0: ResidueSet, p: int, l: int) -> Optional[AdmissibleSeries]:
    """A longest admissible series of S0, or None if S0 is not pyramidal.

    Several series can share the maximal length.  Ties are broken towards
    the smallest H_{2i+1} at every step, i.e. the largest k_i.
    """
    found = all_series(S0, p, l)
    return found[0] if found else None


def longest_series_unique(S0: ResidueSet, p: int, l: int) -> bool:
    """Whether exactly one admissible series attains the maximal length."""
    found = all_series(S0, p, l)
    return len(found) == 1 or len(found[1].subgroups) < len(found[0].subgroups)


def is_pyramidal(S0: ResidueSet, p: int, l: int) -> bool:
    return longest_series(S0, p, l) is not None


@dataclass(frozen=True)
class Diagnosis:
    exists: bool
    pyramidal: bool
    subgroup_code: bool
    non_subgroup_codes: bool
    series: Optional[AdmissibleSeries]

    @property
    def t(self) -> Optional[int]:
        return self.series.t if self.series else None


def check_connection_set(S: ResidueSet, p: int, l: int) -> None:
    """Raise ``invalid-input`` unless S is a connected non-complete degree p^l-1 set."""
    n = S.modulus
    if 0 in S.members:
        raise InvalidInput("invalid-input", "connection set contains 0")
    if not is_inverse_closed(S):
        raise InvalidInput("invalid-input", "connection set is not inverse-closed")
    if not is_prime(p) or l < 1:
        raise InvalidInput("invalid-input", f"need a prime p and l >= 1, got p={p}, l={l}")
    if len(S) != p**l - 1:
        raise InvalidInput("invalid-input", f"|S| = {len(S)} but p^l - 1 = {p ** l - 1}")
    if not generates(S):
        raise InvalidInput("invalid-input", "graph is disconnected: gcd(S, n) != 1")
    if len(S) + 1 >= n:
        raise InvalidInput("invalid-input", "graph is complete")


def decide_existence(S: ResidueSet, p: int, l: int) -> Diagnosis:
    """Whether Cay(Z_n, S) has a perfect code, with the subgroup dichotomy."""
    check_connection_set(S, p, l)
    n = S.modulus
    S0 = S.with_zero()
    q = p**l
    if n % q:
        return Diagnosis(False, False, False, False, None)
    series = longest_series(S0, p, l)
    subgroup = meets_trivially(S0, q)
    if series is None:
        return Diagnosis(False, False, False, False, None)
    unique = not series.periodic and series.t == 1
    return Diagnosis(True, True, subgroup, not unique, series)
