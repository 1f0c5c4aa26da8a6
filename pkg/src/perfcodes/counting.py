"""How many connected circulants of degree p^l - 1 have S_0 distinct mod p^l.

``count_formula`` evaluates the closed form by inclusion-exclusion over the
square-free divisors of n coprime to p; ``count_enumerate`` counts the same
connection sets directly.  The exponent is ``r_l = floor((p^l - 1) / 2)``,
the number of free pairs {x, -x} in Z_{p^l}∖{0} (for p = 2 the self-paired
element 2^{l-1} is not free).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb, gcd
from typing import Optional

from .zmod import InvalidInput, divisors, is_prime, prime_factors


@dataclass(frozen=True)
class CountParams:
    n: int
    p: int
    l: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise InvalidInput("invalid-input", f"{self.p} is not prime")
        if self.l < 1:
            raise InvalidInput("invalid-input", f"exponent must be >= 1, got {self.l}")
        if self.n < 1 or self.n % self.p**self.l:
            raise InvalidInput("invalid-input", f"p^l = {self.p ** self.l} does not divide n = {self.n}")

    @property
    def m(self) -> int:
        return self.n // self.p**self.l

    @property
    def r_l(self) -> int:
        return (self.p**self.l - 1) // 2

    @cached_property
    def D_n_p(self) -> tuple[int, ...]:
        """Square-free divisors of n greater than 1 and coprime to p."""
        return tuple(
            d
            for d in divisors(self.n)
            if d > 1 and d % self.p and all(d % (q * q) for q in prime_factors(d))
        )

    @staticmethod
    def nu(d: int) -> int:
        return len(prime_factors(d))


def count_formula(params: CountParams) -> int:
    """Closed-form N(n, p^l).

    Raises ``out-of-theorem-hypothesis`` for ``l + p < 4`` and for p = 2
    with n / 2^l even, where no such connection set exists and the closed
    form does not apply.
    """
    p, l, m, r = params.p, params.l, params.m, params.r_l
    if l + p < 4:
        raise InvalidInput("out-of-theorem-hypothesis", "requires l + p >= 4")
    if p == 2 and m % 2 == 0:
        raise InvalidInput("out-of-theorem-hypothesis", "for p = 2 the quotient n / 2^l must be odd")
    total = m**r
    for d in params.D_n_p:
        total += (-1) ** params.nu(d) * (m // d) ** r
    return total


def gcd_excess(params: CountParams) -> int:
    """Number of lifts of the complete graph to Z_n whose gcd with n is not 1."""
    r, m = params.r_l, params.m
    return sum((-1) ** (params.nu(d) - 1) * (m // d) ** r for d in params.D_n_p)


def count_enumerate(params: CountParams, budget: Optional[int] = None) -> int:
    """Direct count over inverse-closed S with |S| = p^l - 1.

    S is chosen as a set of pairs {x, n-x} plus n/2 when |S| is odd, so
    the search space is C(floor((n-1)/2), r) rather than all subsets.
    Raises ``budget-exceeded`` when that space is larger than ``budget``.
    """
    n, q = params.n, params.p**params.l
    size = q - 1
    half = n // 2 if n % 2 == 0 else None
    if size % 2:
        if half is None:
            return 0
        fixed = (half,)
    else:
        fixed = ()
    pairs = range(1, (n + 1) // 2)
    need = size // 2
    space = comb(len(pairs), need)
    if budget is not None and space > budget:
        raise InvalidInput("budget-exceeded", f"{space} candidate sets exceed budget {budget}")
    count = 0
    for chosen in combinations(pairs, need):
        S = list(fixed) + [x for c in chosen for x in (c, n - c)]
        residues = {s % q for s in S}
        if 0 in residues or len(residues) != size:
            continue
        g = n
        for s in S:
            g = gcd(g, s)
        if g == 1:
            count += 1
    return count
