"""Perfect codes built level by level from the longest admissible series.

With ``h = (h_0..h_t)`` and ``k = (k_0..k_t)`` from the series, a code is
grown from ``D_0 = {j p^{h_{t-1}} : j < k_{t-1}}`` by alternately

* shifting each element x by a chosen ``τ_i(x)`` in
  ``p^{h_{t-i}} k_{t-i} · {0, .., p^{h_{t-i-1} - h_{t-i}} - 1}`` (with τ_i(0) = 0), and
* adding ``J_i = {j p^{h_{t-i-1}} k_{t-i} : j < k_{t-i-1} / k_{t-i}}``,

for ``i = 1..t-1``, plus one final shift into ``p^{h_0} k_0 · Z_{p^{l-h_0}}``
when S0 is periodic.  Different choices give different codes, which is what
makes ``lower_bound`` a lower bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Optional

from .pyramidal import AdmissibleSeries, check_T_conditions, longest_series
from .tiling import is_direct_sum
from .zmod import InvalidInput, ResidueSet, normalize, prime_factors


@dataclass(frozen=True)
class CodeRecipe:
    """τ maps as value tuples aligned with the sorted domain at each level."""

    series: AdmissibleSeries
    tau_seq: tuple[tuple[int, ...], ...]
    tau_final: Optional[tuple[int, ...]] = None


def _levels(series: AdmissibleSeries) -> list[tuple[int, int, int]]:
    """Per shift step: (domain size, stride, number of stride multiples)."""
    h, k, t = series.h_seq, series.k_seq, series.t
    steps = []
    for i in range(1, t):
        stride = series.p ** h[t - i] * k[t - i]
        steps.append((k[t - i], stride, series.p ** (h[t - i - 1] - h[t - i])))
    if series.periodic:
        steps.append((k[0], series.p ** h[0] * k[0], series.p ** (series.l - h[0])))
    return steps


def j_set(series: AdmissibleSeries, i: int) -> tuple[int, ...]:
    """``J_i`` for ``1 <= i <= t-1``."""
    h, k, t, p = series.h_seq, series.k_seq, series.t, series.p
    step = p ** h[t - i - 1] * k[t - i]
    J = tuple(j * step for j in range(k[t - i - 1] // k[t - i]))
    assert len(J) == k[t - i - 1] // k[t - i]
    return J


def d0_set(series: AdmissibleSeries) -> tuple[int, ...]:
    t = series.t
    return tuple(j * series.p ** series.h_seq[t - 1] for j in range(series.k_seq[t - 1]))


def _check_tau(values: tuple[int, ...], size: int, stride: int, count: int, where: str) -> None:
    if len(values) != size:
        raise InvalidInput("invalid-recipe", f"{where}: expected {size} values, got {len(values)}")
    if values[0] != 0:
        raise InvalidInput("invalid-recipe", f"{where}: tau(0) must be 0")
    for v in values:
        if v % stride or not 0 <= v < stride * count:
            raise InvalidInput("invalid-recipe", f"{where}: {v} is not in {stride}*Z_{count}")


def build_code(S0: ResidueSet, recipe: CodeRecipe) -> ResidueSet:
    """The perfect code of Cay(Z_n, S0∖{0}) described by ``recipe``; contains 0."""
    series = recipe.series
    n = S0.modulus
    if series.modulus != n:
        raise InvalidInput("invalid-recipe", f"series modulus {series.modulus} != {n}")
    if not check_T_conditions(S0, series):
        raise InvalidInput("invalid-recipe", "series is not admissible for this set")
    steps = _levels(series)
    shifts = list(recipe.tau_seq)
    if series.periodic:
        if recipe.tau_final is None:
            raise InvalidInput("invalid-recipe", "periodic set needs a final tau")
        shifts.append(recipe.tau_final)
    elif recipe.tau_final is not None:
        raise InvalidInput("invalid-recipe", "final tau given for an aperiodic set")
    if len(shifts) != len(steps):
        raise InvalidInput("invalid-recipe", f"expected {series.t - 1} tau maps, got {len(recipe.tau_seq)}")

    D = list(d0_set(series))
    for i, (values, (size, stride, count)) in enumerate(zip(shifts, steps), start=1):
        _check_tau(tuple(values), size, stride, count, f"tau_{i}")
        D.sort()
        D = [x + v for x, v in zip(D, values)]
        if i < series.t:
            D = [x + j for x in D for j in j_set(series, i)]
    code = normalize(n, D)
    if __debug__:
        assert len(code) == len(D) and is_direct_sum(S0, code), (S0, recipe)
    return code


def recipe_count(series: AdmissibleSeries) -> int:
    total = 1
    for size, _, count in _levels(series):
        total *= count ** (size - 1)
    return total


def enumerate_recipes(
    S0: ResidueSet, budget: Optional[int] = None, series: Optional[AdmissibleSeries] = None
) -> Iterator[CodeRecipe]:
    """All recipes over the longest series of S0, lexicographic in the τ values.

    ``p`` and ``l`` are read off ``|S0|``.  At most ``budget`` recipes are yielded.
    """
    if series is None:
        p, l = _prime_power(len(S0))
        series = longest_series(S0, p, l)
        if series is None:
            raise InvalidInput("invalid-input", "set is not pyramidal")
    steps = _levels(series)
    slots = [range(0, stride * count, stride) for size, stride, count in steps for _ in range(size - 1)]
    for emitted, flat in enumerate(product(*slots)):
        if budget is not None and emitted >= budget:
            return
        choice, pos = [], 0
        for size, _, _ in steps:
            choice.append((0,) + flat[pos : pos + size - 1])
            pos += size - 1
        if series.periodic:
            yield CodeRecipe(series, tuple(choice[:-1]), choice[-1])
        else:
            yield CodeRecipe(series, tuple(choice))


def _prime_power(q: int) -> tuple[int, int]:
    ps = prime_factors(q)
    if len(ps) != 1:
        raise InvalidInput("invalid-input", f"|S0| = {q} is not a prime power")
    p, l = ps[0], 0
    while q > 1:
        q //= p
        l += 1
    return p, l


def lower_bound(series: AdmissibleSeries, l: int, p: int) -> int:
    """``p ** (sum_{i<t} (h_{i-1} - h_i) k_i + h_{t-1} - l)`` with ``h_{-1} = l``."""
    h, k, t = series.h_seq, series.k_seq, series.t
    hh = (l,) + tuple(h)
    exponent = sum((hh[i] - hh[i + 1]) * k[i] for i in range(t)) + h[t - 1] - l
    assert exponent >= 0
    return p**exponent
