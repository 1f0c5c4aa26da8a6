"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line."""

import time
from math import gcd

import pytest

from perfcodes import (
    build_code,
    check_T_conditions,
    count_enumerate,
    count_formula,
    decide_existence,
    enumerate_perfect_codes,
    enumerate_recipes,
    find_perfect_code,
    is_inverse_closed,
    is_perfect_code,
    longest_series,
    lower_bound,
    normalize,
)
from perfcodes.counting import CountParams
from perfcodes.lifts import composite, family_union, in_composite, multiplier_closure
from perfcodes.pyramidal import all_series
from perfcodes.zmod import Subgroup, connection_sets, meets_trivially, reduce_mod, subgroup_of_periods

EX31 = normalize(90, [1, 5, 6, 7, 83, 84, 85, 89])
EX32 = normalize(
    2430,
    [1, 44, 45, 46, 224, 225, 226, 269, 270, 271, 314, 315, 316, 2114, 2115,
     2116, 2159, 2160, 2161, 2204, 2205, 2206, 2384, 2385, 2386, 2429],
)
EX32_BASE = [0, 3, 6, 9, 12, 15, 18, 21, 24, 27, 30, 33, 36, 39, 42,
             135, 138, 141, 144, 147, 150, 153, 156, 159, 162, 165, 168, 171, 174, 177]
FIG1 = normalize(90, [0, 1, 15, 16, 31, 59, 74, 75, 89])
X315 = normalize(315, [0, 1, 14, 15, 16, 29, 30, 31, 44])

SWEEP = [(4, 2, 2, 64), (9, 3, 2, 90), (8, 2, 3, 48)]


def is_subgroup(D):
    return 0 in D and subgroup_of_periods(D).order == len(D)


@pytest.mark.criterion(1, "set on Z_90 (existence, codes, series)")
def test_criterion_1_z90():
    start = time.perf_counter()
    S0 = EX31.with_zero()
    assert decide_existence(EX31, 3, 2).exists
    assert is_perfect_code(EX31, Subgroup(90, 9).elements())
    assert is_perfect_code(EX31, normalize(90, [0, 3, 18, 21, 36, 39, 54, 57, 72, 75]))
    series = longest_series(S0, 3, 2)
    assert series.t == 2
    assert series.generators[1:4] == (18, 6, 3)
    assert check_T_conditions(S0, (90, 9, 1))
    assert time.perf_counter() - start < 1


@pytest.mark.criterion(2, "set on Z_2430 (non-subgroup codes only)")
def test_criterion_2_z2430():
    start = time.perf_counter()
    S0 = EX32.with_zero()
    d = decide_existence(EX32, 3, 3)
    assert d.pyramidal and d.exists
    assert d.series.generators == (2430, 810, 270, 135, 45, 3, 1)
    assert check_T_conditions(S0, (2430, 810, 270, 135, 45, 3, 1))
    assert not meets_trivially(S0, 27)
    assert not d.subgroup_code
    D = normalize(2430, [b + 810 * j for b in EX32_BASE for j in range(3)])
    assert len(D) == 90 and is_perfect_code(EX32, D)
    assert not is_subgroup(D)
    built = 0
    for series in all_series(S0, 3, 3):
        for recipe in enumerate_recipes(S0, budget=50, series=series):
            code = build_code(S0, recipe)
            assert is_perfect_code(EX32, code) and not is_subgroup(code)
            built += 1
    assert built > 0
    assert time.perf_counter() - start < 10


@pytest.mark.criterion(3, "second set on Z_90 (series and projections)")
def test_criterion_3_second_z90_set():
    start = time.perf_counter()
    series = longest_series(FIG1, 3, 2)
    assert series.generators == (90, 45, 15, 3, 1)
    assert reduce_mod(FIG1, 15) == normalize(15, [0, 1, 14])
    assert reduce_mod(FIG1, 3) == normalize(3, [0, 1, 2])
    assert time.perf_counter() - start < 1


@pytest.mark.criterion(4, "non-symmetric pyramidal set on Z_315")
def test_criterion_4_nonsymmetric():
    start = time.perf_counter()
    assert check_T_conditions(X315, (315, 45, 15, 3, 1))
    assert not is_inverse_closed(X315)
    assert time.perf_counter() - start < 1


@pytest.fixture(scope="module")
def sweep():
    """Every connected non-complete instance of the sweep, with oracle results."""
    rows = []
    for q, p, l, top in SWEEP:
        for n in range(2 * q, top + 1, q):
            for S in connection_sets(n, q - 1, connected=True):
                d = decide_existence(S, p, l)
                found = find_perfect_code(S)
                row = {"S": S, "p": p, "l": l, "diag": d, "oracle_exists": found is not None}
                if d.exists:
                    row["codes"] = set(enumerate_perfect_codes(S))
                rows.append(row)
    return rows


@pytest.mark.slow
@pytest.mark.criterion(5, "existence decision agrees with exact-cover oracle")
def test_criterion_5_existence_oracle(sweep):
    disagreements = [r["S"] for r in sweep if r["diag"].exists != r["oracle_exists"]]
    print(f"{len(sweep)} instances, {sum(r['oracle_exists'] for r in sweep)} with codes")
    assert disagreements == []


@pytest.mark.slow
@pytest.mark.criterion(6, "code count is at least the lower bound")
def test_criterion_6_lower_bound(sweep):
    violations = []
    for r in sweep:
        if r["diag"].exists and r["S"].modulus <= 96:
            bound = lower_bound(r["diag"].series, r["l"], r["p"])
            if len(r["codes"]) < bound:
                violations.append((r["S"], len(r["codes"]), bound))
    assert violations == []
    assert len(enumerate_perfect_codes(EX31)) >= 3


@pytest.mark.slow
@pytest.mark.criterion(7, "lift families cover exactly the sets with codes")
def test_criterion_7_family_coverage():
    for n, q, p, l in [(12, 4, 2, 2), (18, 9, 3, 2), (20, 4, 2, 2), (24, 8, 2, 3), (36, 4, 2, 2), (45, 9, 3, 2)]:
        oracle = {
            S.with_zero()
            for S in connection_sets(n, q - 1, connected=True)
            if find_perfect_code(S) is not None
        }
        closed = multiplier_closure(family_union(p, l, n // q))
        assert closed == oracle, (n, q)


# ---------------------------------------------------------------- criterion 8

BUDGET = 3_000
SEEDS_PER_CLASS = 3


def _seeds():
    """Up to SEEDS_PER_CLASS sets for each admissible (n, p, l) with n <= 20."""
    out = []
    for n in range(3, 21):
        for p, l in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1)]:
            q = p**l
            m = n // q
            if n % q or m < 2 or gcd(m, p) != 1:
                continue
            for _, S in zip(range(SEEDS_PER_CLASS), connection_sets(n, q - 1)):
                out.append((p, S.with_zero()))
    return out


def _estimate(S0, ops):
    size, total = len(S0), 1
    for kind, m in ops:
        if kind == "g":
            size *= m
        else:
            total *= m ** ((size - 1) // 2)
    return total


def _disjoint(S0, left, right):
    """Enumerate the cheaper side, test membership in the other; None when over budget."""
    small, other = (left, right) if _estimate(S0, left) <= _estimate(S0, right) else (right, left)
    if _estimate(S0, small) > BUDGET:
        return None
    return not any(in_composite(X, S0, other) for X in composite(S0, small))


def _contained(S0, left, right):
    if _estimate(S0, left) > BUDGET:
        return None
    return all(in_composite(X, S0, right) for X in composite(S0, left))


@pytest.mark.slow
@pytest.mark.criterion(8, "lift operator identities (a)-(f)")
def test_criterion_8_operator_identities():
    checked = dict.fromkeys("abcdef", 0)
    small = range(2, 10)
    for p, S0 in _seeds():
        powers = [p**r for r in range(1, 4) if p**r <= 9]
        for a in small:
            for b in small:
                f_ab, ff = [("f", a * b)], [("f", a), ("f", b)]
                sides = [_contained(S0, f_ab, ff), _contained(S0, ff, f_ab)]
                if None not in sides:
                    assert all(sides), ("a", S0, a, b)
                    checked["a"] += 1
                if a * b <= 9:
                    assert composite(S0, [("g", a), ("g", b)]) == composite(S0, [("g", a * b)])
                    checked["b"] += 1
        for a in small:
            for pr in powers:
                lhs, rhs = [("f", a), ("g", pr)], [("g", pr), ("f", a)]
                if a % p:
                    ok = _contained(S0, lhs, rhs)
                    key = "c"
                else:
                    ok = _disjoint(S0, lhs, rhs)
                    key = "d"
                if ok is not None:
                    assert ok, (key, S0, a, pr)
                    checked[key] += 1
            if a % p:
                continue
            for pk in powers:
                for ph in powers:
                    for pc in powers:
                        if pc >= ph or pk * pc > 9:
                            continue
                        left = [("g", ph), ("f", a), ("g", pk)]
                        right = [("g", ph // pc), ("f", a), ("g", pk * pc)]
                        ok = _disjoint(S0, left, right)
                        if ok is not None:
                            assert ok, ("e", S0, a, pk, ph, pc)
                            checked["e"] += 1
            for d in range(p, a + 1, p):
                if a % d:
                    continue
                for b in small:
                    for pr in powers:
                        left = [("f", a // d), ("g", pr), ("f", b * d)]
                        right = [("f", a), ("g", pr), ("f", b)]
                        ok = _disjoint(S0, left, right)
                        if ok is not None:
                            assert ok, ("f", S0, a, d, b, pr)
                            checked["f"] += 1
    print("identity instances checked:", checked)
    assert all(checked.values()), checked


@pytest.mark.criterion(9, "closed-form count equals direct enumeration")
def test_criterion_9_counts():
    seen = {}
    for n, p, l in [(18, 3, 2), (36, 3, 2), (45, 3, 2), (8, 2, 3), (24, 2, 3), (40, 2, 3)]:
        params = CountParams(n, p, l)
        seen[(n, p, l)] = count_formula(params)
        assert seen[(n, p, l)] == count_enumerate(params), (n, p, l)
    assert seen[(45, 3, 2)] == 624
    assert seen[(8, 2, 3)] == 1


@pytest.mark.slow
@pytest.mark.criterion(10, "distinct recipes give distinct oracle codes")
def test_criterion_10_recipe_distinctness(sweep):
    checked = 0
    for r in sweep:
        d = r["diag"]
        if not d.exists or d.t < 2:
            continue
        S0 = r["S"].with_zero()
        built = [build_code(S0, recipe) for recipe in enumerate_recipes(S0, series=d.series)]
        assert len(set(built)) == len(built), r["S"]
        assert set(built) <= r["codes"], r["S"]
        checked += 1
    print(f"{checked} instances with t >= 2")
    assert checked > 0
