"""Tilings of Z_n and perfect codes as their second factor.

D is a perfect code of Cay(Z_n, S) exactly when Z_n = S_0 (+) D with
S_0 = S ∪ {0}.  The search here is a plain exact-cover backtrack over the
translates c + S_0, always covering the smallest uncovered residue first.
Coverage is a Python int used as a bit vector over Z_n.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Optional

from .zmod import (
    InvalidInput,
    ResidueSet,
    _check_same,
    difference_set,
    is_inverse_closed,
    normalize,
)


def is_direct_sum(A: ResidueSet, B: ResidueSet) -> bool:
    """Z_n = A (+) B, decided by |A||B| = n and (A-A) ∩ (B-B) = {0}."""
    _check_same(A, B)
    if not A.elements or not B.elements:
        return False
    if len(A) * len(B) != A.modulus:
        return False
    common = difference_set(A).members & difference_set(B).members
    return common == {0}


def representation_counts(A: ResidueSet, B: ResidueSet) -> list[int]:
    """For each g in Z_n, the number of pairs (a, b) with a + b = g."""
    _check_same(A, B)
    n = A.modulus
    counts = [0] * n
    for a in A.elements:
        for b in B.elements:
            counts[(a + b) % n] += 1
    return counts


def _check_connection_set(S: ResidueSet) -> None:
    if 0 in S.members:
        raise InvalidInput("invalid-connection-set", "connection set contains 0")
    if not is_inverse_closed(S):
        raise InvalidInput("invalid-connection-set", "connection set is not inverse-closed")


def is_perfect_code(S: ResidueSet, D: ResidueSet) -> bool:
    _check_connection_set(S)
    _check_same(S, D)
    return is_direct_sum(S.with_zero(), D)


def _translate_masks(A: ResidueSet) -> list[int]:
    n = A.modulus
    full = (1 << n) - 1
    base = A.mask
    return [((base << c) | (base >> (n - c))) & full for c in range(n)]


def _search(A: ResidueSet, limit: Optional[int], prefix: tuple[int, ...] = (0,)) -> list[tuple[int, ...]]:
    """All B containing ``prefix`` with Z_n = A (+) B, at most ``limit`` of them.

    ``A`` must contain 0.  Each B is produced once: the translate covering
    the smallest uncovered residue is the branching variable.
    """
    n = A.modulus
    k = len(A)
    if k == 0 or n % k:
        return []
    full = (1 << n) - 1
    shifts = _translate_masks(A)
    offsets = sorted((-a) % n for a in A.elements)
    covered = 0
    for c in prefix:
        if covered & shifts[c]:
            return []
        covered |= shifts[c]
    found: list[tuple[int, ...]] = []
    chosen = list(prefix)

    def rec(covered: int) -> bool:
        if covered == full:
            found.append(tuple(sorted(chosen)))
            return limit is not None and len(found) >= limit
        x = (~covered & (covered + 1)).bit_length() - 1
        for c in sorted((x + t) % n for t in offsets):
            m = shifts[c]
            if not m & covered:
                chosen.append(c)
                stop = rec(covered | m)
                chosen.pop()
                if stop:
                    return True
        return False

    rec(covered)
    return found


def tiling_complements(A: ResidueSet, limit: Optional[int] = None) -> list[ResidueSet]:
    """Every B with 0 ∈ B and Z_n = A (+) B, for any A containing 0."""
    if 0 not in A.members:
        raise InvalidInput("invalid-input", "left factor must contain 0")
    found = [ResidueSet(A.modulus, b) for b in _search(A, limit)]
    return found if limit is not None else sorted(found)


def find_perfect_code(S: ResidueSet) -> Optional[ResidueSet]:
    """Some perfect code containing 0, or None when there is none.

    A connection set whose |S_0| does not divide n simply has no code.
    """
    _check_connection_set(S)
    sols = _search(S.with_zero(), 1)
    return ResidueSet(S.modulus, sols[0]) if sols else None


def _subtree(args):
    A, prefix = args
    return _search(A, None, prefix)


def enumerate_perfect_codes(S: ResidueSet, workers: int = 1) -> list[ResidueSet]:
    """All perfect codes containing 0, sorted lexicographically.

    Exhaustive; practical up to n around 200 when |S_0| >= 4.  With
    ``workers > 1`` the first branching level is farmed out to processes;
    the merged result is identical to the sequential one.
    """
    _check_connection_set(S)
    A = S.with_zero()
    n = A.modulus
    if workers <= 1 or n % len(A) or len(A) == n:
        return sorted(ResidueSet(n, b) for b in _search(A, None))
    covered = A.mask
    x = (~covered & (covered + 1)).bit_length() - 1
    roots = sorted({(x - a) % n for a in A.elements})
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_subtree, [(A, (0, c)) for c in roots])
        sols = [b for part in parts for b in part]
    return sorted(ResidueSet(n, b) for b in sols)


def code_from_quotient(A: ResidueSet, B_quotient: ResidueSet) -> ResidueSet:
    """Lift B/H back to B + H, H = <d> with d = modulus of ``B_quotient``."""
    n = A.modulus
    d = B_quotient.modulus
    if n % d:
        raise InvalidInput("incompatible-operands", f"{d} does not divide {n}")
    return normalize(n, (b + j * d for b in B_quotient.elements for j in range(n // d)))
