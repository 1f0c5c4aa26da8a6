"""Brute-force reference implementations, written without the library."""

from itertools import combinations
from math import gcd


def direct_sum(n, A, B):
    counts = [0] * n
    for a in A:
        for b in B:
            counts[(a + b) % n] += 1
    return all(c == 1 for c in counts)


def periods(n, X):
    X = {x % n for x in X}
    return [g for g in range(n) if {(x + g) % n for x in X} == X]


def connected(n, S):
    seen, todo = {0}, [0]
    while todo:
        v = todo.pop()
        for s in S:
            w = (v + s) % n
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return len(seen) == n


def is_perfect_code(n, S, D):
    """Closed neighbourhoods of D partition the vertices."""
    hit = [0] * n
    for d in D:
        for s in [0, *S]:
            hit[(d + s) % n] += 1
    return all(h == 1 for h in hit)


def perfect_codes(n, S):
    """Every perfect code containing 0, by trying all subsets of the right size."""
    size, rem = divmod(n, len(S) + 1)
    if rem:
        return []
    return [
        frozenset((0, *rest))
        for rest in combinations(range(1, n), size - 1)
        if is_perfect_code(n, S, (0, *rest))
    ]


def connection_sets(n, degree):
    """Inverse-closed, 0-free, connected subsets of Z_n of the given size, from raw subsets."""
    out = []
    for S in combinations(range(1, n), degree):
        Sset = set(S)
        if all((n - s) % n in Sset for s in S) and connected(n, S):
            out.append(frozenset(S))
    return out


def count_sets(n, p, l):
    q = p**l
    total = 0
    for S in connection_sets(n, q - 1):
        res = {0, *(s % q for s in S)}
        g = n
        for s in S:
            g = gcd(g, s)
        total += len(res) == q and g == 1
    return total
