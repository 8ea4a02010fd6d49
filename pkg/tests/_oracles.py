"""Independent brute-force oracles for the test suite.

Deliberately naive and separate from the library: cofactor-expansion
determinants, exhaustive minor-gcd profiles, and raw DFS path enumeration
over plain edge sets.
"""

from itertools import combinations
from math import gcd


def cofactor_det(rows):
    """Determinant by first-row cofactor expansion."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j, lead in enumerate(rows[0]):
        if lead == 0:
            continue
        minor = [[row[c] for c in range(n) if c != j] for row in rows[1:]]
        total += (-1) ** j * lead * cofactor_det(minor)
    return total


def delta_profile(rows):
    """Exhaustive determinantal-divisor profile (delta_0 = 1)."""
    r, c = len(rows), len(rows[0])
    deltas = [1]
    for size in range(1, min(r, c) + 1):
        g = 0
        for rpick in combinations(range(r), size):
            for cpick in combinations(range(c), size):
                g = gcd(g, cofactor_det([[rows[i][j] for j in cpick] for i in rpick]))
        deltas.append(g)
    return deltas


def snf_diag_from_deltas(deltas):
    out = []
    for prev, cur in zip(deltas, deltas[1:]):
        out.append(0 if cur == 0 else cur // prev)
    return out


def brute_paths(edges, src, dst):
    """All directed paths src -> dst over a raw edge set, as vertex tuples."""
    edges = set(edges)
    succ = {}
    for i, j in edges:
        succ.setdefault(i, set()).add(j)
    found = []
    if src == dst:
        return found

    def walk(v, trail):
        for w in sorted(succ.get(v, ())):
            if w == dst:
                found.append(trail + (w,))
            elif w not in trail:
                walk(w, trail + (w,))

    walk(src, (src,))
    return found


def brute_longest_path(n, edges):
    """Longest path by extending every start vertex, counted in vertices."""
    succ = {}
    for i, j in set(edges):
        succ.setdefault(i, set()).add(j)
    best = 0

    def walk(v, seen):
        nonlocal best
        best = max(best, len(seen))
        for w in sorted(succ.get(v, ())):
            if w not in seen:
                walk(w, seen + (w,))

    for v in range(1, n + 1):
        walk(v, (v,))
    return best
