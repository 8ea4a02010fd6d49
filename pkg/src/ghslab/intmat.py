"""Exact arbitrary-precision integer matrices.

Determinants (fraction-free elimination), Smith normal form with tracked
unimodular transforms, brute-force minor-gcd profiles, Hermite-form detection,
and rank over Z/pZ. Everything runs on Python ints; nothing is ever rounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd

from .errors import (
    DimensionMismatchError,
    NotPrimeError,
    NotSquareError,
    OutOfRangeError,
    ZeroMatrixError,
)


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix; `entries` holds the rows as immutable tuples."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows) -> "IntMatrix":
        data = tuple(tuple(int(x) for x in row) for row in rows)
        if not data or not data[0]:
            raise DimensionMismatchError("matrix needs at least one row and one column")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise DimensionMismatchError("rows have differing lengths")
        return cls(len(data), width, data)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def from_diagonal(cls, values) -> "IntMatrix":
        vals = [int(x) for x in values]
        n = len(vals)
        return cls.from_rows([[vals[i] if i == j else 0 for j in range(n)] for i in range(n)])

    def entry(self, i: int, j: int) -> int:
        """Entry in row i, column j (1-based, matching vertex labels)."""
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise OutOfRangeError(f"entry ({i},{j}) outside a {self.rows}x{self.cols} matrix")
        return self.entries[i - 1][j - 1]

    @property
    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        other_cols = list(zip(*other.entries))
        return IntMatrix(
            self.rows,
            other.cols,
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in other_cols)
                for row in self.entries
            ),
        )


@dataclass(frozen=True)
class SnfResult:
    """Smith normal form: diagonal invariant factors and the unimodular
    transforms with left @ source @ right equal to the diagonal matrix."""

    diagonal: tuple[int, ...]
    left: IntMatrix
    right: IntMatrix


@dataclass(frozen=True)
class MinorGcdProfile:
    """Gcds of all k-by-k minor determinants for k = 0..min(rows, cols).

    deltas[0] is 1 by convention; deltas[k] is 0 once every k-minor vanishes.
    Successive ratios recover the invariant factors.
    """

    deltas: tuple[int, ...]

    def invariant_factors(self) -> tuple[int, ...]:
        out = []
        for prev, cur in zip(self.deltas, self.deltas[1:]):
            out.append(0 if cur == 0 else cur // prev)
        return tuple(out)


def det(a: IntMatrix) -> int:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    if not a.is_square:
        raise NotSquareError(f"determinant of a {a.rows}x{a.cols} matrix")
    return _det_rows([list(row) for row in a.entries])


def _det_rows(m: list[list[int]]) -> int:
    # Bareiss condensation; every division is exact. Consumes m.
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        pk = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            mik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pk - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pk
    return sign * m[-1][-1]


def snf(a: IntMatrix) -> SnfResult:
    """Smith normal form by gcd-pivot elimination.

    The pivot is the smallest nonzero entry (by absolute value) of the working
    submatrix, ties broken by lowest row then column. A final pass normalizes
    signs into the left transform and restores the divisibility chain with
    2x2 gcd/lcm transforms on diagonal pairs.
    """
    if a.is_zero:
        raise ZeroMatrixError("SNF requires a nonzero matrix")
    nr, nc = a.rows, a.cols
    m = [list(row) for row in a.entries]
    left = [[int(i == j) for j in range(nr)] for i in range(nr)]
    right = [[int(i == j) for j in range(nc)] for i in range(nc)]

    def add_row(dst: int, src: int, q: int) -> None:
        m[dst] = [x + q * y for x, y in zip(m[dst], m[src])]
        left[dst] = [x + q * y for x, y in zip(left[dst], left[src])]

    def add_col(dst: int, src: int, q: int) -> None:
        for row in m:
            row[dst] += q * row[src]
        for row in right:
            row[dst] += q * row[src]

    def swap_rows(i: int, j: int) -> None:
        m[i], m[j] = m[j], m[i]
        left[i], left[j] = left[j], left[i]

    def swap_cols(i: int, j: int) -> None:
        for row in m:
            row[i], row[j] = row[j], row[i]
        for row in right:
            row[i], row[j] = row[j], row[i]

    def min_abs_entry(k: int):
        best = None
        best_abs = 0
        for i in range(k, nr):
            row = m[i]
            for j in range(k, nc):
                v = row[j]
                if v:
                    av = v if v > 0 else -v
                    if best is None or av < best_abs:
                        best = (i, j)
                        best_abs = av
        return best

    limit = min(nr, nc)
    rank = limit
    for k in range(limit):
        found = min_abs_entry(k)
        if found is None:
            rank = k
            break
        while True:
            bi, bj = found
            if bi != k:
                swap_rows(k, bi)
            if bj != k:
                swap_cols(k, bj)
            p = m[k][k]
            dirty = False
            for i in range(k + 1, nr):
                if m[i][k] % p:
                    add_row(i, k, -(m[i][k] // p))
                    dirty = True
            if not dirty:
                for j in range(k + 1, nc):
                    if m[k][j] % p:
                        add_col(j, k, -(m[k][j] // p))
                        dirty = True
            if not dirty:
                break
            found = min_abs_entry(k)
        p = m[k][k]
        for i in range(k + 1, nr):
            if m[i][k]:
                add_row(i, k, -(m[i][k] // p))
        for j in range(k + 1, nc):
            if m[k][j]:
                add_col(j, k, -(m[k][j] // p))

    for i in range(rank):
        if m[i][i] < 0:
            m[i] = [-x for x in m[i]]
            left[i] = [-x for x in left[i]]

    for i in range(rank):
        for j in range(i + 1, rank):
            di, dj = m[i][i], m[j][j]
            if dj % di == 0:
                continue
            # Couple the pair, then split into (gcd, lcm).
            add_col(i, j, 1)
            g, s, t = _ext_gcd(di, dj)
            u, v = -(dj // g), di // g
            m[i], m[j] = (
                [s * x + t * y for x, y in zip(m[i], m[j])],
                [u * x + v * y for x, y in zip(m[i], m[j])],
            )
            left[i], left[j] = (
                [s * x + t * y for x, y in zip(left[i], left[j])],
                [u * x + v * y for x, y in zip(left[i], left[j])],
            )
            add_col(j, i, -((t * dj) // g))

    diagonal = tuple(m[i][i] for i in range(limit))
    return SnfResult(
        diagonal,
        IntMatrix.from_rows(left),
        IntMatrix.from_rows(right),
    )


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    # Returns (g, s, t) with g = s*a + t*b and g >= 0.
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def minor_gcd_profile(a: IntMatrix) -> MinorGcdProfile:
    """Determinantal-divisor profile by exhaustive minor enumeration.

    Meant as an independent oracle at small sizes; each level stops early once
    the running gcd reaches the previous level's value, its minimum possible.
    """
    if a.is_zero:
        raise ZeroMatrixError("minor-gcd profile requires a nonzero matrix")
    deltas = [1]
    for size in range(1, min(a.rows, a.cols) + 1):
        prev = deltas[-1]
        deltas.append(0 if prev == 0 else minor_gcd_level(a, size, floor=prev))
    return MinorGcdProfile(tuple(deltas))


def minor_gcd_level(a: IntMatrix, size: int, floor: int = 1) -> int:
    """Gcd of the determinants of all size-by-size submatrices (0 if all vanish).

    `floor` must be a known divisor of the answer (for instance the previous
    level's gcd); the scan returns as soon as the running gcd reaches it.
    """
    if size == 0:
        return 1
    if size > min(a.rows, a.cols):
        raise OutOfRangeError(f"no {size}x{size} submatrices in a {a.rows}x{a.cols} matrix")
    g = 0
    ent = a.entries
    for rows_pick in combinations(range(a.rows), size):
        picked = [ent[i] for i in rows_pick]
        for cols_pick in combinations(range(a.cols), size):
            g = gcd(g, _det_rows([[row[j] for j in cols_pick] for row in picked]))
            if floor and g == floor:
                return g
    return g


def is_hnf(a: IntMatrix) -> bool:
    """Hermite-form test: non-negative, upper-triangular, and every column's
    strict maximum sitting on the main diagonal."""
    if not a.is_square:
        raise NotSquareError(f"Hermite-form test of a {a.rows}x{a.cols} matrix")
    ent = a.entries
    n = a.rows
    for i in range(n):
        for j in range(n):
            if ent[i][j] < 0:
                return False
            if i > j and ent[i][j] != 0:
                return False
    for j in range(n):
        if any(ent[i][j] >= ent[j][j] for i in range(n) if i != j):
            return False
    return True


def is_prime(p: int) -> bool:
    """Deterministic trial-division primality check (desk-scale inputs)."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def rank_mod_p(a: IntMatrix, p: int) -> int:
    """Rank of the matrix with entries reduced mod p, over the field Z/pZ."""
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    m = [[x % p for x in row] for row in a.entries]
    rank = 0
    for col in range(a.cols):
        pivot_row = next((r for r in range(rank, a.rows) if m[r][col]), None)
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        inv = pow(m[rank][col], -1, p)
        m[rank] = [(x * inv) % p for x in m[rank]]
        for r in range(a.rows):
            if r != rank and m[r][col]:
                f = m[r][col]
                m[r] = [(x - f * y) % p for x, y in zip(m[r], m[rank])]
        rank += 1
        if rank == a.rows:
            break
    return rank
