"""Diagonal-plus-DAG matrices.

Builds diag(d) + adjacency for a weighted DAG, extracts the structured
submatrices whose determinants encode increasing paths, evaluates the
path/gap expansions that serve as independent determinant oracles, and
enumerates the integer points of the lifted fundamental parallelepiped.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product
from math import gcd, lcm, prod

from .dag import (
    Dag,
    enumerate_paths,
    gap_product,
    gaps,
    is_topological_ordering,
    path_length_counts,
)
from .errors import (
    DiagonalDeletionError,
    DimensionMismatchError,
    NonConstantDiagonalError,
    NonPositiveDiagonalError,
    NotTopologicalError,
    OutOfRangeError,
    TooLargeError,
)
from .intmat import IntMatrix, det

DEFAULT_FPP_DET_CAP = 100_000


@dataclass(frozen=True)
class GhsInstance:
    """A positive diagonal vector, its DAG, and the realized matrix
    diag(d) + sum of unit entries over the directed edges."""

    d: tuple[int, ...]
    g: Dag
    matrix: IntMatrix


@dataclass(frozen=True)
class LiftedMatrix:
    """(n+1)-square bordering of an instance matrix: all-ones first row,
    unit corner, zero first column below it, instance matrix as the block."""

    base: GhsInstance
    matrix: IntMatrix


def build(d, g: Dag) -> GhsInstance:
    """Realize diag(d) plus a one at every directed edge (i, j).

    Arbitrary DAG labelings are accepted; operations needing the topological
    ordering check for it themselves.
    """
    weights = tuple(int(x) for x in d)
    if len(weights) != g.n:
        raise DimensionMismatchError(
            f"diagonal of length {len(weights)} for a graph on {g.n} vertices"
        )
    if any(x < 1 for x in weights):
        raise NonPositiveDiagonalError("diagonal entries must be >= 1")
    rows = [[0] * g.n for _ in range(g.n)]
    for i in range(g.n):
        rows[i][i] = weights[i]
    for i, j in g.edges:
        rows[i - 1][j - 1] = 1
    return GhsInstance(weights, g, IntMatrix.from_rows(rows))


def constant_diagonal(inst: GhsInstance) -> int | None:
    """The shared diagonal value, or None when the entries differ."""
    first = inst.d[0]
    return first if all(x == first for x in inst.d) else None


def _require_topological(g: Dag) -> None:
    if not is_topological_ordering(g):
        raise NotTopologicalError("operation requires the topological ordering")


def band_submatrix(inst: GhsInstance, start: int, span: int) -> IntMatrix:
    """The span-square block of rows start..start+span-1 against columns
    start+1..start+span.

    Its first row holds the edge indicators out of `start` and its subdiagonal
    band the following diagonal weights; the determinant vanishes unless an
    increasing path runs from `start` to `start+span`.
    """
    _require_topological(inst.g)
    n = inst.g.n
    if not (1 <= start and 1 <= span and start + span <= n):
        raise OutOfRangeError(f"block at ({start}, span {span}) does not fit in 1..{n}")
    ent = inst.matrix.entries
    return IntMatrix.from_rows(
        [ent[i][start : start + span] for i in range(start - 1, start + span - 1)]
    )


def path_sum_det(inst: GhsInstance, start: int, span: int) -> int:
    """det(band_submatrix) evaluated as the signed path/gap expansion.

    Sums (-1)^(span - length + 1) * gap_product over the directed paths from
    `start` to `start + span`; zero when no such path exists.
    """
    _require_topological(inst.g)
    n = inst.g.n
    if not (1 <= start and 1 <= span and start + span <= n):
        raise OutOfRangeError(f"block at ({start}, span {span}) does not fit in 1..{n}")
    total = 0
    for p in enumerate_paths(inst.g, start, start + span):
        total += (-1) ** (span - p.length + 1) * gap_product(inst.d, gaps(inst.g, p))
    return total


def deletion_submatrix(inst: GhsInstance, col: int, row: int) -> IntMatrix:
    """The (n-1)-square submatrix left after deleting column `col` and row `row`."""
    n = inst.g.n
    if not (1 <= col <= n and 1 <= row <= n):
        raise OutOfRangeError(f"deletion ({col},{row}) outside 1..{n}")
    if n < 2:
        raise OutOfRangeError("nothing remains after deleting from a 1x1 matrix")
    ent = inst.matrix.entries
    return IntMatrix.from_rows(
        [
            [ent[i][j] for j in range(n) if j != col - 1]
            for i in range(n)
            if i != row - 1
        ]
    )


def deletion_det_from_path_counts(inst: GhsInstance, col: int, row: int) -> int:
    """det(deletion_submatrix) from path-length counts; constant diagonal only.

    Evaluates the alternating sum over lengths i >= 2 of
    (#paths col->row of length i) * m^(n-i) with sign (-1)^(row-col-i+1);
    zero when no increasing path runs from col to row.
    """
    m = constant_diagonal(inst)
    if m is None:
        raise NonConstantDiagonalError("path-count determinant needs a constant diagonal")
    if col == row:
        raise DiagonalDeletionError(
            "col == row deletes a diagonal point; take the determinant directly"
        )
    _require_topological(inst.g)
    n = inst.g.n
    if not (1 <= col <= n and 1 <= row <= n):
        raise OutOfRangeError(f"deletion ({col},{row}) outside 1..{n}")
    counts = path_length_counts(inst.g, col, row)
    return sum(
        (-1) ** (row - col - i + 1) * c * m ** (n - i) for i, c in sorted(counts.items())
    )


def lift(inst: GhsInstance) -> LiftedMatrix:
    """Border the instance matrix with an all-ones top row and a unit corner;
    the determinant is unchanged."""
    n = inst.g.n
    rows = [[1] * (n + 1)]
    for i in range(n):
        rows.append([0, *inst.matrix.entries[i]])
    return LiftedMatrix(inst, IntMatrix.from_rows(rows))


def fpp_points(inst: GhsInstance, det_cap: int = DEFAULT_FPP_DET_CAP) -> list[tuple[int, ...]]:
    """Integer points of the half-open fundamental parallelepiped of the lift.

    Scans the integer box bounded by the lifted row sums and keeps the points
    whose exact rational preimage lies in [0,1)^(n+1); the count equals the
    instance determinant.
    """
    return [z for z, _ in _fpp_points_with_coords(inst, det_cap)]


def fpp_point_orders(inst: GhsInstance, det_cap: int = DEFAULT_FPP_DET_CAP) -> dict[int, int]:
    """Multiset (order -> count) of the parallelepiped points in the quotient
    group; a point's order is the lcm of its rational coordinate denominators."""
    orders: dict[int, int] = {}
    for _, coords in _fpp_points_with_coords(inst, det_cap):
        o = 1
        for c in coords:
            o = lcm(o, c.denominator)
        orders[o] = orders.get(o, 0) + 1
    return dict(sorted(orders.items()))


def cokernel_order_counts(alphas) -> dict[int, int]:
    """Multiset (order -> count) of the finite abelian group with the given
    invariant factors (all must be positive)."""
    factors = [int(a) for a in alphas]
    if any(a < 1 for a in factors):
        raise OutOfRangeError("invariant factors must be positive for a finite group")
    exponent = 1
    for a in factors:
        exponent = lcm(exponent, a)
    divisors = _divisors(exponent)
    dividing = {k: prod(gcd(a, k) for a in factors) for k in divisors}
    exact: dict[int, int] = {}
    for k in divisors:
        exact[k] = dividing[k] - sum(c for dv, c in exact.items() if k % dv == 0)
    return {k: v for k, v in exact.items() if v}


def _divisors(x: int) -> list[int]:
    out = [1]
    rest = x
    f = 2
    while f * f <= rest:
        if rest % f == 0:
            power = 1
            while rest % f == 0:
                rest //= f
                power *= f
            out = [d * f_pow for d in out for f_pow in _powers(f, power)]
        f += 1
    if rest > 1:
        out = [d * f_pow for d in out for f_pow in _powers(rest, rest)]
    return sorted(out)


def _powers(p: int, up_to: int) -> list[int]:
    vals = [1]
    while vals[-1] < up_to:
        vals.append(vals[-1] * p)
    return vals


def _fpp_points_with_coords(inst: GhsInstance, det_cap: int):
    volume = det(inst.matrix)
    if volume > det_cap:
        raise TooLargeError(f"determinant {volume} exceeds the enumeration cap {det_cap}")
    lifted = lift(inst).matrix
    inverse = _rational_inverse(lifted)
    out = []
    for z in iter_product(*(range(sum(row)) for row in lifted.entries)):
        coords = [sum(f * zj for f, zj in zip(inv_row, z)) for inv_row in inverse]
        if all(0 <= c < 1 for c in coords):
            out.append((z, coords))
    return out


def _rational_inverse(a: IntMatrix) -> list[list[Fraction]]:
    # Gauss-Jordan over exact rationals; the caller guarantees full rank.
    n = a.rows
    aug = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(a.entries)
    ]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]
