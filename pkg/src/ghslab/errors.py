"""Exception types shared across the package."""


class GhsLabError(Exception):
    """Base class for every error raised by this package."""


class ParseError(GhsLabError):
    """Malformed matrix, graph, or instance input."""


class DimensionMismatchError(GhsLabError):
    """Ragged rows or a vector whose length disagrees with the matrix/graph."""


class ZeroMatrixError(GhsLabError):
    """Operation undefined on the all-zero matrix."""


class NotSquareError(GhsLabError):
    """Operation requires a square matrix."""


class NotPrimeError(GhsLabError):
    """A prime modulus was required."""


class InvalidEdgeError(GhsLabError):
    """Edge with a self-loop or an endpoint outside 1..n."""


class CyclicGraphError(GhsLabError):
    """Edge set contains a directed cycle."""


class NotPermutationError(GhsLabError):
    """Relabeling map is not a bijection on 1..n."""


class NotAPathError(GhsLabError):
    """Vertex sequence is not a directed path of the host graph."""


class NotTopologicalError(GhsLabError):
    """Operation requires every edge to point toward the larger label."""


class InvalidParamsError(GhsLabError):
    """Family or sweep parameters outside their allowed range."""


class NonPositiveDiagonalError(GhsLabError):
    """Diagonal weights must all be >= 1."""


class NonConstantDiagonalError(GhsLabError):
    """Operation requires all diagonal weights to be equal."""


class DiagonalDeletionError(GhsLabError):
    """Path-count determinant formula needs distinct deleted row and column."""


class OutOfRangeError(GhsLabError):
    """Submatrix selector outside the matrix."""


class TooLargeError(GhsLabError):
    """Enumeration would exceed the configured determinant cap."""


class NotBipartiteError(GhsLabError):
    """Edges must all run from the first part into the second."""
