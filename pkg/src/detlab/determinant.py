"""Two independent determinant engines plus cofactor expansion and subspace
restriction.

``det_cofactor`` expands along the first column recursively (each step is
one lift from F^(n-1) to F x F^(n-1)). ``det_elimination`` reads the value
off an :class:`~detlab.linalg.EliminationTrace` as ``(-1)**m`` times the
product of the diagonal.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import (
    DependentInput,
    DimensionMismatch,
    EngineDisagreement,
    IndexOutOfRange,
    NotInSubspace,
    NotSquare,
)
from .field import RATIONAL, FieldDescriptor, Scalar
from .linalg import EliminationTrace, Matrix, Vector, VecTuple, reduce_to_diagonal, row_echelon


class DetMode(enum.Enum):
    COFACTOR = "cofactor"
    ELIMINATION = "elimination"
    CROSSCHECK = "crosscheck"


class Axis(enum.Enum):
    ROW = "row"
    COLUMN = "column"


@dataclass(frozen=True)
class DetResult:
    value: Scalar
    algorithm: DetMode
    trace: EliminationTrace | None = None


def _require_square(a: Matrix):
    if not a.is_square:
        raise NotSquare(f"{a.nrows}x{a.ncols} matrix is not square")


def _cofactor_rows(rows: list[tuple]) -> Scalar:
    # rows: list of entry tuples, square
    if len(rows) == 1:
        return rows[0][0]
    total = None
    for i, row in enumerate(rows):
        lead = row[0]
        if lead.is_zero():
            continue
        sub = [r[1:] for k, r in enumerate(rows) if k != i]
        term = lead * _cofactor_rows(sub)
        if i % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return rows[0][0].field.zero
    return total


def det_cofactor(a: Matrix) -> Scalar:
    """Recursive expansion along the first column.

    det(A) = sum_i (-1)**i * a[i][0] * det(A without row i and column 0),
    with a 1x1 matrix mapping to its entry.
    """
    _require_square(a)
    return _cofactor_rows([r.entries for r in a.rows])


def _product(values, field: FieldDescriptor) -> Scalar:
    acc = field.one
    for v in values:
        acc = acc * v
    return acc


def det_from_trace(trace: EliminationTrace) -> Scalar:
    field = trace.diagonal.field
    value = _product(trace.diagonal_entries, field)
    for s in trace.scale_factors:
        value = value / s
    return -value if trace.swap_count % 2 else value


def det_elimination(a: Matrix) -> Scalar:
    _require_square(a)
    return det_from_trace(reduce_to_diagonal(a))


def det(a: Matrix, mode: DetMode | str = DetMode.CROSSCHECK) -> DetResult:
    """Determinant via the chosen engine.

    ``CROSSCHECK`` runs both engines and raises
    :class:`~detlab.errors.EngineDisagreement` if they differ.
    """
    mode = DetMode(mode)
    _require_square(a)
    if mode is DetMode.COFACTOR:
        return DetResult(det_cofactor(a), mode)
    trace = reduce_to_diagonal(a)
    value = det_from_trace(trace)
    if mode is DetMode.CROSSCHECK:
        other = det_cofactor(a)
        if other != value:
            raise EngineDisagreement(other, value)
    return DetResult(value, mode, trace)


def cofactor_expand(a: Matrix, axis: Axis | str, index: int) -> Scalar:
    """Laplace expansion along one row or column.

    Minor determinants come from :func:`det_cofactor`.
    """
    _require_square(a)
    axis = Axis(axis)
    n = a.nrows
    if not 0 <= index < n:
        raise IndexOutOfRange(f"index {index} outside 0..{n - 1}")
    if n == 1:
        return a[0, 0]
    total = a.field.zero
    for k in range(n):
        i, j = (index, k) if axis is Axis.ROW else (k, index)
        entry = a[i, j]
        if entry.is_zero():
            continue
        term = entry * det_cofactor(a.minor(i, j))
        total = total - term if (i + j) % 2 else total + term
    return total


def lift_determinant(n: int, field: FieldDescriptor = RATIONAL):
    """The standard determinant on F^n built by n - 1 lifts of D(x) = x."""
    from .main_equation import Lifted, StandardDet

    if n < 1:
        raise ValueError("n must be at least 1")
    f = StandardDet(1, field)
    for _ in range(n - 1):
        f = Lifted(f)
    return f


def _rank(vectors, dim: int, field: FieldDescriptor) -> int:
    return len(row_echelon(list(vectors), dim, field)[1])


@dataclass(frozen=True)
class SubspaceBasis:
    """A basis of W together with standard basis vectors completing it to F^n."""

    span_vectors: VecTuple
    extension: VecTuple

    def __post_init__(self):
        full = self.span_vectors + self.extension
        if full.arity != self.ambient_dim:
            raise DimensionMismatch(
                f"{full.arity} basis vectors for ambient dimension {self.ambient_dim}"
            )
        if self.ambient_dim and det_elimination(Matrix.from_tuple(full)).is_zero():
            raise DependentInput("span vectors and extension are not a basis")

    @property
    def ambient_dim(self) -> int:
        return self.span_vectors.dim

    @property
    def k(self) -> int:
        return self.span_vectors.arity


def extend_to_basis(span_vectors: VecTuple) -> SubspaceBasis:
    """Append e_1, ..., e_n in order, keeping each one that enlarges the span."""
    n, field = span_vectors.dim, span_vectors.field
    current = list(span_vectors)
    if _rank(current, n, field) != len(current):
        raise DependentInput("span vectors are linearly dependent")
    extension = []
    for i in range(n):
        if len(current) == n:
            break
        e = Vector.basis(i, n, field)
        if _rank(current + [e], n, field) > len(current):
            current.append(e)
            extension.append(e)
    return SubspaceBasis(span_vectors, VecTuple(extension, field, n))


def subspace_determinant(basis: SubspaceBasis, w: VecTuple) -> Scalar:
    """D'(w_1..w_k) = det(w_1, ..., w_k, extension vectors)."""
    k = basis.k
    if w.arity != k:
        raise DimensionMismatch(f"expected a {k}-tuple, got arity {w.arity}")
    if w.dim != basis.ambient_dim:
        raise DimensionMismatch(
            f"vectors of dimension {w.dim} in F^{basis.ambient_dim}"
        )
    span = list(basis.span_vectors)
    n, field = basis.ambient_dim, w.field
    for idx, v in enumerate(w):
        if _rank(span + [v], n, field) != k:
            raise NotInSubspace(f"w[{idx}] = {v!r} is outside the subspace")
    return det_elimination(Matrix.from_tuple(w + basis.extension))
