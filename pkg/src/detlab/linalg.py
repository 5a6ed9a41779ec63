"""Vectors, tuples of vectors, matrices and elementary tuple operations.

A square matrix is interchangeable with the tuple of its rows, so the
three elementary operations act on both. ``reduce_to_diagonal`` records
the operations it performs in an :class:`EliminationTrace`.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence, Union

from .errors import (
    DimensionMismatch,
    FieldMismatch,
    IndexOutOfRange,
    NotSquare,
    ParseError,
    ZeroScaleFactor,
)
from .field import RATIONAL, FieldDescriptor, Scalar, parse_scalar


class Vector:
    """Immutable coordinate vector in F^n."""

    __slots__ = ("field", "entries")

    def __init__(self, entries: Iterable, field: FieldDescriptor = RATIONAL):
        entries = tuple(field(e) for e in entries)
        if not entries:
            raise DimensionMismatch("a vector needs at least one coordinate")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def _raw(cls, entries: tuple, field: FieldDescriptor) -> Vector:
        v = object.__new__(cls)
        object.__setattr__(v, "field", field)
        object.__setattr__(v, "entries", entries)
        return v

    @classmethod
    def zeros(cls, dim: int, field: FieldDescriptor = RATIONAL) -> Vector:
        return cls._raw((field.zero,) * dim, field)

    @classmethod
    def basis(cls, i: int, dim: int, field: FieldDescriptor = RATIONAL) -> Vector:
        """The standard basis vector e_i (0-based)."""
        if not 0 <= i < dim:
            raise IndexOutOfRange(f"basis index {i} outside dimension {dim}")
        return cls._raw(
            tuple(field.one if j == i else field.zero for j in range(dim)), field
        )

    def __setattr__(self, name, value):
        raise AttributeError("Vector is immutable")

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def _check(self, other: Vector):
        if other.field != self.field:
            raise FieldMismatch(f"{self.field.name} vs {other.field.name}")
        if other.dim != self.dim:
            raise DimensionMismatch(f"dimension {self.dim} vs {other.dim}")

    def __add__(self, other: Vector) -> Vector:
        if not isinstance(other, Vector):
            return NotImplemented
        self._check(other)
        return Vector._raw(tuple(a + b for a, b in zip(self, other)), self.field)

    def __sub__(self, other: Vector) -> Vector:
        if not isinstance(other, Vector):
            return NotImplemented
        self._check(other)
        return Vector._raw(tuple(a - b for a, b in zip(self, other)), self.field)

    def __neg__(self) -> Vector:
        return Vector._raw(tuple(-a for a in self), self.field)

    def __mul__(self, c) -> Vector:
        if isinstance(c, Vector):
            return NotImplemented
        c = self.field(c)
        return Vector._raw(tuple(c * a for a in self), self.field)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.entries)

    def __eq__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        return self.field == other.field and self.entries == other.entries

    def __hash__(self):
        return hash((self.field, self.entries))

    def __repr__(self):
        return f"Vector([{', '.join(map(str, self.entries))}])"


def _as_vector(v, field: FieldDescriptor) -> Vector:
    if isinstance(v, Vector):
        if v.field != field:
            raise FieldMismatch(f"{v.field.name} vector in {field.name} tuple")
        return v
    if isinstance(v, (int, Scalar)) or not isinstance(v, Iterable):
        return Vector([v], field)
    return Vector(v, field)


class VecTuple:
    """Ordered tuple of vectors of equal dimension.

    ``dim`` must be given explicitly for the empty tuple. Bare scalars are
    accepted as 1-dimensional vectors, which keeps functionals on V = F
    readable: ``VecTuple([2, 3])``.
    """

    __slots__ = ("field", "vectors", "dim")

    def __init__(
        self,
        vectors: Iterable = (),
        field: FieldDescriptor | None = None,
        dim: int | None = None,
    ):
        vectors = list(vectors)
        if field is None:
            field = next(
                (v.field for v in vectors if isinstance(v, (Vector, Scalar))),
                RATIONAL,
            )
        vecs = tuple(_as_vector(v, field) for v in vectors)
        dims = {v.dim for v in vecs}
        if dim is not None:
            dims.add(dim)
        if len(dims) > 1:
            raise DimensionMismatch(f"mixed dimensions {sorted(dims)} in tuple")
        if not dims:
            raise DimensionMismatch("empty tuple needs an explicit dim")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "vectors", vecs)
        object.__setattr__(self, "dim", dims.pop())

    def __setattr__(self, name, value):
        raise AttributeError("VecTuple is immutable")

    @property
    def arity(self) -> int:
        return len(self.vectors)

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __getitem__(self, i):
        return self.vectors[i]

    def replace(self, k: int, v: Vector) -> VecTuple:
        """Copy with slot ``k`` replaced by ``v``."""
        if not 0 <= k < self.arity:
            raise IndexOutOfRange(f"slot {k} outside arity {self.arity}")
        vecs = list(self.vectors)
        vecs[k] = v
        return VecTuple(vecs, self.field, self.dim)

    def swap(self, i: int, j: int) -> VecTuple:
        return apply_tuple_op(self, Interchange(i, j))

    def __add__(self, other: VecTuple) -> VecTuple:
        return VecTuple(self.vectors + tuple(other.vectors), self.field, self.dim)

    def __eq__(self, other):
        if not isinstance(other, VecTuple):
            return NotImplemented
        return (self.field, self.dim, self.vectors) == (
            other.field,
            other.dim,
            other.vectors,
        )

    def __hash__(self):
        return hash((self.field, self.dim, self.vectors))

    def __repr__(self):
        return f"VecTuple({list(self.vectors)!r})"


class Matrix:
    """Rectangular matrix stored as a tuple of row vectors."""

    __slots__ = ("field", "rows")

    def __init__(self, rows: Iterable, field: FieldDescriptor = RATIONAL):
        rows = tuple(_as_vector(r, field) for r in rows)
        if not rows:
            raise DimensionMismatch("a matrix needs at least one row")
        if len({r.dim for r in rows}) != 1:
            raise DimensionMismatch("rows of unequal length")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, n: int, field: FieldDescriptor = RATIONAL) -> Matrix:
        return cls([Vector.basis(i, n, field) for i in range(n)], field)

    @classmethod
    def diagonal_of(cls, entries: Sequence, field: FieldDescriptor = RATIONAL) -> Matrix:
        n = len(entries)
        return cls(
            [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], field
        )

    @classmethod
    def from_tuple(cls, t: VecTuple) -> Matrix:
        return cls(t.vectors, t.field)

    def to_tuple(self) -> VecTuple:
        return VecTuple(self.rows, self.field, self.ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return self.rows[0].dim

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        if isinstance(ij, tuple):
            i, j = ij
            return self.rows[i][j]
        return self.rows[ij]

    def column(self, j: int) -> Vector:
        return Vector._raw(tuple(r[j] for r in self.rows), self.field)

    def diagonal(self) -> list[Scalar]:
        return [self.rows[i][i] for i in range(min(self.nrows, self.ncols))]

    def is_diagonal(self) -> bool:
        return all(
            self.rows[i][j].is_zero()
            for i in range(self.nrows)
            for j in range(self.ncols)
            if i != j
        )

    def minor(self, i: int, j: int) -> Matrix:
        """Drop row ``i`` and column ``j``."""
        return Matrix(
            [
                [a for c, a in enumerate(row) if c != j]
                for r, row in enumerate(self.rows)
                if r != i
            ],
            self.field,
        )

    def tolist(self) -> list[list[Scalar]]:
        return [list(r) for r in self.rows]

    def __matmul__(self, other: Matrix) -> Matrix:
        return matrix_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.rows == other.rows

    def __hash__(self):
        return hash((self.field, self.rows))

    def __repr__(self):
        return f"Matrix({[[str(a) for a in r] for r in self.rows]})"

    def __str__(self):
        return format_matrix(self)


# Elementary operations.  Indices are 0-based.


@dataclass(frozen=True)
class Interchange:
    i: int
    j: int

    def __post_init__(self):
        if self.i == self.j:
            raise ValueError("Interchange needs two distinct indices")


@dataclass(frozen=True)
class Scale:
    i: int
    c: object


@dataclass(frozen=True)
class Replace:
    """row[target] <- row[target] + c * row[source]"""

    target: int
    source: int
    c: object

    def __post_init__(self):
        if self.target == self.source:
            raise ValueError("Replace needs distinct target and source")


ElementaryOp = Union[Interchange, Scale, Replace]


def _check_index(i: int, n: int):
    if not 0 <= i < n:
        raise IndexOutOfRange(f"index {i} outside 0..{n - 1}")


def inverse_op(op: ElementaryOp, field: FieldDescriptor = RATIONAL) -> ElementaryOp:
    """The elementary operation of the same kind that undoes ``op``."""
    if isinstance(op, Interchange):
        return op
    if isinstance(op, Scale):
        c = field(op.c)
        if c.is_zero():
            raise ZeroScaleFactor("scale factor must be nonzero")
        return Scale(op.i, 1 / c)
    return Replace(op.target, op.source, -field(op.c))


def _apply_to_rows(rows: list, op: ElementaryOp, field: FieldDescriptor) -> list:
    n = len(rows)
    rows = list(rows)
    if isinstance(op, Interchange):
        _check_index(op.i, n)
        _check_index(op.j, n)
        rows[op.i], rows[op.j] = rows[op.j], rows[op.i]
    elif isinstance(op, Scale):
        _check_index(op.i, n)
        c = field(op.c)
        if c.is_zero():
            raise ZeroScaleFactor("scale factor must be nonzero")
        rows[op.i] = rows[op.i] * c
    elif isinstance(op, Replace):
        _check_index(op.target, n)
        _check_index(op.source, n)
        rows[op.target] = rows[op.target] + rows[op.source] * field(op.c)
    else:
        raise TypeError(f"not an elementary operation: {op!r}")
    return rows


def apply_tuple_op(t: VecTuple, op: ElementaryOp) -> VecTuple:
    return VecTuple(_apply_to_rows(t.vectors, op, t.field), t.field, t.dim)


def apply_row_op(a: Matrix, op: ElementaryOp) -> Matrix:
    return Matrix(_apply_to_rows(a.rows, op, a.field), a.field)


def elementary_matrix_of(
    op: ElementaryOp, n: int, field: FieldDescriptor = RATIONAL
) -> Matrix:
    """Apply ``op`` to the n x n identity."""
    return apply_row_op(Matrix.identity(n, field), op)


def _combine(coeffs, vectors, dim: int, field: FieldDescriptor) -> Vector:
    acc = [field.zero] * dim
    for c, v in zip(coeffs, vectors):
        if c.is_zero():
            continue
        for k in range(dim):
            acc[k] = acc[k] + c * v.entries[k]
    return Vector._raw(tuple(acc), field)


def matrix_tuple_action(a: Matrix, t: VecTuple) -> VecTuple:
    """A . T: the tuple whose i-th member is sum_j a[i][j] * t[j]."""
    if a.field != t.field:
        raise FieldMismatch(f"{a.field.name} matrix acting on {t.field.name} tuple")
    if not a.is_square or a.ncols != t.arity:
        raise DimensionMismatch(
            f"{a.nrows}x{a.ncols} matrix cannot act on a {t.arity}-tuple"
        )
    return VecTuple(
        [_combine(row, t.vectors, t.dim, t.field) for row in a.rows], t.field, t.dim
    )


def matrix_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field.name} times {b.field.name}")
    if a.ncols != b.nrows:
        raise DimensionMismatch(
            f"cannot multiply {a.nrows}x{a.ncols} by {b.nrows}x{b.ncols}"
        )
    return Matrix([_combine(row, b.rows, b.ncols, a.field) for row in a.rows], a.field)


def transpose(a: Matrix) -> Matrix:
    return Matrix([a.column(j) for j in range(a.ncols)], a.field)


@dataclass(frozen=True)
class EliminationTrace:
    """Operations reducing ``original`` to ``diagonal``.

    For a nonsingular input ``diagonal`` is a diagonal matrix. For a
    singular input row operations cannot always reach diagonal form, so
    ``diagonal`` is the upper-triangular result with at least one zero on
    its main diagonal.
    """

    original: Matrix
    ops: tuple
    diagonal: Matrix
    swap_count: int
    scale_factors: tuple = dc_field(default=())

    @property
    def diagonal_entries(self) -> list[Scalar]:
        return self.diagonal.diagonal()

    def replay(self) -> Matrix:
        a = self.original
        for op in self.ops:
            a = apply_row_op(a, op)
        return a


def reduce_to_diagonal(a: Matrix) -> EliminationTrace:
    """Reduce a square matrix using only Interchange and Replace.

    Pivot for column c is the first row at or below c with a nonzero entry
    in column c. A column with no such row is skipped, leaving a zero on
    the diagonal. Forward elimination makes the matrix upper triangular,
    then a backward pass clears entries above each nonzero pivot.
    """
    if not a.is_square:
        raise NotSquare(f"{a.nrows}x{a.ncols} matrix is not square")
    n = a.nrows
    field = a.field
    rows = [list(r.entries) for r in a.rows]
    ops = []
    swaps = 0

    def replace(target, source, c):
        src = rows[source]
        rows[target] = [x + c * y for x, y in zip(rows[target], src)]
        ops.append(Replace(target, source, c))

    for c in range(n):
        pivot = next((r for r in range(c, n) if not rows[r][c].is_zero()), None)
        if pivot is None:
            continue
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            ops.append(Interchange(c, pivot))
            swaps += 1
        inv = 1 / rows[c][c]
        for r in range(c + 1, n):
            if not rows[r][c].is_zero():
                replace(r, c, -(rows[r][c] * inv))

    for c in range(n - 1, -1, -1):
        if rows[c][c].is_zero():
            continue
        inv = 1 / rows[c][c]
        for r in range(c):
            if not rows[r][c].is_zero():
                replace(r, c, -(rows[r][c] * inv))

    reduced = Matrix([Vector._raw(tuple(r), field) for r in rows], field)
    return EliminationTrace(a, tuple(ops), reduced, swaps)


def row_echelon(rows: Sequence[Vector], dim: int, field: FieldDescriptor):
    """Gaussian elimination of a k x dim row list.

    Returns ``(echelon_rows, pivot_columns)``; the number of pivots is the
    rank. Works for any k, including k = 0.
    """
    work = [list(v.entries) for v in rows]
    pivots = []
    r = 0
    for c in range(dim):
        if r == len(work):
            break
        p = next((i for i in range(r, len(work)) if not work[i][c].is_zero()), None)
        if p is None:
            continue
        work[r], work[p] = work[p], work[r]
        inv = 1 / work[r][c]
        for i in range(r + 1, len(work)):
            f = work[i][c]
            if not f.is_zero():
                f = f * inv
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
    return [Vector._raw(tuple(w), field) for w in work], pivots


def parse_matrix(text: str, field: FieldDescriptor = RATIONAL) -> Matrix:
    """Parse the line-oriented matrix format.

    One row per line, entries separated by single spaces. Blank lines and
    lines starting with ``#`` are skipped.
    """
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.rstrip("\r")
        if not line.strip() or line.startswith("#"):
            continue
        tokens = line.strip().split(" ")
        try:
            rows.append([parse_scalar(tok, field) for tok in tokens])
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    if not rows:
        raise ParseError("no matrix rows found")
    if len({len(r) for r in rows}) != 1:
        raise ParseError("rows have different numbers of entries")
    return Matrix(rows, field)


def format_matrix(a: Matrix) -> str:
    return "\n".join(" ".join(str(x) for x in row) for row in a.rows)
