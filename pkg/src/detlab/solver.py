"""Cramer's-rule solving, rank, and linear independence.

Systems are written in tuple form, x_1 * v_1 + ... + x_n * v_n = b, so the
coefficient vectors are the *rows* handed to the determinant.
"""

from __future__ import annotations

from dataclasses import dataclass

from .determinant import DetMode, det
from .errors import DimensionMismatch, FieldMismatch, NotSquare, ParseError, SingularSystem
from .field import FieldDescriptor, Scalar
from .linalg import Matrix, Vector, VecTuple, parse_matrix, row_echelon


@dataclass(frozen=True)
class LinearSystem:
    coefficients: VecTuple
    rhs: Vector

    def __post_init__(self):
        t, b = self.coefficients, self.rhs
        if t.field != b.field:
            raise FieldMismatch(f"{t.field.name} coefficients, {b.field.name} rhs")
        if t.dim != b.dim:
            raise DimensionMismatch(f"coefficients in F^{t.dim}, rhs in F^{b.dim}")
        if t.arity != t.dim:
            raise NotSquare(f"{t.arity} coefficient vectors in F^{t.dim}")

    @classmethod
    def from_matrix(cls, a: Matrix, b) -> LinearSystem:
        """Coefficient vectors are the rows of ``a``."""
        if not isinstance(b, Vector):
            b = Vector(b, a.field)
        return cls(a.to_tuple(), b)

    @property
    def field(self) -> FieldDescriptor:
        return self.coefficients.field

    @property
    def n(self) -> int:
        return self.coefficients.arity


@dataclass(frozen=True)
class Solution:
    values: tuple
    per_coordinate_determinants: tuple
    base_determinant: Scalar


def _det(vectors, field, mode) -> Scalar:
    return det(Matrix(vectors, field), mode).value


def cramer_solve(sys: LinearSystem, mode: DetMode | str = DetMode.ELIMINATION) -> Solution:
    """x_k = D(v_1, ..., b, ..., v_n) / D(v_1, ..., v_n), b in slot k."""
    t, b, field = sys.coefficients, sys.rhs, sys.field
    base = _det(t.vectors, field, mode)
    if base.is_zero():
        r, cert = dependency_certificate(t)
        raise SingularSystem(r, cert)
    numerators = tuple(
        _det(t.replace(k, b).vectors, field, mode) for k in range(sys.n)
    )
    return Solution(tuple(d / base for d in numerators), numerators, base)


def dependency_certificate(t: VecTuple) -> tuple[int, tuple | None]:
    """Rank of ``t`` and, if dependent, coefficients of a vanishing combination.

    The certificate expresses the first vector that lies in the span of its
    predecessors: ``(c_1, ..., c_{j-1}, -1, 0, ...)`` with
    ``v_j = c_1 v_1 + ... + c_{j-1} v_{j-1}``.
    """
    field, n, k = t.field, t.dim, t.arity
    zero, one = field.zero, field.one
    # Each basis row is kept with its expression in terms of the original vectors.
    basis: list[tuple[int, list, list]] = []  # (pivot column, row, combination)
    certificate = None
    for j, v in enumerate(t):
        row = list(v.entries)
        comb = [zero] * k
        comb[j] = one
        for pc, brow, bcomb in basis:
            f = row[pc]
            if f.is_zero():
                continue
            row = [x - f * y for x, y in zip(row, brow)]
            comb = [x - f * y for x, y in zip(comb, bcomb)]
        pc = next((c for c in range(n) if not row[c].is_zero()), None)
        if pc is None:
            if certificate is None:
                certificate = tuple(-c for c in comb)
            continue
        inv = 1 / row[pc]
        row = [x * inv for x in row]
        comb = [x * inv for x in comb]
        # keep earlier basis rows reduced against the new pivot
        for idx, (qc, brow, bcomb) in enumerate(basis):
            f = brow[pc]
            if not f.is_zero():
                basis[idx] = (
                    qc,
                    [x - f * y for x, y in zip(brow, row)],
                    [x - f * y for x, y in zip(bcomb, comb)],
                )
        basis.append((pc, row, comb))
    return len(basis), certificate


def eliminate_solve(sys: LinearSystem) -> tuple:
    """Solve by Gauss-Jordan elimination on the augmented system.

    Independent of the determinant engines; used to cross-check Cramer.
    """
    n = sys.n
    # column k of the coefficient matrix is v_k, so the augmented rows are
    # (v_1[i], ..., v_n[i] | b[i])
    rows = [[v[i] for v in sys.coefficients] + [sys.rhs[i]] for i in range(n)]
    for c in range(n):
        p = next((r for r in range(c, n) if not rows[r][c].is_zero()), None)
        if p is None:
            r, cert = dependency_certificate(sys.coefficients)
            raise SingularSystem(r, cert)
        rows[c], rows[p] = rows[p], rows[c]
        inv = 1 / rows[c][c]
        rows[c] = [x * inv for x in rows[c]]
        for r in range(n):
            f = rows[r][c]
            if r != c and not f.is_zero():
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[c])]
    return tuple(rows[i][n] for i in range(n))


def rank(t: VecTuple) -> int:
    return len(row_echelon(list(t), t.dim, t.field)[1])


def is_linearly_independent(t: VecTuple) -> bool:
    if t.arity > t.dim:
        return False
    if t.arity == t.dim:
        return not _det(t.vectors, t.field, DetMode.ELIMINATION).is_zero()
    return rank(t) == t.arity


def spans_ambient(t: VecTuple) -> bool:
    return rank(t) == t.dim


def parse_system(text: str, field: FieldDescriptor) -> LinearSystem:
    """Coefficient matrix, a ``---`` line, then one line holding b."""
    lines = text.splitlines()
    seps = [i for i, line in enumerate(lines) if line.strip() == "---"]
    if len(seps) != 1:
        raise ParseError("system file needs exactly one '---' separator line")
    head = "\n".join(lines[: seps[0]])
    tail = "\n".join(lines[seps[0] + 1 :])
    a = parse_matrix(head, field)
    b_rows = parse_matrix(tail, field)
    if b_rows.nrows != 1:
        raise ParseError("right-hand side must be a single line")
    if not a.is_square:
        raise NotSquare(f"{a.nrows}x{a.ncols} coefficient matrix is not square")
    if b_rows.ncols != a.ncols:
        raise ParseError(
            f"right-hand side has {b_rows.ncols} entries, expected {a.ncols}"
        )
    return LinearSystem.from_matrix(a, b_rows.rows[0])
