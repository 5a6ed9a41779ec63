"""Exact linear algebra organised around one identity characterising determinants.

A function D on n-tuples of vectors is a determinant when, for every b,

    D(v_1, ..., v_n) * b = sum_k D(v_1, ..., b, ..., v_n) * v_k

on a space of dimension n. This package provides two determinant engines
over the rationals and prime fields, Cramer's-rule solving, and seeded
checks of that identity and its consequences.
"""

from .determinant import (
    Axis,
    DetMode,
    DetResult,
    SubspaceBasis,
    cofactor_expand,
    det,
    det_cofactor,
    det_elimination,
    extend_to_basis,
    lift_determinant,
    subspace_determinant,
)
from .field import RATIONAL, FieldDescriptor, Scalar, parse_scalar, render, scalar_arith, scalar_inverse
from .linalg import (
    EliminationTrace,
    Interchange,
    Matrix,
    Replace,
    Scale,
    Vector,
    VecTuple,
    apply_tuple_op,
    elementary_matrix_of,
    inverse_op,
    matrix_mul,
    matrix_tuple_action,
    parse_matrix,
    reduce_to_diagonal,
    transpose,
)
from .main_equation import (
    DetFunctional,
    Lifted,
    PathologicalXminusY,
    ProductXY,
    ResidualReport,
    Scaled,
    StandardDet,
    antisymmetry_residual,
    evaluate,
    main_equation_residual,
    multilinearity_residuals,
    parse_functional,
    uniqueness_constant,
    verify_antisymmetry,
    verify_main_equation,
    verify_multilinearity,
)
from .solver import (
    LinearSystem,
    Solution,
    cramer_solve,
    eliminate_solve,
    is_linearly_independent,
    rank,
    spans_ambient,
)

GF = FieldDescriptor.gf

__version__ = "0.1.0"
