import pytest
from hypothesis import given, settings, strategies as st

from detlab import (
    GF,
    RATIONAL,
    Axis,
    DetMode,
    Matrix,
    Vector,
    VecTuple,
    cofactor_expand,
    det,
    det_cofactor,
    det_elimination,
    extend_to_basis,
    lift_determinant,
    matrix_tuple_action,
    subspace_determinant,
    transpose,
)
from detlab import determinant as determinant_mod
from detlab.errors import DependentInput, DimensionMismatch, EngineDisagreement, IndexOutOfRange, NotInSubspace, NotSquare

from oracles import leibniz_det, plain
from strategies import field_st, matrix_st, square

GF7 = GF(7)
A3 = Matrix([[1, 2, 3], [4, 5, 6], [7, 8, 10]])


def test_oracle_values_for_fixed_matrices():
    assert leibniz_det([[1, 2, 3], [4, 5, 6], [7, 8, 10]]) == -3
    assert leibniz_det([[2, 3], [4, 5]]) == -2
    assert leibniz_det([[2, 3], [4, 1]], modulus=7) == 4


@pytest.mark.parametrize("engine", [det_cofactor, det_elimination])
def test_engine_examples(engine):
    assert engine(Matrix.identity(2)) == 1
    assert engine(Matrix([[2, 3], [4, 5]])) == -2
    assert engine(A3) == -3
    assert engine(Matrix([[1, 2], [2, 4]])) == 0
    assert engine(Matrix([[0, 1], [1, 0]])) == -1
    assert engine(Matrix.diagonal_of([2, 3, 5])) == 30
    assert engine(Matrix([[2, 3], [4, 1]], GF7)) == GF7(4)
    assert engine(Matrix([[7]])) == 7
    with pytest.raises(NotSquare):
        engine(Matrix([[1, 2]]))


def test_det_dispatch():
    r = det(Matrix.identity(3), DetMode.CROSSCHECK)
    assert r.value == 1 and r.algorithm is DetMode.CROSSCHECK
    assert det(Matrix([[2, 3], [4, 5]]), "crosscheck").value == -2
    r = det(Matrix([[1, 2], [2, 4]]), DetMode.ELIMINATION)
    assert r.value == 0 and r.trace.swap_count == 0
    assert det(A3, DetMode.COFACTOR).trace is None
    with pytest.raises(NotSquare):
        det(Matrix([[1, 2]]))


def test_crosscheck_reports_disagreement(monkeypatch):
    monkeypatch.setattr(determinant_mod, "det_cofactor", lambda a: a.field(99))
    with pytest.raises(EngineDisagreement) as info:
        det(Matrix([[2, 3], [4, 5]]))
    assert info.value.cofactor == 99 and info.value.elimination == -2


def test_cofactor_expand_examples():
    m = Matrix([[2, 3], [4, 5]])
    assert cofactor_expand(m, Axis.ROW, 0) == 2 * 5 + 3 * (-4)
    assert cofactor_expand(Matrix([[0, 1, 2], [0, 3, 4], [0, 5, 6]]), Axis.COLUMN, 0) == 0
    for i in range(3):
        assert cofactor_expand(A3, Axis.ROW, i) == -3
        assert cofactor_expand(A3, "column", i) == -3
    with pytest.raises(IndexOutOfRange):
        cofactor_expand(A3, Axis.ROW, 3)


def test_lift_determinant_examples():
    d1 = lift_determinant(1)
    assert d1([7]) == 7
    d2 = lift_determinant(2)
    assert d2([[1, 2], [3, 4]]) == 1 * 4 - 3 * 2
    d3 = lift_determinant(3)
    assert d3(Matrix.identity(3).to_tuple()) == 1
    assert d3(A3.to_tuple()) == -3


def test_subspace_determinant_examples():
    e1, e2, e3 = (Vector.basis(i, 3) for i in range(3))
    basis = extend_to_basis(VecTuple([e1, e2]))
    assert basis.extension == VecTuple([e3])
    assert subspace_determinant(basis, VecTuple([e1, e2])) == 1
    assert subspace_determinant(basis, VecTuple([e2, e1])) == -1
    assert subspace_determinant(basis, VecTuple([e1, e1 * 2])) == 0
    with pytest.raises(NotInSubspace):
        subspace_determinant(basis, VecTuple([e1, e3]))
    with pytest.raises(DimensionMismatch):
        subspace_determinant(basis, VecTuple([e1]))


def test_extend_to_basis_greedy_order():
    # e1 enlarges span{(1,1,0)}; e2 is then in the span; e3 enlarges it
    b = extend_to_basis(VecTuple([Vector([1, 1, 0])]))
    e1, e2, e3 = (Vector.basis(i, 3) for i in range(3))
    assert b.extension == VecTuple([e1, e3])
    assert det_elimination(Matrix.from_tuple(b.span_vectors + b.extension)) != 0

    full = VecTuple([e3, e1, e2])
    assert extend_to_basis(full).extension.arity == 0
    assert extend_to_basis(VecTuple([], RATIONAL, 3)).extension == VecTuple([e1, e2, e3])
    with pytest.raises(DependentInput):
        extend_to_basis(VecTuple([e1, e1 * 3]))


@settings(max_examples=150)
@given(square(max_n=4))
def test_engines_match_permutation_sum(a):
    expected = leibniz_det(plain(a), a.field.modulus)
    assert det_cofactor(a).value == expected
    assert det_elimination(a).value == expected


@settings(max_examples=60, deadline=None)
@given(square(max_n=6))
def test_engines_agree(a):
    assert det_cofactor(a) == det_elimination(a)


@st.composite
def pair(draw, max_n=4):
    f = draw(field_st)
    n = draw(st.integers(1, max_n))
    return draw(matrix_st(f, n)), draw(matrix_st(f, n))


@given(pair())
def test_product_rule(ab):
    a, b = ab
    assert det_elimination(a @ b) == det_elimination(a) * det_elimination(b)


@given(square(max_n=4))
def test_transpose_rule(a):
    assert det_cofactor(transpose(a)) == det_cofactor(a)


@given(pair())
def test_tuple_action_scales_determinant(ab):
    a, m = ab
    image = Matrix.from_tuple(matrix_tuple_action(a, m.to_tuple()))
    assert det_elimination(image) == det_elimination(a) * det_elimination(m)


@given(square(max_n=4))
def test_every_expansion_equals_det(a):
    d = det_elimination(a)
    for i in range(a.nrows):
        assert cofactor_expand(a, Axis.ROW, i) == d
        assert cofactor_expand(a, Axis.COLUMN, i) == d


@given(square(max_n=5))
def test_zero_det_iff_rank_deficient(a):
    from detlab import rank

    assert det_elimination(a).is_zero() == (rank(a.to_tuple()) < a.nrows)


@pytest.mark.parametrize("field", [RATIONAL, GF7, GF(2)], ids=lambda f: f.name)
def test_identity_normalization(field):
    for n in range(1, 7):
        assert det(Matrix.identity(n, field)).value == field.one
