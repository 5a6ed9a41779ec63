import pytest
from hypothesis import assume, given, settings, strategies as st

from detlab import (
    RATIONAL,
    Interchange,
    LinearSystem,
    Matrix,
    Replace,
    Scale,
    Vector,
    VecTuple,
    apply_tuple_op,
    cramer_solve,
    det_elimination,
    eliminate_solve,
    is_linearly_independent,
    rank,
    spans_ambient,
)
from detlab.errors import NotSquare, ParseError, SingularSystem
from detlab.solver import dependency_certificate, parse_system

from strategies import field_st, scalar_st, tuple_st, vector_st


def combination(coeffs, vectors):
    acc = Vector.zeros(vectors[0].dim, vectors[0].field)
    for c, v in zip(coeffs, vectors):
        acc = acc + v * c
    return acc


def test_cramer_examples():
    sys = LinearSystem.from_matrix(Matrix.identity(3), [4, -1, 7])
    assert cramer_solve(sys).values == tuple(RATIONAL(x) for x in (4, -1, 7))

    sol = cramer_solve(LinearSystem.from_matrix(Matrix([[2, 0], [0, 3]]), [4, 9]))
    assert sol.values == (RATIONAL(2), RATIONAL(3))
    assert sol.base_determinant == 6
    assert sol.per_coordinate_determinants == (RATIONAL(12), RATIONAL(18))

    with pytest.raises(SingularSystem) as info:
        cramer_solve(LinearSystem.from_matrix(Matrix([[1, 2], [2, 4]]), [1, 1]))
    assert info.value.rank == 1
    assert info.value.certificate == (RATIONAL(2), RATIONAL(-1))


def test_system_shape_checks():
    with pytest.raises(NotSquare):
        LinearSystem.from_matrix(Matrix([[1, 2, 3], [4, 5, 6]]), [1, 2, 3])


def test_independence_examples():
    e = [Vector.basis(i, 2) for i in range(2)]
    assert is_linearly_independent(VecTuple(e))
    assert not is_linearly_independent(VecTuple([[1, 2], [2, 4]]))
    assert is_linearly_independent(VecTuple([[1, 1, 0], [0, 1, 1]]))
    assert not is_linearly_independent(VecTuple([[1, 0], [0, 1], [1, 1]]))


def test_rank_examples():
    assert rank(Matrix.identity(3).to_tuple()) == 3
    assert rank(VecTuple([[1, 2], [2, 4], [3, 6]])) == 1
    assert rank(VecTuple([[1, 0, 1], [0, 1, 1], [1, 1, 2]])) == 2
    assert rank(VecTuple([], RATIONAL, 4)) == 0


def test_spans_examples():
    assert spans_ambient(Matrix.identity(4).to_tuple())
    assert not spans_ambient(VecTuple([[1, 0, 0], [0, 1, 0]]))
    assert spans_ambient(VecTuple([[1, 1], [1, -1]]))


def test_certificate_for_later_dependency():
    t = VecTuple([[1, 0, 0], [0, 1, 0], [0, 0, 0], [1, 1, 0]])
    r, cert = dependency_certificate(t)
    assert r == 2
    assert cert == tuple(RATIONAL(x) for x in (0, 0, -1, 0))
    assert combination(cert, list(t)).is_zero()
    assert dependency_certificate(VecTuple([[1, 2], [3, 4]])) == (2, None)


def test_parse_system():
    sys = parse_system("2 0\n0 3\n---\n4 9\n", RATIONAL)
    assert cramer_solve(sys).values == (RATIONAL(2), RATIONAL(3))
    for bad in ["1 0\n0 1\n", "1 0\n0 1\n---\n1\n", "1 0\n0 1\n---\n1 2\n3 4\n", "---\n1\n"]:
        with pytest.raises(ParseError):
            parse_system(bad, RATIONAL)
    with pytest.raises(NotSquare):
        parse_system("1 2 3\n---\n1 2 3\n", RATIONAL)


@st.composite
def systems(draw, max_n=5):
    f = draw(field_st)
    n = draw(st.integers(1, max_n))
    t = draw(tuple_st(f, n, n))
    b = draw(vector_st(f, n))
    return LinearSystem(t, b)


@settings(max_examples=80, deadline=None)
@given(systems())
def test_cramer_sound_and_matches_elimination(sys):
    t = sys.coefficients
    if det_elimination(Matrix.from_tuple(t)).is_zero():
        with pytest.raises(SingularSystem) as info:
            cramer_solve(sys)
        assert info.value.rank == rank(t)
        assert combination(info.value.certificate, list(t)).is_zero()
        assert any(not c.is_zero() for c in info.value.certificate)
        return
    sol = cramer_solve(sys)
    assert combination(sol.values, list(t)) == sys.rhs
    assert sol.values == eliminate_solve(sys)
    for x, num in zip(sol.values, sol.per_coordinate_determinants):
        assert x * sol.base_determinant == num


@given(systems(max_n=4))
def test_independence_consistency(sys):
    t = sys.coefficients
    nonzero = not det_elimination(Matrix.from_tuple(t)).is_zero()
    assert is_linearly_independent(t) == nonzero == (rank(t) == t.arity)


@st.composite
def tuple_and_op(draw):
    f = draw(field_st)
    k = draw(st.integers(2, 4))
    dim = draw(st.integers(1, 4))
    t = draw(tuple_st(f, k, dim))
    i = draw(st.integers(0, k - 1))
    j = draw(st.integers(0, k - 1).filter(lambda j: j != i))
    c = draw(scalar_st(f))
    op = draw(st.sampled_from(["swap", "scale", "replace"]))
    if op == "swap":
        return t, Interchange(i, j)
    if op == "scale":
        assume(not c.is_zero())
        return t, Scale(i, c)
    return t, Replace(i, j, c)


@given(tuple_and_op())
def test_rank_invariant_under_elementary_ops(case):
    t, op = case
    assert rank(apply_tuple_op(t, op)) == rank(t)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_spanning_tuples_express_every_vector(data):
    f = data.draw(field_st)
    n = data.draw(st.integers(1, 4))
    extra = data.draw(st.integers(0, 2))
    t = data.draw(tuple_st(f, n + extra, n))
    assume(spans_ambient(t))
    b = data.draw(vector_st(f, n))
    # first independent n-subtuple, found greedily
    chosen = []
    for v in t:
        if rank(VecTuple(chosen + [v], f, n)) > len(chosen):
            chosen.append(v)
    sol = cramer_solve(LinearSystem(VecTuple(chosen, f, n), b))
    assert combination(sol.values, chosen) == b
