import itertools

import pytest
from hypothesis import given, strategies as st

from lietori.errors import AlgebraMismatch, IncompatibleVariety
from lietori.operators import op_A, op_bracket, op_equal, op_eval, op_J, op_L, op_R, op_vector, sym_degree
from lietori.tori import JordanPlus, Laurent, Octonion, quantum_torus
from lietori.scalars import root_of_unity

JP = JordanPlus([[1, -1], [-1, 1]])
OCT = Octonion(3)
QT = quantum_torus(root_of_unity(1, 3), 2)

deg2 = st.lists(st.integers(-1, 1), min_size=2, max_size=2).map(tuple)
deg3 = st.lists(st.integers(-1, 1), min_size=3, max_size=3).map(tuple)


def _keys(A, R=1):
    return [k for d in itertools.product(range(-R, R + 1), repeat=A.n) for k in A.keys_at(d)]


def _commutator_agrees(E, F, A):
    C = op_bracket(E, F)
    for key in _keys(A):
        x = A.basis(key)
        want = op_eval(E, op_eval(F, x)) - op_eval(F, op_eval(E, x))
        assert op_eval(C, x) == want, key


def _is_derivation(D, A):
    for a, b in itertools.product(_keys(A), repeat=2):
        x, y = A.basis(a), A.basis(b)
        assert op_eval(D, A.mul(x, y)) == A.mul(op_eval(D, x), y) + A.mul(x, op_eval(D, y))


@given(deg2, deg2, deg2)
def test_jordan_L_L_bracket_is_J(a, b, c):
    L1, L2 = op_L(JP, JP.x(a)), op_L(JP, JP.x(b))
    _commutator_agrees(L1, L2, JP)
    _commutator_agrees(op_J(JP, JP.x(a), JP.x(c)), L2, JP)


@given(deg2, deg2, deg2, deg2)
def test_jordan_J_J_bracket(a, b, c, d):
    _commutator_agrees(op_J(JP, JP.x(a), JP.x(b)), op_J(JP, JP.x(c), JP.x(d)), JP)


@given(deg2, deg2)
def test_jordan_J_is_derivation(a, b):
    _is_derivation(op_J(JP, JP.x(a), JP.x(b)), JP)


@given(deg3, deg3, deg3, deg3)
def test_octonion_A_bracket(a, b, c, d):
    E, F = op_A(OCT, OCT.x(a), OCT.x(b)), op_A(OCT, OCT.x(c), OCT.x(d))
    _commutator_agrees(E, F, OCT)


@given(deg3, deg3)
def test_octonion_A_is_derivation(a, b):
    _is_derivation(op_A(OCT, OCT.x(a), OCT.x(b)), OCT)


@given(deg2, deg2, deg2, deg2)
def test_quantum_A_bracket(a, b, c, d):
    _commutator_agrees(op_A(QT, QT.x(a), QT.x(b)), op_A(QT, QT.x(c), QT.x(d)), QT)


def test_skew_canonical_form():
    x, y = JP.x((1, 0)), JP.x((0, 1))
    assert op_J(JP, x, y).terms == (-op_J(JP, y, x)).terms
    assert not op_J(JP, x, x)


def test_degree_and_vector():
    E = op_J(JP, JP.x((1, 0)), JP.x((0, 1)))
    (sym,) = E.terms
    assert sym_degree(JP, sym) == (1, 1)
    probes = _keys(JP)
    v = op_vector(E, probes, (1, 1))
    assert len(v) == len(probes)


def test_op_equal_detects_difference():
    x, y = OCT.x((1, 0, 0)), OCT.x((0, 1, 0))
    assert op_equal(op_A(OCT, x, y), op_A(OCT, x, y))
    assert not op_equal(op_A(OCT, x, y), op_A(OCT, y, x))
    assert op_equal(op_A(OCT, x, y), -op_A(OCT, y, x))


def test_incompatible():
    with pytest.raises(IncompatibleVariety):
        op_bracket(op_L(OCT, OCT.x((1, 0, 0))), op_L(OCT, OCT.x((0, 1, 0))))
    with pytest.raises(AlgebraMismatch):
        op_eval(op_L(JP, JP.x((1, 0))), Laurent(2).x((0, 0)))
    with pytest.raises(AlgebraMismatch):
        op_L(JP, JP.x((1, 0))) + op_R(Laurent(2), Laurent(2).x((0, 0)))
