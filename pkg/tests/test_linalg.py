from fractions import Fraction

import pytest
import sympy
from sympy.matrices.normalforms import smith_normal_form
from hypothesis import given, strategies as st

from lietori.errors import Inconsistent
from lietori.linalg import SpanSolver, integer_kernel, kernel_basis, lattice_basis, lattice_generates, rank, rref, solve
from lietori.scalars import as_scalar, root_of_unity

small = st.integers(min_value=-4, max_value=4)


def matrices(rows=4, cols=5):
    return st.integers(1, rows).flatmap(
        lambda r: st.integers(1, cols).flatmap(lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r))
    )


def _frac(x):
    return x.to_fraction()


@given(matrices())
def test_rank_matches_sympy(m):
    assert rank(m) == sympy.Matrix(m).rank()


@given(matrices())
def test_rref_matches_sympy(m):
    rows, piv = rref(m)
    want, wpiv = sympy.Matrix(m).rref()
    assert list(piv) == list(wpiv)
    for i, r in enumerate(rows):
        assert [_frac(x) for x in r] == [Fraction(int(want[i, j].p), int(want[i, j].q)) for j in range(len(r))]


@given(matrices())
def test_kernel_basis_is_kernel(m):
    ker = kernel_basis(m)
    assert len(ker) == len(m[0]) - sympy.Matrix(m).rank()
    for v in ker:
        for row in m:
            assert not sum((as_scalar(a) * b for a, b in zip(row, v)), as_scalar(0))


@given(matrices(), st.lists(small, min_size=5, max_size=5))
def test_solve_consistent(m, x):
    x = x[: len(m[0])]
    b = [sum(a * c for a, c in zip(row, x)) for row in m]
    y = solve(m, b)
    assert [sum((as_scalar(a) * c for a, c in zip(row, y)), as_scalar(0)) for row in m] == [as_scalar(v) for v in b]


def test_solve_inconsistent():
    with pytest.raises(Inconsistent):
        solve([[1, 1], [2, 2]], [1, 3])


def test_cyclotomic_rank():
    w = root_of_unity(1, 3)
    # 1 + w + w^2 = 0 makes these rows dependent
    assert rank([[1, w], [w * w, w * w * w]]) == 1
    assert rank([[1, w], [w, 1]]) == 2


def test_span_solver_coords():
    vecs = [[1, 0, 1], [0, 1, 1], [1, 1, 2]]
    S = SpanSolver(vecs, 3)
    assert S.independent == [0, 1]
    c = S.coords([2, 3, 5])
    got = [sum((as_scalar(vecs[i][j]) * ci for i, ci in zip(S.independent, c)), as_scalar(0)) for j in range(3)]
    assert got == [as_scalar(2), as_scalar(3), as_scalar(5)]
    assert S.coords([1, 0, 0]) is None


@given(matrices(3, 4))
def test_integer_kernel_matches_sympy_nullity(m):
    ker = integer_kernel(m)
    assert len(ker) == len(m[0]) - sympy.Matrix(m).rank()
    for v in ker:
        assert all(isinstance(x, int) for x in v)
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m)
    # saturated: the lattice spanned is primitive (elementary divisors all 1)
    if ker:
        snf = smith_normal_form(sympy.Matrix(ker), domain=sympy.ZZ)
        assert all(abs(snf[i, i]) == 1 for i in range(len(ker)))


def test_lattice_basis_and_generation():
    assert lattice_generates([(2, 0), (0, 1), (1, 0)], 2)
    assert not lattice_generates([(2, 0), (0, 1)], 2)
    assert len(lattice_basis([(1, 1), (2, 2), (0, 0)])) == 1
