import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from lietori.errors import InvalidTable, RankTooSmall, UnsupportedType
from lietori.jordan import HermitianMatrix
from lietori.lie import check_lie_torus, multiloop_sl2, simple_lie, sl2, sl_torus, tensor_torus, tkk, tkk_C
from lietori.lie.checks import check_centroid, check_form, jacobiator
from lietori.lie.simple import table_of
from lietori.scalars import ONE, root_of_unity
from lietori.tori import JordanPlus, Laurent, quantum_torus

DIMS = {("A", 1): 3, ("A", 2): 8, ("A", 3): 15, ("B", 2): 10, ("B", 3): 21, ("C", 3): 21, ("D", 4): 28}


def _np(m):
    return np.array([[x.to_complex() for x in row] for row in m])


def _corrupted():
    t = table_of(sl2())
    for row in t["brackets"]:
        if {row["i"], row["j"]} == {0, 1}:
            for term in row["terms"]:
                term["c"] = str(-int(term["c"]))
    return t


@pytest.mark.parametrize("kind,rank", sorted(DIMS))
def test_simple_dimension_and_brackets_match_matrix_commutators(kind, rank):
    g = simple_lie(kind, rank)
    assert g.dim == DIMS[kind, rank]
    mats = [_np(m) for m in g.matrices]
    for i, j in itertools.product(range(g.dim), repeat=2):
        want = mats[i] @ mats[j] - mats[j] @ mats[i]
        got = sum((c.to_complex() * mats[k] for k, c in g.bracket_basis(i, j).items()), np.zeros_like(want))
        assert np.allclose(got, want)


@pytest.mark.parametrize("kind,rank", [("A", 2), ("B", 2), ("C", 3)])
def test_killing_form_matches_numpy_trace(kind, rank):
    g = simple_lie(kind, rank)
    ads = [_np(g.ad_matrix({i: ONE})) for i in range(g.dim)]
    killing = np.array([[np.trace(a @ b) for b in ads] for a in ads])
    # the stored form is a nonzero multiple of the Killing form
    K = _np(g.kappa)
    i, j = np.unravel_index(np.argmax(abs(killing)), killing.shape)
    assert np.allclose(K * killing[i, j], killing * K[i, j])
    assert abs(np.linalg.det(K)) > 1e-9


def test_unsupported_and_table_validation():
    with pytest.raises(UnsupportedType):
        simple_lie("E", 6)
    t = table_of(sl2())
    # doubling every constant gives an isomorphic algebra, so it must be accepted
    for row in t["brackets"]:
        for term in row["terms"]:
            term["c"] = str(2 * int(term["c"]))
    assert simple_lie(t).dim == 3
    with pytest.raises(InvalidTable):
        simple_lie(_corrupted())
    assert simple_lie(table_of(sl2())).dim == 3


@settings(max_examples=25)
@given(st.sampled_from("ehf"), st.sampled_from("ehf"), st.tuples(st.integers(-2, 2)), st.tuples(st.integers(-2, 2)))
def test_tensor_bracket_is_loop_bracket(x, y, a, b):
    g = sl2()
    L = tensor_torus(g, 1)
    got = L.atom_bracket(L.basis_atom(x, a), L.basis_atom(y, b))
    want = g.bracket({g.index(x): ONE}, {g.index(y): ONE})
    deg = (a[0] + b[0],)
    assert {L.payload(k): v for k, v in got.items()} == {(k, deg): c for k, c in want.items()}


@settings(max_examples=25)
@given(st.permutations(range(4)), st.lists(st.integers(-1, 1), min_size=2, max_size=2), st.lists(st.integers(-1, 1), min_size=2, max_size=2))
def test_sl_bracket_matches_matrix_units(perm, a, b):
    """[x^a E_ij, x^b E_jk] = x^a x^b E_ik for distinct i, j, k."""
    A = quantum_torus(root_of_unity(1, 3), 2)
    L = sl_torus(4, A)
    i, j, k = perm[:3]
    a, b = tuple(a), tuple(b)
    got = L.atom_bracket(L.matrix_atom(i, j, a), L.matrix_atom(j, k, b))
    target = L.matrix_atom(i, k, tuple(x + y for x, y in zip(a, b)))
    assert got == {target: A.k(a, b)}


def test_sl_needs_size_4():
    with pytest.raises(RankTooSmall):
        sl_torus(3, Laurent(2))


@pytest.mark.parametrize(
    "make",
    [
        lambda: tensor_torus(sl2(), 2),
        lambda: tensor_torus(simple_lie("B", 2), 1),
        lambda: sl_torus(4, quantum_torus(-1, 2)),
        lambda: tkk(JordanPlus([[1, -1], [-1, 1]])),
        lambda: tkk_C(HermitianMatrix(2, quantum_torus(-1, 2))),
        lambda: multiloop_sl2(([[1]], 2)),
    ],
    ids=["tensor_sl2_n2", "tensor_B2", "sl4_q-1", "tkk", "tkk_c", "multiloop_regraded"],
)
def test_constructions_pass_at_radius_1(make):
    L = make()
    rep = check_lie_torus(L, 1)
    assert rep.passed(), rep.failures()
    assert check_form(L, 1, samples=40).passed()
    assert check_centroid(L, 1, samples=10).passed()


def test_multiloop_natural_grading_fails_lt2_only():
    rep = check_lie_torus(multiloop_sl2(), 1)
    assert [c["name"] for c in rep.failures()] == ["LT2(i)"]
    assert rep.witness("LT2(i)")


def test_corrupted_table_reports_jacobi_with_witness():
    L = tensor_torus(simple_lie(_corrupted(), validate_table=False), 1)
    rep = check_lie_torus(L, 1)
    assert not rep.passed("jacobi") and rep.witness("jacobi")


def test_jacobiator_vanishes_on_sl4():
    L = sl_torus(4, quantum_torus(root_of_unity(1, 3), 2))
    atoms = L.window_atoms(1)
    for a, b, c in itertools.islice(itertools.product(atoms[:12], repeat=3), 400):
        assert not jacobiator(L, a, b, c)
