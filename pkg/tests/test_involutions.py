import numpy as np
import pytest

from lietori.errors import MissingAntiInvolution
from lietori.involutions import Involution, chevalley, chevalley_matrix, identity_map, verify_involution
from lietori.jordan import HermitianMatrix
from lietori.lie import multiloop_sl2, simple_lie, sl2, sl_torus, tensor_torus, tkk, tkk_C
from lietori.scalars import as_scalar, root_of_unity
from lietori.tori import JordanPlus, Laurent, quantum_torus

ALL = ("order2", "homomorphism", "degree_reversal", "root_reversal", "cartan_negation")


def _np(m):
    return np.array([[x.to_complex() for x in row] for row in m])


@pytest.mark.parametrize("kind,rank", [("A", 2), ("B", 2), ("C", 3), ("D", 4)])
def test_matrix_chevalley_is_minus_transpose(kind, rank):
    g = simple_lie(kind, rank)
    mats = [_np(m) for m in g.matrices]
    for i, img in enumerate(g.theta()):
        got = sum((c.to_complex() * mats[k] for k, c in img.items()), np.zeros_like(mats[i]))
        assert np.allclose(got, -mats[i].T)
    assert verify_involution(g, chevalley_matrix(g), 0).passed()


@pytest.mark.parametrize(
    "make",
    [
        lambda: tensor_torus(simple_lie("B", 2), 1),
        lambda: sl_torus(4, Laurent(2)),
        lambda: sl_torus(4, quantum_torus(-1, 2)),
        lambda: tkk(JordanPlus([[1, -1], [-1, 1]])),
        lambda: tkk_C(HermitianMatrix(2, quantum_torus(-1, 2))),
        lambda: multiloop_sl2(),
    ],
    ids=["tensor_B2", "sl4_laurent", "sl4_q-1", "tkk", "tkk_c", "multiloop"],
)
def test_chevalley_all_pass(make):
    L = make()
    rep = verify_involution(L, chevalley(L), 1)
    assert rep.passed(), rep.failures()
    assert sorted(rep.names()) == sorted(ALL)


def test_identity_fails_with_witness():
    L = tensor_torus(sl2(), 1)
    rep = verify_involution(L, identity_map(L), 1)
    assert rep.passed("order2") and rep.passed("homomorphism")
    for name in ("degree_reversal", "root_reversal", "cartan_negation"):
        assert not rep.passed(name) and rep.witness(name)


def test_scaled_chevalley_fails_order_and_homomorphism():
    L = tensor_torus(sl2(), 1)
    theta = chevalley(L)
    two = as_scalar(2)
    bad = Involution(L, lambda a: {k: two * v for k, v in theta.image(a).items()}, "2 theta")
    rep = verify_involution(L, bad, 1)
    assert not rep.passed("order2") and not rep.passed("homomorphism")
    assert rep.passed("root_reversal")


def test_sl_over_noncommutative_quantum_has_no_chevalley_map():
    L = sl_torus(4, quantum_torus(root_of_unity(1, 3), 2))
    with pytest.raises(MissingAntiInvolution):
        chevalley(L)


def test_multiloop_preset_tau_variant():
    L = multiloop_sl2()
    rep = verify_involution(L, chevalley(L, {"tau": L.preset_tau}), 2)
    assert rep.passed(), rep.failures()
