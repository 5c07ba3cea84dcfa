import random

import pytest
from hypothesis import given, settings, strategies as st

from lietori.eala import (
    AffineCocycle,
    EalaAlgebra,
    SCDer,
    build_D,
    centroid_eta,
    cocycle_table,
    dual_act,
    dual_atom,
    dual_pair,
    eala_axiom_checks,
    eala_build,
    ev_injective,
    scder,
    scder_action,
    scder_bracket,
    sigma_D,
    validate_cocycle,
)
from lietori.errors import InputError, InvalidCocycle, NotPermissible, NotSkew
from lietori.involutions import chevalley
from lietori.lie import sl2, tensor_torus
from lietori.lie.base import LieElement
from lietori.scalars import ONE, ZERO, as_scalar

L2 = tensor_torus(sl2(), 2)
ATOMS = L2.window_atoms(1)

small = st.integers(-2, 2)
deg2 = st.tuples(small, small)


@st.composite
def skew_ders(draw):
    """chi^mu d_theta with theta(mu) = 0, summed over up to two degrees."""
    d = SCDer()
    for _ in range(draw(st.integers(1, 2))):
        mu = draw(deg2)
        c = draw(st.integers(-2, 2))
        if any(mu):
            th = (-mu[1] * c, mu[0] * c)
        else:
            th = (c, draw(small))
        d = d + SCDer({mu: th})
    return d


def _elt(rng):
    a, b = rng.choice(ATOMS), rng.choice(ATOMS)
    return LieElement(L2, {a: ONE}) + LieElement(L2, {b: as_scalar(rng.randint(-2, 2))})


@settings(max_examples=30)
@given(skew_ders(), skew_ders(), st.integers(0, 10**6))
def test_scder_bracket_is_commutator_of_actions(d1, d2, seed):
    x = _elt(random.Random(seed))
    lhs = scder_action(L2, scder_bracket(d1, d2), x)
    rhs = scder_action(L2, d1, scder_action(L2, d2, x)) - scder_action(L2, d2, scder_action(L2, d1, x))
    assert lhs == rhs


@settings(max_examples=30)
@given(skew_ders(), st.integers(0, 10**6))
def test_scder_is_derivation(d, seed):
    rng = random.Random(seed)
    x, y = _elt(rng), _elt(rng)
    lhs = scder_action(L2, d, L2.bracket(x, y))
    rhs = L2.bracket(scder_action(L2, d, x), y) + L2.bracket(x, scder_action(L2, d, y))
    assert lhs == rhs


@given(skew_ders(), skew_ders(), skew_ders())
def test_scder_jacobi(a, b, c):
    s = scder_bracket(a, scder_bracket(b, c)) + scder_bracket(b, scder_bracket(c, a)) + scder_bracket(c, scder_bracket(a, b))
    assert not s


@given(skew_ders(), skew_ders(), deg2, st.tuples(small, small))
def test_dual_act_is_contragredient(d, e, mu, v):
    phi = dual_atom(mu, v)
    assert dual_pair(dual_act(d, phi), e) == dual_pair(phi, scder_bracket(e, d))


@settings(max_examples=30)
@given(skew_ders(), st.integers(0, 10**6))
def test_sigma_pairs_to_form(d, seed):
    rng = random.Random(seed)
    x, y = _elt(rng), _elt(rng)
    assert dual_pair(sigma_D(L2, x, y), d) == L2.form(scder_action(L2, d, x), y)


@settings(max_examples=30)
@given(skew_ders(), st.integers(0, 10**6))
def test_sigma_is_cocycle(d, seed):
    rng = random.Random(seed)
    x, y, z = _elt(rng), _elt(rng), _elt(rng)
    b = L2.bracket
    total = sigma_D(L2, b(x, y), z) + sigma_D(L2, b(y, z), x) + sigma_D(L2, b(z, x), y)
    assert dual_pair(total, d) == ZERO


def test_not_skew():
    with pytest.raises(NotSkew):
        scder((1, 0), (1, 0))


def test_permissibility():
    assert ev_injective([(1, 0), (0, 1)], 2)
    assert not ev_injective([(1, 1)], 2)
    D = build_D({"kind": "degree_only", "U": [[1, 1]]}, L2)
    assert not D.permissible
    with pytest.raises(NotPermissible):
        eala_build(L2, D)
    with pytest.raises(InputError):
        build_D({"kind": "bogus"}, L2)


def test_full_scder_dimensions():
    D = build_D({"kind": "full_scder"}, L2)
    assert D.dim((0, 0)) == 2 and D.dim((1, 2)) == 1
    assert D.closed(1)[0]


def test_eala_jacobi_on_window_sample():
    E = eala_build(L2, build_D({"kind": "full_scder"}, L2))
    atoms = E.window_atoms(1)
    rng = random.Random(3)
    for _ in range(300):
        a, b, c = ({rng.choice(atoms): ONE} for _ in range(3))
        br = E.bracket
        s = {}
        for t in (br(a, br(b, c)), br(b, br(c, a)), br(c, br(a, b))):
            for k, v in t.items():
                s[k] = s.get(k, ZERO) + v
        assert not any(s.values())
        assert E.bracket(a, b) == {k: -v for k, v in E.bracket(b, a).items()}


def test_cocycle_validation():
    D = build_D({"kind": "full_scder"}, L2)
    assert validate_cocycle(D, AffineCocycle.zero(), 1).passed()
    bad = cocycle_table([(((0, 0), 0), ((0, 0), 0), dual_atom((0, 0), (1, 0)))])
    rep = validate_cocycle(D, bad, 1)
    assert not rep.passed("kappa_alternating") and rep.witness("kappa_alternating")
    with pytest.raises(InvalidCocycle):
        eala_build(L2, D, bad)


def test_cocycle_degree_violation():
    D = build_D({"kind": "full_scder"}, L2)
    off = cocycle_table([(((0, 0), 0), ((0, 0), 1), dual_atom((1, 0), (0, 1)))])
    rep = validate_cocycle(D, off, 1)
    assert not rep.passed()


def test_degenerate_form_fails_a1():
    L = tensor_torus(sl2(), 1)
    D = build_D({"kind": "degree_only"}, L)
    E = EalaAlgebra(L, D, form_override=lambda E, a, b: ZERO)
    rep = eala_axiom_checks(E, 1)
    assert not rep.passed("A1") and rep.witness("A1")


def test_centroid_eta_is_one_for_loop_algebras():
    L = tensor_torus(sl2(), 2)
    tau = chevalley(L)
    for mu in ((1, 0), (0, 1), (1, -2)):
        assert centroid_eta(L, tau, mu) == ONE
