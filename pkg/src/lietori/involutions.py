"""Chevalley involutions of the shipped constructions and a verifier for any candidate map."""

from __future__ import annotations

import itertools
import random

from .errors import HypothesisViolated, IncompatibleKind, MissingAntiInvolution
from .graded import GradedElement, add_into
from .lattice import DegreeWindow, vneg
from .lie.base import LieElement, LieTorus, OutsideComponent
from .lie.multiloop import MultiLoopTorus, _compose, _is_automorphism
from .lie.psl3 import PSL3Torus
from .lie.simple import MatrixLie
from .lie.sl import SLTorus
from .lie.tensor import TensorTorus, tensor_torus
from .lie.tits import TitsBTorus
from .lie.tkk import TKKTorus
from .operators import OperatorElement, op_A, op_J, op_L
from .report import Report
from .scalars import ONE
from .tori import reversing_anti_automorphism

__all__ = ["Involution", "chevalley", "chevalley_matrix", "identity_map", "verify_involution"]

PAIR_BUDGET = 3000


class Involution:
    """A linear map given on atoms; nothing about it is assumed until verified.

    ``image(atom)`` returns a term dict of the codomain.  ``codomain`` is
    the algebra whose bracket is used on the image side (usually ``owner``).
    """

    def __init__(self, owner, image, tag, codomain=None):
        self.owner = owner
        self._image = image
        self.tag = tag
        self.codomain = codomain if codomain is not None else owner
        self._cache = {}

    def image(self, atom):
        hit = self._cache.get(atom)
        if hit is None:
            hit = {k: v for k, v in self._image(atom).items() if v}
            self._cache[atom] = hit
        return hit

    def apply_terms(self, terms):
        acc = {}
        for a, c in terms.items():
            for k, v in self.image(a).items():
                add_into(acc, k, c * v)
        return acc

    def __call__(self, x):
        if isinstance(x, LieElement):
            return LieElement(self.codomain, self.apply_terms(x.terms))
        return self.apply_terms(x)

    def __repr__(self):
        return f"Involution({self.tag} on {self.owner!r})"


def _from_raw(L, raw_map, tag):
    return Involution(L, lambda a: L.from_raw(raw_map(L.payload(a))).terms, tag)


def identity_map(L):
    if isinstance(L, MatrixLie):
        L = tensor_torus(L, 0)
    return Involution(L, lambda a: {a: ONE}, "identity")


# per-construction formulas ------------------------------------------------------


def _tensor(L, aux):
    theta = L.g.theta()

    def raw(p):
        i, lam = p
        return {(k, vneg(lam)): c for k, c in theta[i].items()}

    return _from_raw(L, raw, "theta (x) inversion")


def _anti(L, aux):
    coef = (aux or {}).get("anti")
    return coef if coef is not None else reversing_anti_automorphism(L.A)


def _minus_rho_transpose(M, coef):
    return {(j, i, vneg(lam)): -c * coef(lam) for (i, j, lam), c in M.items()}


def _sl(L, aux):
    coef = _anti(L, aux)
    return _from_raw(L, lambda p: _minus_rho_transpose(p, coef), "-rho(X^t)")


def _psl3(L, aux):
    coef = _anti(L, aux)
    A = L.A

    def raw(p):
        M, D = p
        D2 = OperatorElement(A)
        for sym, c in D.terms.items():
            a, b = sym[1], sym[2]
            D2 = D2 + op_A(A, A.x(vneg(a), coef(a)), A.x(vneg(b), coef(b))).scale(c)
        return (_minus_rho_transpose(M, coef), D2)

    return _from_raw(L, raw, "-x^t (x) rho(a) + D(rho a, rho b)")


def _tkk(L, aux):
    J = L.J

    def tau(terms):
        acc = {}
        for k, c in terms.items():
            for k2, v in J.pre_chevalley_key(k).items():
                add_into(acc, k2, c * v)
        return acc

    def raw(p):
        X, Y, E = p
        E2 = OperatorElement(J)
        for sym, c in E.terms.items():
            if sym[0] == "L":
                E2 = E2 - op_L(J, GradedElement(J, tau({sym[1]: c})))
            else:
                E2 = E2 + op_J(J, GradedElement(J, tau({sym[1]: ONE})), GradedElement(J, tau({sym[2]: ONE}))).scale(c)
        return (tau(Y), tau(X), E2)

    return _from_raw(L, raw, "bar(tau x) + tau(y) + bar(tau E tau)")


def _tits(L, aux):
    return _from_raw(L, L.chevalley_raw, "theta (x) inversion + vbar (x) tau + D(tau w, tau w')")


def _multiloop(L, aux):
    aux = aux or {}
    g = L.g
    tau = aux.get("tau", getattr(L, "preset_tau", None))
    if tau is None:
        raise MissingAntiInvolution("a Chevalley involution tau of g must be supplied")
    psi = aux.get("psi")
    if not _is_automorphism(g, tau) or _compose(g, tau, tau) != [{j: ONE} for j in range(g.dim)]:
        raise HypothesisViolated("tau is not an involutive automorphism of g")
    for s in L.sigmas:
        if _compose(g, tau, s) != _compose(g, s, tau):
            raise HypothesisViolated("tau does not commute with sigma")
    for h in L.hprime:
        if g.apply(tau, h) != {k: -v for k, v in h.items()}:
            raise HypothesisViolated("tau(h') != -h'")
    for r in L.residues():
        target = tuple((-x) % m for x, m in zip(r, L.periods))
        for v in L.eigenspace(r):
            w = v if psi is None else g.apply(psi, v)
            if L.projection(target, w) != {k: x for k, x in w.items() if x}:
                raise HypothesisViolated(f"psi does not map g^{r} into g^{target}")
    if psi is not None:
        for h in L.hprime:
            if g.apply(psi, h) != h:
                raise HypothesisViolated("psi is not the identity on h'")
    return _from_raw(L, lambda p: L.chevalley_raw(p, tau, psi), "psi tau (x) inversion")


def chevalley(L, aux=None):
    """The Chevalley involution of ``L`` built from its construction formula."""
    if isinstance(L, MatrixLie):
        return chevalley_matrix(L)
    for cls, fn in (
        (TensorTorus, _tensor),
        (SLTorus, _sl),
        (PSL3Torus, _psl3),
        (TKKTorus, _tkk),
        (TitsBTorus, _tits),
        (MultiLoopTorus, _multiloop),
    ):
        if isinstance(L, cls):
            return fn(L, aux)
    raise IncompatibleKind(f"no Chevalley formula for {L!r}")


def chevalley_matrix(g):
    """theta(X) = -X^t on a finite matrix model, viewed on g (x) x^0."""
    return _tensor(tensor_torus(g, 0), None)


# verification ---------------------------------------------------------------------


def _bracket(A, x, y):
    acc = {}
    for a, ca in x.items():
        for b, cb in y.items():
            for k, v in A.atom_bracket(a, b).items():
                add_into(acc, k, ca * cb * v)
    return acc


def _cartan(A):
    if hasattr(A, "cartan_elements"):
        return A.cartan_elements()
    return [{a: ONE} for a in A.cartan_atoms()]


def _show(A, terms):
    return repr(LieElement(A, terms)) if isinstance(A, LieTorus) else repr(terms)


def _neg(terms):
    return {k: -v for k, v in terms.items()}


def _diff(x, y):
    acc = dict(x)
    for k, v in y.items():
        add_into(acc, k, -v)
    return {k: v for k, v in acc.items() if v}


def verify_involution(A, tau, W=2, *, seed=0, pair_budget=PAIR_BUDGET):
    """Check order 2, bracket homomorphism, degree and root reversal, and Cartan negation."""
    if isinstance(A, MatrixLie):
        A = tau.owner
    W = W if isinstance(W, DegreeWindow) else DegreeWindow(W)
    rep = Report(window=W.radius)
    atoms = A.window_atoms(W)
    rep.atoms_checked = len(atoms)
    C = tau.codomain
    back = getattr(tau, "back", None) or tau
    for name in ("order2", "homomorphism", "degree_reversal", "root_reversal", "cartan_negation"):
        rep.record(name, True)
    try:
        for a in atoms:
            img = tau.image(a)
            twice = back.apply_terms(img)
            if twice != {a: ONE}:
                rep.record("order2", False, {"x": _show(A, {a: ONE}), "tau(tau(x))": _show(A, twice)})
            for k in img:
                if tuple(k.deg) != vneg(a.deg):
                    rep.record("degree_reversal", False, {"x": _show(A, {a: ONE}), "image_degree": list(k.deg)})
                if tuple(k.root) != vneg(a.root):
                    rep.record("root_reversal", False, {"x": _show(A, {a: ONE}), "image_root": [str(r) for r in k.root]})
        rng = random.Random(seed)
        if len(atoms) ** 2 <= pair_budget:
            pairs = list(itertools.combinations(atoms, 2))
        else:
            pairs = [tuple(rng.sample(atoms, 2)) for _ in range(pair_budget)]
        for a, b in pairs:
            lhs = tau.apply_terms(A.atom_bracket(a, b))
            rhs = _bracket(C, tau.image(a), tau.image(b))
            d = _diff(lhs, rhs)
            if d:
                rep.record("homomorphism", False, {
                    "x": _show(A, {a: ONE}), "y": _show(A, {b: ONE}),
                    "tau[x,y]": _show(C, lhs), "[tau x,tau y]": _show(C, rhs),
                })
                break
        for h in _cartan(A):
            img = tau.apply_terms(h)
            if img != _neg(h):
                rep.record("cartan_negation", False, {"h": _show(A, h), "tau(h)": _show(C, img)})
                break
    except OutsideComponent as exc:
        rep.record("homomorphism", False, {"error": str(exc)})
    return rep

