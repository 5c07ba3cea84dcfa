"""Extended affine Lie algebras E(L, D, kappa) = L + D^gr* + D.

Skew centroidal derivations are stored per degree as ``{mu: theta}`` with
theta a vector in K^n (chi^mu d_theta is linear in theta).  Elements of the
graded dual are stored as ``{mu: v}`` meaning c^(mu)_v, the functional
chi^-mu d_theta -> theta(v); it is linear in v, so lambda in Z^n may be
replaced by any vector.  Both representations are independent of D; the
algebra E fixes bases of every D^mu and of its dual to get atoms.
"""

from __future__ import annotations

from collections import deque
import itertools
import random
from typing import NamedTuple

from .errors import InputError, InvalidCocycle, NotPermissible, NotPreChevalley, NotSkew, RankMismatch
from .graded import add_into
from .involutions import Involution, verify_involution
from .lattice import DegreeWindow, vadd, vneg
from .lie.base import Atom, LieElement
from .linalg import SpanSolver, integer_kernel, kernel_basis, lattice_basis, rank, rref, solve
from .report import Report
from .scalars import ONE, ZERO, as_scalar, format_scalar, parse_scalar, sqrt_root_of_unity

__all__ = [
    "SCDer",
    "Dual",
    "DSubalgebra",
    "AffineCocycle",
    "EalaAlgebra",
    "EAtom",
    "scder",
    "scder_bracket",
    "scder_action",
    "dual_pair",
    "dual_act",
    "sigma_D",
    "build_D",
    "ev_injective",
    "eala_build",
    "eala_bracket",
    "validate_cocycle",
    "lift_involution",
    "centroid_eta",
    "is_D_invariant",
    "is_pair_invariant",
    "eala_axiom_checks",
]


def _vec(v):
    return tuple(as_scalar(x) for x in v)


def _ev(theta, lam):
    s = ZERO
    for t, x in zip(theta, lam):
        if t and x:
            s = s + t * x
    return s


def _vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _vscale(c, a):
    return tuple(c * x for x in a)


def _zero(n):
    return (ZERO,) * n


def _merge(acc, mu, v):
    cur = acc.get(mu)
    v = v if cur is None else _vadd(cur, v)
    if any(v):
        acc[mu] = v
    else:
        acc.pop(mu, None)


# subspaces of K^n given by canonical (reduced echelon) bases ---------------------


def _canon(vectors, n):
    vs = [list(_vec(v)) for v in vectors if any(_vec(v))]
    if not vs:
        return []
    red, piv = rref(vs, n)
    return [tuple(red[i]) for i in range(len(piv))]


def _hom(n):
    return [tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)]


def _killing_mu(basis, mu, n):
    """{theta in span(basis) : theta(mu) = 0}."""
    if not basis:
        return []
    ker = kernel_basis([[_ev(b, mu) for b in basis]])
    return _canon([_comb(a, basis, n) for a in ker], n)


def _comb(a, basis, n):
    out = _zero(n)
    for c, b in zip(a, basis):
        if c:
            out = _vadd(out, _vscale(c, b))
    return out


def _intersect(A, B, n):
    if not A or not B:
        return []
    cols = [list(v) for v in A] + [[-x for x in v] for v in B]
    mat = [[cols[k][i] for k in range(len(cols))] for i in range(n)]
    ker = kernel_basis(mat)
    return _canon([_comb(a[: len(A)], A, n) for a in ker], n)


def _in_span(basis, v, n):
    if not any(v):
        return True
    return rank([list(b) for b in basis] + [list(v)]) == len(basis)


def _coords(basis, v, n):
    if not basis:
        if any(v):
            return None
        return []
    c = SpanSolver([list(b) for b in basis], n).coords(list(v))
    return c


# skew centroidal derivations ------------------------------------------------------


class SCDer:
    """Finite sum of chi^mu d_theta, merged per degree."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        for mu, th in (terms or {}).items():
            th = _vec(th)
            if _ev(th, mu):
                raise NotSkew(f"theta({list(mu)}) != 0")
            _merge(self.terms, tuple(mu), th)

    def __add__(self, other):
        out = SCDer(self.terms)
        for mu, th in other.terms.items():
            _merge(out.terms, mu, th)
        return out

    def __neg__(self):
        return SCDer({mu: _vscale(-ONE, th) for mu, th in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = as_scalar(c)
        return SCDer({mu: _vscale(c, th) for mu, th in self.terms.items()}) if c else SCDer()

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, SCDer) and self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for mu, th in sorted(self.terms.items()):
            parts.append(f"chi^{list(mu)} d[{', '.join(format_scalar(x) for x in th)}]")
        return " + ".join(parts)


def scder(mu, theta):
    """chi^mu d_theta; theta(mu) must vanish."""
    return SCDer({tuple(mu): _vec(theta)})


def scder_bracket(d1, d2):
    """[chi^mu d_t, chi^nu d_p] = chi^(mu+nu) (t(nu) d_p - p(mu) d_t)."""
    out = SCDer()
    for mu, t in d1.terms.items():
        for nu, p in d2.terms.items():
            v = _vadd(_vscale(_ev(t, nu), p), _vscale(-_ev(p, mu), t))
            _merge(out.terms, vadd(mu, nu), v)
    return out


def scder_action(L, d, x, chi_scale=None):
    """(chi^mu d_theta)(x) = theta(lam) chi^mu(x) for x of degree lam."""
    acc = {}
    for mu, th in d.terms.items():
        s = chi_scale(mu) if chi_scale else ONE
        for a, c in x.terms.items():
            v = _ev(th, a.deg)
            if not v:
                continue
            for k, w in L.centroid_act(mu, L.element(a)).terms.items():
                add_into(acc, k, c * v * s * w)
    return LieElement(L, acc)


# graded dual -------------------------------------------------------------------------


class Dual:
    """Finite sum of c^(mu)_v."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        for mu, v in (terms or {}).items():
            _merge(self.terms, tuple(mu), _vec(v))

    def __add__(self, other):
        out = Dual(self.terms)
        for mu, v in other.terms.items():
            _merge(out.terms, mu, v)
        return out

    def __neg__(self):
        return Dual({mu: _vscale(-ONE, v) for mu, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = as_scalar(c)
        return Dual({mu: _vscale(c, v) for mu, v in self.terms.items()}) if c else Dual()

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(
            f"c^{list(mu)}_[{', '.join(format_scalar(x) for x in v)}]" for mu, v in sorted(self.terms.items())
        )


def dual_atom(mu, lam, c=1):
    return Dual({tuple(mu): _vscale(as_scalar(c), _vec(lam))})


def dual_pair(c, d):
    """c^(mu)_v (chi^-mu d_theta) = theta(v); zero across other degrees."""
    s = ZERO
    for mu, v in c.terms.items():
        th = d.terms.get(vneg(mu))
        if th is not None:
            s = s + _ev(th, v)
    return s


def dual_act(d, c):
    """Contragredient action (d.phi)(d') = phi([d', d]).

    For d = chi^nu d_psi and phi = c^(mu)_v this is c^(mu+nu)_w with
    w = psi(v) nu + psi(mu) v.
    """
    out = Dual()
    for nu, psi in d.terms.items():
        for mu, v in c.terms.items():
            w = _vadd(_vscale(_ev(psi, v), _vec(nu)), _vscale(_ev(psi, mu), v))
            _merge(out.terms, vadd(mu, nu), w)
    return out


def sigma_D(L, x, y, chi_scale=None):
    """sigma_D(x, y)(d) = (d(x) | y), as a sum of c^(mu)_v (valid on any D)."""
    out = Dual()
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            nu = vneg(vadd(a.deg, b.deg))
            if not L.gamma_contains(nu):
                continue
            s = chi_scale(nu) if chi_scale else ONE
            f = L.form(L.centroid_act(nu, L.element(a)), L.element(b))
            if f:
                _merge(out.terms, vadd(a.deg, b.deg), _vscale(ca * cb * s * f, _vec(a.deg)))
    return out


# permissible subalgebras --------------------------------------------------------------


def ev_injective(U0, n):
    """Is Lambda -> (D^0)*, lam -> (d_theta -> theta(lam)), injective?"""
    if n == 0:
        return True
    if not U0:
        return False
    return not integer_kernel([list(t) for t in U0])


class DSubalgebra:
    """Graded subspace D = sum of chi^mu {d_theta : theta in U^mu}."""

    def __init__(self, n, U_of, kind, gamma=None, spec=None):
        self.n = n
        self.kind = kind
        self._U_of = U_of
        self.gamma = gamma or (lambda mu: True)
        self.spec = spec
        self._cache = {}
        self.discreteness = "asserted by construction pattern, not decided"

    def U(self, mu):
        mu = tuple(mu)
        hit = self._cache.get(mu)
        if hit is None:
            if len(mu) != self.n:
                raise RankMismatch("degree rank does not match D")
            hit = _canon(self._U_of(mu), self.n) if self.gamma(mu) else []
            self._cache[mu] = hit
        return hit

    def dim(self, mu):
        return len(self.U(mu))

    @property
    def permissible(self):
        return ev_injective(self.U(self.zero), self.n)

    @property
    def zero(self):
        return (0,) * self.n

    def degrees(self, W):
        W = W if isinstance(W, DegreeWindow) else DegreeWindow(W)
        return [mu for mu in W.enum(self.n) if self.U(mu)]

    def basis(self, mu):
        return [scder(mu, th) for th in self.U(mu)]

    def generators(self, W):
        return [d for mu in self.degrees(W) for d in self.basis(mu)]

    def contains(self, d):
        return all(_in_span(self.U(mu), th, self.n) for mu, th in d.terms.items())

    def closed(self, W):
        """Bracket closure on generator pairs; returns (ok, witness)."""
        gens = self.generators(W)
        for a, b in itertools.combinations(gens, 2):
            c = scder_bracket(a, b)
            if not self.contains(c):
                return False, {"d1": repr(a), "d2": repr(b), "bracket": repr(c)}
        return True, None

    def tau_image(self):
        return DSubalgebra(self.n, lambda mu: self.U(vneg(mu)), f"tau({self.kind})", self.gamma)

    def intersect(self, other):
        z = self.zero

        def U(mu):
            if mu == z:
                return self.U(mu)
            return _intersect(self.U(mu), other.U(mu), self.n)

        return DSubalgebra(self.n, U, f"{self.kind}&{other.kind}", self.gamma)

    def __repr__(self):
        return f"DSubalgebra({self.kind}, n={self.n})"


def _space(x, n):
    if x is None or (isinstance(x, str) and x.lower() in ("0", "zero", "none")):
        return []
    if isinstance(x, str) and x.lower() in ("hom", "all", "full"):
        return _hom(n)
    return [tuple(parse_scalar(t) if isinstance(t, str) else as_scalar(t) for t in v) for v in x]


def _in_lattice(gens, mu):
    if not any(mu):
        return True
    if not gens:
        return False
    return lattice_basis(list(gens) + [list(mu)]) == lattice_basis(list(gens))


def build_D(spec, L=None, n=None, require_permissible=False):
    """DSubalgebra from a spec dict; see README for the accepted kinds."""
    if L is not None:
        n = L.n
        gamma = L.gamma_contains
    else:
        gamma = None
    if n is None:
        raise InputError("build_D needs a Lie torus or a rank")
    kind = spec.get("kind")
    z = (0,) * n
    if kind == "full_scder":
        U_of = lambda mu: _hom(n) if mu == z else _killing_mu(_hom(n), mu, n)  # noqa: E731
    elif kind == "degree_only":
        U0 = _space(spec.get("U", "Hom"), n)
        U_of = lambda mu: U0 if mu == z else []  # noqa: E731
    elif kind == "triple":
        U0 = _space(spec.get("U", "Hom"), n)
        U1 = _space(spec.get("Uprime", "Hom"), n)
        gp = spec.get("GammaPrime", "Gamma")
        gens = None if isinstance(gp, str) else [list(g) for g in gp]

        def U_of(mu):
            if mu == z:
                return U0
            if gens is not None and not _in_lattice(gens, mu):
                return []
            return _killing_mu(U1, mu, n)
    elif kind == "skew_example":
        if n < 2:
            raise InputError("the skew example needs rank Lambda > 1")
        U0 = _space(spec.get("U", "Hom"), n)
        g = tuple(int(x) for x in spec["gamma"])
        if not any(g):
            raise InputError("gamma must be nonzero")
        Up = _space(spec.get("Uplus", "Hom"), n)
        Um = _space(spec.get("Uminus", "0"), n)

        def U_of(mu):
            if mu == z:
                return U0
            if mu == g:
                return _killing_mu(Up, mu, n)
            if mu == vneg(g):
                return _killing_mu(Um, mu, n)
            return []
    elif kind == "explicit":
        gens = {}
        for term in spec.get("generators", []):
            mu = tuple(int(x) for x in term["mu"])
            th = tuple(parse_scalar(t) if isinstance(t, str) else as_scalar(t) for t in term["theta"])
            if _ev(th, mu):
                raise NotSkew(f"theta({list(mu)}) != 0")
            gens.setdefault(mu, []).append(th)
        U_of = lambda mu: gens.get(mu, [])  # noqa: E731
    else:
        raise InputError(f"unknown D kind {kind!r}")
    D = DSubalgebra(n, U_of, kind, gamma, spec)
    if require_permissible and not D.permissible:
        raise NotPermissible("ev: Lambda -> (D^0)* is not injective")
    return D


# affine cocycles ----------------------------------------------------------------------


class AffineCocycle:
    """kappa: D x D -> D^gr*, given as zero, a table on D-atoms, or a transported cocycle."""

    def __init__(self, kind="zero", table=None, fn=None):
        self.kind = kind
        self.table = table or {}
        self._fn = fn

    @classmethod
    def zero(cls):
        return cls("zero")

    def eval(self, D, d1, d2):
        if self.kind == "zero":
            return Dual()
        if self._fn is not None:
            return self._fn(D, d1, d2)
        c1, c2 = _d_coords(D, d1), _d_coords(D, d2)
        out = Dual()
        for k1, a in c1.items():
            for k2, b in c2.items():
                v = self.table.get((k1, k2))
                if v is not None:
                    out = out + v.scale(a * b)
        return out


def _d_coords(D, d):
    """Coordinates of d on the D-atoms (mu, i)."""
    out = {}
    for mu, th in d.terms.items():
        c = _coords(D.U(mu), th, D.n)
        if c is None:
            raise InvalidCocycle(f"{d!r} is not in D")
        for i, x in enumerate(c):
            if x:
                out[(mu, i)] = x
    return out


def cocycle_table(entries):
    """Table from [((mu, i), (nu, j), Dual), ...]."""
    return AffineCocycle("table", {((tuple(a[0]), a[1]), (tuple(b[0]), b[1])): v for a, b, v in entries})


def _dual_values(D, c, mu):
    """Values of the degree-mu part of c on the basis of U_D^-mu."""
    v = c.terms.get(mu)
    return [(_ev(th, v) if v is not None else ZERO) for th in D.U(vneg(mu))]


def _dual_equal(D, c1, c2):
    for mu in set(c1.terms) | set(c2.terms):
        if _dual_values(D, c1, mu) != _dual_values(D, c2, mu):
            return False
    return True


def _d_atoms(D, W):
    return [((mu, i), scder(mu, th)) for mu in D.degrees(W) for i, th in enumerate(D.U(mu))]


def validate_cocycle(D, kappa, W=1):
    """The five affine cocycle axioms on window-generated triples of D."""
    W = W if isinstance(W, DegreeWindow) else DegreeWindow(W)
    rep = Report(window=W.radius)
    atoms = _d_atoms(D, W)
    rep.atoms_checked = len(atoms)
    names = ("kappa_alternating", "kappa_degree_zero", "kappa_graded", "kappa_invariant", "kappa_cyclic")
    for nm in names:
        rep.record(nm, True)
    z = D.zero
    K = {}
    try:
        for (ka, a), (kb, b) in itertools.product(atoms, atoms):
            K[(ka, kb)] = kappa.eval(D, a, b)
        for (ka, a), (kb, b) in itertools.product(atoms, atoms):
            v = K[(ka, kb)]
            if ka == kb and _nonzero_on(D, v):
                rep.record("kappa_alternating", False, {"d": repr(a), "kappa(d,d)": repr(v)})
            if ka < kb and _nonzero_on(D, v + K[(kb, ka)]):
                rep.record("kappa_alternating", False, {"d1": repr(a), "d2": repr(b), "kappa(d1,d2)+kappa(d2,d1)": repr(v + K[(kb, ka)])})
            if (ka[0] == z or kb[0] == z) and _nonzero_on(D, v):
                rep.record("kappa_degree_zero", False, {"d1": repr(a), "d2": repr(b), "kappa": repr(v)})
            want = vadd(ka[0], kb[0])
            bad = [mu for mu in v.terms if mu != want and any(_dual_values(D, v, mu))]
            if bad:
                rep.record("kappa_graded", False, {"d1": repr(a), "d2": repr(b), "degree": list(bad[0])})
        for (ka, a), (kb, b), (kc, c) in itertools.product(atoms, atoms, atoms):
            lhs = dual_pair(K[(ka, kb)], c)
            rhs = dual_pair(K[(kb, kc)], a)
            if lhs != rhs:
                rep.record("kappa_invariant", False, {"d1": repr(a), "d2": repr(b), "d3": repr(c), "lhs": format_scalar(lhs), "rhs": format_scalar(rhs)})
            lhs, rhs = Dual(), Dual()
            for (x, y, w), (kx, ky, kw) in (((a, b, c), (ka, kb, kc)), ((b, c, a), (kb, kc, ka)), ((c, a, b), (kc, ka, kb))):
                lhs = lhs + kappa.eval(D, scder_bracket(x, y), w)
                rhs = rhs + dual_act(x, K[(ky, kw)])
            if not _dual_equal(D, lhs, rhs):
                rep.record("kappa_cyclic", False, {"d1": repr(a), "d2": repr(b), "d3": repr(c), "lhs": repr(lhs), "rhs": repr(rhs)})
    except InvalidCocycle as exc:
        rep.record("kappa_graded", False, {"error": str(exc)})
    return rep


def _nonzero_on(D, c):
    return any(any(_dual_values(D, c, mu)) for mu in c.terms)


# the algebra E(L, D, kappa) -----------------------------------------------------------


class EAtom(NamedTuple):
    kind: str  # "L", "c" or "d"
    root: tuple
    deg: tuple
    idx: int

    def __repr__(self):
        return f"<{self.kind}|{','.join(map(str, self.root))}|{','.join(map(str, self.deg))}|{self.idx}>"


def _ekey(a):
    from .lie.base import root_key

    return ({"L": 0, "c": 1, "d": 2}[a.kind], root_key(a.root), a.deg, a.idx)


class EalaAlgebra:
    """E(L, D, kappa) with atoms for L, for bases of every D^mu and of (D^-mu)*."""

    def __init__(self, L, D, kappa=None, chi_scale=None, form_override=None):
        self.L = L
        self.D = D
        self.kappa = kappa or AffineCocycle.zero()
        self.chi_scale = chi_scale
        self.form_override = form_override
        self.zero_root = L.roots.zero
        self._cbasis = {}
        self._bracket_cache = {}

    # atoms -------------------------------------------------------------------
    def L_atom(self, a):
        return EAtom("L", a.root, a.deg, a.idx)

    def d_atoms(self, mu):
        return [EAtom("d", self.zero_root, tuple(mu), i) for i in range(self.D.dim(mu))]

    def _c_frame(self, mu):
        """Indices s of unit vectors with c^(mu)_{e_s} a basis of (D^-mu)*, and the solver."""
        mu = tuple(mu)
        hit = self._cbasis.get(mu)
        if hit is None:
            U = self.D.U(vneg(mu))
            n = self.D.n
            chosen = []
            for s in range(n):
                trial = chosen + [s]
                M = [[th[t] for t in trial] for th in U]
                if rank(M) == len(trial):
                    chosen = trial
                if len(chosen) == len(U):
                    break
            M = [[th[t] for t in chosen] for th in U]
            hit = (chosen, M)
            self._cbasis[mu] = hit
        return hit

    def c_atoms(self, mu):
        chosen, _ = self._c_frame(mu)
        return [EAtom("c", self.zero_root, tuple(mu), i) for i in range(len(chosen))]

    def window_atoms(self, W):
        W = W if isinstance(W, DegreeWindow) else DegreeWindow(W)
        out = [self.L_atom(a) for a in self.L.window_atoms(W)]
        for mu in W.enum(self.L.n):
            out += self.c_atoms(mu) + self.d_atoms(mu)
        return sorted(out, key=_ekey)

    def cartan_elements(self):
        z = (0,) * self.L.n
        hs = [self.L_atom(a) for a in self.L.cartan_atoms()] + self.c_atoms(z) + self.d_atoms(z)
        return [{h: ONE} for h in hs]

    # conversions -----------------------------------------------------------------
    def from_lie(self, x):
        return {self.L_atom(a): c for a, c in x.terms.items() if c}

    def from_scder(self, d):
        out = {}
        for mu, th in d.terms.items():
            c = _coords(self.D.U(mu), th, self.D.n)
            if c is None:
                raise InputError(f"{d!r} is not in D")
            for i, x in enumerate(c):
                if x:
                    out[EAtom("d", self.zero_root, mu, i)] = x
        return out

    def from_dual(self, c):
        out = {}
        for mu, v in c.terms.items():
            vals = [_ev(th, v) for th in self.D.U(vneg(mu))]
            if not any(vals):
                continue
            chosen, M = self._c_frame(mu)
            a = solve(M, vals)
            for i, x in enumerate(a):
                if x:
                    out[EAtom("c", self.zero_root, mu, i)] = x
        return out

    def to_scder(self, atom):
        return scder(atom.deg, self.D.U(atom.deg)[atom.idx])

    def to_dual(self, atom):
        chosen, _ = self._c_frame(atom.deg)
        e = tuple(ONE if t == chosen[atom.idx] else ZERO for t in range(self.D.n))
        return Dual({atom.deg: e})

    def to_lie(self, atom):
        return Atom(atom.root, atom.deg, atom.idx)

    def split(self, terms):
        """(LieElement, Dual, SCDer) parts of a term dict."""
        x, c, d = {}, Dual(), SCDer()
        for a, v in terms.items():
            if a.kind == "L":
                x[self.to_lie(a)] = v
            elif a.kind == "c":
                c = c + self.to_dual(a).scale(v)
            else:
                d = d + self.to_scder(a).scale(v)
        return LieElement(self.L, x), c, d

    # bracket -----------------------------------------------------------------------
    def _act(self, d, atom):
        return self.from_lie(scder_action(self.L, d, self.L.element(self.to_lie(atom)), self.chi_scale))

    def atom_bracket(self, a, b):
        key = (a, b)
        hit = self._bracket_cache.get(key)
        if hit is not None:
            return hit
        out = {}
        ka, kb = a.kind, b.kind
        if ka == "L" and kb == "L":
            x, y = self.L.element(self.to_lie(a)), self.L.element(self.to_lie(b))
            out.update(self.from_lie(self.L.bracket(x, y)))
            for k, v in self.from_dual(sigma_D(self.L, x, y, self.chi_scale)).items():
                add_into(out, k, v)
        elif ka == "d" and kb == "L":
            out = self._act(self.to_scder(a), b)
        elif ka == "L" and kb == "d":
            out = {k: -v for k, v in self._act(self.to_scder(b), a).items()}
        elif ka == "d" and kb == "c":
            out = self.from_dual(dual_act(self.to_scder(a), self.to_dual(b)))
        elif ka == "c" and kb == "d":
            out = {k: -v for k, v in self.from_dual(dual_act(self.to_scder(b), self.to_dual(a))).items()}
        elif ka == "d" and kb == "d":
            d1, d2 = self.to_scder(a), self.to_scder(b)
            out = self.from_scder(scder_bracket(d1, d2))
            for k, v in self.from_dual(self.kappa.eval(self.D, d1, d2)).items():
                add_into(out, k, v)
        out = {k: v for k, v in out.items() if v}
        self._bracket_cache[key] = out
        return out

    def bracket(self, u, v):
        acc = {}
        for a, ca in u.items():
            for b, cb in v.items():
                for k, w in self.atom_bracket(a, b).items():
                    add_into(acc, k, ca * cb * w)
        return {k: w for k, w in acc.items() if w}

    # form --------------------------------------------------------------------------
    def atom_form(self, a, b):
        if self.form_override is not None:
            return as_scalar(self.form_override(self, a, b))
        return self._atom_form(a, b)

    def _atom_form(self, a, b):
        if a.kind == "L" and b.kind == "L":
            return self.L.atom_form(self.to_lie(a), self.to_lie(b))
        if a.kind == "c" and b.kind == "d":
            return dual_pair(self.to_dual(a), self.to_scder(b))
        if a.kind == "d" and b.kind == "c":
            return dual_pair(self.to_dual(b), self.to_scder(a))
        return ZERO

    def form(self, u, v):
        s = ZERO
        for a, ca in u.items():
            for b, cb in v.items():
                f = self.atom_form(a, b)
                if f:
                    s = s + ca * cb * f
        return s

    def show(self, terms):
        x, c, d = self.split(terms)
        parts = [repr(p) for p in (x, c, d) if p]
        return " + ".join(parts) or "0"

    def __repr__(self):
        return f"E({self.L!r}, {self.D.kind}, kappa={self.kappa.kind})"


def eala_build(L, D, kappa=None, W=1):
    if not D.permissible:
        raise NotPermissible("D is not permissible: ev is not injective")
    kappa = kappa or AffineCocycle.zero()
    if kappa.kind != "zero":
        rep = validate_cocycle(D, kappa, W)
        if not rep.passed():
            raise InvalidCocycle(f"affine cocycle axioms fail: {rep.failures()}")
    return EalaAlgebra(L, D, kappa)


def eala_bracket(E, u, v):
    return E.bracket(u, v)


# involutions ---------------------------------------------------------------------------


def tau_scder(d):
    return SCDer({vneg(mu): _vscale(-ONE, th) for mu, th in d.terms.items()})


def tau_dual(c):
    return Dual({vneg(mu): _vscale(-ONE, v) for mu, v in c.terms.items()})


def centroid_eta(L, tau, mu, W=1):
    """eta with tau chi^mu tau = eta chi^-mu, read off window atoms (None if not a scalar)."""
    eta = None
    for a in L.window_atoms(W):
        lhs = tau(L.centroid_act(mu, tau(L.element(a))))
        rhs = L.centroid_act(vneg(mu), L.element(a))
        for k in set(lhs.terms) | set(rhs.terms):
            x, y = lhs.coeff(k), rhs.coeff(k)
            if not y:
                if x:
                    return None
                continue
            r = x / y
            if eta is None:
                eta = r
            elif eta != r:
                return None
    return eta if eta is not None else ONE


def normalize_centroid(L, tau, mus):
    """chi-rescaling mu -> eta_mu^(-1/2) making tau chi^mu tau = chi^-mu."""
    scale = {}
    for mu in mus:
        eta = centroid_eta(L, tau, mu)
        if eta is None:
            raise NotPreChevalley(f"tau does not normalize chi^{list(mu)}")
        scale[tuple(mu)] = ONE / sqrt_root_of_unity(eta) if eta != ONE else ONE
    return scale


def _lift(E, F, tau):
    def image(atom):
        if atom.kind == "L":
            return {F.L_atom(k): v for k, v in tau.image(E.to_lie(atom)).items()}
        if atom.kind == "d":
            return F.from_scder(tau_scder(E.to_scder(atom)))
        return F.from_dual(tau_dual(E.to_dual(atom)))

    return Involution(E, image, "lifted tau", codomain=F)


def _transported(kappa, D):
    """kappa_tau(tau d, tau d') = tau kappa(d, d') on D_tau."""
    if kappa.kind == "zero":
        return AffineCocycle.zero()

    def fn(_, d1, d2):
        return tau_dual(kappa.eval(D, tau_scder(d1), tau_scder(d2)))

    return AffineCocycle("transported", fn=fn)


def lift_involution(E, tau, *, verify=False, W=2):
    """(tau-bar, E^tau): tau-bar acts by tau on L, chi^mu d_t -> chi^-mu d_-t, c^(mu)_l -> c^(-mu)_-l."""
    L = E.L
    if verify:
        rep = verify_involution(L, tau, W)
        for nm in ("order2", "homomorphism", "degree_reversal"):
            if not rep.passed(nm):
                raise NotPreChevalley(f"tau fails {nm}")
    for mu in E.D.degrees(W):
        scale = E.chi_scale(mu) if E.chi_scale else ONE
        eta = centroid_eta(L, tau, mu)
        if eta is None or (scale * scale * eta != ONE and mu != E.D.zero):
            raise NotPreChevalley(f"centroid basis is not tau-normalized at {list(mu)}")
    invariant = is_D_invariant(E.D, W) and is_pair_invariant(E.D, E.kappa, W)
    if invariant:
        F = E
    else:
        F = EalaAlgebra(L, E.D.tau_image(), _transported(E.kappa, E.D), E.chi_scale)
    fwd = _lift(E, F, tau)
    fwd.back = fwd if F is E else _lift(F, E, tau)
    fwd.invariant = invariant
    return fwd, F


def is_D_invariant(D, W=2):
    """U_D^mu == U_D^-mu for every mu in the window."""
    W = W if isinstance(W, DegreeWindow) else DegreeWindow(W)
    for mu in W.enum(D.n):
        if D.U(mu) != D.U(vneg(mu)):
            return False
    return True


def is_pair_invariant(D, kappa, W=1):
    """D invariant and kappa(chi^mu d_t, chi^nu d_g)(chi^(-mu-nu) d_-e) = kappa(chi^-mu d_t, chi^-nu d_g)(chi^(mu+nu) d_e)."""
    if not is_D_invariant(D, W):
        return False
    if kappa.kind == "zero":
        return True
    W = W if isinstance(W, DegreeWindow) else DegreeWindow(W)
    for mu, nu in itertools.product(D.degrees(W), repeat=2):
        s = vadd(mu, nu)
        for th, ga in itertools.product(D.U(mu), D.U(nu)):
            for et in D.U(s):
                lhs = dual_pair(kappa.eval(D, scder(mu, th), scder(nu, ga)), scder(vneg(s), _vscale(-ONE, et)))
                rhs = dual_pair(kappa.eval(D, scder(vneg(mu), th), scder(vneg(nu), ga)), scder(s, et))
                if lhs != rhs:
                    return False
    return True


def invariant_pair(D, kappa=None):
    """(D cap D_tau, kappa + kappa_tau): a tau-invariant pair."""
    Di = D.intersect(D.tau_image())
    kappa = kappa or AffineCocycle.zero()
    if kappa.kind == "zero":
        return Di, AffineCocycle.zero()

    def fn(Dx, d1, d2):
        return kappa.eval(D, d1, d2) + tau_dual(kappa.eval(D, tau_scder(d1), tau_scder(d2)))

    return Di, AffineCocycle("sum", fn=fn)


# EALA axioms ----------------------------------------------------------------------------


def _inner(E, r1, r2):
    return as_scalar(E.L.roots.inner(r1, r2))


def eala_axiom_checks(E, W=2, *, seed=0, triple_budget=1500):
    """A1, A2, A3, A5 and A6 on window atoms of E."""
    W = W if isinstance(W, DegreeWindow) else DegreeWindow(W)
    rep = Report(window=W.radius)
    atoms = E.window_atoms(W)
    rep.atoms_checked = len(atoms)
    rng = random.Random(seed)
    for nm in ("A1", "A2", "A3", "A5", "A6"):
        rep.record(nm, True)

    # A1: invariance and nondegeneracy
    if len(atoms) ** 3 <= triple_budget:
        triples = list(itertools.product(atoms, repeat=3))
    else:
        triples = [tuple(rng.choice(atoms) for _ in range(3)) for _ in range(triple_budget)]
    for a, b, c in triples:
        lhs = E.form(E.atom_bracket(a, b), {c: ONE})
        rhs = E.form({a: ONE}, E.atom_bracket(b, c))
        if lhs != rhs:
            rep.record("A1", False, {"x": repr(a), "y": repr(b), "z": repr(c), "([x,y],z)": format_scalar(lhs), "(x,[y,z])": format_scalar(rhs)})
            break
    groups = {}
    for a in atoms:
        groups.setdefault((a.root, a.deg), []).append(a)
    for (r, d), left in groups.items():
        right = groups.get((vneg(r), vneg(d)), [])
        G = [[E.atom_form(a, b) for b in right] for a in left]
        if len(right) != len(left) or rank(G) != len(left):
            rep.record("A1", False, {"bigrade": [[str(x) for x in r], list(d)], "gram_rank": rank(G) if right else 0, "dim": len(left)})

    # A2: simultaneous eigenvectors of ad H with the declared root
    cartan = E.cartan_elements()
    seen = {}
    for x in atoms:
        for h in cartan:
            (ha,) = h
            img = E.atom_bracket(ha, x)
            extra = [k for k in img if k != x]
            if extra:
                rep.record("A2", False, {"h": repr(ha), "x": repr(x), "[h,x]": E.show(img)})
                continue
            val = img.get(x, ZERO)
            if ha.kind == "d":
                want = _ev(E.D.U(ha.deg)[ha.idx], x.deg)
            elif ha.kind == "c" or x.kind != "L" or not any(x.root):
                want = ZERO
            else:
                want = seen.setdefault((ha, x.root), val)
            if val != want:
                rep.record("A2", False, {"h": repr(ha), "x": repr(x), "eigenvalue": format_scalar(val), "declared": format_scalar(want)})

    # A3: ad-nilpotency of non-isotropic root vectors
    k = 1 + E.L.roots.string_length()
    for x in atoms:
        if x.kind != "L" or not any(x.root):
            continue
        for y in atoms:
            cur = {y: ONE}
            for _ in range(k):
                cur = E.bracket({x: ONE}, cur)
                if not cur:
                    break
            if cur:
                rep.record("A3", False, {"x": repr(x), "y": repr(y), "power": k})
                break

    # A5: the root lattice has rank l + n
    vecs = []
    for a in atoms:
        if a.kind == "L":
            vecs.append([as_scalar(t) for t in a.root] + [as_scalar(t) for t in a.deg])
        else:
            vecs.append([ZERO] * len(a.root) + [as_scalar(t) for t in a.deg])
    want = E.L.roots.rank + E.L.n
    got = rank(vecs)
    if got != want:
        rep.record("A5", False, {"rank": got, "expected": want})

    # A6: connectedness of the non-isotropic roots
    roots = sorted({(a.root, a.deg) for a in atoms if a.kind == "L" and any(a.root)})
    if roots:
        seen_r = {roots[0]}
        queue = deque([roots[0]])
        while queue:
            r = queue.popleft()
            for s in roots:
                if s not in seen_r and _inner(E, r[0], s[0]):
                    seen_r.add(s)
                    queue.append(s)
        if len(seen_r) != len(roots):
            missing = [s for s in roots if s not in seen_r][0]
            rep.record("A6", False, {"unreached_root": [[str(x) for x in missing[0]], list(missing[1])]})
    return rep
