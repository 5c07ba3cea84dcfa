"""Multi-loop algebras M(g, sigma) = sum of g^{lam mod m} (x) z^lam.

The sigma_j are commuting finite-order automorphisms of g.  Joint
eigenspaces are exact kernels over the cyclotomic field, and the root
grading comes from the ad-weights of a user-supplied abelian subalgebra
h' of the fixed algebra.  Weights are located numerically and then
confirmed by exact kernel computations.
"""

from __future__ import annotations

from fractions import Fraction
import itertools

import numpy as np

from ..errors import HypothesisViolated, NonCommutingAutomorphisms, NotDiagonalizable, RankMismatch
from ..graded import add_into
from ..lattice import RootSystem, vadd, vneg
from ..linalg import SpanSolver, kernel_basis, rank, solve
from ..scalars import ONE, ZERO, Scalar, as_scalar, parse_scalar, root_of_unity
from .base import ComponentBasis, LieTorus, OutsideComponent
from .simple import sl2

__all__ = ["MultiLoopTorus", "multiloop", "multiloop_sl2", "sl2_example", "ad_eigenvalue", "automorphism_order"]

MAX_ORDER = 64


def _as_images(g, lin):
    """Accept image dicts or a square matrix whose column j is the image of b_j."""
    if len(lin) != g.dim:
        raise RankMismatch(f"expected a {g.dim}x{g.dim} map")
    if all(isinstance(x, dict) for x in lin):
        return [{k: as_scalar(v) for k, v in d.items() if as_scalar(v)} for d in lin]
    rows = [[as_scalar(x) for x in r] for r in lin]
    return [{i: rows[i][j] for i in range(g.dim) if rows[i][j]} for j in range(g.dim)]


def _dense(g, images):
    """Matrix with column j the image of b_j."""
    return [[images[j].get(i, ZERO) for j in range(g.dim)] for i in range(g.dim)]


def _compose(g, f, h):
    return [g.apply(f, h[j]) for j in range(g.dim)]


def _is_identity(images):
    return all(d == {j: ONE} for j, d in enumerate(images))


def automorphism_order(g, images):
    cur = images
    for m in range(1, MAX_ORDER + 1):
        if _is_identity(cur):
            return m
        cur = _compose(g, images, cur)
    raise NotDiagonalizable(f"automorphism has no finite order up to {MAX_ORDER}")


def _is_automorphism(g, images):
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            lhs = g.apply(images, g.bracket_basis(i, j))
            rhs = g.bracket(images[i], images[j])
            if {k: v for k, v in lhs.items() if v} != {k: v for k, v in rhs.items() if v}:
                return False
    return True


def ad_eigenvalue(g, h, v):
    """The scalar c with [h, v] = c v, or None when v is not an eigenvector."""
    img = g.bracket(h, v)
    c = None
    for k in set(img) | set(v):
        a, b = img.get(k, ZERO), v.get(k, ZERO)
        if not b:
            if a:
                return None
            continue
        r = a / b
        if c is None:
            c = r
        elif c != r:
            return None
    return c if c is not None else ZERO


def _vec(g, d):
    return [d.get(i, ZERO) for i in range(g.dim)]


def _dict(v):
    return {i: x for i, x in enumerate(v) if x}


def _small(x):
    f = Fraction(x)
    return int(f) if f.denominator == 1 else f


class _Eigen(ComponentBasis):
    def __init__(self, payloads, index):
        self.payloads = payloads
        self.solver = None
        self.length = len(payloads)
        self.index = index

    def coords(self, vec):
        return {i: c for i, c in enumerate(vec) if c}


class MultiLoopTorus(LieTorus):
    """Raw payload ``{(i, lam): c}``: g-basis index i times z^lam.

    ``regrade = (Phi, k)`` relabels the Lambda-degree of ``x (x) z^lam``
    with weight a as ``(lam - Phi a) / k``; it must land in Z^n.
    """

    construction = "MultiLoop"

    def __init__(self, g, sigmas, hprime, regrade=None):
        self.g = g
        self.sigmas = [_as_images(g, s) for s in sigmas]
        if not self.sigmas:
            raise RankMismatch("at least one automorphism is required")
        for s in self.sigmas:
            if not _is_automorphism(g, s):
                raise HypothesisViolated("sigma is not an automorphism of g")
        for a, b in itertools.combinations(self.sigmas, 2):
            if _compose(g, a, b) != _compose(g, b, a):
                raise NonCommutingAutomorphisms("the automorphisms do not commute")
        self.periods = [automorphism_order(g, s) for s in self.sigmas]
        self.hprime = [{k: as_scalar(v) for k, v in h.items() if as_scalar(v)} for h in hprime]
        self._check_hprime()
        self.regrade = regrade
        self._decompose()
        roots = RootSystem(self._label(), len(self.hprime), self.weights, len(self.hprime), inner=self._inner)
        super().__init__(roots, len(self.sigmas))

    # eigenspaces --------------------------------------------------------------
    def residues(self):
        return [tuple(r) for r in itertools.product(*(range(m) for m in self.periods))]

    def residue(self, lam):
        return tuple(x % m for x, m in zip(lam, self.periods))

    def eigenspace(self, r):
        """Basis (coefficient dicts) of the joint eigenspace g^r."""
        g = self.g
        rows = []
        for s, m, rj in zip(self.sigmas, self.periods, r):
            w = root_of_unity(rj, m)
            M = _dense(g, s)
            for i in range(g.dim):
                rows.append([M[i][j] - (w if i == j else ZERO) for j in range(g.dim)])
        return [_dict(v) for v in kernel_basis(rows)]

    def fixed_subspace(self):
        return self.eigenspace((0,) * len(self.sigmas))

    def _check_hprime(self):
        g = self.g
        for h in self.hprime:
            for s in self.sigmas:
                if g.apply(s, h) != h:
                    raise HypothesisViolated("h' is not fixed by every sigma")
        for a, b in itertools.combinations(self.hprime, 2):
            if g.bracket(a, b):
                raise HypothesisViolated("h' is not abelian")
        if rank([_vec(g, h) for h in self.hprime]) != len(self.hprime):
            raise HypothesisViolated("h' elements are linearly dependent")

    def _candidates(self, h):
        A = np.array([[x.to_complex() for x in row] for row in self.g.ad_matrix(h)], dtype=complex)
        out = set()
        for z in np.linalg.eigvals(A):
            if abs(z.imag) > 1e-6:
                raise NotDiagonalizable("ad h' has a non-rational eigenvalue")
            out.add(Fraction(z.real).limit_denominator(64))
        return sorted(out)

    def _decompose(self):
        g = self.g
        ads = [g.ad_matrix(h) for h in self.hprime]
        cands = [self._candidates(h) for h in self.hprime]
        self.buckets = {}
        total = 0
        for r in self.residues():
            space = [_vec(g, v) for v in self.eigenspace(r)]
            if not space:
                continue
            parts = [((), space)]
            for ad, cs in zip(ads, cands):
                nxt = []
                for wt, S in parts:
                    found = 0
                    for c in cs:
                        cc = Scalar.rational(c)
                        # (ad - c) S a = 0
                        cols = []
                        for v in S:
                            img = [sum((ad[i][j] * v[j] for j in range(g.dim) if v[j]), ZERO) - cc * v[i] for i in range(g.dim)]
                            cols.append(img)
                        mat = [[cols[k][i] for k in range(len(S))] for i in range(g.dim)]
                        ker = kernel_basis(mat)
                        if ker:
                            vecs = [[sum((a[k] * S[k][i] for k in range(len(S)) if a[k]), ZERO) for i in range(g.dim)] for a in ker]
                            nxt.append((wt + (_small(c),), vecs))
                            found += len(ker)
                    if found != len(S):
                        raise NotDiagonalizable("h' does not act diagonalizably with rational weights")
                parts = nxt
            for wt, vecs in parts:
                self.buckets[(r, wt)] = [_dict(v) for v in vecs]
                total += len(vecs)
        if total != g.dim:
            raise NotDiagonalizable("joint eigenspaces do not span g")
        self.weights = sorted({wt for (_, wt) in self.buckets if any(wt)})
        self._order = [(key, i) for key in sorted(self.buckets) for i in range(len(self.buckets[key]))]
        self._solver = SpanSolver([_vec(g, self.buckets[key][i]) for key, i in self._order], g.dim)
        G = [[g.form(a, b) for b in self.hprime] for a in self.hprime]
        if rank(G) != len(G):
            raise HypothesisViolated("the invariant form is degenerate on h'")
        self._gram = G

    def _inner(self, a, b):
        x = solve(self._gram, [as_scalar(Fraction(t)) for t in b])
        s = ZERO
        for t, y in zip(a, x):
            s = s + as_scalar(Fraction(t)) * y
        return s

    def _label(self):
        ws = {wt for (_, wt) in self.buckets if any(wt)}
        if len(self.hprime) == 1:
            mags = sorted({abs(Fraction(w[0])) for w in ws})
            if len(mags) == 1:
                return "A"
            if len(mags) == 2 and mags[1] == 2 * mags[0]:
                return "BC"
        return "rel"

    def projection(self, r, u):
        """pi_r(u) for a coefficient dict u."""
        c = self._solver.coords(_vec(self.g, u))
        acc = {}
        for (key, i), x in zip(self._order, c):
            if x and key[0] == tuple(r):
                for k, v in self.buckets[key][i].items():
                    add_into(acc, k, x * v)
        return acc

    # grading -----------------------------------------------------------------
    def _shown(self, lam, wt):
        if self.regrade is None:
            return tuple(lam)
        Phi, k = self.regrade
        out = []
        for row, x in zip(Phi, lam):
            t = Fraction(x) - sum(Fraction(p) * Fraction(w) for p, w in zip(row, wt))
            t = t / k
            if t.denominator != 1:
                raise OutsideComponent("regrading leaves the integer lattice")
            out.append(int(t))
        return tuple(out)

    def _actual(self, root, deg):
        if self.regrade is None:
            return tuple(deg)
        Phi, k = self.regrade
        out = []
        for row, x in zip(Phi, deg):
            t = Fraction(x) * k + sum(Fraction(p) * Fraction(w) for p, w in zip(row, root))
            if t.denominator != 1:
                return None
            out.append(int(t))
        return tuple(out)

    def _component(self, root, deg):
        lam = self._actual(root, deg)
        if lam is None:
            return _Eigen([], {})
        vecs = self.buckets.get((self.residue(lam), tuple(root)), [])
        pays = [{(k, lam): c for k, c in v.items()} for v in vecs]
        return _Eigen(pays, {})

    def _raw_bracket(self, p, q):
        acc = {}
        for (i, a), c in p.items():
            for (j, b), d in q.items():
                for k, v in self.g.bracket_basis(i, j).items():
                    add_into(acc, (k, vadd(a, b)), c * d * v)
        return acc

    def _split(self, raw):
        by = {}
        for (k, lam), c in raw.items():
            if c:
                by.setdefault(lam, {})[k] = c
        out = {}
        for lam, u in by.items():
            c = self._solver.coords(_vec(self.g, u))
            res = self.residue(lam)
            for (key, i), x in zip(self._order, c):
                if not x:
                    continue
                r, wt = key
                if r != res:
                    raise OutsideComponent(f"eigenvector of residue {r} at degree {lam}")
                out.setdefault((wt, self._shown(lam, wt)), {})[i] = x
        return out

    def _raw_form(self, p, q):
        s = ZERO
        for (i, a), c in p.items():
            for (j, b), d in q.items():
                if not any(vadd(a, b)):
                    k = self.g.kappa[i][j]
                    if k:
                        s = s + c * d * k
        return s

    # centroid ------------------------------------------------------------------
    def _shift(self, mu):
        k = 1 if self.regrade is None else self.regrade[1]
        return tuple(k * x for x in mu)

    def gamma_contains(self, mu):
        return len(mu) == self.n and all(x % m == 0 for x, m in zip(self._shift(mu), self.periods))

    def _central(self, mu, p):
        nu = self._shift(mu)
        return {(i, vadd(lam, nu)): c for (i, lam), c in p.items()}

    # Chevalley data -------------------------------------------------------------
    def chevalley_raw(self, p, tau, psi=None):
        """x (x) z^lam -> psi tau(x) (x) z^-lam."""
        g = self.g
        out = {}
        for (i, lam), c in p.items():
            img = g.apply(tau, {i: c})
            if psi is not None:
                img = g.apply(psi, img)
            for k, v in img.items():
                add_into(out, (k, vneg(lam)), v)
        return out

    def atom_label(self, atom):
        p = self.payload(atom)
        lam = next(iter(p))[1]
        vec = " + ".join(f"{c}*{self.g.names[k]}" for (k, _), c in sorted(p.items()))
        return f"({vec})*z^{lam}"

    def describe(self):
        d = super().describe()
        d["periods"] = list(self.periods)
        d["g"] = f"{self.g.label}{self.g.rank}"
        return d


def multiloop(g, sigmas, hprime, regrade=None):
    return MultiLoopTorus(g, sigmas, hprime, regrade)


def sl2_example():
    """sl2 with sigma the Chevalley involution, h' = i(e - f)/2 and the
    eigenvectors y = e + f - ih, z = e + f + ih."""
    g = sl2()
    e, h, f = (g.index(x) for x in "ehf")
    i = parse_scalar("z", 4)
    half = Scalar.rational(Fraction(1, 2))
    sigma = g.theta()
    hp = {e: i * half, f: -i * half}
    y = {e: ONE, f: ONE, h: -i}
    z = {e: ONE, f: ONE, h: i}
    # tau swaps y and -z and negates h'; on the basis it is -1, 1, -1 on e, h, f
    tau = [{e: -ONE}, {h: ONE}, {f: -ONE}]
    return {"g": g, "sigma": sigma, "hprime": hp, "y": y, "z": z, "tau": tau}


def multiloop_sl2(regrade=None):
    ex = sl2_example()
    L = MultiLoopTorus(ex["g"], [ex["sigma"]], [ex["hprime"]], regrade)
    L.preset_tau = ex["tau"]
    return L
