"""Type B_l Lie tori from the generalized Tits construction
T(Cliff(f)/K, Cliff(g)/B) = (g (x) B) + (V (x) W) + D_{W,W}.

B is the Laurent ring in n variables with x^e in Lambda-degree 2e, and W
is the free B-module on w_2..w_m with x^e w_i in degree 2e + tau_i.
Everything below is written in Lambda-degrees:

* ``G = {(k, d): c}``: g-basis element k times the B-monomial of degree d (d even),
* ``V = {(a, i, d): c}``: v_a (x) (monomial times w_i) of degree d,
* ``E = {(j, i, s): c}``: the B-linear map sending w_i to c times the monomial
  multiple of w_j that raises the degree by s.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import BadTauList, RankTooSmall
from ..graded import add_into
from ..lattice import root_system, vadd, vneg
from ..linalg import SpanSolver
from ..scalars import ONE, ZERO, Scalar
from .base import ComponentBasis, LieTorus, OutsideComponent
from .simple import _flat, simple_lie

__all__ = ["TitsBTorus", "tits_B"]

HALF = Scalar.rational(Fraction(1, 2))


def _even(d):
    return all(x % 2 == 0 for x in d)


def _same_parity(d, t):
    return all((x - y) % 2 == 0 for x, y in zip(d, t))


class _Direct(ComponentBasis):
    def __init__(self, payloads, index):
        self.payloads = payloads
        self.solver = None
        self.length = len(payloads)
        self.index = index

    def coords(self, vec):
        return {i: c for i, c in enumerate(vec) if c}


class TitsBTorus(LieTorus):
    construction = "TitsB"

    def __init__(self, ell, m, taus):
        if ell < 3:
            raise RankTooSmall("type B_l Tits tori need l >= 3")
        taus = [tuple(int(x) for x in t) for t in taus]
        if len(taus) != m or m < 1:
            raise BadTauList(f"expected {m} tau vectors, got {len(taus)}")
        n = len(taus[0])
        if any(len(t) != n for t in taus) or any(taus[0]):
            raise BadTauList("tau_1 must be 0 and all tau_i must share one rank")
        res = [tuple(x % 2 for x in t) for t in taus]
        if len(set(res)) != m:
            raise BadTauList("tau_i must be pairwise distinct mod 2")
        super().__init__(root_system("B", ell), n)
        self.ell = ell
        self.m = m
        self.taus = taus
        self.g = simple_lie("B", ell)
        self.dimV = 2 * ell + 1
        self._gsolver = SpanSolver([_flat(M) for M in self.g.matrices], self.dimV ** 2)
        self._dvv = {}
        self.W = list(range(1, m))  # indices of w_2..w_m into taus

    # data ----------------------------------------------------------------
    def f(self, a, b):
        ell = self.ell
        if a == b == 2 * ell:
            return ONE
        if (a < ell and b == a + ell) or (b < ell and a == b + ell):
            return ONE
        return ZERO

    def vweight(self, a):
        v = [0] * self.ell
        if a < self.ell:
            v[a] = 1
        elif a < 2 * self.ell:
            v[a - self.ell] = -1
        return tuple(v)

    def vbar(self, a):
        if a == 2 * self.ell:
            return a
        return a + self.ell if a < self.ell else a - self.ell

    def D_vv(self, a, b):
        """g-coordinates of D_{v_a, v_b}: u -> f(v_a, u) v_b - f(v_b, u) v_a."""
        key = (a, b)
        hit = self._dvv.get(key)
        if hit is None:
            M = [[ZERO] * self.dimV for _ in range(self.dimV)]
            for u in range(self.dimV):
                fa, fb = self.f(a, u), self.f(b, u)
                if fa:
                    M[b][u] = M[b][u] + fa
                if fb:
                    M[a][u] = M[a][u] - fb
            c = self._gsolver.coords(_flat(M))
            hit = {self._gsolver.independent[k]: x for k, x in enumerate(c) if x}
            self._dvv[key] = hit
        return hit

    def _w_at(self, d):
        return [i for i in self.W if _same_parity(d, self.taus[i])]

    def _pairs_at(self, s):
        return [(i, j) for i in self.W for j in self.W if i < j and _same_parity(s, vadd(self.taus[i], self.taus[j]))]

    # components ---------------------------------------------------------------
    def _component(self, root, deg):
        pays, index = [], {}

        def add(tag, payload):
            index[tag] = len(pays)
            pays.append(payload)

        if _even(deg):
            for k in self.g.root_indices(root):
                add(("g", k), ({(k, deg): ONE}, {}, {}))
        for i in self._w_at(deg):
            for a in range(self.dimV):
                if self.vweight(a) == root:
                    add(("v", a, i), ({}, {(a, i, deg): ONE}, {}))
        if not any(root):
            for i, j in self._pairs_at(deg):
                add(("E", i, j), ({}, {}, {(j, i, deg): ONE, (i, j, deg): -ONE}))
        return _Direct(pays, index)

    # bracket ------------------------------------------------------------------
    def _raw_bracket(self, p, q):
        (G1, V1, E1), (G2, V2, E2) = p, q
        G, V, E = {}, {}, {}
        g = self.g
        for (k1, d1), c1 in G1.items():
            for (k2, d2), c2 in G2.items():
                for k, c in g.bracket_basis(k1, k2).items():
                    add_into(G, (k, vadd(d1, d2)), c1 * c2 * c)
        # [D (x) b, v (x) y] = Dv (x) by
        for Gx, Vy, s in ((G1, V2, ONE), (G2, V1, -ONE)):
            for (k, d1), c1 in Gx.items():
                M = g.matrices[k]
                for (a, i, d2), c2 in Vy.items():
                    for r in range(self.dimV):
                        if M[r][a]:
                            add_into(V, (r, i, vadd(d1, d2)), s * c1 * c2 * M[r][a])
        # [E, v (x) y] = v (x) Ey
        for Ex, Vy, s in ((E1, V2, ONE), (E2, V1, -ONE)):
            for (j, i, sh), c1 in Ex.items():
                for (a, i2, d), c2 in Vy.items():
                    if i == i2:
                        add_into(V, (a, j, vadd(d, sh)), s * c1 * c2)
        # [E, E'] = EE' - E'E
        for X, Y, s in ((E1, E2, ONE), (E2, E1, -ONE)):
            for (j, k, s1), c1 in X.items():
                for (k2, i, s2), c2 in Y.items():
                    if k == k2:
                        add_into(E, (j, i, vadd(s1, s2)), s * c1 * c2)
        # [v (x) y, v' (x) y'] = D_{v,v'} (x) g(y, y') + f(v, v') D_{y,y'}
        for (a, i, d1), c1 in V1.items():
            for (b, j, d2), c2 in V2.items():
                d = vadd(d1, d2)
                if i == j:
                    for k, c in self.D_vv(a, b).items():
                        add_into(G, (k, d), c1 * c2 * c)
                else:
                    fab = self.f(a, b)
                    if fab:
                        add_into(E, (j, i, d), c1 * c2 * fab)
                        add_into(E, (i, j, d), -c1 * c2 * fab)
        return (G, V, E)

    def _split(self, raw):
        G, V, E = raw
        out = {}

        def put(root, deg, tag, c):
            comp = self.component(root, deg)
            if tag not in comp.index:
                raise OutsideComponent(f"{tag} at degree {deg} has no atom")
            add_into(out.setdefault((root, deg), {}), comp.index[tag], c)

        for (k, d), c in G.items():
            if c:
                put(self.g.root_of[k], d, ("g", k), c)
        for (a, i, d), c in V.items():
            if c:
                put(self.vweight(a), d, ("v", a, i), c)
        zero = self.roots.zero
        for (j, i, s), c in E.items():
            if not c:
                continue
            if i == j or E.get((i, j, s), ZERO) != -c:
                raise OutsideComponent("operator on W is not skew")
            if i < j:
                put(zero, s, ("E", i, j), c)
        return {k: v for k, v in out.items() if v}

    # form ----------------------------------------------------------------------
    def _raw_form(self, p, q):
        (G1, V1, E1), (G2, V2, E2) = p, q
        s = ZERO
        for (k1, d1), c1 in G1.items():
            for (k2, d2), c2 in G2.items():
                if not any(vadd(d1, d2)):
                    s = s - HALF * c1 * c2 * self.g.kappa[k1][k2]
        for (a, i, d1), c1 in V1.items():
            for (b, j, d2), c2 in V2.items():
                if i == j and not any(vadd(d1, d2)):
                    s = s + c1 * c2 * self.f(a, b)
        for (j, k, s1), c1 in E1.items():
            for (k2, i, s2), c2 in E2.items():
                if k == k2 and i == j and not any(vadd(s1, s2)):
                    s = s - HALF * c1 * c2
        return s

    # centroid ---------------------------------------------------------------------
    def gamma_contains(self, mu):
        return len(mu) == self.n and _even(mu)

    def _central(self, mu, p):
        G, V, E = p
        return (
            {(k, vadd(d, mu)): c for (k, d), c in G.items()},
            {(a, i, vadd(d, mu)): c for (a, i, d), c in V.items()},
            {(j, i, vadd(s, mu)): c for (j, i, s), c in E.items()},
        )

    # Chevalley data -----------------------------------------------------------------
    def chevalley_raw(self, p):
        """theta (x) inversion on g (x) B, bar (x) tau on V (x) W, D_{tau w, tau w'} on D_{W,W}."""
        G, V, E = p
        theta = self.g.theta()
        G2 = {}
        for (k, d), c in G.items():
            for k2, t in theta[k].items():
                add_into(G2, (k2, vneg(d)), c * t)
        V2 = {(self.vbar(a), i, vneg(d)): c for (a, i, d), c in V.items()}
        E2 = {(j, i, vneg(s)): c for (j, i, s), c in E.items()}
        return (G2, V2, E2)

    def atom_label(self, atom):
        G, V, E = self.payload(atom)
        if G:
            (k, d), = G
            return f"{self.g.names[k]}*x^{tuple(x // 2 for x in d)}"
        if V:
            (a, i, d), = V
            e = tuple((x - t) // 2 for x, t in zip(d, self.taus[i]))
            return f"v{a + 1}*x^{e}w{i + 1}"
        (j, i, s) = max(E)
        return f"D(w{i + 1},w{j + 1})@{s}"

    def describe(self):
        d = super().describe()
        d["m"] = self.m
        d["taus"] = [list(t) for t in self.taus]
        return d


def tits_B(ell, m, taus):
    return TitsBTorus(ell, m, taus)
