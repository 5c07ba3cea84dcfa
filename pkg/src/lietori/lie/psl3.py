"""psl_3(A) = (sl_3 (x) A) + D_{A,A} over an alternative torus."""

from __future__ import annotations

from fractions import Fraction
import itertools

from ..errors import NotAlternative
from ..graded import add_into
from ..lattice import root_system, vadd, vsub
from ..operators import OperatorElement, op_A, op_bracket, op_eval_key, op_vector, sym_degree
from ..scalars import ONE, ZERO, Scalar
from ..tori import Laurent, Octonion, Quantum, center_support
from .base import ComponentBasis, LieTorus, OutsideComponent

__all__ = ["PSL3Torus", "psl3_torus", "central_degree"]

THIRD = Scalar.rational(Fraction(1, 3))
TWO_THIRDS = Scalar.rational(Fraction(2, 3))
HALF = Scalar.rational(Fraction(1, 2))


def central_degree(A, mu):
    """Is x^mu central (commutes and associates with everything)?"""
    if isinstance(A, Octonion):
        return all(x % 2 == 0 for x in mu[:3])
    return center_support(A, mu)


class PSL3Torus(LieTorus):
    """Raw payload: ``(M, D)``, M a sparse 3x3 matrix ``{(i, j, lam): c}``
    over A and D an OperatorElement of alternative inner derivations."""

    construction = "PSL3"

    def __init__(self, A):
        if not isinstance(A, (Laurent, Quantum, Octonion)):
            raise NotAlternative(f"{A!r} is not an alternative torus")
        super().__init__(root_system("A", 2), A.n)
        self.A = A
        self.probes = A.probe_keys()
        self.box = [tuple(m) for m in itertools.product(range(A.period), repeat=A.n)]

    def _root(self, i, j):
        v = [0, 0, 0]
        v[i] += 1
        v[j] -= 1
        return tuple(v)

    def _zero_op(self):
        return OperatorElement(self.A)

    def _vector(self, diag, D, lam):
        return list(diag) + op_vector(D, self.probes, lam)

    def _component(self, root, deg):
        if not self.A.supports(deg):
            return ComponentBasis([], [], 0)
        if any(root):
            i, j = root.index(1), root.index(-1)
            return ComponentBasis([({(i, j, deg): ONE}, self._zero_op())], [[ONE]], 1)
        pays, vecs = [], []
        for i in range(2):
            M = {(i, i, deg): ONE, (i + 1, i + 1, deg): -ONE}
            pays.append((M, self._zero_op()))
        for mu in self.box:
            if not self.A.supports(mu) or not self.A.supports(vsub(deg, mu)):
                continue
            D = op_A(self.A, self.A.x(mu), self.A.x(vsub(deg, mu)))
            if D:
                pays.append(({}, D))
        for M, D in pays:
            vecs.append(self._vector(self._diag_coords(M, deg), D, deg))
        return ComponentBasis(pays, vecs, len(vecs[0]))

    def _diag_coords(self, M, lam):
        d = [M.get((i, i, lam), ZERO) for i in range(3)]
        if d[0] + d[1] + d[2]:
            raise OutsideComponent("diagonal part is not traceless")
        return [d[0], d[0] + d[1]]

    def _raw_bracket(self, p, q):
        (M1, D1), (M2, D2) = p, q
        A = self.A
        M = {}
        D = op_bracket(D1, D2) if (D1 and D2) else self._zero_op()
        for (i, j, lam), c in M1.items():
            for (k, l, mu), d in M2.items():
                ab, ba = A.k(lam, mu), A.k(mu, lam)
                nu = vadd(lam, mu)
                cd = c * d
                if j == k and ab:
                    add_into(M, (i, l, nu), cd * ab)
                if l == i and ba:
                    add_into(M, (k, j, nu), -cd * ba)
                if j == k and l == i:
                    anti = (ab - ba) * HALF
                    if anti:
                        for t in range(3):
                            add_into(M, (t, t, nu), -cd * TWO_THIRDS * anti)
                    D = D + op_A(A, A.x(lam), A.x(mu)).scale(cd * THIRD)
        # [D, x (x) c] = x (x) D(c)
        for Dp, Mp, s in ((D1, M2, ONE), (D2, M1, -ONE)):
            if not Dp:
                continue
            for (i, j, lam), c in Mp.items():
                for key, v in op_eval_key(Dp, lam).terms.items():
                    add_into(M, (i, j, key), s * c * v)
        return ({k: v for k, v in M.items() if v}, D)

    def _split(self, raw):
        M, D = raw
        out = {}
        zero = self.roots.zero
        diag = {}
        for (i, j, lam), c in M.items():
            if i != j:
                out[(self._root(i, j), lam)] = {0: c}
            else:
                diag.setdefault(lam, {})[(i, i, lam)] = c
        ops = {}
        for sym, c in D.terms.items():
            lam = sym_degree(self.A, sym)
            ops.setdefault(lam, {})[sym] = c
        for lam in set(diag) | set(ops):
            Dl = OperatorElement(self.A, ops.get(lam, {}))
            vec = self._vector(self._diag_coords(diag.get(lam, {}), lam), Dl, lam)
            if not any(vec):
                continue
            coords = self.component(zero, lam).coords(vec)
            if coords:
                out[(zero, lam)] = coords
        return out

    def _raw_form(self, p, q):
        (M1, D1), (M2, D2) = p, q
        A = self.A
        s = ZERO
        for (i, j, lam), c in M1.items():
            for (k, l, mu), d in M2.items():
                if j == k and l == i and not any(vadd(lam, mu)):
                    s = s + c * d * A.k(lam, mu)
        # (D_{a,b}, D') = -3 ct(a D'(b))
        for sym, c in D1.terms.items():
            a, b = sym[1], sym[2]
            img = op_eval_key(D2, b)
            for key, v in img.terms.items():
                if not any(vadd(a, key)):
                    s = s - 3 * c * v * A.k(a, key)
        return s

    def gamma_contains(self, mu):
        return len(mu) == self.n and central_degree(self.A, mu)

    def _central(self, mu, p):
        M, D = p
        A = self.A
        M2 = {(i, j, vadd(lam, mu)): c * A.k(mu, lam) for (i, j, lam), c in M.items()}
        D2 = OperatorElement(A)
        for sym, c in D.terms.items():
            a, b = sym[1], sym[2]
            D2 = D2 + op_A(A, A.x(vadd(mu, a), A.k(mu, a)), A.x(b)).scale(c)
        return (M2, D2)

    def atom_label(self, atom):
        M, D = self.payload(atom)
        parts = [f"{c}*E{i + 1}{j + 1}x^{lam}" for (i, j, lam), c in sorted(M.items())]
        parts += [f"{c}*D(x^{s[1]},x^{s[2]})" for s, c in sorted(D.terms.items())]
        return " + ".join(parts)

    def matrix_atom(self, i, j, lam):
        return self.atoms_at(self._root(i, j), tuple(lam))[0]

    def describe(self):
        d = super().describe()
        d["coordinates"] = repr(self.A)
        return d


def psl3_torus(A):
    return PSL3Torus(A)
