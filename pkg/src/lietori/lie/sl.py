"""sl_{l+1}(A) over an associative torus, graded by matrix units."""

from __future__ import annotations

from ..errors import NotAssociative, RankTooSmall
from ..graded import add_into
from ..lattice import root_system, vadd
from ..scalars import ONE, ZERO
from ..tori import Laurent, Quantum, center_support, commutator_component
from .base import ComponentBasis, LieTorus, OutsideComponent

__all__ = ["SLTorus", "sl_torus"]


class _Listed(ComponentBasis):
    def __init__(self, payloads, solve):
        self.payloads = payloads
        self.solver = None
        self.length = 0
        self._solve = solve

    def coords(self, vec):
        return self._solve(vec)


class SLTorus(LieTorus):
    """Raw payloads are sparse matrices ``{(i, j, lam): c}`` with torus entries."""

    construction = "SL"

    def __init__(self, size, A):
        if size < 4:
            raise RankTooSmall("sl_{l+1}(A) is implemented for l + 1 >= 4")
        if not isinstance(A, (Laurent, Quantum)):
            raise NotAssociative(f"{A!r} is not an associative torus")
        super().__init__(root_system("A", size - 1), A.n)
        self.size = size
        self.A = A
        self._full = {}

    def _root(self, i, j):
        v = [0] * self.size
        v[i] += 1
        v[j] -= 1
        return tuple(v)

    def full_diagonal(self, lam):
        """Does L_0^lam carry the extra E11 atom (A^lam inside [A, A])?"""
        lam = tuple(lam)
        hit = self._full.get(lam)
        if hit is None:
            hit = commutator_component(self.A, lam)
            self._full[lam] = hit
        return hit

    def _component(self, root, deg):
        if any(root):
            i = root.index(1)
            j = root.index(-1)
            return _Listed([{(i, j, deg): ONE}], lambda v: {0: v[0]} if v[0] else {})
        pays = [{(i, i, deg): ONE, (i + 1, i + 1, deg): -ONE} for i in range(self.size - 1)]
        full = self.full_diagonal(deg)
        if full:
            pays.append({(0, 0, deg): ONE})

        def solve(d):
            t = ZERO
            for x in d:
                t = t + x
            if t and not full:
                raise OutsideComponent("diagonal with trace outside [A, A]")
            d = [d[0] - t] + list(d[1:])
            out = {}
            run = ZERO
            for i in range(self.size - 1):
                run = run + d[i]
                if run:
                    out[i] = run
            if full and t:
                out[self.size - 1] = t
            return out

        return _Listed(pays, solve)

    def _raw_bracket(self, p, q):
        acc = {}
        for X, Y, s in ((p, q, ONE), (q, p, -ONE)):
            for (i, k, lam), c in X.items():
                for (k2, j, mu), d in Y.items():
                    if k != k2:
                        continue
                    kk = self.A.k(lam, mu)
                    if kk:
                        add_into(acc, (i, j, vadd(lam, mu)), s * c * d * kk)
        return acc

    def _split(self, raw):
        out = {}
        diag = {}
        for (i, j, lam), c in raw.items():
            if i != j:
                out[(self._root(i, j), lam)] = {0: c}
            else:
                diag.setdefault(lam, [ZERO] * self.size)[i] += c
        zero = self.roots.zero
        for lam, d in diag.items():
            coords = self.component(zero, lam).coords(d)
            if coords:
                out[(zero, lam)] = coords
        return out

    def _raw_form(self, p, q):
        s = ZERO
        for (i, k, lam), c in p.items():
            for (k2, j, mu), d in q.items():
                if k == k2 and i == j and not any(vadd(lam, mu)):
                    s = s + c * d * self.A.k(lam, mu)
        return s

    def gamma_contains(self, mu):
        return len(mu) == self.n and center_support(self.A, mu)

    def _central(self, mu, p):
        return {(i, j, vadd(lam, mu)): c * self.A.k(lam, mu) for (i, j, lam), c in p.items()}

    def atom_label(self, atom):
        p = self.payload(atom)
        return " + ".join(f"{c}*E{i + 1}{j + 1}x^{lam}" for (i, j, lam), c in sorted(p.items()))

    def matrix_atom(self, i, j, lam):
        """Atom of ``x^lam E_ij`` (0-based indices, i != j)."""
        return self.atoms_at(self._root(i, j), tuple(lam))[0]

    def describe(self):
        d = super().describe()
        d["coordinates"] = repr(self.A)
        return d


def sl_torus(size, A):
    return SLTorus(size, A)
