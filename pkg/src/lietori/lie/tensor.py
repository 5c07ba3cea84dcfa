"""Untwisted Lie tori g (x) Laurent polynomials."""

from __future__ import annotations

from ..graded import add_into
from ..lattice import vadd
from ..scalars import ONE, ZERO
from .base import ComponentBasis, LieTorus

__all__ = ["TensorTorus", "tensor_torus"]


class TensorTorus(LieTorus):
    """Atoms ``b_i (x) x^lam``; payload ``(i, lam)``."""

    construction = "Tensor"

    def __init__(self, g, n):
        super().__init__(g.root_system, n)
        self.g = g
        self._slot = {}
        for i, r in enumerate(g.root_of):
            self._slot[i] = len([j for j in range(i) if g.root_of[j] == r])

    def _component(self, root, deg):
        idx = self.g.root_indices(root)
        return _Direct([(i, deg) for i in idx])

    def _raw_bracket(self, p, q):
        (i, lam), (j, mu) = p, q
        deg = vadd(lam, mu)
        return {(k, deg): c for k, c in self.g.bracket_basis(i, j).items()}

    def _split(self, raw):
        out = {}
        for (k, deg), c in raw.items():
            if c:
                comp = out.setdefault((self.g.root_of[k], deg), {})
                add_into(comp, self._slot[k], c)
        return out

    def _raw_form(self, p, q):
        (i, lam), (j, mu) = p, q
        if any(a + b for a, b in zip(lam, mu)):
            return ZERO
        return self.g.kappa[i][j]

    def gamma_contains(self, mu):
        return len(mu) == self.n

    def _central(self, mu, p):
        i, lam = p
        return {(i, vadd(lam, mu)): ONE}

    def atom_label(self, atom):
        i, lam = self.payload(atom)
        return f"{self.g.names[i]}*x^{lam}"

    def basis_atom(self, name, lam):
        """Atom of ``name (x) x^lam``."""
        i = self.g.index(name)
        return self.atoms_at(self.g.root_of[i], tuple(lam))[self._slot[i]]


class _Direct(ComponentBasis):
    """Component whose payloads are independent by construction."""

    def __init__(self, payloads):
        self.payloads = list(payloads)
        self.solver = None
        self.length = len(self.payloads)

    def coords(self, vec):
        return {i: c for i, c in enumerate(vec) if c}


def tensor_torus(g, n):
    return TensorTorus(g, n)
