"""Tits-Kantor-Koecher algebras J + Instrl(J) + bar J.

Instrl atoms are the operators ``x tri y = L(xy) + [L_x, L_y]`` with x, y
homogeneous basis keys and the degree of x in the residue box
``[0, period)^n``; central multiples of x can be moved onto y, so this
already spans every component.  Operators are compared through their
evaluations on the probe keys, bucketed by Peirce weight shift so that
root components separate even when an operator (for example L_1) is not
root-homogeneous.
"""

from __future__ import annotations

import itertools

from ..errors import NotJordan
from ..graded import GradedElement, add_into
from ..jordan import HermitianMatrix, RedCliff, check_peirce
from ..lattice import root_system, vadd, vneg, vsub
from ..operators import OperatorElement, op_bracket, op_eval, op_eval_key, op_J, op_L, sym_degree
from ..scalars import ONE, ZERO
from .base import ComponentBasis, LieTorus, OutsideComponent

__all__ = ["TKKTorus", "tkk", "tkk_C", "triangle"]


def triangle(J, x, y):
    """x tri y = L_{xy} + [L_x, L_y]."""
    return op_L(J, J.mul(x, y)) + op_J(J, x, y)


class _Keys(ComponentBasis):
    def __init__(self, payloads, index):
        self.payloads = payloads
        self.solver = None
        self.length = len(payloads)
        self.index = index

    def coords(self, vec):
        return {i: c for i, c in enumerate(vec) if c}


class TKKTorus(LieTorus):
    """Raw payload ``(X, Y, E)``: J part, bar part (dicts key -> Scalar) and an Instrl operator."""

    construction = "TKK"

    def __init__(self, J, roots=None, weight=None):
        if getattr(J, "variety", None) != "jordan":
            raise NotJordan(f"{J!r} is not a Jordan algebra")
        self.J = J
        if roots is None:
            roots = root_system("A", 1)
            weight = lambda key: (1, -1)  # noqa: E731
        super().__init__(roots, J.n)
        self.weight = weight
        self.probes = J.probe_keys()
        self.box = [tuple(m) for m in itertools.product(range(J.period), repeat=J.n)]
        self._layout = {}

    # roots -----------------------------------------------------------------
    def _part(self, root):
        if root in self._jweights():
            return "x"
        if vneg(root) in self._jweights():
            return "y"
        return "E"

    def _jweights(self):
        ws = getattr(self, "_jw", None)
        if ws is None:
            ws = set()
            for d in self.box:
                for k in self.J.keys_at(d):
                    ws.add(tuple(self.weight(k)))
            self._jw = ws
        return ws

    # evaluation vectors -----------------------------------------------------
    def _layout_for(self, root, lam):
        """Ordered (probe, key) slots whose weight shift is ``root``."""
        key = (root, lam)
        hit = self._layout.get(key)
        if hit is None:
            hit = []
            for p in self.probes:
                wp = self.weight(p)
                for k in self.J.keys_at(vadd(self.J.key_degree(p), lam)):
                    if vsub(self.weight(k), wp) == root:
                        hit.append((p, k))
            self._layout[key] = hit
        return hit

    def _evals(self, E):
        return {p: op_eval_key(E, p) for p in self.probes}

    def _vector(self, evals, root, lam):
        return [evals[p].coeff(k) for p, k in self._layout_for(root, lam)]

    def _shifts(self, evals):
        out = set()
        for p, img in evals.items():
            wp = self.weight(p)
            for k in img.terms:
                out.add(vsub(self.weight(k), wp))
        return out

    # components ---------------------------------------------------------------
    def _component(self, root, deg):
        J = self.J
        part = self._part(root)
        if part in ("x", "y"):
            sign = 1 if part == "x" else -1
            keys = [k for k in J.keys_at(deg) if tuple(sign * c for c in self.weight(k)) == root]
            pays = [({k: ONE}, {}, OperatorElement(J)) if part == "x" else ({}, {k: ONE}, OperatorElement(J)) for k in keys]
            return _Keys(pays, {k: i for i, k in enumerate(keys)})
        pays, vecs = [], []
        for mu in self.box:
            for x in J.keys_at(mu):
                for y in J.keys_at(vsub(deg, mu)):
                    if vsub(self.weight(x), self.weight(y)) != root:
                        continue
                    E = triangle(J, J.basis(x), J.basis(y))
                    if not E:
                        continue
                    pays.append(({}, {}, E))
                    vecs.append(self._vector(self._evals(E), root, deg))
        if not vecs:
            return ComponentBasis([], [], 0)
        return ComponentBasis(pays, vecs, len(vecs[0]))

    # bracket ------------------------------------------------------------------
    def _bar_op(self, E):
        """E bar: L(a) -> -L(a), inner derivations fixed."""
        return OperatorElement(self.J, {s: (-c if s[0] == "L" else c) for s, c in E.terms.items()})

    def _raw_bracket(self, p, q):
        J = self.J
        (X1, Y1, E1), (X2, Y2, E2) = p, q
        x1, y1, x2, y2 = (_elem(J, d) for d in (X1, Y1, X2, Y2))
        X = (op_eval(E1, x2) - op_eval(E2, x1)).terms
        Y = (op_eval(self._bar_op(E1), y2) - op_eval(self._bar_op(E2), y1)).terms
        E = OperatorElement(J)
        if x1 and y2:
            E = E + triangle(J, x1, y2)
        if x2 and y1:
            E = E - triangle(J, x2, y1)
        if E1 and E2:
            E = E + op_bracket(E1, E2)
        return (X, Y, E)

    def _split(self, raw):
        X, Y, E = raw
        out = {}
        for part, d, sign in (("x", X, 1), ("y", Y, -1)):
            for k, c in d.items():
                if not c:
                    continue
                root = tuple(sign * v for v in self.weight(k))
                deg = self.J.key_degree(k)
                comp = self.component(root, deg)
                if not isinstance(comp, _Keys) or k not in comp.index:
                    raise OutsideComponent(f"{self.J.key_label(k)} has no atom")
                add_into(out.setdefault((root, deg), {}), comp.index[k], c)
        by_deg = {}
        for sym, c in E.terms.items():
            by_deg.setdefault(sym_degree(self.J, sym), {})[sym] = c
        for lam, terms in by_deg.items():
            evals = self._evals(OperatorElement(self.J, terms))
            for root in self._shifts(evals):
                vec = self._vector(evals, root, lam)
                if not any(vec):
                    continue
                if root not in self.roots or self._part(root) != "E":
                    raise OutsideComponent(f"operator shift {root} is not an Instrl root")
                coords = self.component(root, lam).coords(vec)
                if coords:
                    out[(root, lam)] = coords
        return out

    # form ----------------------------------------------------------------------
    def _T(self, u):
        s = ZERO
        for k, c in u.terms.items():
            t = self.J.trace_key(k)
            if t:
                s = s + c * t
        return s

    def _raw_form(self, p, q):
        J = self.J
        (X1, Y1, E1), (X2, Y2, E2) = p, q
        s = ZERO
        x1, y1, x2, y2 = (_elem(J, d) for d in (X1, Y1, X2, Y2))
        if x1 and y2:
            s = s + self._T(J.mul(x1, y2))
        if x2 and y1:
            s = s + self._T(J.mul(x2, y1))
        if E1 and E2:
            inner2 = OperatorElement(J, {t: c for t, c in E2.terms.items() if t[0] == "J"})
            for sym, c in E1.terms.items():
                if sym[0] == "L":
                    for t, d in E2.terms.items():
                        if t[0] == "L":
                            s = s + c * d * self._T(J.mul(J.basis(sym[1]), J.basis(t[1])))
                elif inner2:
                    a, b = J.basis(sym[1]), J.basis(sym[2])
                    s = s - c * self._T(J.mul(a, op_eval(inner2, b)))
        return s

    # centroid --------------------------------------------------------------------
    def gamma_contains(self, mu):
        return len(mu) == self.n and self.J.central_element(tuple(mu)) is not None

    def _central(self, mu, p):
        J = self.J
        z = J.central_element(mu)
        X, Y, E = p
        X2 = J.mul(z, _elem(J, X)).terms if X else {}
        Y2 = J.mul(z, _elem(J, Y)).terms if Y else {}
        E2 = OperatorElement(J)
        for sym, c in E.terms.items():
            if sym[0] == "L":
                E2 = E2 + op_L(J, J.mul(z, J.basis(sym[1]))).scale(c)
            else:
                E2 = E2 + op_J(J, J.mul(z, J.basis(sym[1])), J.basis(sym[2])).scale(c)
        return (X2, Y2, E2)

    # labels -----------------------------------------------------------------------
    def atom_label(self, atom):
        X, Y, E = self.payload(atom)
        lab = self.J.key_label
        if X:
            return " + ".join(f"{c}*{lab(k)}" for k, c in X.items())
        if Y:
            return " + ".join(f"{c}*bar({lab(k)})" for k, c in Y.items())
        parts = []
        for s, c in sorted(E.terms.items(), key=lambda t: repr(t[0])):
            args = ",".join(lab(k) for k in s[1:])
            parts.append(f"{c}*{s[0]}({args})")
        return " + ".join(parts)

    def j_atom(self, key):
        root = tuple(self.weight(key))
        comp = self.component(root, self.J.key_degree(key))
        return self.atoms_at(root, self.J.key_degree(key))[comp.index[key]]

    def bar_atom(self, key):
        root = vneg(tuple(self.weight(key)))
        comp = self.component(root, self.J.key_degree(key))
        return self.atoms_at(root, self.J.key_degree(key))[comp.index[key]]

    def describe(self):
        d = super().describe()
        d["coordinates"] = repr(self.J)
        return d


def _elem(J, d):
    return GradedElement(J, d)


def tkk(J):
    """TKK(J) graded by A_1 = {0, +-alpha}."""
    return TKKTorus(J)


def tkk_C(J):
    """TKK(J) with the C_l grading from the Peirce frame of J."""
    if not isinstance(J, (HermitianMatrix, RedCliff)):
        raise NotJordan("tkk_C needs a Hermitian matrix or reduced Clifford Jordan algebra")
    check_peirce(J)
    ell = len(J.idempotents())
    L = TKKTorus(J, root_system("C", ell), J.peirce_weight)
    L.construction = "TKK_C"
    return L
