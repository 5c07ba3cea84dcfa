"""Generic machinery shared by all Lie torus constructions.

A construction exposes a finite *atom* basis for every bigraded component
``L_alpha^lambda``.  Brackets, involutions and centroid actions are first
computed on construction-specific raw payloads, then split by bigrade and
expressed in atom coordinates.  Operator-valued components are identified
through their evaluation vectors, so two payloads are equal exactly when
they act identically on the probe basis.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from ..errors import TorusMismatch, UnsupportedCentroidDegree
from ..graded import add_into
from ..lattice import DegreeWindow, RootSystem, vadd
from ..linalg import SpanSolver
from ..scalars import ZERO, Scalar, as_scalar, format_scalar

__all__ = ["Atom", "LieElement", "LieTorus", "OutsideComponent", "ComponentBasis", "atom_sort_key"]


class OutsideComponent(Exception):
    """A payload does not lie in the span of its component's atoms."""


def _num_key(x):
    if isinstance(x, Scalar):
        return (x.n, x.c)
    return (1, (Fraction(x),))


def root_key(r):
    return tuple(_num_key(x) for x in r)


class Atom(NamedTuple):
    root: tuple
    deg: tuple
    idx: int

    def __repr__(self):
        r = ",".join(str(x) for x in self.root)
        d = ",".join(str(x) for x in self.deg)
        return f"<{r}|{d}|{self.idx}>"


def atom_sort_key(a):
    return (root_key(a.root), a.deg, a.idx)


class LieElement:
    """Finite combination of atoms of a Lie torus."""

    __slots__ = ("L", "terms")

    def __init__(self, L, terms=None):
        self.L = L
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    def _check(self, other):
        if not isinstance(other, LieElement) or other.L is not self.L:
            raise TorusMismatch("elements belong to different Lie tori")

    def __add__(self, other):
        self._check(other)
        acc = dict(self.terms)
        for k, v in other.terms.items():
            add_into(acc, k, v)
        return LieElement(self.L, acc)

    def __neg__(self):
        return LieElement(self.L, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = as_scalar(c)
        return LieElement(self.L, {k: c * v for k, v in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, LieElement):
            return NotImplemented
        return self.L is other.L and self.terms == other.terms

    __hash__ = None

    def bigrades(self):
        return sorted({(a.root, a.deg) for a in self.terms}, key=lambda t: (root_key(t[0]), t[1]))

    def coeff(self, atom):
        return self.terms.get(atom, ZERO)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(
            f"({format_scalar(self.terms[a])})*{self.L.atom_label(a)}" for a in sorted(self.terms, key=atom_sort_key)
        )


class ComponentBasis:
    """Independent payloads of one component, with a solver for coordinates."""

    def __init__(self, payloads, vectors, length):
        self.solver = SpanSolver(vectors, length) if vectors else None
        keep = self.solver.independent if self.solver else []
        self.payloads = [payloads[i] for i in keep]
        self.length = length

    def coords(self, vec):
        if self.solver is None:
            if any(vec):
                raise OutsideComponent("nonzero vector in an empty component")
            return {}
        c = self.solver.coords(vec)
        if c is None:
            raise OutsideComponent("vector outside the component span")
        return {i: x for i, x in enumerate(c) if x}


class LieTorus:
    """Base class; subclasses fill in the construction-specific hooks.

    Hooks:

    * ``_component(root, deg)`` -> ComponentBasis
    * ``_raw_bracket(p, q)`` -> raw payload
    * ``_split(raw)`` -> dict ``(root, deg) -> {idx: Scalar}``
    * ``_raw_form(p, q)`` -> Scalar
    * ``_central(mu, p)`` -> raw payload (centroid action), ``gamma_contains(mu)``
    """

    construction = "abstract"

    def __init__(self, roots: RootSystem, n: int):
        self.roots = roots
        self.n = n
        self._components = {}
        self._bracket_cache = {}
        self._form_cache = {}

    # atoms -------------------------------------------------------------
    def component(self, root, deg):
        key = (tuple(root), tuple(deg))
        comp = self._components.get(key)
        if comp is None:
            if key[0] in self.roots:
                comp = self._component(*key)
            else:
                comp = ComponentBasis([], [], 0)
            self._components[key] = comp
        return comp

    def atoms_at(self, root, deg):
        comp = self.component(root, deg)
        return [Atom(tuple(root), tuple(deg), i) for i in range(len(comp.payloads))]

    def dim(self, root, deg):
        return len(self.component(root, deg).payloads)

    def payload(self, atom):
        return self.component(atom.root, atom.deg).payloads[atom.idx]

    def window_atoms(self, W):
        if not isinstance(W, DegreeWindow):
            W = DegreeWindow(W)
        out = []
        for deg in W.enum(self.n):
            for r in self.roots.roots:
                out.extend(self.atoms_at(r, deg))
        return sorted(out, key=atom_sort_key)

    def atom_label(self, atom):
        return repr(atom)

    def element(self, atom, c=1):
        return LieElement(self, {atom: as_scalar(c)})

    def zero(self):
        return LieElement(self)

    # coordinates ---------------------------------------------------------
    def from_raw(self, raw):
        acc = {}
        for (root, deg), coords in self._split(raw).items():
            for i, c in coords.items():
                add_into(acc, Atom(tuple(root), tuple(deg), i), c)
        return LieElement(self, acc)

    # bracket -------------------------------------------------------------
    def atom_bracket(self, a, b):
        key = (a, b)
        hit = self._bracket_cache.get(key)
        if hit is not None:
            return hit
        if a == b:
            res = {}
        else:
            rev = self._bracket_cache.get((b, a))
            if rev is not None:
                res = {k: -v for k, v in rev.items()}
            else:
                res = self.from_raw(self._raw_bracket(self.payload(a), self.payload(b))).terms
        self._bracket_cache[key] = res
        return res

    def raw_atom_bracket(self, a, b):
        """Bracket without the alternation/skew shortcuts (used by the checker)."""
        return self.from_raw(self._raw_bracket(self.payload(a), self.payload(b)))

    def bracket(self, x, y):
        x._check(y)
        acc = {}
        for a, ca in x.terms.items():
            for b, cb in y.terms.items():
                for k, v in self.atom_bracket(a, b).items():
                    add_into(acc, k, ca * cb * v)
        return LieElement(self, acc)

    # form ----------------------------------------------------------------
    def atom_form(self, a, b):
        if vadd(a.deg, b.deg) != (0,) * self.n:
            return ZERO
        if any(x + y for x, y in zip(a.root, b.root)):
            return ZERO
        key = (a, b)
        hit = self._form_cache.get(key)
        if hit is None:
            hit = as_scalar(self._raw_form(self.payload(a), self.payload(b)))
            self._form_cache[key] = hit
        return hit

    def raw_atom_form(self, a, b):
        """Form evaluated without the gradedness shortcut."""
        return as_scalar(self._raw_form(self.payload(a), self.payload(b)))

    def form(self, x, y):
        x._check(y)
        s = ZERO
        for a, ca in x.terms.items():
            for b, cb in y.terms.items():
                v = self.atom_form(a, b)
                if v:
                    s = s + ca * cb * v
        return s

    # centroid ------------------------------------------------------------
    def gamma_contains(self, mu):
        raise NotImplementedError

    def centroid_act(self, mu, x):
        mu = tuple(mu)
        if not self.gamma_contains(mu):
            raise UnsupportedCentroidDegree(f"{mu} is not a centroidal degree")
        acc = {}
        for a, c in x.terms.items():
            for k, v in self.from_raw(self._central(mu, self.payload(a))).terms.items():
                add_into(acc, k, c * v)
        return LieElement(self, acc)

    # hooks -----------------------------------------------------------------
    def _component(self, root, deg):
        raise NotImplementedError

    def _raw_bracket(self, p, q):
        raise NotImplementedError

    def _split(self, raw):
        raise NotImplementedError

    def _raw_form(self, p, q):
        raise NotImplementedError

    def _central(self, mu, p):
        raise NotImplementedError

    def cartan_atoms(self):
        """Atoms spanning L_0^0."""
        return self.atoms_at(self.roots.zero, (0,) * self.n)

    def describe(self):
        return {"construction": self.construction, "type": f"{self.roots.label}{self.roots.rank}", "n": self.n}

    def __repr__(self):
        return f"{self.construction}({self.roots.label}{self.roots.rank}, n={self.n})"
