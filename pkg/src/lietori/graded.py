"""Sparse elements of Z^n-graded algebras with a distinguished homogeneous basis.

A graded algebra exposes basis *keys*; every key has a degree and the
product of two keys is a sparse combination of keys.  Tori use the degree
itself as the key, matrix-type Jordan algebras use ``(degree, slot)``.
"""

from __future__ import annotations

from .errors import AlgebraMismatch
from .scalars import ZERO, as_scalar, format_scalar


def add_into(acc, key, c):
    if not c:
        return
    old = acc.get(key)
    if old is None:
        acc[key] = c
    else:
        s = old + c
        if s:
            acc[key] = s
        else:
            del acc[key]


class GradedElement:
    """Finite combination of basis keys of ``alg``."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms=None):
        self.alg = alg
        if terms is None:
            terms = {}
        self.terms = {k: v for k, v in terms.items() if v}

    # structure ----------------------------------------------------------
    def degrees(self):
        return sorted({self.alg.key_degree(k) for k in self.terms})

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def degree(self):
        ds = self.degrees()
        if len(ds) != 1:
            raise ValueError("element is not homogeneous")
        return ds[0]

    def coeff(self, key):
        return self.terms.get(key, ZERO)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _check(self, other):
        if not isinstance(other, GradedElement) or other.alg is not self.alg:
            raise AlgebraMismatch("elements belong to different algebras")

    # linear structure --------------------------------------------------------
    def __add__(self, other):
        self._check(other)
        acc = dict(self.terms)
        for k, v in other.terms.items():
            add_into(acc, k, v)
        return GradedElement(self.alg, acc)

    def __neg__(self):
        return GradedElement(self.alg, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = as_scalar(c)
        if not c:
            return GradedElement(self.alg)
        return GradedElement(self.alg, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, GradedElement):
            return self.alg.mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if isinstance(other, (int,)) and other == 0:
            return not self.terms
        if not isinstance(other, GradedElement):
            return NotImplemented
        return self.alg is other.alg and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted((repr(k), hash(v)) for k, v in self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, key=repr):
            parts.append(f"({format_scalar(self.terms[k])})*x{self.alg.key_label(k)}")
        return " + ".join(parts)


class GradedAlgebra:
    """Interface shared by coordinate tori and the Jordan matrix algebras."""

    n = 0
    variety = "associative"
    period = 1

    def key_degree(self, key):
        return key

    def key_label(self, key):
        return str(key)

    def keys_at(self, deg):
        raise NotImplementedError

    def mul_keys(self, a, b):
        raise NotImplementedError

    def one_terms(self):
        raise NotImplementedError

    def one(self):
        return GradedElement(self, self.one_terms())

    def basis(self, key, c=1):
        return GradedElement(self, {key: as_scalar(c)})

    def zero(self):
        return GradedElement(self)

    def mul(self, u, v):
        if u.alg is not self or v.alg is not self:
            raise AlgebraMismatch("element does not belong to this algebra")
        acc = {}
        for a, ca in u.terms.items():
            for b, cb in v.terms.items():
                prod = self.mul_keys(a, b)
                if not prod:
                    continue
                cab = ca * cb
                for k, c in prod.items():
                    add_into(acc, k, cab * c)
        return GradedElement(self, acc)

    def probe_keys(self):
        """Basis keys whose degrees cover every residue class mod the period."""
        import itertools

        out = []
        for deg in itertools.product(range(self.period), repeat=self.n):
            out.extend(self.keys_at(tuple(deg)))
        return out
