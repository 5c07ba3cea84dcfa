"""Degree lattices, windows, finite root systems, homomorphisms and semilattices."""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import BadSemilattice, RankMismatch, UnsupportedType, ZeroRoot
from .scalars import ZERO, Scalar, as_scalar

__all__ = [
    "vadd",
    "vsub",
    "vneg",
    "vscale",
    "zero_vec",
    "window_enum",
    "DegreeWindow",
    "RootSystem",
    "root_system",
    "cartan_integer",
    "GroupHom",
    "Semilattice",
    "semilattice_contains",
]


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vneg(a):
    return tuple(-x for x in a)


def vscale(c, a):
    return tuple(c * x for x in a)


def zero_vec(n):
    return (0,) * n


class DegreeWindow:
    """The box [-R, R]^n, optionally with per-axis radii."""

    def __init__(self, radius, axes=None):
        if radius < 0:
            raise ValueError("window radius must be nonnegative")
        self.radius = radius
        self.axes = tuple(axes) if axes is not None else None

    def enum(self, n):
        radii = self.axes if self.axes is not None else (self.radius,) * n
        if len(radii) != n:
            raise RankMismatch("per-axis radii do not match the lattice rank")
        return [tuple(v) for v in itertools.product(*(range(-r, r + 1) for r in radii))]

    def contains(self, v):
        radii = self.axes if self.axes is not None else (self.radius,) * len(v)
        return all(abs(x) <= r for x, r in zip(v, radii))


def window_enum(W, n):
    """Lexicographic enumeration of the box [-R, R]^n."""
    if not isinstance(W, DegreeWindow):
        W = DegreeWindow(W)
    return W.enum(n)


def _dot(a, b):
    s = 0
    for x, y in zip(a, b):
        s = s + x * y
    return s


class RootSystem:
    """Finite root system given by explicit root vectors.

    ``inner`` defaults to the Euclidean pairing of the epsilon model; the
    multiloop construction supplies its own pairing on weight vectors.
    """

    def __init__(self, label, rank, roots, dim, inner=None):
        self.label = label
        self.rank = rank
        self.dim = dim
        self.zero = (0,) * dim
        self.nonzero = sorted(set(tuple(r) for r in roots if any(r)), key=_root_key)
        self._set = set(self.nonzero) | {self.zero}
        self.inner = inner or _dot
        sq = {r: self.inner(r, r) for r in self.nonzero}
        lengths = sorted(set(sq.values()), key=_num_key)
        self.short = [r for r in self.nonzero if sq[r] == lengths[0]] if lengths else []
        self.long = [r for r in self.nonzero if lengths and sq[r] == lengths[-1] and len(lengths) > 1]
        self.indivisible = [self.zero] + [
            r for r in self.nonzero if tuple(_half(x) for x in r) not in self._set
        ]

    @property
    def roots(self):
        return [self.zero] + list(self.nonzero)

    def __contains__(self, v):
        return tuple(v) in self._set

    def is_indivisible(self, r):
        return tuple(r) in set(self.indivisible)

    def cartan_integer(self, beta, alpha):
        if not any(alpha):
            raise ZeroRoot("cartan integer against the zero root")
        val = 2 * as_scalar(self.inner(beta, alpha)) / as_scalar(self.inner(alpha, alpha))
        if not val.is_rational() or val.to_fraction().denominator != 1:
            raise ValueError(f"non-integral Cartan integer for {beta}, {alpha}")
        return int(val.to_fraction())

    def string_length(self):
        """Largest p+q over alpha-strings beta - p alpha, ..., beta + q alpha inside Delta."""
        best = 0
        for a in self.nonzero:
            for b in self.roots:
                p = 0
                while tuple(x - (p + 1) * y for x, y in zip(b, a)) in self._set:
                    p += 1
                q = 0
                while tuple(x + (q + 1) * y for x, y in zip(b, a)) in self._set:
                    q += 1
                best = max(best, p + q)
        return best

    def __repr__(self):
        return f"RootSystem({self.label}{self.rank}, {len(self.nonzero)} roots)"


def _half(x):
    if isinstance(x, int):
        return x // 2 if x % 2 == 0 else Fraction(x, 2)
    return x / 2


def _num_key(x):
    x = as_scalar(x)
    return (x.n, x.c)


def _root_key(r):
    return tuple(_num_key(x) if isinstance(x, Scalar) else (0, (Fraction(x),)) for x in r)


def _eps(n, i, c=1):
    v = [0] * n
    v[i] = c
    return v


def root_system(kind, rank):
    """Epsilon-model root system of type A, B, C, D (or BC)."""
    kind = kind.upper()
    roots = []
    if kind == "A":
        if rank < 1:
            raise UnsupportedType("A_l needs l >= 1")
        n = rank + 1
        for i in range(n):
            for j in range(n):
                if i != j:
                    v = [0] * n
                    v[i], v[j] = 1, -1
                    roots.append(tuple(v))
        return RootSystem("A", rank, roots, n)
    if kind in ("B", "C", "D", "BC"):
        n = rank
        minimum = {"B": 2, "C": 2, "D": 4, "BC": 1}[kind]
        if rank < minimum:
            raise UnsupportedType(f"{kind}{rank} is not an irreducible type handled here")
        for i in range(n):
            for j in range(i + 1, n):
                for si in (1, -1):
                    for sj in (1, -1):
                        v = [0] * n
                        v[i], v[j] = si, sj
                        roots.append(tuple(v))
            if kind in ("B", "BC"):
                roots += [tuple(_eps(n, i, 1)), tuple(_eps(n, i, -1))]
            if kind in ("C", "BC"):
                roots += [tuple(_eps(n, i, 2)), tuple(_eps(n, i, -2))]
        return RootSystem(kind, rank, roots, n)
    raise UnsupportedType(f"no built-in root system of type {kind}; supply a table")


def cartan_integer(beta, alpha, inner=None):
    """2(beta, alpha)/(alpha, alpha) in the epsilon model."""
    if not any(alpha):
        raise ZeroRoot("cartan integer against the zero root")
    inner = inner or _dot
    val = Fraction(2) * Fraction(inner(beta, alpha)) / Fraction(inner(alpha, alpha))
    if val.denominator != 1:
        raise ValueError("non-integral Cartan integer")
    return int(val)


class GroupHom:
    """theta: Z^n -> K given by its values on the standard basis."""

    __slots__ = ("values",)

    def __init__(self, values):
        self.values = tuple(as_scalar(v) for v in values)

    def __call__(self, lam):
        s = ZERO
        for t, x in zip(self.values, lam):
            if x and t:
                s = s + t * x
        return s

    def __eq__(self, other):
        return isinstance(other, GroupHom) and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __neg__(self):
        return GroupHom([-v for v in self.values])

    def __repr__(self):
        return f"GroupHom({[str(v) for v in self.values]})"


class Semilattice:
    """S = union of eps + 2 Z^m over eps in I and 0."""

    def __init__(self, m, reps):
        self.m = m
        self.reps = [tuple(int(x) for x in r) for r in reps]
        seen = set()
        for r in self.reps:
            if len(r) != m:
                raise BadSemilattice(f"representative {r} does not have rank {m}")
            res = tuple(x % 2 for x in r)
            if not any(res):
                raise BadSemilattice("0 mod 2 cannot be listed as a representative")
            if res in seen:
                raise BadSemilattice(f"representatives repeat the residue {res}")
            seen.add(res)
        self._by_residue = {tuple(x % 2 for x in r): r for r in self.reps}

    def representative(self, alpha):
        """The eps in I or 0 with alpha = eps mod 2, or None."""
        if len(alpha) != self.m:
            raise RankMismatch(f"expected a rank-{self.m} vector, got {alpha}")
        res = tuple(x % 2 for x in alpha)
        if not any(res):
            return (0,) * self.m
        return self._by_residue.get(res)

    def contains(self, alpha):
        return self.representative(alpha) is not None


def semilattice_contains(S, alpha):
    return S.contains(tuple(alpha))
