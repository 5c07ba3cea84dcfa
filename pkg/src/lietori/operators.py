"""Formal combinations of multiplication operators on a graded algebra.

Symbols (arguments are basis keys of the owning algebra):

* ``("L", a)``, ``("R", a)``: left and right multiplication,
* ``("J", a, b)``: the Jordan inner derivation ``[L_a, L_b]``,
* ``("A", a, b)``: the alternative inner derivation
  ``D_{a,b} = [L_a, L_b] + [R_a, R_b] + [L_a, R_b]``.

``J`` and ``A`` symbols are skew; the canonical form keeps the argument
pair in increasing (degree, key) order and flips the sign otherwise.
"""

from __future__ import annotations

from .errors import AlgebraMismatch, IncompatibleVariety
from .graded import GradedElement, add_into
from .lattice import DegreeWindow, vadd
from .scalars import ONE, as_scalar

__all__ = [
    "OperatorElement",
    "op_L",
    "op_R",
    "op_J",
    "op_A",
    "op_eval",
    "op_eval_key",
    "op_bracket",
    "op_equal",
    "op_vector",
    "sym_degree",
]

SKEW = ("J", "A")


def _order(alg, k):
    return (alg.key_degree(k), k)


def _canon(alg, sym):
    """Canonical (symbol, sign) or (None, 0) for a vanishing skew symbol."""
    if sym[0] in SKEW:
        a, b = sym[1], sym[2]
        if a == b:
            return None, 0
        if _order(alg, a) > _order(alg, b):
            return (sym[0], b, a), -1
    return sym, 1


class OperatorElement:
    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms=None):
        self.alg = alg
        acc = {}
        for sym, c in (terms or {}).items():
            s, sign = _canon(alg, sym)
            if s is not None:
                add_into(acc, s, c if sign == 1 else -c)
        self.terms = acc

    def _check(self, other):
        if not isinstance(other, OperatorElement) or other.alg is not self.alg:
            raise AlgebraMismatch("operators act on different algebras")

    def __add__(self, other):
        self._check(other)
        acc = dict(self.terms)
        for k, v in other.terms.items():
            add_into(acc, k, v)
        return OperatorElement(self.alg, acc)

    def __neg__(self):
        return OperatorElement(self.alg, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = as_scalar(c)
        return OperatorElement(self.alg, {k: c * v for k, v in self.terms.items()})

    __rmul__ = scale

    def __bool__(self):
        return bool(self.terms)

    def map_symbols(self, f):
        """Linear map on symbols: ``f(sym)`` returns an OperatorElement."""
        out = OperatorElement(self.alg)
        for sym, c in self.terms.items():
            out = out + f(sym).scale(c)
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{s}" for s, c in sorted(self.terms.items(), key=lambda t: repr(t[0])))


def _pairs(u):
    return list(u.terms.items())


def op_L(alg, a):
    return OperatorElement(alg, {("L", k): c for k, c in a.terms.items()})


def op_R(alg, a):
    return OperatorElement(alg, {("R", k): c for k, c in a.terms.items()})


def _skew(alg, tag, a, b):
    acc = {}
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            s, sign = _canon(alg, (tag, ka, kb))
            if s is not None:
                add_into(acc, s, ca * cb if sign == 1 else -(ca * cb))
    return OperatorElement(alg, acc)


def op_J(alg, a, b):
    return _skew(alg, "J", a, b)


def op_A(alg, a, b):
    return _skew(alg, "A", a, b)


def sym_degree(alg, sym):
    d = alg.key_degree(sym[1])
    for k in sym[2:]:
        d = vadd(d, alg.key_degree(k))
    return d


def _cache(alg):
    c = getattr(alg, "_op_cache", None)
    if c is None:
        c = {}
        alg._op_cache = c
    return c


def _eval_sym(alg, sym, key):
    cache = _cache(alg)
    hit = cache.get((sym, key))
    if hit is not None:
        return hit
    x = alg.basis(key)
    tag = sym[0]
    if tag == "L":
        out = alg.mul(alg.basis(sym[1]), x)
    elif tag == "R":
        out = alg.mul(x, alg.basis(sym[1]))
    else:
        a, b = alg.basis(sym[1]), alg.basis(sym[2])
        m = alg.mul
        out = m(a, m(b, x)) - m(b, m(a, x))
        if tag == "A":
            out = out + m(m(x, b), a) - m(m(x, a), b) + m(a, m(x, b)) - m(m(a, x), b)
    cache[(sym, key)] = out
    return out


def op_eval_key(E, key):
    acc = {}
    for sym, c in E.terms.items():
        for k, v in _eval_sym(E.alg, sym, key).terms.items():
            add_into(acc, k, c * v)
    return GradedElement(E.alg, acc)


def op_eval(E, x):
    if x.alg is not E.alg:
        raise AlgebraMismatch("operator and element belong to different algebras")
    acc = {}
    for key, cx in x.terms.items():
        for k, v in op_eval_key(E, key).terms.items():
            add_into(acc, k, cx * v)
    return GradedElement(E.alg, acc)


def _allowed(alg):
    if alg.variety == "jordan":
        return {"L", "J"}
    if alg.variety in ("alternative", "associative"):
        return {"A"}
    return set()


def op_bracket(E, F):
    """Closed-form bracket via the derivation rewrite rules."""
    E._check(F)
    alg = E.alg
    ok = _allowed(alg)
    for sym in list(E.terms) + list(F.terms):
        if sym[0] not in ok:
            raise IncompatibleVariety(f"symbol {sym[0]} has no bracket rule on a {alg.variety} algebra")
    out = OperatorElement(alg)
    for s, c in E.terms.items():
        for t, d in F.terms.items():
            part = _bracket_sym(alg, s, t)
            if part:
                out = out + part.scale(c * d)
    return out


def _as_op(alg, sym):
    return OperatorElement(alg, {sym: ONE})


def _bracket_sym(alg, s, t):
    if s[0] == "L" and t[0] == "L":
        return op_J(alg, alg.basis(s[1]), alg.basis(t[1]))
    if s[0] in SKEW and t[0] == "L":
        return op_L(alg, op_eval_key(_as_op(alg, s), t[1]))
    if s[0] == "L" and t[0] in SKEW:
        return -op_L(alg, op_eval_key(_as_op(alg, t), s[1]))
    # [D, D'] with D a derivation: D' = X(c, d) -> X(Dc, d) + X(c, Dd)
    D = _as_op(alg, s)
    c, d = alg.basis(t[1]), alg.basis(t[2])
    mk = op_J if t[0] == "J" else op_A
    return mk(alg, op_eval(D, c), d) + mk(alg, c, op_eval(D, d))


def _max_degree(E):
    m = 0
    for sym in E.terms:
        for k in sym[1:]:
            d = E.alg.key_degree(k)
            if d:
                m = max(m, max(abs(x) for x in d))
    return m


def op_equal(E, F, W=None):
    """Window-evaluation equality on every basis key with degree in W."""
    E._check(F)
    diff = E - F
    if not diff.terms:
        return True
    if W is None:
        W = DegreeWindow(2 * max(_max_degree(E), _max_degree(F)) + 1)
    elif not isinstance(W, DegreeWindow):
        W = DegreeWindow(W)
    alg = E.alg
    for deg in W.enum(alg.n):
        for key in alg.keys_at(deg):
            if op_eval_key(diff, key):
                return False
    return True


def op_vector(E, probes, deg):
    """Coordinates of E on probe keys, for an operator of degree ``deg``."""
    alg = E.alg
    vec = []
    for p in probes:
        img = op_eval_key(E, p)
        target = vadd(alg.key_degree(p), deg)
        for k in alg.keys_at(target):
            vec.append(img.coeff(k))
    return vec
