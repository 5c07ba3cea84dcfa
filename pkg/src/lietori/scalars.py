"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A :class:`Scalar` stores a conductor ``N`` and the rational coordinates of
the element on the power basis ``1, z, ..., z^(phi(N)-1)`` where ``z`` is a
primitive N-th root of unity.  Coordinates are always reduced modulo the
N-th cyclotomic polynomial, so equal values compare equal coefficient-wise
once both operands sit in the same field.  Mixed conductors are handled by
embedding into Q(zeta_lcm).

Values that turn out to be rational are stored with conductor 1; this keeps
the common case (signs, halves, integer Cartan data) on a cheap fast path.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import DivisionByZero, InvalidConductor, NotRootOfUnity, ParseError

__all__ = [
    "Scalar",
    "as_scalar",
    "root_of_unity",
    "sqrt_root_of_unity",
    "root_order",
    "parse_scalar",
    "format_scalar",
    "ZERO",
    "ONE",
]


def _lcm(a, b):
    return a * b // gcd(a, b)


@lru_cache(maxsize=None)
def _phi(n):
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divexact(num, den):
    # integer polynomials, lowest degree first, den monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    assert not any(num[: len(den) - 1])
    return out


@lru_cache(maxsize=None)
def _cyclotomic(n):
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, _cyclotomic(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _powers(n):
    """Coordinates of z^k for k = 0..n-1 on the power basis of Q(zeta_n)."""
    f = _phi(n)
    if n == 1:
        return ((Fraction(1),),)
    cyc = _cyclotomic(n)
    table = []
    cur = [Fraction(0)] * f
    cur[0] = Fraction(1)
    for _ in range(n):
        table.append(tuple(cur))
        top = cur[-1]
        nxt = [Fraction(0)] + cur[:-1]
        if top:
            for i in range(f):
                nxt[i] -= top * cyc[i]
        cur = nxt
    return tuple(table)


@lru_cache(maxsize=None)
def _sparse_powers(n):
    return tuple(
        tuple((i, c) for i, c in enumerate(vec) if c) for vec in _powers(n)
    )


@lru_cache(maxsize=None)
def _embedding(n, m):
    """Images of the basis z_n^k (k < phi(n)) inside Q(zeta_m), n | m."""
    step = m // n
    pw = _powers(m)
    return tuple(pw[(k * step) % m] for k in range(_phi(n)))


@lru_cache(maxsize=None)
def _traces(n):
    # Ramanujan sums c_n(k) give Tr(z^k); normalised by phi(n)
    f = _phi(n)
    out = []
    for k in range(f):
        g = gcd(n, k)
        m = n // g
        out.append(Fraction(_mobius(m), _phi(m)))
    return tuple(out)


def _mobius(m):
    res = 1
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            res = -res
        p += 1
    if m > 1:
        res = -res
    return res


class Scalar:
    """Element of Q(zeta_N), immutable."""

    __slots__ = ("n", "c")

    def __init__(self, n, coeffs):
        self.n = n
        self.c = coeffs

    # construction helpers -------------------------------------------------
    @staticmethod
    def rational(q):
        return Scalar(1, (Fraction(q),))

    @staticmethod
    def _make(n, coeffs):
        if n > 1 and not any(coeffs[1:]):
            return Scalar(1, (coeffs[0],))
        return Scalar(n, tuple(coeffs))

    def embed(self, m):
        """Coordinates of ``self`` inside Q(zeta_m); requires N | m."""
        if self.n == m:
            return self.c
        if m % self.n:
            raise InvalidConductor(f"cannot embed conductor {self.n} into {m}")
        f = _phi(m)
        if self.n == 1:
            return (self.c[0],) + (Fraction(0),) * (f - 1)
        out = [Fraction(0)] * f
        for ck, img in zip(self.c, _embedding(self.n, m)):
            if ck:
                for i, v in enumerate(img):
                    if v:
                        out[i] += ck * v
        return tuple(out)

    # predicates -----------------------------------------------------------
    def is_zero(self):
        return not any(self.c)

    def __bool__(self):
        return any(self.c)

    def is_rational(self):
        return self.n == 1

    def to_fraction(self):
        if self.n != 1:
            raise ValueError("scalar is not rational")
        return self.c[0]

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        other = as_scalar(other)
        if self.n == 1 and other.n == 1:
            return Scalar(1, (self.c[0] + other.c[0],))
        m = self.n if self.n == other.n else _lcm(self.n, other.n)
        a = self.embed(m)
        b = other.embed(m)
        return Scalar._make(m, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.n, tuple(-x for x in self.c))

    def __sub__(self, other):
        return self + (-as_scalar(other))

    def __rsub__(self, other):
        return as_scalar(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Fraction)):
                if self.n == 1:
                    return Scalar(1, (self.c[0] * other,))
                return Scalar._make(self.n, [x * other for x in self.c])
            other = as_scalar(other)
        if self.n == 1:
            a = self.c[0]
            if other.n == 1:
                return Scalar(1, (a * other.c[0],))
            return Scalar._make(other.n, [a * x for x in other.c])
        if other.n == 1:
            b = other.c[0]
            return Scalar._make(self.n, [b * x for x in self.c])
        m = self.n if self.n == other.n else _lcm(self.n, other.n)
        a = self.embed(m)
        b = other.embed(m)
        pw = _sparse_powers(m)
        out = [Fraction(0)] * _phi(m)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if not y:
                    continue
                xy = x * y
                for idx, v in pw[(i + j) % m]:
                    out[idx] += xy * v
        return Scalar._make(m, out)

    __rmul__ = __mul__

    def inv(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero scalar")
        if self.n == 1:
            return Scalar(1, (1 / self.c[0],))
        # solve (multiplication by self) x = 1 on the power basis
        n = self.n
        f = _phi(n)
        pw = _powers(n)
        cols = []
        for j in range(f):
            col = [Fraction(0)] * f
            for i, x in enumerate(self.c):
                if x:
                    for idx, v in enumerate(pw[(i + j) % n]):
                        if v:
                            col[idx] += x * v
            cols.append(col)
        mat = [[cols[j][i] for j in range(f)] + [Fraction(int(i == 0))] for i in range(f)]
        for col in range(f):
            piv = next(r for r in range(col, f) if mat[r][col])
            mat[col], mat[piv] = mat[piv], mat[col]
            p = mat[col][col]
            mat[col] = [v / p for v in mat[col]]
            for r in range(f):
                if r != col and mat[r][col]:
                    fac = mat[r][col]
                    mat[r] = [a - fac * b for a, b in zip(mat[r], mat[col])]
        return Scalar._make(n, [mat[i][f] for i in range(f)])

    def __truediv__(self, other):
        other = as_scalar(other)
        if other.n == 1:
            if not other.c[0]:
                raise DivisionByZero("division by zero scalar")
            q = other.c[0]
            return Scalar._make(self.n, [x / q for x in self.c])
        return self * other.inv()

    def __rtruediv__(self, other):
        return as_scalar(other) * self.inv()

    def __pow__(self, k):
        if k < 0:
            return self.inv() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self):
        """Field automorphism z -> z^-1."""
        if self.n == 1:
            return self
        n = self.n
        pw = _powers(n)
        out = [Fraction(0)] * _phi(n)
        for k, x in enumerate(self.c):
            if x:
                for idx, v in enumerate(pw[(-k) % n]):
                    if v:
                        out[idx] += x * v
        return Scalar._make(n, out)

    # comparison -----------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Fraction)):
                return self.n == 1 and self.c[0] == other
            return NotImplemented
        if self.n == other.n:
            return self.c == other.c
        if self.n == 1 or other.n == 1:
            return False  # stored values are demoted whenever rational
        m = _lcm(self.n, other.n)
        return self.embed(m) == other.embed(m)

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if self.n == 1:
            return hash(self.c[0])
        tr = sum((x * t for x, t in zip(self.c, _traces(self.n))), Fraction(0))
        return hash(("cyc", tr))

    def __repr__(self):
        return f"Scalar({format_scalar(self)!r}, N={self.n})"

    def __str__(self):
        return format_scalar(self)

    def to_complex(self):
        import cmath

        z = cmath.exp(2j * cmath.pi / self.n)
        return sum(float(x) * z**k for k, x in enumerate(self.c))


ZERO = Scalar(1, (Fraction(0),))
ONE = Scalar(1, (Fraction(1),))


def as_scalar(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar(1, (Fraction(x),))
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"cannot convert {type(x).__name__} to Scalar")


@lru_cache(maxsize=4096)
def root_of_unity(k, n):
    """zeta_n ** k in canonical form."""
    if not isinstance(n, int) or n < 1:
        raise InvalidConductor(f"conductor must be a positive integer, got {n!r}")
    return Scalar._make(n, list(_powers(n)[k % n]))


def root_order(u):
    """Multiplicative order of ``u`` if it is a root of unity, else None."""
    u = as_scalar(u)
    n = u.n
    top = 2 * n if n % 2 else n
    for d in range(1, top + 1):
        if top % d == 0 and u**d == ONE:
            return d
    return None


def sqrt_root_of_unity(u):
    """Square root of a root of unity, the power of zeta_2N with least exponent."""
    u = as_scalar(u)
    order = root_order(u)
    if order is None:
        raise NotRootOfUnity(f"{format_scalar(u)} is not a root of unity")
    n = _lcm(u.n, order)
    m = 2 * n
    for k in range(m):
        v = root_of_unity(k, m)
        if v * v == u:
            return v
    raise NotRootOfUnity(f"no square root found for {format_scalar(u)}")


# text form --------------------------------------------------------------

_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<coef>\d+(?:/\d+)?)\s*(?:\*\s*)?)?
        (?P<z>z(?:\s*\^\s*(?P<exp>-?\d+))?)?\s*""",
    re.VERBOSE,
)


def parse_scalar(text, conductor=1):
    """Parse ``"1/2 - 1*z^3"`` with ``z`` a primitive ``conductor``-th root."""
    if isinstance(text, dict):
        return parse_scalar(text.get("value", "0"), text.get("conductor", conductor))
    if isinstance(text, (int, Fraction)):
        return as_scalar(text)
    if not isinstance(conductor, int) or conductor < 1:
        raise InvalidConductor(f"conductor must be a positive integer, got {conductor!r}")
    s = str(text).strip()
    if not s:
        raise ParseError("empty scalar text")
    total = ZERO
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse scalar {text!r} at position {pos}")
        if not first and m.group("sign") is None:
            raise ParseError(f"missing operator in scalar {text!r}")
        if m.group("coef") is None and m.group("z") is None:
            raise ParseError(f"dangling sign in scalar {text!r}")
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("sign") == "-":
            coef = -coef
        if m.group("z"):
            exp = int(m.group("exp")) if m.group("exp") is not None else 1
            term = root_of_unity(exp, conductor) * coef
        else:
            term = Scalar(1, (coef,))
        total = total + term
        pos = m.end()
        first = False
    return total


def format_scalar(x):
    x = as_scalar(x)
    parts = []
    for k, c in enumerate(x.c):
        if not c:
            continue
        mag = abs(c)
        body = str(mag) if k == 0 else f"{mag}*z^{k}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


def scalar_to_json(x):
    x = as_scalar(x)
    return {"conductor": x.n, "value": format_scalar(x)}
