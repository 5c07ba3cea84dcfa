"""Coordinate tori: the seven families of Lambda-graded coordinate algebras.

Monomials are stored as ``x^a = x_1^{a_1} ... x_n^{a_n}``.  For quantum
tori the relations read ``x_i x_j = q_ij x_j x_i`` and the structure
constant ``k(a, b)`` of ``x^a x^b = k(a, b) x^(a+b)`` is produced by
normal ordering; :func:`normal_order_word` is the brute-force rewrite used
to cross-check the closed form.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd

from .errors import (
    AlgebraMismatch,
    BadSemilattice,
    IncompatibleKind,
    InvalidQuantumMatrix,
    MissingAntiInvolution,
    NonRootOfUnityParameter,
    NotHomogeneous,
    RankMismatch,
    ZeroElement,
)
from .graded import GradedAlgebra, GradedElement, add_into
from .lattice import Semilattice, vadd, vneg, vsub
from .scalars import ONE, ZERO, Scalar, as_scalar, root_of_unity, root_order

__all__ = [
    "TorusAlgebra",
    "TorusElement",
    "Laurent",
    "Quantum",
    "Octonion",
    "JordanPlus",
    "Hermitian",
    "CliffordJS",
    "Albert",
    "build_torus",
    "mul",
    "homog_inverse",
    "monomial",
    "normal_order_word",
    "quantum_torus",
    "reversing_anti_automorphism",
    "monomial_word",
    "octonion_epsilon",
    "pre_chevalley_torus",
    "anti_involution",
    "AntiInvolution",
    "TorusInvolution",
    "center_support",
    "commutator_component",
    "support_generates",
]

HALF = Scalar.rational(Fraction(1, 2))

TorusElement = GradedElement


def _lcm(a, b):
    return a * b // gcd(a, b)


class TorusAlgebra(GradedAlgebra):
    """Lambda-torus whose homogeneous components are at most one-dimensional."""

    family = "torus"

    def __init__(self, n):
        self.n = n
        self._kcache = {}

    # basis ---------------------------------------------------------------
    def supports(self, alpha):
        return True

    def keys_at(self, deg):
        return [tuple(deg)] if self.supports(deg) else []

    def one_terms(self):
        return {(0,) * self.n: ONE}

    def k(self, a, b):
        key = (a, b)
        val = self._kcache.get(key)
        if val is None:
            if self.supports(a) and self.supports(b):
                val = self._k(a, b)
            else:
                val = ZERO
            self._kcache[key] = val
        return val

    def _k(self, a, b):
        raise NotImplementedError

    def mul_keys(self, a, b):
        c = self.k(a, b)
        if not c:
            return None
        return {vadd(a, b): c}

    def x(self, alpha, c=1):
        alpha = tuple(alpha)
        if len(alpha) != self.n:
            raise RankMismatch(f"degree {alpha} does not have rank {self.n}")
        if not self.supports(alpha):
            raise ValueError(f"{alpha} is not in the support")
        return GradedElement(self, {alpha: as_scalar(c)})

    # hooks used by the Lie constructions ------------------------------------
    def trace_key(self, key):
        """Constant-term trace of a basis key."""
        return ONE if not any(key) else ZERO

    def pre_chevalley_key(self, key):
        return {vneg(key): ONE}

    def central_element(self, mu):
        """x^mu if it commutes and associates with every probe, else None."""
        mu = tuple(mu)
        cache = self.__dict__.setdefault("_central_cache", {})
        res = tuple(x % self.period for x in mu)
        if res not in cache:
            cache[res] = self._is_central(res)
        return self.x(mu) if cache[res] else None

    def _is_central(self, mu):
        if not self.supports(mu):
            return False
        z = self.x(mu)
        probes = [self.basis(k) for k in self.probe_keys()]
        m = self.mul
        for a in probes:
            if m(z, a) != m(a, z):
                return False
            for b in probes:
                ab = m(a, b)
                if m(m(z, a), b) != m(z, ab) or m(m(a, z), b) != m(a, m(z, b)) or m(ab, z) != m(a, m(b, z)):
                    return False
        return True

    def __repr__(self):
        return f"{self.family}(n={self.n})"


class Laurent(TorusAlgebra):
    family = "Laurent"
    variety = "associative"

    def _k(self, a, b):
        return ONE

    def q(self, i, j):
        return ONE


def _check_qmatrix(q, n):
    q = [[as_scalar(x) for x in row] for row in q]
    if len(q) != n or any(len(r) != n for r in q):
        raise InvalidQuantumMatrix(f"quantum matrix must be {n}x{n}")
    for i in range(n):
        if q[i][i] != ONE:
            raise InvalidQuantumMatrix(f"q[{i}][{i}] must be 1")
        for j in range(n):
            if q[i][j] * q[j][i] != ONE:
                raise InvalidQuantumMatrix(f"q[{i}][{j}] q[{j}][{i}] must be 1")
            if root_order(q[i][j]) is None:
                raise NonRootOfUnityParameter(f"q[{i}][{j}] = {q[i][j]} is not a root of unity")
    return q


def quantum_k(q, a, b):
    """Closed form: x^a x^b = prod_{i<j} q_ji^(a_j b_i) x^(a+b)."""
    c = ONE
    n = len(a)
    for i in range(n):
        bi = b[i]
        if not bi:
            continue
        for j in range(i + 1, n):
            e = a[j] * bi
            if e:
                c = c * q[j][i] ** e
    return c


class Quantum(TorusAlgebra):
    family = "Quantum"
    variety = "associative"

    def __init__(self, q):
        n = len(q)
        super().__init__(n)
        self.qm = _check_qmatrix(q, n)
        self.period = 1
        for row in self.qm:
            for x in row:
                self.period = _lcm(self.period, root_order(x))

    def q(self, i, j):
        return self.qm[i][j]

    def _k(self, a, b):
        return quantum_k(self.qm, a, b)

    def is_sign_matrix(self):
        return all(x == ONE or x == -ONE for row in self.qm for x in row)


def quantum_torus(q, n=2):
    """Quantum torus with q_ij = q for i < j and q_ji = q^-1."""
    q = as_scalar(q)
    m = [[ONE] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            m[i][j] = q
            m[j][i] = q.inv()
    return Quantum(m)


def normal_order_word(q, word):
    """Rewrite a word of letters (i, +-1) into coefficient * x_1^.. x_n^..

    Adjacent letters (j, s)(i, t) with j > i are swapped using
    x_j^s x_i^t = q_ji^(s t) x_i^t x_j^s, until the word is sorted.
    """
    q = [[as_scalar(x) for x in row] for row in q]
    n = len(q)
    letters = list(word)
    coef = ONE
    changed = True
    while changed:
        changed = False
        for p in range(len(letters) - 1):
            (j, s), (i, t) = letters[p], letters[p + 1]
            if j > i:
                coef = coef * q[j][i] ** (s * t)
                letters[p], letters[p + 1] = letters[p + 1], letters[p]
                changed = True
    exps = [0] * n
    for i, s in letters:
        exps[i] += s
    return coef, tuple(exps)


def monomial_word(alpha):
    """Letters of x_1^{a_1} ... x_n^{a_n}."""
    word = []
    for i, a in enumerate(alpha):
        step = 1 if a > 0 else -1
        word.extend([(i, step)] * abs(a))
    return word


def octonion_epsilon(a, b):
    """The sign exponent for the Cayley part of the octonion torus."""
    a1, a2, a3 = a[0], a[1], a[2]
    b1, b2, b3 = b[0], b[1], b[2]
    return (a3 * b1 + a2 * b1 + a3 * b2 + a1 * b2 * b3 + a2 * b1 * b3 + a3 * b1 * b2) % 2


class Octonion(TorusAlgebra):
    """Octonion torus; coordinates beyond the third are central Laurent variables."""

    family = "Octonion"
    variety = "alternative"
    period = 2

    def __init__(self, n=3):
        if n < 3:
            raise RankMismatch("the octonion torus needs rank at least 3")
        super().__init__(n)

    def _k(self, a, b):
        return -ONE if octonion_epsilon(a, b) else ONE


class JordanPlus(TorusAlgebra):
    """Plus algebra of a quantum torus, product (uv + vu)/2."""

    family = "JordanPlus"
    variety = "jordan"

    def __init__(self, q):
        n = len(q)
        super().__init__(n)
        self.assoc = Quantum(q)
        self.period = self.assoc.period

    def _k(self, a, b):
        return (self.assoc.k(a, b) + self.assoc.k(b, a)) * HALF


def reversal_sign(q, alpha):
    """x_n^{a_n} ... x_1^{a_1} = r(a) x^a with r(a) = prod_{i<j} q_ji^(a_i a_j)."""
    c = ONE
    n = len(alpha)
    for i in range(n):
        for j in range(i + 1, n):
            e = alpha[i] * alpha[j]
            if e:
                c = c * as_scalar(q[j][i]) ** e
    return c


class Hermitian(TorusAlgebra):
    """Symmetric elements of K_e under the involution fixing every x_i."""

    family = "Hermitian"
    variety = "jordan"
    period = 2

    def __init__(self, e):
        n = len(e)
        e = [[as_scalar(x) for x in row] for row in e]
        for row in e:
            for x in row:
                if x != ONE and x != -ONE:
                    raise InvalidQuantumMatrix("Hermitian tori need an elementary (+-1) quantum matrix")
        super().__init__(n)
        self.assoc = Quantum(e)

    def supports(self, alpha):
        return reversal_sign(self.assoc.qm, alpha) == ONE

    def _k(self, a, b):
        return (self.assoc.k(a, b) + self.assoc.k(b, a)) * HALF


class CliffordJS(TorusAlgebra):
    """Clifford Jordan torus over a semilattice S of Z^m, times Z^(n-m)."""

    family = "CliffordJS"
    variety = "jordan"
    period = 2

    def __init__(self, n, m, semilattice):
        if not isinstance(semilattice, Semilattice):
            semilattice = Semilattice(m, semilattice)
        if semilattice.m != m or not (1 <= m <= n):
            raise BadSemilattice("semilattice rank must match m with 1 <= m <= n")
        super().__init__(n)
        self.m = m
        self.S = semilattice

    def eps(self, alpha):
        return self.S.representative(tuple(alpha[: self.m]))

    def supports(self, alpha):
        return self.S.contains(tuple(alpha[: self.m]))

    def _k(self, a, b):
        ea, eb = self.eps(a), self.eps(b)
        if not any(ea) or not any(eb) or ea == eb:
            return ONE
        return ZERO


# Albert torus -----------------------------------------------------------------


class Albert(TorusAlgebra):
    """Albert torus realised as a first Tits construction over the quantum torus K_w.

    ``K_w`` has generators u_1..u_n with u_1 u_2 = omega u_2 u_1 and all
    other pairs commuting; u_3 carries Lambda-degree 3*lambda_3.  The
    monomial x^a lives in slot ``a_3 mod 3`` of the triple.
    """

    family = "Albert"
    variety = "jordan"
    period = 3

    def __init__(self, n=3):
        if n < 3:
            raise RankMismatch("the Albert torus needs rank at least 3")
        super().__init__(n)
        w = [[ONE] * n for _ in range(n)]
        w[0][1] = root_of_unity(1, 3)
        w[1][0] = root_of_unity(2, 3)
        self.kw = Quantum(w)

    # K_w arithmetic on dicts delta -> Scalar ---------------------------------
    def _qmul(self, u, v):
        acc = {}
        for a, ca in u.items():
            for b, cb in v.items():
                add_into(acc, vadd(a, b), ca * cb * self.kw.k(a, b))
        return acc

    @staticmethod
    def _qadd(*parts):
        acc = {}
        for p, c in parts:
            for k, v in p.items():
                add_into(acc, k, v * c)
        return acc

    def _tr(self, u):
        out = {}
        for d, c in u.items():
            if d[0] % 3 == 0 and d[1] % 3 == 0:
                out[d] = c * 3
        return out

    def _dot(self, u, v):
        return self._qadd((self._qmul(u, v), HALF), (self._qmul(v, u), HALF))

    def _cross(self, u, v):
        one = {(0,) * self.n: ONE}
        tu, tv = self._tr(u), self._tr(v)
        uv = self._dot(u, v)
        inner = self._qadd((self._qmul(tu, tv), ONE), (self._tr(uv), -ONE))
        return self._qadd(
            (uv, ONE),
            (self._qmul(tu, v), -HALF),
            (self._qmul(tv, u), -HALF),
            (self._qmul(inner, one), HALF),
        )

    def _bar(self, u):
        return self._qadd((self._tr(u), HALF), (u, -HALF))

    def _shift3(self, u, s):
        # multiply by u_3^s (central)
        return {tuple(d[i] + (s if i == 2 else 0) for i in range(self.n)): c for d, c in u.items()}

    def triple_of(self, alpha):
        """x^alpha as a triple of K_w elements."""
        r = alpha[2] % 3
        d = list(alpha)
        if r == 0:
            d[2] = alpha[2] // 3
        elif r == 1:
            d[2] = (alpha[2] - 1) // 3
        else:
            d[2] = (alpha[2] + 1) // 3
        slots = [{}, {}, {}]
        slots[r] = {tuple(d): ONE}
        return slots

    def degree_of(self, slot, delta):
        d = list(delta)
        d[2] = 3 * delta[2] + (0, 1, -1)[slot]
        return tuple(d)

    def triple_product(self, x, y):
        x0, x1, x2 = x
        y0, y1, y2 = y
        z0 = self._qadd(
            (self._dot(x0, y0), ONE),
            (self._bar(self._qmul(x1, y2)), ONE),
            (self._bar(self._qmul(y1, x2)), ONE),
        )
        z1 = self._qadd(
            (self._qmul(self._bar(x0), y1), ONE),
            (self._qmul(self._bar(y0), x1), ONE),
            (self._shift3(self._cross(x2, y2), -1), ONE),
        )
        z2 = self._qadd(
            (self._qmul(y2, self._bar(x0)), ONE),
            (self._qmul(x2, self._bar(y0)), ONE),
            (self._shift3(self._cross(x1, y1), 1), ONE),
        )
        return [z0, z1, z2]

    def product_components(self, a, b):
        """All (degree, coefficient) pairs of x^a x^b computed in the triple model."""
        z = self.triple_product(self.triple_of(a), self.triple_of(b))
        out = {}
        for slot in range(3):
            for d, c in z[slot].items():
                add_into(out, self.degree_of(slot, d), c)
        return out

    def _k(self, a, b):
        comps = self.product_components(a, b)
        target = vadd(a, b)
        extra = [d for d in comps if d != target]
        if extra:
            raise AssertionError(f"Albert product x^{a} x^{b} leaves its degree: {extra}")
        return comps.get(target, ZERO)


# generic operations -------------------------------------------------------------


def monomial(A, alpha, c=1):
    return A.x(alpha, c)


def mul(A, u, v):
    if u.alg is not A or v.alg is not A:
        raise AlgebraMismatch("elements do not belong to this torus")
    return A.mul(u, v)


def homog_inverse(A, x):
    if x.alg is not A:
        raise AlgebraMismatch("element does not belong to this torus")
    if x.is_zero():
        raise ZeroElement("zero has no inverse")
    if not x.is_homogeneous():
        raise NotHomogeneous("inverse is only defined for homogeneous elements")
    (lam, c), = x.terms.items()
    neg = vneg(lam)
    if not A.supports(neg):
        raise NotHomogeneous(f"degree {neg} is outside the support")
    k = A.k(lam, neg)
    if not k:
        raise ZeroElement(f"x^{lam} is not invertible")
    return GradedElement(A, {neg: (c * k).inv()})


def center_support(A, lam):
    """x^lam is central iff prod_j q_ij^(lam_j) = 1 for every i."""
    if isinstance(A, Laurent):
        return True
    if not isinstance(A, Quantum):
        raise IncompatibleKind("center support is defined for associative tori")
    for i in range(A.n):
        c = ONE
        for j in range(A.n):
            if lam[j]:
                c = c * A.q(i, j) ** lam[j]
        if c != ONE:
            return False
    return True


def commutator_component(A, lam):
    """True iff A^lam lies in [A, A]; searched over beta mod the period."""
    if isinstance(A, Laurent):
        return False
    if not isinstance(A, Quantum):
        raise IncompatibleKind("commutator components are defined for associative tori")
    lam = tuple(lam)
    for beta in itertools.product(range(A.period), repeat=A.n):
        other = vsub(lam, beta)
        if A.k(beta, other) != A.k(other, beta):
            return True
    return False


def support_generates(A, radius=2):
    """Does the support observed in the window generate Z^n as a group?"""
    from .linalg import lattice_generates

    degs = [d for d in itertools.product(range(-radius, radius + 1), repeat=A.n) if A.supports(d)]
    return lattice_generates(degs, A.n)


# involutions on tori --------------------------------------------------------------


class TorusInvolution:
    """Degree-reversing map x^a -> x^-a of a coordinate torus."""

    kind = "pre_chevalley"

    def __init__(self, A):
        self.alg = A

    def coefficient(self, alpha):
        return ONE

    def image_key(self, alpha):
        return vneg(alpha)

    def apply(self, u):
        acc = {}
        for a, c in u.terms.items():
            add_into(acc, vneg(a), c * self.coefficient(a))
        return GradedElement(self.alg, acc)

    __call__ = apply


def pre_chevalley_torus(A):
    return TorusInvolution(A)


class AntiInvolution:
    """Degree-preserving anti-involution with sigma(x^a) = sign(a) x^a."""

    def __init__(self, A, kind, sign):
        self.alg = A
        self.kind = kind
        self._sign = sign

    def sign(self, alpha):
        return self._sign(tuple(alpha))

    def apply(self, u):
        return GradedElement(self.alg, {a: c * self.sign(a) for a, c in u.terms.items()})

    __call__ = apply


def anti_involution(A, kind, params=None):
    params = params or {}
    if kind in ("sigma_e", "hermitian_bar"):
        if isinstance(A, Laurent):
            qm = [[ONE] * A.n for _ in range(A.n)]
        elif isinstance(A, Quantum):
            if not A.is_sign_matrix():
                raise IncompatibleKind("sigma_e needs a quantum matrix with entries +-1")
            qm = A.qm
        else:
            raise IncompatibleKind(f"{kind} is defined on quantum tori")
        if kind == "hermitian_bar":
            e = [ONE] * A.n
        else:
            e = [as_scalar(x) for x in params.get("e", [1] * A.n)]
            if len(e) != A.n or any(x != ONE and x != -ONE for x in e):
                raise IncompatibleKind("sigma_e needs e_i in {1, -1}")

        def sign(alpha):
            c = reversal_sign(qm, alpha)
            for ei, ai in zip(e, alpha):
                if ei == -ONE and ai % 2:
                    c = -c
            return c

        return AntiInvolution(A, kind, sign)
    if kind == "octonion_standard":
        if not isinstance(A, Octonion):
            raise IncompatibleKind("octonion_standard needs the octonion torus")

        def sign(alpha):
            return ONE if all(x % 2 == 0 for x in alpha[:3]) else -ONE

        return AntiInvolution(A, kind, sign)
    raise IncompatibleKind(f"unknown anti-involution kind {kind!r}")


def reversing_anti_automorphism(A):
    """Coefficient map for rho(x^a) = c(a) x^-a, an anti-automorphism of A.

    rho is the pre-Chevalley inversion composed with a degree-preserving
    anti-involution, so it exists exactly when the latter does.
    """
    if isinstance(A, Laurent):
        return lambda alpha: ONE
    if isinstance(A, Quantum):
        if not A.is_sign_matrix():
            raise MissingAntiInvolution(
                "a degree-reversing anti-automorphism needs q = q^-1; this quantum torus has none"
            )
        return anti_involution(A, "hermitian_bar").sign
    if isinstance(A, Octonion):
        return anti_involution(A, "octonion_standard").sign
    raise MissingAntiInvolution(f"no degree-reversing anti-automorphism is known for {A!r}")


# spec parsing ---------------------------------------------------------------------


def _parse_q(spec, key="q"):
    from .scalars import parse_scalar

    cond = spec.get("conductor", 1)
    rows = spec.get(key)
    if rows is None:
        raise InvalidQuantumMatrix(f"missing {key!r} matrix")
    return [[parse_scalar(x, cond) for x in row] for row in rows]


def build_torus(spec):
    """Build a torus from its JSON description."""
    from .errors import InputError

    if not isinstance(spec, dict) or "family" not in spec:
        raise InputError("torus spec needs a 'family' field")
    fam = spec["family"]
    n = spec.get("rank")
    if fam == "Laurent":
        return Laurent(int(n))
    if fam == "Quantum":
        return Quantum(_parse_q(spec))
    if fam == "Octonion":
        return Octonion(int(n or 3))
    if fam == "JordanPlus":
        return JordanPlus(_parse_q(spec))
    if fam == "Hermitian":
        key = "e" if "e" in spec else "q"
        return Hermitian(_parse_q(spec, key))
    if fam == "CliffordJS":
        sl = spec.get("semilattice") or {}
        S = Semilattice(int(sl.get("m", 0)), sl.get("reps", []))
        return CliffordJS(int(n), S.m, S)
    if fam == "Albert":
        return Albert(int(n or 3))
    raise InputError(f"unknown torus family {fam!r}")
