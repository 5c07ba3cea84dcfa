"""Jordan algebras with a Peirce frame: Hermitian matrices and reduced Clifford algebras."""

from __future__ import annotations

from fractions import Fraction
import itertools

from .errors import BadPeirce, BadTauList, IncompatibleKind, OctonionRankNot3, RankMismatch
from .graded import GradedAlgebra, GradedElement, add_into
from .lattice import vadd, vneg
from .scalars import ONE, ZERO, Scalar
from .tori import Laurent, Octonion, Quantum, anti_involution

__all__ = ["HermitianMatrix", "RedCliff", "check_peirce"]

HALF = Scalar.rational(Fraction(1, 2))


def _eps(l, *idx):
    v = [0] * l
    for i in idx:
        v[i] += 1
    return tuple(v)


class HermitianMatrix(GradedAlgebra):
    """H_l(A, sigma) with X.Y = (XY + YX)/2.

    Keys are ``(lam, ("d", i))`` for x^lam E_ii (present when sigma fixes
    x^lam) and ``(lam, ("o", i, j))``, i < j, for x^lam E_ij + sigma(x^lam) E_ji.
    """

    variety = "jordan"
    family = "HermitianMatrix"

    def __init__(self, ell, A, sigma=None):
        if ell < 2:
            raise RankMismatch("H_l(A, sigma) needs l >= 2")
        if isinstance(A, Octonion):
            if ell != 3:
                raise OctonionRankNot3("octonion Hermitian matrices are Jordan only for l = 3")
            sigma = sigma or anti_involution(A, "octonion_standard")
        elif isinstance(A, (Laurent, Quantum)):
            sigma = sigma or anti_involution(A, "sigma_e")
        else:
            raise IncompatibleKind(f"no Hermitian matrix algebra over {A!r}")
        self.ell = ell
        self.A = A
        self.sigma = sigma
        self.n = A.n
        self.period = max(2, A.period)
        self._cache = {}

    # basis ---------------------------------------------------------------
    def key_degree(self, key):
        return key[0]

    def key_label(self, key):
        lam, slot = key
        if slot[0] == "d":
            return f"x^{lam}E{slot[1] + 1}{slot[1] + 1}"
        return f"x^{lam}[E{slot[1] + 1}{slot[2] + 1}]"

    def keys_at(self, deg):
        deg = tuple(deg)
        if not self.A.supports(deg):
            return []
        out = []
        if self.sigma.sign(deg) == ONE:
            out += [(deg, ("d", i)) for i in range(self.ell)]
        out += [(deg, ("o", i, j)) for i in range(self.ell) for j in range(i + 1, self.ell)]
        return out

    def one_terms(self):
        z = (0,) * self.n
        return {(z, ("d", i)): ONE for i in range(self.ell)}

    def peirce_weight(self, key):
        slot = key[1]
        if slot[0] == "d":
            return _eps(self.ell, slot[1], slot[1])
        return _eps(self.ell, slot[1], slot[2])

    def idempotents(self):
        z = (0,) * self.n
        return [self.basis((z, ("d", i))) for i in range(self.ell)]

    # matrices ------------------------------------------------------------
    def to_matrix(self, key):
        lam, slot = key
        if slot[0] == "d":
            return {(slot[1], slot[1], lam): ONE}
        i, j = slot[1], slot[2]
        return {(i, j, lam): ONE, (j, i, lam): self.sigma.sign(lam)}

    def from_matrix(self, M):
        out = {}
        for (i, j, lam), c in M.items():
            if not c:
                continue
            if i == j:
                add_into(out, (lam, ("d", i)), c)
            elif i < j:
                add_into(out, (lam, ("o", i, j)), c)
            elif M.get((j, i, lam), ZERO) != c * self.sigma.sign(lam):
                raise BadPeirce("product left the Hermitian matrices")
        return out

    def _matmul(self, X, Y):
        acc = {}
        for (i, k, lam), c in X.items():
            for (k2, j, mu), d in Y.items():
                if k == k2:
                    kk = self.A.k(lam, mu)
                    if kk:
                        add_into(acc, (i, j, vadd(lam, mu)), c * d * kk)
        return acc

    def mul_keys(self, a, b):
        hit = self._cache.get((a, b))
        if hit is None:
            X, Y = self.to_matrix(a), self.to_matrix(b)
            acc = self._matmul(X, Y)
            for k, v in self._matmul(Y, X).items():
                add_into(acc, k, v)
            hit = self.from_matrix({k: v * HALF for k, v in acc.items()})
            self._cache[(a, b)] = hit
        return hit

    # hooks ---------------------------------------------------------------
    def trace_key(self, key):
        lam, slot = key
        return ONE if slot[0] == "d" and not any(lam) else ZERO

    def pre_chevalley_key(self, key):
        lam, slot = key
        return {(vneg(lam), slot): ONE}

    def central_element(self, mu):
        mu = tuple(mu)
        if self.A.central_element(mu) is None or self.sigma.sign(mu) != ONE:
            return None
        return GradedElement(self, {(mu, ("d", i)): ONE for i in range(self.ell)})

    def __repr__(self):
        return f"H_{self.ell}({self.A!r})"


class RedCliff(GradedAlgebra):
    """RedCliff(h) over Laurent polynomials with h(v_i, v_j) = delta_ij x^tau_i.

    Keys are ``(deg, tag)`` with tag ("e", 1), ("e", 2) (deg = 2 lam) or ("v", i)
    (deg = 2 lam + tau_i).
    """

    variety = "jordan"
    family = "RedCliff"
    period = 2

    def __init__(self, taus):
        taus = [tuple(int(x) for x in t) for t in taus]
        if len(taus) < 2:
            raise BadTauList("RedCliff(h) needs m >= 2")
        n = len(taus[0])
        if any(len(t) != n for t in taus):
            raise BadTauList("all tau_i must have the same rank")
        if any(taus[0]):
            raise BadTauList("tau_1 must be 0")
        res = [tuple(x % 2 for x in t) for t in taus]
        if len(set(res)) != len(res):
            raise BadTauList("tau_i must be pairwise distinct mod 2")
        self.taus = taus
        self.n = n
        self.m = len(taus)

    def key_degree(self, key):
        return key[0]

    def key_label(self, key):
        deg, tag = key
        if tag[0] == "e":
            return f"e{tag[1]}*x^{tuple(x // 2 for x in deg)}"
        lam = tuple((d - t) // 2 for d, t in zip(deg, self.taus[tag[1]]))
        return f"x^{lam}v{tag[1] + 1}"

    def keys_at(self, deg):
        deg = tuple(deg)
        out = []
        if all(x % 2 == 0 for x in deg):
            out += [(deg, ("e", 1)), (deg, ("e", 2))]
        for i, t in enumerate(self.taus):
            if all((d - x) % 2 == 0 for d, x in zip(deg, t)):
                out.append((deg, ("v", i)))
        return out

    def one_terms(self):
        z = (0,) * self.n
        return {(z, ("e", 1)): ONE, (z, ("e", 2)): ONE}

    def peirce_weight(self, key):
        tag = key[1]
        if tag == ("e", 1):
            return (2, 0)
        if tag == ("e", 2):
            return (0, 2)
        return (1, 1)

    def idempotents(self):
        z = (0,) * self.n
        return [self.basis((z, ("e", 1))), self.basis((z, ("e", 2)))]

    def mul_keys(self, a, b):
        (da, ta), (db, tb) = a, b
        deg = vadd(da, db)
        if ta[0] == "e" and tb[0] == "e":
            return {(deg, ta): ONE} if ta == tb else None
        if ta[0] == "e":
            return {(deg, tb): HALF}
        if tb[0] == "e":
            return {(deg, ta): HALF}
        if ta[1] != tb[1]:
            return None
        return {(deg, ("e", 1)): ONE, (deg, ("e", 2)): ONE}

    def trace_key(self, key):
        return ONE if key[1][0] == "e" and not any(key[0]) else ZERO

    def pre_chevalley_key(self, key):
        # x^lam v_i -> x^(-lam - tau_i) v_i negates the degree 2 lam + tau_i
        deg, tag = key
        return {(vneg(deg), tag): ONE}

    def central_element(self, mu):
        mu = tuple(mu)
        if any(x % 2 for x in mu):
            return None
        return GradedElement(self, {(mu, ("e", 1)): ONE, (mu, ("e", 2)): ONE})

    def __repr__(self):
        return f"RedCliff(taus={self.taus})"


def check_peirce(J, radius=1):
    """Verify the frame: orthogonal idempotents summing to 1, and Peirce weights on window keys."""
    es = J.idempotents()
    one = J.one()
    total = J.zero()
    for i, e in enumerate(es):
        total = total + e
        if J.mul(e, e) != e:
            raise BadPeirce(f"e{i + 1} is not idempotent")
        for j, f in enumerate(es):
            if i != j and J.mul(e, f):
                raise BadPeirce(f"e{i + 1} and e{j + 1} are not orthogonal")
    if total != one:
        raise BadPeirce("idempotents do not sum to 1")
    for deg in itertools.product(range(-radius, radius + 1), repeat=J.n):
        for key in J.keys_at(deg):
            w = J.peirce_weight(key)
            x = J.basis(key)
            for i, e in enumerate(es):
                want = x.scale(Scalar.rational(Fraction(w[i], 2)))
                if J.mul(e, x) != want:
                    raise BadPeirce(f"{J.key_label(key)} is not in the Peirce space of weight {w}")
    return True
