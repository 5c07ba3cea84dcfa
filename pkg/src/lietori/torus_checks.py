"""Window sweeps of the defining laws of a coordinate torus."""

from __future__ import annotations

import itertools
import random

from .errors import LieToriError
from .lattice import DegreeWindow, vadd, vneg
from .report import Report
from .scalars import format_scalar
from .tori import Laurent, Octonion, Quantum, anti_involution, homog_inverse

__all__ = ["check_torus", "TRIPLE_RADIUS"]

# associativity and linearized alternativity run over all triples of this radius
TRIPLE_RADIUS = 1


def _show(x):
    return repr(x)


def _keys(A, radius):
    return [k for d in DegreeWindow(radius).enum(A.n) for k in A.keys_at(d)]


def _anti(A):
    if isinstance(A, Octonion):
        return anti_involution(A, "octonion_standard")
    if isinstance(A, Laurent) or (isinstance(A, Quantum) and A.is_sign_matrix()):
        return anti_involution(A, "sigma_e")
    return None


def check_torus(A, W=2, *, samples=200, seed=42, full_pairs=True):
    """Grading, inverses, variety identities and k(a, b) = k(-a, -b) on a window.

    ``full_pairs=False`` restricts the pair sweeps to radius 1 and adds
    ``samples`` seeded pairs from the full window (used for Albert tori).
    """
    W = W if isinstance(W, DegreeWindow) else DegreeWindow(W)
    rep = Report(window=W.radius)
    keys = _keys(A, W.radius)
    small = _keys(A, min(1, W.radius))
    rep.atoms_checked = len(keys)
    rng = random.Random(seed)
    if full_pairs:
        pairs = list(itertools.product(keys, repeat=2))
    else:
        pairs = list(itertools.product(small, repeat=2))
        pairs += [(rng.choice(keys), rng.choice(keys)) for _ in range(samples)]

    names = ["grading", "invertibility", "pre_chevalley"]
    variety = A.variety
    if variety == "associative":
        names.append("associativity")
    elif variety == "alternative":
        names += ["alternativity", "anticommutation"]
    else:
        names += ["commutativity", "jordan_identity"]
    anti = _anti(A)
    if anti is not None:
        names.append("anti_involution")
    for nm in names:
        rep.record(nm, True)

    b = A.basis
    m = A.mul
    one = A.one()

    try:
        for a, c in pairs:
            prod = m(b(a), b(c))
            want = vadd(A.key_degree(a), A.key_degree(c))
            bad = [k for k in prod.terms if A.key_degree(k) != want]
            if bad:
                rep.record("grading", False, {"x": A.key_label(a), "y": A.key_label(c), "stray_degree": list(A.key_degree(bad[0]))})
            if hasattr(A, "k") and A.supports(vneg(a)) and A.supports(vneg(c)):
                k1, k2 = A.k(a, c), A.k(vneg(a), vneg(c))
                if k1 != k2:
                    rep.record("pre_chevalley", False, {"alpha": list(a), "beta": list(c), "k(a,b)": format_scalar(k1), "k(-a,-b)": format_scalar(k2)})
    except AssertionError as exc:
        rep.record("grading", False, {"error": str(exc)})

    for a in keys:
        x = b(a)
        try:
            y = homog_inverse(A, x) if hasattr(A, "k") else None
        except LieToriError as exc:
            rep.record("invertibility", False, {"x": A.key_label(a), "error": str(exc)})
            continue
        if y is not None and (m(x, y) != one or m(y, x) != one):
            rep.record("invertibility", False, {"x": A.key_label(a), "x*inv": _show(m(x, y)), "inv*x": _show(m(y, x))})

    if variety == "associative":
        for a, c, d in _triples(A, rng, samples):
            x, y, z = b(a), b(c), b(d)
            lhs, rhs = m(m(x, y), z), m(x, m(y, z))
            if lhs != rhs:
                rep.record("associativity", False, {"x": A.key_label(a), "y": A.key_label(c), "z": A.key_label(d), "(xy)z": _show(lhs), "x(yz)": _show(rhs)})
                break
    elif variety == "alternative":
        for a, c in pairs:
            x, y = b(a), b(c)
            xx = m(x, x)
            if m(xx, y) != m(x, m(x, y)) or m(y, xx) != m(m(y, x), x):
                rep.record("alternativity", False, {"u": A.key_label(a), "v": A.key_label(c)})
                break
        for a, c, d in _triples(A, rng, samples):
            x, y, z = b(a), b(c), b(d)
            left = m(m(x, y), z) + m(m(y, x), z) - m(x, m(y, z)) - m(y, m(x, z))
            right = m(m(z, x), y) + m(m(z, y), x) - m(z, m(x, y)) - m(z, m(y, x))
            if left or right:
                rep.record("alternativity", False, {"x": A.key_label(a), "y": A.key_label(c), "z": A.key_label(d), "linearized": _show(left or right)})
                break
        for i, j in itertools.combinations(range(min(A.n, 3)), 2):
            ei = tuple(int(t == i) for t in range(A.n))
            ej = tuple(int(t == j) for t in range(A.n))
            if m(b(ei), b(ej)) != -m(b(ej), b(ei)):
                rep.record("anticommutation", False, {"i": i + 1, "j": j + 1})
    else:
        for a, c in pairs:
            x, y = b(a), b(c)
            if m(x, y) != m(y, x):
                rep.record("commutativity", False, {"x": A.key_label(a), "y": A.key_label(c)})
                break
        jpairs = list(itertools.product(small, repeat=2))
        jpairs += [(rng.choice(keys), rng.choice(keys)) for _ in range(samples)]
        for a, c in jpairs:
            # u = x + y probes the linearized identity on top of the diagonal one
            for u, v in ((b(a), b(c)), (b(a) + b(c), b(c))):
                uu = m(u, u)
                lhs, rhs = m(m(uu, v), u), m(uu, m(v, u))
                if lhs != rhs:
                    rep.record("jordan_identity", False, {"u": _show(u), "v": _show(v), "(u^2 v)u": _show(lhs), "u^2(vu)": _show(rhs)})
                    break

    if anti is not None:
        for a, c in pairs:
            x, y = b(a), b(c)
            if anti(m(x, y)) != m(anti(y), anti(x)):
                rep.record("anti_involution", False, {"x": A.key_label(a), "y": A.key_label(c)})
                break
        for a in keys:
            if anti(anti(b(a))) != b(a):
                rep.record("anti_involution", False, {"x": A.key_label(a), "sigma^2(x)": _show(anti(anti(b(a))))})
                break
    return rep


def _triples(A, rng, samples):
    small = _keys(A, TRIPLE_RADIUS)
    out = list(itertools.product(small, repeat=3))
    big = _keys(A, TRIPLE_RADIUS + 1)
    out += [(rng.choice(big), rng.choice(big), rng.choice(big)) for _ in range(samples)]
    return out

