"""Window sweeps for the Lie torus axioms, the graded form and the centroid."""

from __future__ import annotations

import itertools
import random

from ..graded import add_into
from ..lattice import DegreeWindow, vadd, vneg, vsub
from ..linalg import lattice_generates, rank
from ..report import Report
from ..scalars import ZERO, as_scalar
from .base import LieElement, OutsideComponent

__all__ = ["check_lie_torus", "check_form", "check_centroid", "jacobiator"]

PAIR_BUDGET = 4000
TRIPLE_BUDGET = 1500


def _window(W):
    return W if isinstance(W, DegreeWindow) else DegreeWindow(W)


def _pairs(atoms, rng, budget):
    if len(atoms) ** 2 <= budget:
        return list(itertools.product(atoms, atoms))
    return [(rng.choice(atoms), rng.choice(atoms)) for _ in range(budget)]


def _triples(atoms, rng, budget):
    if len(atoms) ** 3 <= budget:
        return list(itertools.product(atoms, atoms, atoms))
    return [(rng.choice(atoms), rng.choice(atoms), rng.choice(atoms)) for _ in range(budget)]


def _bracket_terms(L, x, y):
    """Bracket of two term dicts through the atom cache."""
    acc = {}
    for a, ca in x.items():
        for b, cb in y.items():
            for k, v in L.atom_bracket(a, b).items():
                add_into(acc, k, ca * cb * v)
    return acc


def jacobiator(L, a, b, c):
    one = as_scalar(1)
    acc = {}
    for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
        inner = L.atom_bracket(y, z)
        for k, v in _bracket_terms(L, {x: one}, inner).items():
            add_into(acc, k, v)
    return acc


def _label(L, atom):
    return L.atom_label(atom)


def _show(L, terms):
    return repr(LieElement(L, terms))


def check_lie_torus(L, W=2, *, seed=0, pair_budget=PAIR_BUDGET, triple_budget=TRIPLE_BUDGET):
    """Sweep the window ``W`` and report LT1-LT4, Jacobi and alternation."""
    W = _window(W)
    rep = Report(window=W.radius)
    rng = random.Random(seed)
    atoms = L.window_atoms(W)
    rep.atoms_checked = len(atoms)
    degrees = W.enum(L.n)

    # alternation and skew symmetry, computed without cache shortcuts
    rep.record("alternation", True)
    for a in atoms:
        try:
            aa = L.raw_atom_bracket(a, a)
        except OutsideComponent as exc:
            rep.record("LT1", False, {"x": _label(L, a), "y": _label(L, a), "error": str(exc)})
            continue
        if aa:
            rep.record("alternation", False, {"x": _label(L, a), "[x,x]": repr(aa)})

    # LT1: bigrade closure
    rep.record("LT1", True)
    for a, b in _pairs(atoms, rng, pair_budget):
        try:
            ab = L.raw_atom_bracket(a, b)
            ba = L.raw_atom_bracket(b, a)
        except OutsideComponent as exc:
            rep.record("LT1", False, {"x": _label(L, a), "y": _label(L, b), "error": str(exc)})
            continue
        want = (vadd(a.root, b.root), vadd(a.deg, b.deg))
        bad = [k for k in ab.terms if (k.root, k.deg) != want]
        if bad:
            rep.record("LT1", False, {"x": _label(L, a), "y": _label(L, b), "bigrade": [list(bad[0].root), list(bad[0].deg)]})
        if (ab + ba).terms:
            rep.record("alternation", False, {"x": _label(L, a), "y": _label(L, b), "[x,y]+[y,x]": repr(ab + ba)})
        L._bracket_cache.setdefault((a, b), ab.terms)

    # Jacobi
    rep.record("jacobi", True)
    for a, b, c in _triples(atoms, rng, triple_budget):
        try:
            j = jacobiator(L, a, b, c)
        except OutsideComponent as exc:
            rep.record("LT1", False, {"x": _label(L, a), "y": _label(L, b), "z": _label(L, c), "error": str(exc)})
            continue
        if j:
            rep.record("jacobi", False, {"x": _label(L, a), "y": _label(L, b), "z": _label(L, c), "J": _show(L, j)})
            break

    _lt2(L, rep, atoms, degrees)
    _lt3(L, rep, degrees)

    support = [d for d in degrees if any(L.dim(r, d) for r in L.roots.roots)]
    ok = lattice_generates(support, L.n) if L.n else True
    rep.record("LT4", ok, None if ok else {"support": [list(d) for d in support]})
    return rep


def _lt2(L, rep, atoms, degrees):
    rep.record("LT2(i)", True)
    zero_deg = (0,) * L.n
    for r in L.roots.nonzero:
        for d in degrees:
            k = L.dim(r, d)
            if k > 1:
                rep.record("LT2(i)", False, {"root": list(r), "degree": list(d), "dim": k})
        if L.roots.is_indivisible(r) and L.dim(r, zero_deg) != 1:
            rep.record("LT2(i)", False, {"root": list(r), "degree": list(zero_deg), "dim": L.dim(r, zero_deg)})

    rep.record("LT2(ii)", True)
    one = as_scalar(1)
    for r in L.roots.nonzero:
        for d in degrees:
            if L.dim(r, d) != 1:
                continue
            e = L.atoms_at(r, d)[0]
            opp = L.atoms_at(vneg(r), vneg(d))
            if len(opp) != 1:
                rep.record("LT2(ii)", False, {"root": list(r), "degree": list(d), "reason": "no partner in the opposite component"})
                continue
            h = L.atom_bracket(e, opp[0])
            he = _bracket_terms(L, h, {e: one})
            c = he.get(e, ZERO)
            if not c or set(he) != {e}:
                rep.record("LT2(ii)", False, {"root": list(r), "degree": list(d), "[[e,f],e]": _show(L, he)})
                continue
            s = as_scalar(2) / c
            for x in atoms:
                want = L.roots.cartan_integer(x.root, r)
                got = _bracket_terms(L, h, {x: s})
                expect = {x: as_scalar(want)} if want else {}
                if got != expect:
                    rep.record(
                        "LT2(ii)",
                        False,
                        {"e": _label(L, e), "x": _label(L, x), "expected": want, "got": _show(L, got)},
                    )
                    break


def _lt3(L, rep, degrees):
    rep.record("LT3", True)
    zero = L.roots.zero
    for lam in degrees:
        target = L.atoms_at(zero, lam)
        if not target:
            continue
        rows = []
        have = 0
        for r in L.roots.nonzero:
            for mu in degrees:
                for a in L.atoms_at(r, mu):
                    for b in L.atoms_at(vneg(r), vsub(lam, mu)):
                        t = L.atom_bracket(a, b)
                        rows.append([t.get(x, ZERO) for x in target])
            if rows:
                have = rank(rows)
                if have == len(target):
                    break
        if have != len(target):
            rep.record("LT3", False, {"degree": list(lam), "dim": len(target), "rank": have})


def check_form(L, W=2, *, seed=0, samples=100):
    """Gradedness, symmetry, invariance and nondegeneracy of the graded form."""
    W = _window(W)
    rep = Report(window=W.radius)
    rng = random.Random(seed)
    atoms = L.window_atoms(W)
    rep.atoms_checked = len(atoms)
    rep.record("graded", True)
    rep.record("symmetric", True)
    for a, b in _pairs(atoms, rng, PAIR_BUDGET):
        v = L.raw_atom_form(a, b)
        opposite = vadd(a.deg, b.deg) == (0,) * L.n and not any(x + y for x, y in zip(a.root, b.root))
        if v and not opposite:
            rep.record("graded", False, {"x": _label(L, a), "y": _label(L, b), "value": v})
        if v != L.raw_atom_form(b, a):
            rep.record("symmetric", False, {"x": _label(L, a), "y": _label(L, b)})
    rep.record("invariant", True)
    for _ in range(samples):
        x, y, z = rng.choice(atoms), rng.choice(atoms), rng.choice(atoms)
        # ([x,y], z) = (x, [y,z]); z is pushed towards the opposite bigrade to make the test bite
        cands = L.atoms_at(vneg(vadd(x.root, y.root)), vneg(vadd(x.deg, y.deg)))
        if cands and rng.random() < 0.8:
            z = rng.choice(cands)
        lhs = L.form(LieElement(L, L.atom_bracket(x, y)), L.element(z))
        rhs = L.form(L.element(x), LieElement(L, L.atom_bracket(y, z)))
        if lhs != rhs:
            rep.record("invariant", False, {"x": _label(L, x), "y": _label(L, y), "z": _label(L, z), "lhs": lhs, "rhs": rhs})
    rep.record("nondegenerate", True)
    for d in W.enum(L.n):
        for r in L.roots.roots:
            left = L.atoms_at(r, d)
            if not left:
                continue
            right = L.atoms_at(vneg(r), vneg(d))
            gram = [[L.atom_form(a, b) for b in right] for a in left]
            if len(right) != len(left) or rank(gram) != len(left):
                rep.record("nondegenerate", False, {"root": list(r), "degree": list(d)})
    return rep


def check_centroid(L, W=1, mus=None, *, seed=0, samples=60):
    """chi^mu [x,y] = [chi^mu x, y] = [x, chi^mu y] on sampled window pairs."""
    W = _window(W)
    rep = Report(window=W.radius)
    rng = random.Random(seed)
    atoms = L.window_atoms(W)
    rep.atoms_checked = len(atoms)
    if mus is None:
        mus = [m for m in W.enum(L.n) if L.gamma_contains(m)]
    rep.record("centroid", True)
    for mu in mus:
        for _ in range(samples):
            x, y = L.element(rng.choice(atoms)), L.element(rng.choice(atoms))
            a = L.centroid_act(mu, L.bracket(x, y))
            b = L.bracket(L.centroid_act(mu, x), y)
            c = L.bracket(x, L.centroid_act(mu, y))
            if not (a == b and b == c):
                rep.record("centroid", False, {"mu": list(mu), "x": repr(x), "y": repr(y)})
    rep.record("gamma_group", True)
    sup = [m for m in W.enum(L.n) if L.gamma_contains(m)]
    for m in sup:
        if not L.gamma_contains(vneg(m)):
            rep.record("gamma_group", False, {"mu": list(m)})
        for m2 in sup:
            if not L.gamma_contains(vadd(m, m2)):
                rep.record("gamma_group", False, {"mu": list(m), "nu": list(m2)})
    return rep
