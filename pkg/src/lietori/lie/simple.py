"""Finite-dimensional simple Lie algebras with a marked diagonal Cartan subalgebra."""

from __future__ import annotations

import itertools
import json

from ..errors import InvalidTable, NotTransposeClosed, RankMismatch, UnsupportedType
from ..graded import add_into
from ..lattice import RootSystem
from ..linalg import SpanSolver
from ..scalars import ONE, ZERO, format_scalar, parse_scalar

__all__ = ["MatrixLie", "simple_lie", "load_table", "sl2"]


def _zero_mat(d):
    return [[ZERO] * d for _ in range(d)]


def _unit(d, i, j, c=ONE):
    m = _zero_mat(d)
    m[i][j] = c
    return m


def _madd(a, b, s=ONE):
    return [[x + s * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _mmul(a, b):
    d = len(a)
    out = _zero_mat(d)
    for i in range(d):
        for k in range(d):
            if a[i][k]:
                aik = a[i][k]
                row = b[k]
                for j in range(d):
                    if row[j]:
                        out[i][j] = out[i][j] + aik * row[j]
    return out


def _comm(a, b):
    return _madd(_mmul(a, b), _mmul(b, a), -ONE)


def _flat(m):
    return [x for row in m for x in row]


def _trace(m):
    s = ZERO
    for i in range(len(m)):
        s = s + m[i][i]
    return s


def _transpose(m):
    return [list(r) for r in zip(*m)]


class MatrixLie:
    """Structure constants over a basis split into Cartan and root vectors.

    ``struct[(i, j)]`` is the sparse expansion of ``[b_i, b_j]``;
    ``kappa[i][j]`` is the invariant form (trace form for matrix models,
    Killing form for tables); ``root_of[i]`` is the root of ``b_i``.
    """

    def __init__(self, label, rank, names, struct, cartan, root_of, root_system, kappa=None, matrices=None, theta=None):
        self.label = label
        self.rank = rank
        self.names = list(names)
        self.dim = len(self.names)
        self.struct = struct
        self.cartan = list(cartan)
        self.root_of = [tuple(r) for r in root_of]
        self.root_system = root_system
        self.matrices = matrices
        self.kappa = kappa if kappa is not None else self._killing()
        self._theta = theta

    # structure -------------------------------------------------------------
    def bracket_basis(self, i, j):
        return self.struct.get((i, j), {})

    def bracket(self, u, v):
        """Bracket of coefficient dicts."""
        acc = {}
        for i, a in u.items():
            for j, b in v.items():
                for k, c in self.bracket_basis(i, j).items():
                    add_into(acc, k, a * b * c)
        return acc

    def ad_matrix(self, u):
        cols = []
        for j in range(self.dim):
            img = self.bracket(u, {j: ONE})
            cols.append([img.get(k, ZERO) for k in range(self.dim)])
        return _transpose(cols)

    def _killing(self):
        ads = [self.ad_matrix({i: ONE}) for i in range(self.dim)]
        return [[_trace(_mmul(ads[i], ads[j])) for j in range(self.dim)] for i in range(self.dim)]

    def form(self, u, v):
        s = ZERO
        for i, a in u.items():
            for j, b in v.items():
                k = self.kappa[i][j]
                if k:
                    s = s + a * b * k
        return s

    def index(self, name):
        return self.names.index(name)

    def root_indices(self, root):
        root = tuple(root)
        return [i for i in range(self.dim) if self.root_of[i] == root]

    # Chevalley involution ----------------------------------------------------
    def theta(self):
        """theta(b_i) as coefficient dicts: minus transpose for matrix models."""
        if self._theta is not None:
            return self._theta
        if self.matrices is None:
            raise NotTransposeClosed("table algebra without a supplied Chevalley map")
        solver = SpanSolver([_flat(m) for m in self.matrices], len(self.matrices[0]) ** 2)
        out = []
        for m in self.matrices:
            img = [[-x for x in row] for row in _transpose(m)]
            c = solver.coords(_flat(img))
            if c is None:
                raise NotTransposeClosed("the basis span is not closed under transpose")
            out.append({solver.independent[k]: x for k, x in enumerate(c) if x})
        self._theta = out
        return out

    def apply(self, lin, u):
        """Apply a linear map given as a list of image dicts."""
        acc = {}
        for i, a in u.items():
            for k, c in lin[i].items():
                add_into(acc, k, a * c)
        return acc

    def validate(self):
        """Antisymmetry and Jacobi over the full basis; raises InvalidTable."""
        d = self.dim
        for i in range(d):
            if self.bracket_basis(i, i):
                raise InvalidTable(f"[{self.names[i]}, {self.names[i]}] != 0")
            for j in range(i + 1, d):
                a = self.bracket_basis(i, j)
                b = self.bracket_basis(j, i)
                acc = dict(a)
                for k, v in b.items():
                    add_into(acc, k, v)
                if acc:
                    raise InvalidTable(f"bracket of {self.names[i]} and {self.names[j]} is not antisymmetric")
        for i, j, k in itertools.combinations(range(d), 3):
            x, y, z = {i: ONE}, {j: ONE}, {k: ONE}
            acc = {}
            for p, q, r in ((x, y, z), (y, z, x), (z, x, y)):
                for t, v in self.bracket(p, self.bracket(q, r)).items():
                    add_into(acc, t, v)
            if acc:
                raise InvalidTable(f"Jacobi fails on ({self.names[i]}, {self.names[j]}, {self.names[k]})")

    def __repr__(self):
        return f"MatrixLie({self.label}{self.rank}, dim={self.dim})"


def _from_matrices(label, rank, names, mats, cartan, root_of, root_system):
    d2 = len(mats[0]) ** 2
    solver = SpanSolver([_flat(m) for m in mats], d2)
    if len(solver.independent) != len(mats):
        raise ValueError("basis matrices are linearly dependent")
    struct = {}
    for i, j in itertools.product(range(len(mats)), repeat=2):
        if i == j:
            continue
        c = solver.coords(_flat(_comm(mats[i], mats[j])))
        if c is None:
            raise ValueError("basis is not closed under the commutator")
        res = {k: x for k, x in enumerate(c) if x}
        if res:
            struct[(i, j)] = res
    kappa = [[_trace(_mmul(a, b)) for b in mats] for a in mats]
    return MatrixLie(label, rank, names, struct, cartan, root_of, root_system, kappa=kappa, matrices=mats)


def _root_from_cartan(mats, hs, x):
    r = []
    for h in hs:
        c = _comm(h, x)
        ratio = None
        for a, b in zip(_flat(c), _flat(x)):
            if b:
                ratio = a / b
                break
        if _flat(c) != [ratio * v for v in _flat(x)]:
            raise ValueError("basis matrix is not a root vector")
        q = ratio.to_fraction()
        r.append(int(q) if q.denominator == 1 else q)
    return tuple(r)


def _build_A(rank):
    d = rank + 1
    mats, names, cartan = [], [], []
    for i in range(d):
        for j in range(d):
            if i != j:
                mats.append(_unit(d, i, j))
                names.append(f"E{i + 1}{j + 1}")
    for i in range(rank):
        h = _madd(_unit(d, i, i), _unit(d, i + 1, i + 1), -ONE)
        cartan.append(len(mats))
        mats.append(h)
        names.append(f"h{i + 1}")
    hs = [_unit(d, i, i) for i in range(d)]
    if rank == 1:
        # e, h, f ordering for sl2
        order = [0, 2, 1]
        mats = [mats[k] for k in order]
        names = ["e", "h", "f"]
        cartan = [1]
    return mats, names, cartan, hs, d


def _dual(a, ell, odd):
    if odd and a == 2 * ell:
        return a
    return a + ell if a < ell else a - ell


def _build_BD(rank, odd):
    """so(f) spanned by D_{v_a,v_b}(u) = f(v_a,u) v_b - f(v_b,u) v_a."""
    ell = rank
    d = 2 * ell + 1 if odd else 2 * ell
    mats, names, cartan = [], [], []

    def D(a, b):
        m = _zero_mat(d)
        m[b][_dual(a, ell, odd)] = m[b][_dual(a, ell, odd)] + ONE
        m[a][_dual(b, ell, odd)] = m[a][_dual(b, ell, odd)] - ONE
        return m

    for a in range(d):
        for b in range(a + 1, d):
            if b == _dual(a, ell, odd):
                continue
            mats.append(D(a, b))
            names.append(f"D{a + 1},{b + 1}")
    for i in range(ell):
        cartan.append(len(mats))
        mats.append(D(i, i + ell))
        names.append(f"h{i + 1}")
    hs = [_madd(_unit(d, i, i), _unit(d, i + ell, i + ell), -ONE) for i in range(ell)]
    return mats, names, cartan, hs, d


def _build_C(rank):
    ell = rank
    d = 2 * ell
    mats, names = [], []
    for i in range(ell):
        for j in range(ell):
            if i != j:
                mats.append(_madd(_unit(d, i, j), _unit(d, ell + j, ell + i), -ONE))
                names.append(f"X{i + 1}-{j + 1}")
    for i in range(ell):
        for j in range(i, ell):
            if i == j:
                mats.append(_unit(d, i, ell + i))
                mats.append(_unit(d, ell + i, i))
            else:
                mats.append(_madd(_unit(d, i, ell + j), _unit(d, j, ell + i)))
                mats.append(_madd(_unit(d, ell + i, j), _unit(d, ell + j, i)))
            names.append(f"X{i + 1}+{j + 1}")
            names.append(f"Y{i + 1}+{j + 1}")
    cartan = []
    for i in range(ell):
        cartan.append(len(mats))
        mats.append(_madd(_unit(d, i, i), _unit(d, ell + i, ell + i), -ONE))
        names.append(f"h{i + 1}")
    hs = [_madd(_unit(d, i, i), _unit(d, i + ell, i + ell), -ONE) for i in range(ell)]
    return mats, names, cartan, hs, d


def simple_lie(kind, rank=None, validate_table=True):
    """Built-in classical algebra (``kind`` in A, B, C, D) or a table (dict or path)."""
    if isinstance(kind, dict) or (isinstance(kind, str) and kind.endswith(".json")):
        return load_table(kind, validate=validate_table)
    kind = kind.upper()
    if rank is None:
        raise RankMismatch("built-in simple Lie algebras need a rank")
    from ..lattice import root_system

    if kind == "A":
        mats, names, cartan, hs, d = _build_A(rank)
        rs = root_system("A", rank)
    elif kind == "B":
        mats, names, cartan, hs, d = _build_BD(rank, True)
        rs = root_system("B", rank)
    elif kind == "D":
        mats, names, cartan, hs, d = _build_BD(rank, False)
        rs = root_system("D", rank)
    elif kind == "C":
        mats, names, cartan, hs, d = _build_C(rank)
        rs = root_system("C", rank)
    else:
        raise UnsupportedType(f"no built-in simple Lie algebra of type {kind}; supply a table")
    zero = rs.zero
    root_of = []
    for idx, m in enumerate(mats):
        root_of.append(zero if idx in cartan else _root_from_cartan(mats, hs, m))
    return _from_matrices(kind, rank, names, mats, cartan, root_of, rs)


def sl2():
    return simple_lie("A", 1)


def load_table(src, validate=True):
    """Structure-constant table: ``{"type", "rank", "names", "cartan", "roots", "brackets", "form"?, "theta"?}``."""
    if isinstance(src, str):
        with open(src) as fh:
            src = json.load(fh)
    try:
        names = src["names"]
        d = len(names)
        cond = src.get("conductor", 1)
        struct = {}
        for row in src["brackets"]:
            i, j = int(row["i"]), int(row["j"])
            terms = {}
            for t in row["terms"]:
                add_into(terms, int(t["k"]), parse_scalar(t["c"], cond))
            if terms:
                struct[(i, j)] = terms
        roots = [tuple(r) for r in src["roots"]]
        cartan = [int(c) for c in src["cartan"]]
        label = src.get("type", "T")
        rank = int(src.get("rank", len(cartan)))
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidTable(f"malformed structure table: {exc}") from exc
    if len(roots) != d:
        raise InvalidTable("one root per basis element is required")
    nz = [r for r in roots if any(r)]
    rs = RootSystem(label, rank, nz, len(roots[0]) if roots else 0)
    kappa = None
    if "form" in src:
        kappa = [[parse_scalar(x, cond) for x in row] for row in src["form"]]
    theta = None
    if "theta" in src:
        theta = [dict() for _ in range(d)]
        for row in src["theta"]:
            for t in row["terms"]:
                add_into(theta[int(row["i"])], int(t["k"]), parse_scalar(t["c"], cond))
    g = MatrixLie(label, rank, names, struct, cartan, roots, rs, kappa=kappa, theta=theta)
    if validate:
        g.validate()
    return g


def table_of(g):
    """Export a MatrixLie as a table dict (round-trips through load_table)."""
    rows = []
    for (i, j), terms in sorted(g.struct.items()):
        rows.append({"i": i, "j": j, "terms": [{"k": k, "c": format_scalar(c)} for k, c in sorted(terms.items())]})
    cond = 1
    for terms in g.struct.values():
        for c in terms.values():
            cond = max(cond, c.n)
    return {
        "type": g.label,
        "rank": g.rank,
        "names": g.names,
        "cartan": g.cartan,
        "roots": [list(r) for r in g.root_of],
        "brackets": rows,
        "conductor": cond,
    }
