"""Exact Gaussian elimination over cyclotomic scalars and integer lattices."""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import Inconsistent
from .scalars import ONE, ZERO, _lcm, _phi, as_scalar

__all__ = [
    "ScalarMatrix",
    "rref",
    "rank",
    "kernel_basis",
    "solve",
    "mat_solve",
    "integer_kernel",
    "lattice_basis",
    "lattice_generates",
    "int_rank",
    "SpanSolver",
]


class ScalarMatrix:
    """Dense rectangular matrix of Scalars."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data, cols=None):
        data = [[as_scalar(x) for x in row] for row in data]
        if cols is None:
            cols = len(data[0]) if data else 0
        if any(len(r) != cols for r in data):
            raise ValueError("ragged matrix")
        self.rows = len(data)
        self.cols = cols
        self.data = data

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def tolist(self):
        return [list(r) for r in self.data]

    def __repr__(self):
        return f"ScalarMatrix({self.rows}x{self.cols})"


def _rows(m):
    if isinstance(m, ScalarMatrix):
        return [list(r) for r in m.data], m.cols
    rows = [[as_scalar(x) for x in r] for r in m]
    return rows, (len(rows[0]) if rows else 0)


def rref(m, ncols=None):
    """Reduced row echelon form; returns (rows, pivot columns)."""
    rows, cols = _rows(m)
    if ncols is not None:
        cols = ncols
    pivots = []
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        if p != ONE:
            pinv = p.inv()
            rows[r] = [x * pinv if x else x for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b if b else a for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(m):
    return len(rref(m)[1])


def kernel_basis(m):
    """Basis of {v : m v = 0}; one vector per free column, deterministic."""
    rows, cols = _rows(m)
    red, pivots = rref(rows, cols)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [ZERO] * cols
        v[fc] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def solve(m, b):
    """One solution x of m x = b (free variables set to zero)."""
    rows, cols = _rows(m)
    aug = [r + [as_scalar(x)] for r, x in zip(rows, b)]
    red, pivots = rref(aug, cols + 1)
    if cols in pivots:
        raise Inconsistent("linear system has no solution")
    x = [ZERO] * cols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][cols]
    return x


def mat_solve(m, mode, b=None):
    if mode == "rank":
        return rank(m)
    if mode == "kernel_basis":
        return kernel_basis(m)
    if mode == "solve":
        return solve(m, b)
    raise ValueError(f"unknown mode {mode!r}")


class SpanSolver:
    """Express vectors in a fixed (possibly redundant) generating list.

    Columns are the generators; ``independent`` lists the generator indices
    kept as a basis, and ``coords`` returns coordinates on those.
    """

    def __init__(self, vectors, length):
        self.length = length
        self.vectors = vectors
        red, pivots = rref([list(r) for r in zip(*vectors)] if vectors else [], len(vectors))
        self.independent = pivots
        basis = [vectors[i] for i in pivots]
        self._basis = basis
        # rows: coordinates; solve against the basis columns once
        mat = [list(r) for r in zip(*basis)] if basis else []
        aug = [row + [ONE if i == j else ZERO for j in range(length)] for i, row in enumerate(mat)]
        red, piv = rref(aug, len(basis) + length)
        self._red = red
        self._piv = piv
        self._k = len(basis)

    def coords(self, v):
        """Coordinates of v on the independent generators; None if outside the span."""
        k = self._k
        out = [ZERO] * k
        for r, pc in enumerate(self._piv):
            row = self._red[r]
            s = ZERO
            for j in range(self.length):
                c = row[k + j]
                if c and v[j]:
                    s = s + c * v[j]
            if pc < k:
                out[pc] = s
            elif s:
                return None
        # rows without pivot in the basis part never occur beyond the basis rank
        return out


# integer lattices -----------------------------------------------------------


def _rational_rows(m):
    rows, cols = _rows(m)
    cond = 1
    for r in rows:
        for x in r:
            cond = _lcm(cond, x.n)
    f = _phi(cond)
    out = []
    for r in rows:
        emb = [x.embed(cond) for x in r]
        for k in range(f):
            out.append([e[k] for e in emb])
    return out, cols


def _int_rows(rows):
    out = []
    for r in rows:
        den = 1
        for x in r:
            den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
        out.append([int(Fraction(x) * den) for x in r])
    return out


def _column_reduce(a, ncols):
    """Unimodular column operations bringing integer matrix ``a`` to echelon form.

    Returns (reduced matrix, transform U) with a*U = reduced.
    """
    a = [list(r) for r in a]
    u = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def colop(i, j, x, y, z, w):
        # (col_i, col_j) <- (x col_i + y col_j, z col_i + w col_j)
        for mat in (a, u):
            for row in mat:
                ci, cj = row[i], row[j]
                row[i] = x * ci + y * cj
                row[j] = z * ci + w * cj

    piv_col = 0
    for r in range(len(a)):
        if piv_col >= ncols:
            break
        for j in range(piv_col + 1, ncols):
            if a[r][j] == 0:
                continue
            p, q = a[r][piv_col], a[r][j]
            g, s, t = _egcd(p, q)
            colop(piv_col, j, s, t, -q // g, p // g)
        if a[r][piv_col] != 0:
            if a[r][piv_col] < 0:
                _negate_col(a, u, piv_col)
            piv_col += 1
    return a, u, piv_col


def _negate_col(a, u, i):
    for mat in (a, u):
        for row in mat:
            row[i] = -row[i]


def _egcd(a, b):
    if b == 0:
        return (abs(a), 1 if a >= 0 else -1, 0)
    x0, y0, x1, y1 = 1, 0, 0, 1
    aa, bb = a, b
    while bb:
        q = aa // bb
        aa, bb = bb, aa - q * bb
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if aa < 0:
        aa, x0, y0 = -aa, -x0, -y0
    return aa, x0, y0


def integer_kernel(m):
    """Basis of {lam in Z^n : m lam = 0}, expanding scalars on the rational power basis."""
    rows, cols = _rational_rows(m)
    if cols == 0:
        return []
    ints = _int_rows(rows)
    if not ints:
        return [[int(i == j) for j in range(cols)] for i in range(cols)]
    _, u, r = _column_reduce(ints, cols)
    basis = [[u[i][j] for i in range(cols)] for j in range(r, cols)]
    return _hnf_rows(basis)


def _hnf_rows(vectors):
    """Row Hermite normal form of an integer vector list (zero rows dropped)."""
    if not vectors:
        return []
    n = len(vectors[0])
    t = [list(col) for col in zip(*vectors)]  # n x k
    red, u, r = _column_reduce(t, len(vectors))
    basis = [[red[i][j] for i in range(n)] for j in range(r)]
    # reduce entries above pivots for a canonical answer
    pivs = []
    for b in basis:
        pivs.append(next(i for i, x in enumerate(b) if x))
    for j in range(len(basis)):
        pc = pivs[j]
        for i in range(j):
            q = basis[i][pc] // basis[j][pc]
            if q:
                basis[i] = [x - q * y for x, y in zip(basis[i], basis[j])]
    return basis


def lattice_basis(vectors):
    vecs = [list(v) for v in vectors if any(v)]
    return _hnf_rows(vecs)


def int_rank(vectors):
    return len(lattice_basis(vectors))


def lattice_generates(vectors, n):
    """True iff the integer vectors span Z^n over Z."""
    basis = lattice_basis(vectors)
    if len(basis) != n:
        return False
    det = 1
    for b in basis:
        det *= next(x for x in b if x)
    return abs(det) == 1
