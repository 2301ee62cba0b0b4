"""Dense linear algebra over finite fields.

Matrices hold int64 element codes (see :mod:`qcqecc.gf`).  Elimination is
exact Gauss-Jordan with the first nonzero entry of each column (scanning rows
in their given order) as pivot, so results are deterministic.
"""

from __future__ import annotations

import numpy as np

from . import gf
from .errors import DimensionMismatch, OddColumns, RowCountOutOfRange
from .polyring import Poly, RingElem


class MatFq:
    """Immutable dense matrix over a finite field."""

    __slots__ = ("ctx", "a", "_rref")

    def __init__(self, ctx: gf.GF, data, cols: int | None = None):
        arr = np.array(data, dtype=np.int64)
        if arr.ndim == 1 and arr.size == 0:
            arr = arr.reshape(0, cols or 0)
        if arr.ndim != 2:
            raise DimensionMismatch("matrix data must be two-dimensional")
        if arr.size and (arr.min() < 0 or arr.max() >= ctx.q):
            raise ValueError("element code out of range")
        arr.flags.writeable = False
        self.ctx = ctx
        self.a = arr
        self._rref = None

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    @property
    def shape(self):
        return self.a.shape

    def __eq__(self, other):
        if not isinstance(other, MatFq):
            return NotImplemented
        return self.ctx.q == other.ctx.q and np.array_equal(self.a, other.a)

    def __repr__(self):
        return f"MatFq({self.rows}x{self.cols} over {self.ctx!r})"

    def is_zero(self) -> bool:
        return not self.a.any()

    @property
    def T(self) -> "MatFq":
        return MatFq(self.ctx, self.a.T)

    def __matmul__(self, other: "MatFq") -> "MatFq":
        return MatFq(self.ctx, matmul(self.ctx, self.a, other.a))

    def frob(self) -> "MatFq":
        """Entrywise a -> a^q over GF(q^2)."""
        return MatFq(self.ctx, self.ctx.vfrob(self.a))

    def row_vectors(self):
        return [row.copy() for row in self.a]


def identity(ctx: gf.GF, n: int) -> MatFq:
    return MatFq(ctx, np.eye(n, dtype=np.int64))


def zeros(ctx: gf.GF, rows: int, cols: int) -> MatFq:
    return MatFq(ctx, np.zeros((rows, cols), dtype=np.int64))


def vstack(mats, cols: int | None = None) -> MatFq:
    mats = list(mats)
    ctx = mats[0].ctx
    if cols is None:
        cols = mats[0].cols
    return MatFq(ctx, np.vstack([m.a for m in mats]) if mats else np.zeros((0, cols), dtype=np.int64))


def hstack(mats) -> MatFq:
    mats = list(mats)
    return MatFq(mats[0].ctx, np.hstack([m.a for m in mats]))


def matmul(ctx: gf.GF, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    if ctx.gamma == 1:
        return (a @ b) % ctx.p
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for t in range(a.shape[1]):
        out = ctx.vadd(out, ctx.vmul(a[:, t: t + 1], b[t: t + 1, :]))
    return out


def circulant(k: RingElem, nrows: int | None = None) -> MatFq:
    """Rows are the coefficient vectors of x^i k(x) mod x^m - 1, i < nrows."""
    m = k.m
    if nrows is None:
        nrows = m
    if not 0 <= nrows <= m:
        raise RowCountOutOfRange(f"{nrows} rows requested from a circulant of size {m}")
    v = k.vector()
    idx = (np.arange(m)[None, :] - np.arange(nrows)[:, None]) % m
    return MatFq(k.ctx, v[idx].reshape(nrows, m))


# ---- elimination ------------------------------------------------------------

def _eliminate(ctx: gf.GF, a: np.ndarray, track: bool = False):
    """Gauss-Jordan; returns (reduced matrix with all rows, pivots, transform)."""
    a = a.copy()
    rows, cols = a.shape
    t = np.eye(rows, dtype=np.int64) if track else None
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
            if track:
                t[[r, i]] = t[[i, r]]
        s = ctx.inv(int(a[r, c]))
        if s != 1:
            a[r] = ctx.vmul(a[r], s)
            if track:
                t[r] = ctx.vmul(t[r], s)
        col = a[:, c].copy()
        col[r] = 0
        idx = np.flatnonzero(col)
        if idx.size:
            f = col[idx][:, None]
            a[idx] = ctx.vsub(a[idx], ctx.vmul(f, a[r][None, :]))
            if track:
                t[idx] = ctx.vsub(t[idx], ctx.vmul(f, t[r][None, :]))
        pivots.append(c)
        r += 1
    return a, pivots, t


def _rref_cached(m: MatFq):
    if m._rref is None:
        red, piv, _ = _eliminate(m.ctx, m.a)
        basis = MatFq(m.ctx, red[: len(piv)].reshape(len(piv), m.cols))
        basis._rref = (basis, tuple(piv))
        m._rref = (basis, tuple(piv))
    return m._rref


def rref_with_transform(m: MatFq) -> tuple[MatFq, MatFq]:
    """Return (R, T) with T invertible and T @ M == R, R in reduced row-echelon form."""
    red, _, t = _eliminate(m.ctx, m.a, track=True)
    return MatFq(m.ctx, red), MatFq(m.ctx, t)


def rank(m: MatFq) -> int:
    return len(_rref_cached(m)[1])


def rref_basis(m: MatFq) -> MatFq:
    """Reduced row-echelon form with zero rows dropped."""
    return _rref_cached(m)[0]


def pivots(m: MatFq) -> tuple[int, ...]:
    return _rref_cached(m)[1]


def _reduce_rows(basis: MatFq, v: np.ndarray) -> np.ndarray:
    """Residues of the rows of v after reduction against an RREF basis."""
    ctx = basis.ctx
    piv = list(pivots(basis))
    if not piv:
        return v
    b = basis.a[: len(piv)]
    coeffs = v[:, piv]
    return ctx.vsub(v, matmul(ctx, coeffs, b))


def contains(basis: MatFq, v) -> bool:
    """Membership of a vector in the row space of ``basis``."""
    v = np.asarray(v, dtype=np.int64)
    if v.ndim != 1 or v.size != basis.cols:
        raise DimensionMismatch(f"vector of length {v.size} against {basis.cols} columns")
    return not _reduce_rows(rref_basis(basis), v[None, :]).any()


def contains_rows(basis: MatFq, vs: MatFq) -> bool:
    """True when every row of ``vs`` lies in the row space of ``basis``."""
    if vs.cols != basis.cols:
        raise DimensionMismatch(f"{vs.cols} columns against {basis.cols}")
    if vs.rows == 0:
        return True
    return not _reduce_rows(rref_basis(basis), vs.a).any()


def row_space_equal(a: MatFq, b: MatFq) -> bool:
    return rank(a) == rank(b) and contains_rows(a, b)


def kernel_basis(m: MatFq) -> MatFq:
    """Basis of {v : M v^T = 0}; dimension cols - rank."""
    ctx = m.ctx
    basis, piv = _rref_cached(m)
    free = [c for c in range(m.cols) if c not in set(piv)]
    out = np.zeros((len(free), m.cols), dtype=np.int64)
    for i, f in enumerate(free):
        out[i, f] = 1
        if piv:
            out[i, list(piv)] = ctx.vneg(basis.a[:, f])
    return MatFq(ctx, out.reshape(len(free), m.cols))


# ---- Gram matrices ----------------------------------------------------------

def gram_euclidean(g: MatFq, h: MatFq | None = None) -> MatFq:
    h = g if h is None else h
    return MatFq(g.ctx, matmul(g.ctx, g.a, h.a.T))


def gram_hermitian(g: MatFq, h: MatFq | None = None) -> MatFq:
    h = g if h is None else h
    return MatFq(g.ctx, matmul(g.ctx, g.ctx.vfrob(g.a), h.a.T))


def gram_symplectic(g: MatFq, h: MatFq | None = None) -> MatFq:
    """G Omega H^T with Omega = ((0, I), (-I, 0))."""
    h = g if h is None else h
    if g.cols % 2 or h.cols % 2:
        raise OddColumns("symplectic form needs an even number of columns")
    n = g.cols // 2
    ctx = g.ctx
    left = matmul(ctx, g.a[:, :n], h.a[:, n:].T)
    right = matmul(ctx, g.a[:, n:], h.a[:, :n].T)
    return MatFq(ctx, ctx.vsub(left, right))


GRAM = {"E": gram_euclidean, "H": gram_hermitian, "S": gram_symplectic}


def dual_basis(g: MatFq, kind: str) -> MatFq:
    """Basis of the dual of the row space of g under the chosen pairing."""
    ctx = g.ctx
    if kind == "E":
        return kernel_basis(g)
    if kind == "H":
        return kernel_basis(g).frob()
    if kind == "S":
        if g.cols % 2:
            raise OddColumns("symplectic form needs an even number of columns")
        n = g.cols // 2
        twisted = np.hstack([g.a[:, n:], ctx.vneg(g.a[:, :n])])
        return kernel_basis(MatFq(ctx, twisted.reshape(g.rows, g.cols)))
    raise ValueError(f"unknown inner product {kind!r}")


def from_polys(ctx: gf.GF, polys, m: int) -> np.ndarray:
    return np.concatenate([RingElem(p, m).vector() if isinstance(p, Poly) else p.vector() for p in polys])
