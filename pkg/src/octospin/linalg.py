"""Dense linear algebra over exact rationals or floats.

Matrices are numpy arrays: dtype=object holding Fractions in exact mode,
float64 in float mode.  Exact row reduction is the backbone of every rank,
nullspace, and span-membership computation; float mode falls back to SVD
with a relative singular-value threshold.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .scalars import EXACT, FLOAT, RANK_RTOL, Scalar, is_exact

__all__ = [
    "mat_mul",
    "bracket",
    "nullspace_basis",
    "span_residual",
    "poly_directional_coeffs",
    "SpanSolver",
    "exact_matrix",
    "float_matrix",
    "eye",
    "zeros",
    "matrix_mode",
    "matrix_to_json",
    "matrix_from_json",
]


def exact_matrix(rows) -> np.ndarray:
    """Object array of Fractions from any nested sequence of exact values."""
    data = [[Fraction(v) for v in row] for row in rows]
    out = np.empty((len(data), len(data[0])), dtype=object)
    for i, row in enumerate(data):
        out[i, :] = row
    return out


def float_matrix(rows) -> np.ndarray:
    return np.array(rows, dtype=float)


def zeros(n: int, m: int, mode: str = EXACT) -> np.ndarray:
    if mode == EXACT:
        out = np.empty((n, m), dtype=object)
        out[:, :] = Fraction(0)
        return out
    return np.zeros((n, m))


def eye(n: int, mode: str = EXACT) -> np.ndarray:
    out = zeros(n, n, mode)
    one = Fraction(1) if mode == EXACT else 1.0
    for i in range(n):
        out[i, i] = one
    return out


def matrix_mode(a: np.ndarray) -> str:
    return EXACT if a.dtype == object else FLOAT


def mat_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise ValueError("dimension mismatch: %s @ %s" % (a.shape, b.shape))
    return a @ b


def bracket(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Commutator ab - ba of square matrices of equal size."""
    if a.shape != b.shape or a.shape[0] != a.shape[1]:
        raise ValueError("bracket needs square matrices of equal size")
    return a @ b - b @ a


def _as_int64_if_integral(a: np.ndarray):
    """int64 copy when every entry is an integer-valued Fraction, else None.

    Integer matmul is orders of magnitude faster than object matmul and is
    exact as long as entries stay far below 2**63, which holds for every
    basis matrix (entries in {-1,0,1}) and their pairwise products.
    """
    if a.dtype != object:
        return None
    out = np.empty(a.shape, dtype=np.int64)
    flat_in = a.ravel()
    flat_out = out.ravel()
    for i, v in enumerate(flat_in):
        f = Fraction(v)
        if f.denominator != 1:
            return None
        flat_out[i] = f.numerator
    return out


def fast_bracket(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact commutator using int64 arithmetic when both inputs are integral."""
    ia, ib = _as_int64_if_integral(a), _as_int64_if_integral(b)
    if ia is None or ib is None:
        return bracket(a, b)
    c = ia @ ib - ib @ ia
    out = np.empty(a.shape, dtype=object)
    flat_c = c.ravel()
    flat_o = out.ravel()
    for i in range(flat_c.size):
        flat_o[i] = Fraction(int(flat_c[i]))
    return out


def rref(rows: list) -> tuple[list, list]:
    """In-place reduced row echelon form over Fractions.

    rows: list of lists of Fractions.  Returns (rows, pivot_cols) with zero
    rows dropped and each pivot normalized to 1 and cleared above and below.
    """
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = Fraction(1) / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [vi - f * vr for vi, vr in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def exact_rank(vectors: Sequence[np.ndarray]) -> int:
    rows = [[Fraction(v) for v in np.asarray(vec).ravel()] for vec in vectors]
    _, pivots = rref(rows)
    return len(pivots)


def float_rank(mat: np.ndarray) -> int:
    s = np.linalg.svd(mat, compute_uv=False)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.sum(s > RANK_RTOL * s[0]))


def nullspace_basis(mats: Sequence[np.ndarray], v: np.ndarray) -> list:
    """Basis of {c : sum_i c_i (A_i v) = 0}.

    Exact mode uses row reduction and returns Fraction coefficient vectors;
    float mode uses SVD with the relative rank threshold.
    """
    if len(mats) == 0:
        raise ValueError("empty generator list")
    cols = [np.asarray(a) @ np.asarray(v).ravel() for a in mats]
    k = len(cols)
    if matrix_mode(np.asarray(mats[0])) == FLOAT:
        m = np.stack(cols, axis=1).astype(float)
        u, s, vt = np.linalg.svd(m)
        smax = s[0] if s.size else 0.0
        rank = int(np.sum(s > RANK_RTOL * smax)) if smax > 0 else 0
        return [vt[i, :].copy() for i in range(rank, k)]
    # rows of the reduced system are the k coefficient directions
    rows = [[Fraction(cols[i][j]) for i in range(k)] for j in range(len(cols[0]))]
    ech, pivots = rref(rows)
    free = [c for c in range(k) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * k
        vec[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -ech[r][f]
        basis.append(np.array(vec, dtype=object))
    return basis


class SpanSolver:
    """Membership and coordinates in the span of a fixed list of vectors.

    Exact mode keeps a sparse echelon form (dict column -> Fraction) with
    bookkeeping rows so that coefficients over the *original* vectors can be
    recovered.  Reduction against a candidate touches only the pivots whose
    coordinate is nonzero, which keeps the all-pairs bracket-closure suites
    fast.  Float mode delegates to least squares.
    """

    def __init__(self, vectors: Sequence[np.ndarray]):
        vecs = [np.asarray(v).ravel() for v in vectors]
        if not vecs:
            raise ValueError("empty basis")
        self.mode = matrix_mode(vecs[0])
        self.n = vecs[0].size
        self.count = len(vecs)
        if self.mode == FLOAT:
            self._mat = np.stack([v.astype(float) for v in vecs], axis=1)
            return
        self._rows = []  # list of (pivot_col, row_dict, coeff_list)
        for idx, v in enumerate(vecs):
            row = {j: Fraction(x) for j, x in enumerate(v) if x != 0}
            coeff = [Fraction(0)] * self.count
            coeff[idx] = Fraction(1)
            self._insert(row, coeff)

    @property
    def rank(self) -> int:
        if self.mode == FLOAT:
            return float_rank(self._mat)
        return len(self._rows)

    def _reduce(self, row: dict, coeff):
        for pc, prow, pcoeff in self._rows:
            f = row.get(pc)
            if not f:
                continue
            for j, x in prow.items():
                nv = row.get(j, Fraction(0)) - f * x
                if nv:
                    row[j] = nv
                else:
                    row.pop(j, None)
            if coeff is not None:
                for i in range(self.count):
                    if pcoeff[i]:
                        coeff[i] -= f * pcoeff[i]
        return row, coeff

    def _insert(self, row: dict, coeff):
        row, coeff = self._reduce(row, coeff)
        if not row:
            return
        pc = min(row)
        inv = Fraction(1) / row[pc]
        row = {j: x * inv for j, x in row.items()}
        coeff = [c * inv for c in coeff]
        # clear the new pivot column from existing rows to stay fully reduced
        for k, (opc, orow, ocoeff) in enumerate(self._rows):
            f = orow.get(pc)
            if not f:
                continue
            for j, x in row.items():
                nv = orow.get(j, Fraction(0)) - f * x
                if nv:
                    orow[j] = nv
                else:
                    orow.pop(j, None)
            for i in range(self.count):
                if coeff[i]:
                    ocoeff[i] -= f * coeff[i]
        self._rows.append((pc, row, coeff))
        self._rows.sort(key=lambda t: t[0])

    def residual(self, v: np.ndarray) -> Scalar:
        """0 iff v lies in the span; otherwise a nonzero witness norm."""
        v = np.asarray(v).ravel()
        if self.mode == FLOAT:
            sol, *_ = np.linalg.lstsq(self._mat, v.astype(float), rcond=None)
            return float(np.linalg.norm(self._mat @ sol - v.astype(float)))
        row = {j: Fraction(x) for j, x in enumerate(v) if x != 0}
        row, _ = self._reduce(row, None)
        if not row:
            return Fraction(0)
        return max(abs(x) for x in row.values())

    def coefficients(self, v: np.ndarray):
        """Coefficients of v over the original vectors, or None if outside."""
        v = np.asarray(v).ravel()
        if self.mode == FLOAT:
            sol, *_ = np.linalg.lstsq(self._mat, v.astype(float), rcond=None)
            if np.linalg.norm(self._mat @ sol - v.astype(float)) > 1e-8 * max(
                1.0, float(np.linalg.norm(v.astype(float)))
            ):
                return None
            return sol
        row = {j: Fraction(x) for j, x in enumerate(v) if x != 0}
        coeff = [Fraction(0)] * self.count
        for pc, prow, pcoeff in self._rows:
            f = row.get(pc)
            if not f:
                continue
            for j, x in prow.items():
                nv = row.get(j, Fraction(0)) - f * x
                if nv:
                    row[j] = nv
                else:
                    row.pop(j, None)
            for i in range(self.count):
                if pcoeff[i]:
                    coeff[i] += f * pcoeff[i]
        if row:
            return None
        return coeff


def span_residual(x: np.ndarray, basis: Sequence[np.ndarray]) -> Scalar:
    """0 iff x lies in the linear span of the basis matrices."""
    return SpanSolver([np.asarray(b).ravel() for b in basis]).residual(
        np.asarray(x).ravel()
    )


def _vandermonde_solve(ts: list, vals: list) -> list:
    """Exact coefficients of the polynomial through (t_i, vals_i)."""
    d = len(ts) - 1
    rows = [[Fraction(t) ** j for j in range(d + 1)] + [Fraction(v)] for t, v in zip(ts, vals)]
    ech, pivots = rref(rows)
    if pivots != list(range(d + 1)):
        raise ValueError("degenerate interpolation nodes")
    return [ech[r][d + 1] for r in range(d + 1)]


def poly_directional_coeffs(f: Callable, z, w, d: int) -> list:
    """Coefficients of t -> f(z + t*w) as a polynomial of degree <= d.

    Evaluates at t = 0,...,d and interpolates exactly; index 1 is the
    directional derivative of f at z along w.  f may return a scalar or a
    sequence (then a list of coefficient vectors is returned, one list per
    degree).
    """
    ts = list(range(d + 1))
    vals = [f(z + t * w) for t in ts]
    if np.iterable(vals[0]):
        comps = [list(v) for v in vals]
        ncomp = len(comps[0])
        per_comp = [
            poly_fit_exactish(ts, [comps[i][c] for i in range(d + 1)])
            for c in range(ncomp)
        ]
        return [[per_comp[c][k] for c in range(ncomp)] for k in range(d + 1)]
    return poly_fit_exactish(ts, vals)


def poly_fit_exactish(ts: list, vals: list) -> list:
    if is_exact(vals[0]):
        return _vandermonde_solve(ts, vals)
    d = len(ts) - 1
    coeffs = np.polyfit(np.array(ts, dtype=float), np.array(vals, dtype=float), d)
    return [float(c) for c in coeffs[::-1]]


def matrix_to_json(a: np.ndarray) -> dict:
    from .scalars import scalar_to_json

    mode = matrix_mode(a)
    return {
        "rows": int(a.shape[0]),
        "cols": int(a.shape[1]),
        "mode": mode,
        "entries": [scalar_to_json(v) for v in a.ravel()],
    }


def matrix_from_json(obj: dict) -> np.ndarray:
    from .scalars import scalar_from_json

    n, m = int(obj["rows"]), int(obj["cols"])
    entries = [scalar_from_json(v) for v in obj["entries"]]
    if len(entries) != n * m:
        raise ValueError("entry count %d != rows*cols %d" % (len(entries), n * m))
    if obj.get("mode", EXACT) == EXACT:
        out = np.empty((n, m), dtype=object)
        out.ravel()[:] = entries
        return out
    return np.array(entries, dtype=float).reshape(n, m)
