"""Explicit matrix realizations of spin(9), spin(10), spin(10,1), spin(10,2),
and spin(9,1), with their distinguished one-parameter subgroups and the
vector-representation maps.

Conventions.  Spinors for the 16-dimensional families live on O + O with
coordinates (x, y); the 32-dimensional families act on O^4 with coordinates
(x1, y1, x2, y2), which realizes C (x) O^2 as a real space where the complex
unit sends (x1, y1, x2, y2) to (-x2, -y2, x1, y1).  spin(9) and spin(9,1)
embed diagonally, A -> diag(A, A), whenever a 32-dimensional action is
needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import numpy as np

from .linalg import eye, fast_bracket, zeros
from .octonion import C_matrix, L_matrix, Octonion, R_matrix, conj
from .scalars import EXACT, FLOAT, FLOAT_TOL, Scalar, is_exact
from .spin8 import Spin8Element, complete_a2, spin8_basis

__all__ = [
    "FAMILIES",
    "FAMILY_DIMS",
    "FamilyError",
    "LieElement",
    "FamilyBasis",
    "MatrixC",
    "m9",
    "p9",
    "family_basis",
    "family_matrices",
    "family_matrices_float",
    "bracket_construction",
    "r_boost",
    "rprime_boost",
    "embed_diag32",
    "R_generator",
    "Rprime_generator",
    "T_generator",
    "G6_element",
    "rho9",
    "rho101",
    "minkowski_gram",
    "exp_element",
]

FAMILY_DIMS = {
    "spin8": 28,
    "spin9": 36,
    "spin10": 45,
    "spin101": 55,
    "spin102": 66,
    "spin91": 45,
}
FAMILIES = tuple(FAMILY_DIMS)


class FamilyError(ValueError):
    """Raised when an element does not match the requested family."""


@dataclass(frozen=True)
class LieElement:
    family: str
    matrix: np.ndarray
    params: Optional[dict] = None

    @property
    def size(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class FamilyBasis:
    family: str
    elements: tuple

    @property
    def dimension(self) -> int:
        return len(self.elements)

    def matrices(self) -> list:
        return [el.matrix for el in self.elements]


def _blocks(grid, size: int, mode: str = EXACT) -> np.ndarray:
    """Assemble a square matrix from a grid of 8x8 blocks (None = zero)."""
    k = size // 8
    m = zeros(size, size, mode)
    for bi in range(k):
        for bj in range(k):
            blk = grid[bi][bj]
            if blk is not None:
                m[8 * bi : 8 * bi + 8, 8 * bj : 8 * bj + 8] = blk
    return m


def _sI(s: Scalar, mode: str = EXACT) -> np.ndarray:
    return s * eye(8, mode)


# ---------------------------------------------------------------------------
# Clifford generators for the 9-dimensional quadratic space
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MatrixC:
    """A complex-linear map stored as its real 32x32 matrix.

    real(A + iB) = [[A, -B], [B, A]] in the ((x1,y1), (x2,y2)) splitting;
    the stored matrix always commutes with the complex structure J_C.
    """

    mat: np.ndarray
    convention: str = "i:(x1,y1,x2,y2)->(-x2,-y2,x1,y1)"

    def commutes_with_J(self) -> bool:
        j = J_C(EXACT if self.mat.dtype == object else FLOAT)
        d = j @ self.mat - self.mat @ j
        if self.mat.dtype == object:
            return all(v == 0 for v in d.ravel())
        return float(np.abs(d).max()) <= FLOAT_TOL


def J_C(mode: str = EXACT) -> np.ndarray:
    """The complex structure on O^4: J_C^2 = -I32."""
    m = zeros(32, 32, mode)
    i16 = eye(16, mode)
    m[0:16, 16:32] = -i16
    m[16:32, 0:16] = i16
    return m


def complex_block_to_real(a: Optional[np.ndarray], b: Optional[np.ndarray], mode: str = EXACT) -> np.ndarray:
    """Real 32x32 form of the complex 16x16 map A + iB."""
    m = zeros(32, 32, mode)
    if a is not None:
        m[0:16, 0:16] = a
        m[16:32, 16:32] = a
    if b is not None:
        m[0:16, 16:32] = -b
        m[16:32, 0:16] = b
    return m


def m9(r: Scalar, x: Octonion) -> MatrixC:
    """Clifford generator i * [[r I, C R_x], [C L_x, -r I]] on C (x) O^2."""
    mode = x.mode
    c = C_matrix(mode)
    k = zeros(16, 16, mode)
    k[0:8, 0:8] = _sI(r, mode)
    k[0:8, 8:16] = c @ R_matrix(x)
    k[8:16, 0:8] = c @ L_matrix(x)
    k[8:16, 8:16] = _sI(-r, mode)
    return MatrixC(complex_block_to_real(None, k, mode))


def p9(r: Scalar, x: Octonion, require_unit: bool = True) -> np.ndarray:
    """Spin(9) generator [[r I, C R_x], [-C L_x, r I]], orthogonal on O^2."""
    from .octonion import norm_sq

    mode = x.mode
    n = r * r + norm_sq(x)
    if require_unit:
        ok = n == 1 if mode == EXACT else abs(n - 1) <= FLOAT_TOL
        if not ok:
            raise ValueError("p9 generator needs r^2 + |x|^2 = 1")
    c = C_matrix(mode)
    m = zeros(16, 16, mode)
    m[0:8, 0:8] = _sI(r, mode)
    m[0:8, 8:16] = c @ R_matrix(x)
    m[8:16, 0:8] = -(c @ L_matrix(x))
    m[8:16, 8:16] = _sI(r, mode)
    return m


# ---------------------------------------------------------------------------
# Family templates
# ---------------------------------------------------------------------------


def spin9_matrix(a: Spin8Element, x: Octonion) -> np.ndarray:
    c = C_matrix(EXACT)
    return _blocks(
        [[a.a1, c @ R_matrix(x)], [-(c @ L_matrix(x)), a.a3]], 16
    )


def spin91_matrix(a: Spin8Element, xs: Scalar, w: Octonion, xo: Octonion) -> np.ndarray:
    c = C_matrix(EXACT)
    return _blocks(
        [
            [a.a1 + _sI(xs), c @ R_matrix(w)],
            [c @ L_matrix(xo), a.a3 - _sI(xs)],
        ],
        16,
    )


def spin10_matrix(a: Spin8Element, r: Scalar, x: Octonion, y: Octonion) -> np.ndarray:
    c = C_matrix(EXACT)
    crx, clx = c @ R_matrix(x), c @ L_matrix(x)
    cry, cly = c @ R_matrix(y), c @ L_matrix(y)
    ri = _sI(r)
    return _blocks(
        [
            [a.a1, crx, -ri, -cry],
            [-clx, a.a3, -cly, ri],
            [ri, cry, a.a1, crx],
            [cly, -ri, -clx, a.a3],
        ],
        32,
    )


def spin101_matrix(
    a: Spin8Element,
    xs: Scalar,
    ys: Scalar,
    zs: Scalar,
    xo: Octonion,
    yo: Octonion,
    zo: Octonion,
) -> np.ndarray:
    c = C_matrix(EXACT)
    crx, clx = c @ R_matrix(xo), c @ L_matrix(xo)
    cry, cly = c @ R_matrix(yo), c @ L_matrix(yo)
    crz, clz = c @ R_matrix(zo), c @ L_matrix(zo)
    return _blocks(
        [
            [a.a1 + _sI(xs), crx, _sI(ys), cry],
            [-clx, a.a3 + _sI(xs), cly, _sI(-ys)],
            [_sI(zs), crz, a.a1 - _sI(xs), crx],
            [clz, _sI(-zs), -clx, a.a3 - _sI(xs)],
        ],
        32,
    )


def spin102_matrix(
    a: Spin8Element,
    u: Scalar,
    v: Scalar,
    ws: Scalar,
    xs: Scalar,
    ys: Scalar,
    zs: Scalar,
    wo: Octonion,
    xo: Octonion,
    yo: Octonion,
    zo: Octonion,
) -> np.ndarray:
    c = C_matrix(EXACT)
    crw, clw = c @ R_matrix(wo), c @ L_matrix(wo)
    crx, clx = c @ R_matrix(xo), c @ L_matrix(xo)
    cry, cly = c @ R_matrix(yo), c @ L_matrix(yo)
    crz, clz = c @ R_matrix(zo), c @ L_matrix(zo)
    return _blocks(
        [
            [a.a1 + _sI(xs), crw, _sI(ys), cry],
            [clx, a.a3 + _sI(ws), cly, _sI(u)],
            [_sI(zs), crz, a.a1 - _sI(xs), -crx],
            [clz, _sI(v), -clw, a.a3 - _sI(ws)],
        ],
        32,
    )


_ZERO_SPIN8 = None


def _zero_spin8() -> Spin8Element:
    global _ZERO_SPIN8
    if _ZERO_SPIN8 is None:
        z = zeros(8, 8, EXACT)
        _ZERO_SPIN8 = Spin8Element(z, z.copy(), z.copy())
    return _ZERO_SPIN8


def _param_units():
    """(name, value) pairs for one unit of each scalar/octonion parameter."""
    return {
        "scalar": Fraction(1),
        "oct": [Octonion.unit(i) for i in range(8)],
    }


@lru_cache(maxsize=None)
def family_basis(family: str) -> FamilyBasis:
    """Ordered exact basis: the 28 spin(8) triples first, then the family's
    scalar and octonion parameters in template order."""
    if family not in FAMILIES:
        raise FamilyError("unknown family %r" % family)
    z8 = _zero_spin8()
    zo = Octonion.zero()
    units = [Octonion.unit(i) for i in range(8)]
    one = Fraction(1)
    els = []

    def add(params: dict, mat: np.ndarray):
        els.append(LieElement(family, mat, params))

    s8 = spin8_basis()
    if family == "spin8":
        for a in s8:
            add({"a": a}, a.block_diag16())
    elif family == "spin9":
        for a in s8:
            add({"a": a, "x": zo}, spin9_matrix(a, zo))
        for u in units:
            add({"a": z8, "x": u}, spin9_matrix(z8, u))
    elif family == "spin91":
        for a in s8:
            add({"a": a, "x_scalar": 0, "w": zo, "x_oct": zo}, spin91_matrix(a, 0, zo, zo))
        add({"a": z8, "x_scalar": one, "w": zo, "x_oct": zo}, spin91_matrix(z8, one, zo, zo))
        for u in units:
            add({"a": z8, "x_scalar": 0, "w": u, "x_oct": zo}, spin91_matrix(z8, 0, u, zo))
        for u in units:
            add({"a": z8, "x_scalar": 0, "w": zo, "x_oct": u}, spin91_matrix(z8, 0, zo, u))
    elif family == "spin10":
        for a in s8:
            add({"a": a, "r": 0, "x": zo, "y": zo}, spin10_matrix(a, 0, zo, zo))
        add({"a": z8, "r": one, "x": zo, "y": zo}, spin10_matrix(z8, one, zo, zo))
        for u in units:
            add({"a": z8, "r": 0, "x": u, "y": zo}, spin10_matrix(z8, 0, u, zo))
        for u in units:
            add({"a": z8, "r": 0, "x": zo, "y": u}, spin10_matrix(z8, 0, zo, u))
    elif family == "spin101":
        def mat101(**kw):
            args = dict(xs=0, ys=0, zs=0, xo=zo, yo=zo, zo_=zo, a=z8)
            args.update(kw)
            return spin101_matrix(
                args["a"], args["xs"], args["ys"], args["zs"],
                args["xo"], args["yo"], args["zo_"],
            )

        for a in s8:
            add({"a": a}, mat101(a=a))
        for name in ("xs", "ys", "zs"):
            add({name: one}, mat101(**{name: one}))
        for name in ("xo", "yo", "zo_"):
            for u in units:
                add({name.rstrip("_"): u}, mat101(**{name: u}))
    elif family == "spin102":
        def mat102(**kw):
            args = dict(u=0, v=0, ws=0, xs=0, ys=0, zs=0, wo=zo, xo=zo, yo=zo, zo_=zo, a=z8)
            args.update(kw)
            return spin102_matrix(
                args["a"], args["u"], args["v"], args["ws"], args["xs"],
                args["ys"], args["zs"], args["wo"], args["xo"], args["yo"],
                args["zo_"],
            )

        for a in s8:
            add({"a": a}, mat102(a=a))
        for name in ("u", "v", "ws", "xs", "ys", "zs"):
            add({name: one}, mat102(**{name: one}))
        for name in ("wo", "xo", "yo", "zo_"):
            for un in units:
                add({name.rstrip("_"): un}, mat102(**{name: un}))
    basis = FamilyBasis(family, tuple(els))
    if basis.dimension != FAMILY_DIMS[family]:
        raise AssertionError(
            "family %s basis has %d elements, expected %d"
            % (family, basis.dimension, FAMILY_DIMS[family])
        )
    return basis


def family_matrices(family: str) -> list:
    return family_basis(family).matrices()


@lru_cache(maxsize=None)
def family_matrices_float(family: str) -> tuple:
    return tuple(np.asarray(m, dtype=float) for m in family_matrices(family))


def embed_diag32(m16: np.ndarray) -> np.ndarray:
    """Diagonal action of a 16x16 map on O^4 = O^2 + O^2."""
    mode = EXACT if m16.dtype == object else FLOAT
    m = zeros(32, 32, mode)
    m[0:16, 0:16] = m16
    m[16:32, 16:32] = m16
    return m


# ---------------------------------------------------------------------------
# Bracket constructions of the Lorentzian families
# ---------------------------------------------------------------------------


def r_boost() -> np.ndarray:
    """Generator of the scaling subgroup diag(t I16, 1/t I16)."""
    m = zeros(32, 32, EXACT)
    for i in range(16):
        m[i, i] = Fraction(1)
        m[16 + i, 16 + i] = Fraction(-1)
    return m


def rprime_boost() -> np.ndarray:
    """Generator of the second scaling subgroup diag(t, 1/t, 1/t, t) blocks."""
    m = zeros(32, 32, EXACT)
    for i in range(8):
        m[i, i] = Fraction(1)
        m[8 + i, 8 + i] = Fraction(-1)
        m[16 + i, 16 + i] = Fraction(-1)
        m[24 + i, 24 + i] = Fraction(1)
    return m


def bracket_construction(family: str) -> list:
    """Matrices spanning the family built from the smaller algebra and a
    boost: base basis, the boost itself, and all brackets [base_i, boost]."""
    if family == "spin101":
        base = [embed_diag32(m) if m.shape[0] == 16 else m for m in family_matrices("spin10")]
        boost = r_boost()
    elif family == "spin102":
        base = family_matrices("spin101")
        boost = rprime_boost()
    else:
        raise FamilyError("bracket construction applies to spin101/spin102")
    out = list(base) + [boost]
    for m in base:
        out.append(fast_bracket(m, boost))
    return out


# ---------------------------------------------------------------------------
# Distinguished group elements
# ---------------------------------------------------------------------------


def R_generator(t: Scalar) -> np.ndarray:
    if t <= 0:
        raise ValueError("R_generator needs t > 0")
    mode = EXACT if is_exact(t) else FLOAT
    t = Fraction(t) if mode == EXACT else float(t)
    m = zeros(32, 32, mode)
    for i in range(16):
        m[i, i] = t
        m[16 + i, 16 + i] = 1 / t
    return m


def Rprime_generator(t: Scalar) -> np.ndarray:
    if t <= 0:
        raise ValueError("Rprime_generator needs t > 0")
    mode = EXACT if is_exact(t) else FLOAT
    t = Fraction(t) if mode == EXACT else float(t)
    m = zeros(32, 32, mode)
    for i in range(8):
        m[i, i] = t
        m[8 + i, 8 + i] = 1 / t
        m[16 + i, 16 + i] = 1 / t
        m[24 + i, 24 + i] = t
    return m


def T_generator(c: Scalar, s: Scalar) -> np.ndarray:
    """Circle subgroup e^{i r} on the first complex slot, e^{-i r} on the
    second, realized on (x1, y1, x2, y2)."""
    mode = EXACT if (is_exact(c) and is_exact(s)) else FLOAT
    n = c * c + s * s
    ok = n == 1 if mode == EXACT else abs(n - 1) <= FLOAT_TOL
    if not ok:
        raise ValueError("T_generator needs c^2 + s^2 = 1")
    ci, si = _sI(c, mode), _sI(s, mode)
    return _blocks(
        [
            [ci, None, -si, None],
            [None, ci, None, si],
            [si, None, ci, None],
            [None, -si, None, ci],
        ],
        32,
        mode,
    )


def G6_element(a, b, c, d, a2, b2, c2, d2) -> np.ndarray:
    """Block element of the 6-dimensional invariance group of the quartic."""
    vals = (a, b, c, d, a2, b2, c2, d2)
    mode = EXACT if all(is_exact(v) for v in vals) else FLOAT
    det1, det2 = a * d - b * c, a2 * d2 - b2 * c2
    if mode == EXACT:
        ok = abs(det1) == 1 and abs(det2) == 1
    else:
        ok = abs(abs(det1) - 1) <= FLOAT_TOL and abs(abs(det2) - 1) <= FLOAT_TOL
    if not ok:
        raise ValueError("G6_element needs ad - bc = +-1 = a'd' - b'c'")
    return _blocks(
        [
            [_sI(a, mode), None, _sI(b, mode), None],
            [None, _sI(a2, mode), None, _sI(b2, mode)],
            [_sI(c, mode), None, _sI(d, mode), None],
            [None, _sI(c2, mode), None, _sI(d2, mode)],
        ],
        32,
        mode,
    )


# ---------------------------------------------------------------------------
# Vector-representation maps
# ---------------------------------------------------------------------------


def _eq_arrays(a: np.ndarray, b: np.ndarray) -> bool:
    d = a - b
    if a.dtype == object:
        return all(v == 0 for v in d.ravel())
    return float(np.abs(d).max()) <= FLOAT_TOL


def _block(m: np.ndarray, bi: int, bj: int) -> np.ndarray:
    return m[8 * bi : 8 * bi + 8, 8 * bj : 8 * bj + 8]


def _flip_rows(b: np.ndarray) -> np.ndarray:
    """C @ b without a matrix product (C is diag(1, -1, ..., -1))."""
    out = b.copy()
    out[1:, :] = -b[1:, :]
    return out


def _extract_scaled_identity(blk: np.ndarray) -> Scalar:
    s = blk[0, 0]
    expect = s * eye(8, EXACT if blk.dtype == object else FLOAT)
    if not _eq_arrays(blk, expect):
        raise FamilyError("block is not a scalar multiple of the identity")
    return s


def _extract_cr(m: np.ndarray, bi: int, bj: int) -> Octonion:
    """Octonion z with m-block = C R_z, verified exactly."""
    mode = EXACT if m.dtype == object else FLOAT
    rz = _flip_rows(_block(m, bi, bj))
    z = Octonion.from_coords(rz[:, 0], mode)
    if not _eq_arrays(rz, R_matrix(z)):
        raise FamilyError("block is not of the form C R_z")
    return z


def _check_cl(m: np.ndarray, bi: int, bj: int, z: Octonion, sign: int):
    """Verify m-block = sign * C L_z."""
    lz = _flip_rows(_block(m, bi, bj))
    if not _eq_arrays(lz, sign * L_matrix(z)):
        raise FamilyError("block is not of the form %+d C L_z" % sign)


def _as_matrix(a) -> np.ndarray:
    if isinstance(a, LieElement):
        return a.matrix
    return np.asarray(a)


def rho9(a, family: str = "spin9") -> np.ndarray:
    """so(9) image [[0, 2 conj(z)^T], [-2 conj(z), a2]] on R + O."""
    if isinstance(a, LieElement) and a.family != family:
        raise FamilyError("rho9 expects a spin9 element, got %s" % a.family)
    if family != "spin9":
        raise FamilyError("rho9 is defined for the spin9 family")
    m = _as_matrix(a)
    if m.shape != (16, 16):
        raise FamilyError("spin9 elements are 16x16")
    mode = EXACT if m.dtype == object else FLOAT
    a1, a3 = m[0:8, 0:8], m[8:16, 8:16]
    # the completion relation alone also admits scalings; skewness pins spin(8)
    if not (_eq_arrays(a1, -a1.T) and _eq_arrays(a3, -a3.T)):
        raise FamilyError("diagonal blocks are not skew-symmetric")
    z = _extract_cr(m, 0, 1)
    _check_cl(m, 1, 0, z, -1)
    a2 = complete_a2(a1, a3)
    out = zeros(9, 9, mode)
    zb = conj(z).vector()
    out[0, 1:9] = 2 * zb
    out[1:9, 0] = -2 * zb
    out[1:9, 1:9] = a2
    return out


def minkowski_gram(mode: str = EXACT) -> np.ndarray:
    """Gram matrix of the Lorentzian form on R^{2+1} + O."""
    g = zeros(11, 11, mode)
    two = Fraction(2) if mode == EXACT else 2.0
    g[0, 2] = -two
    g[2, 0] = -two
    g[1, 1] = two / 2
    for i in range(8):
        g[3 + i, 3 + i] = two / 2
    return g


def _spin101_params(m: np.ndarray):
    """Extract (a, x, y, z scalars, X, Y, Z octonions), verifying every block."""
    mode = EXACT if m.dtype == object else FLOAT
    xs = _extract_scaled_identity(m[0:8, 0:8] - m[16:24, 16:24]) / 2
    a1 = m[0:8, 0:8] - _sI(xs, mode)
    a3 = m[8:16, 8:16] - _sI(xs, mode)
    if not (_eq_arrays(a1, -a1.T) and _eq_arrays(a3, -a3.T)):
        raise FamilyError("diagonal blocks are not skew plus the same scaling")
    if not (_eq_arrays(_block(m, 2, 2), a1 - _sI(xs, mode)) and
            _eq_arrays(_block(m, 3, 3), a3 - _sI(xs, mode))):
        raise FamilyError("diagonal blocks do not match the template")
    ys = _extract_scaled_identity(_block(m, 0, 2))
    if _extract_scaled_identity(_block(m, 1, 3)) != -ys:
        raise FamilyError("y-scalar blocks disagree")
    zs = _extract_scaled_identity(_block(m, 2, 0))
    if _extract_scaled_identity(_block(m, 3, 1)) != -zs:
        raise FamilyError("z-scalar blocks disagree")
    xo = _extract_cr(m, 0, 1)
    _check_cl(m, 1, 0, xo, -1)
    if not _eq_arrays(_block(m, 2, 3), _block(m, 0, 1)):
        raise FamilyError("repeated x-octonion block disagrees")
    _check_cl(m, 3, 2, xo, -1)
    yo = _extract_cr(m, 0, 3)
    _check_cl(m, 1, 2, yo, 1)
    zo = _extract_cr(m, 2, 1)
    _check_cl(m, 3, 0, zo, 1)
    z8 = Spin8Element(a1, complete_a2(a1, a3), a3)
    return z8, xs, ys, zs, xo, yo, zo


def rho101(a, family: str = "spin101") -> np.ndarray:
    """so(10,1) image on R^{2+1} + O for the Lorentzian family."""
    if isinstance(a, LieElement) and a.family != family:
        raise FamilyError("rho101 expects a spin101 element, got %s" % a.family)
    if family != "spin101":
        raise FamilyError("rho101 is defined for the spin101 family")
    m = _as_matrix(a)
    if m.shape != (32, 32):
        raise FamilyError("spin101 elements are 32x32")
    mode = EXACT if m.dtype == object else FLOAT
    z8, xs, ys, zs, xo, yo, zo = _spin101_params(m)
    xb, yb, zb = conj(xo).vector(), conj(yo).vector(), conj(zo).vector()
    out = zeros(11, 11, mode)
    out[0, 0] = 2 * xs
    out[0, 1] = ys
    out[0, 3:11] = yb
    out[1, 0] = 2 * zs
    out[1, 2] = 2 * ys
    out[1, 3:11] = 2 * xb
    out[2, 1] = zs
    out[2, 2] = -2 * xs
    out[2, 3:11] = zb
    out[3:11, 0] = 2 * zb
    out[3:11, 1] = -2 * xb
    out[3:11, 2] = 2 * yb
    out[3:11, 3:11] = z8.a2
    return out


def exp_element(a, t: float = 1.0) -> np.ndarray:
    """Float matrix exponential of t * A (scaling-and-squaring Pade)."""
    from scipy.linalg import expm

    m = np.asarray(_as_matrix(a), dtype=float)
    return expm(float(t) * m)
