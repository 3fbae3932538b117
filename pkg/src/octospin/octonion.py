"""The octonion algebra on the fixed basis e0 = 1, e1, ..., e7.

The multiplication table is generated at import time by Cayley-Dickson
doubling from the reals with the convention (a,b)(c,d) = (ac - d*b, da + bc*),
never hand-entered.  Products are table-driven, so exact rationals and floats
share one code path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .linalg import zeros
from .scalars import EXACT, FLOAT, Scalar, is_exact

__all__ = [
    "Octonion",
    "oct_mul",
    "conj",
    "inner",
    "norm_sq",
    "L_matrix",
    "R_matrix",
    "C_matrix",
    "structure_constants",
    "rand_octonion",
    "rational_unit_octonion",
]


def _cd_conj(x: list) -> list:
    return [x[0]] + [-v for v in x[1:]]


def _cd_mul(x: list, y: list) -> list:
    """Cayley-Dickson product on coordinate lists of length 2**k."""
    n = len(x)
    if n == 1:
        return [x[0] * y[0]]
    h = n // 2
    a, b = x[:h], x[h:]
    c, d = y[:h], y[h:]
    left = [p - q for p, q in zip(_cd_mul(a, c), _cd_mul(_cd_conj(d), b))]
    right = [p + q for p, q in zip(_cd_mul(d, a), _cd_mul(b, _cd_conj(c)))]
    return left + right


def _build_table():
    """e_i e_j = sign * e_k, encoded as (k_table, sign_table)."""
    k_tab = [[0] * 8 for _ in range(8)]
    s_tab = [[0] * 8 for _ in range(8)]
    for i in range(8):
        ei = [1 if t == i else 0 for t in range(8)]
        for j in range(8):
            ej = [1 if t == j else 0 for t in range(8)]
            prod = _cd_mul(ei, ej)
            nz = [(k, c) for k, c in enumerate(prod) if c != 0]
            assert len(nz) == 1 and nz[0][1] in (-1, 1)
            k_tab[i][j], s_tab[i][j] = nz[0]
    return k_tab, s_tab


MUL_K, MUL_S = _build_table()


def structure_constants() -> list:
    """All nonzero (i, j, k, c) with e_i e_j = c e_k, c in {-1, 1}."""
    return [
        (i, j, MUL_K[i][j], MUL_S[i][j]) for i in range(8) for j in range(8)
    ]


@dataclass(frozen=True)
class Octonion:
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != 8:
            raise ValueError("octonion needs 8 coordinates")

    @classmethod
    def from_coords(cls, seq, mode: str = None) -> "Octonion":
        vals = list(seq)
        if mode is None:
            mode = EXACT if all(is_exact(v) for v in vals) else FLOAT
        if mode == EXACT:
            return cls(tuple(Fraction(v) for v in vals))
        return cls(tuple(float(v) for v in vals))

    @classmethod
    def zero(cls, mode: str = EXACT) -> "Octonion":
        return cls.from_coords([0] * 8, mode)

    @classmethod
    def unit(cls, i: int = 0, mode: str = EXACT) -> "Octonion":
        return cls.from_coords([1 if t == i else 0 for t in range(8)], mode)

    @property
    def mode(self) -> str:
        return EXACT if is_exact(self.coords[0]) else FLOAT

    def __add__(self, other: "Octonion") -> "Octonion":
        return Octonion(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Octonion") -> "Octonion":
        return Octonion(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Octonion":
        return Octonion(tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, Octonion):
            return oct_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, s) -> "Octonion":
        s = Fraction(s) if self.mode == EXACT else float(s)
        return Octonion(tuple(s * a for a in self.coords))

    def vector(self) -> np.ndarray:
        if self.mode == EXACT:
            out = np.empty(8, dtype=object)
            out[:] = self.coords
            return out
        return np.array(self.coords, dtype=float)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)


def oct_mul(x: Octonion, y: Octonion) -> Octonion:
    zero = Fraction(0) if x.mode == EXACT else 0.0
    out = [zero] * 8
    for i, xi in enumerate(x.coords):
        if xi == 0:
            continue
        ks, ss = MUL_K[i], MUL_S[i]
        for j, yj in enumerate(y.coords):
            if yj == 0:
                continue
            out[ks[j]] += ss[j] * xi * yj
    return Octonion(tuple(out))


def conj(x: Octonion) -> Octonion:
    return Octonion((x.coords[0],) + tuple(-c for c in x.coords[1:]))


def inner(x: Octonion, y: Octonion) -> Scalar:
    return sum(a * b for a, b in zip(x.coords, y.coords))


def norm_sq(x: Octonion) -> Scalar:
    return sum(a * a for a in x.coords)


def L_matrix(x: Octonion) -> np.ndarray:
    """8x8 matrix of left multiplication: L_matrix(x) @ v = (x * e_j-combo)."""
    m = zeros(8, 8, x.mode)
    for i, xi in enumerate(x.coords):
        if xi == 0:
            continue
        for j in range(8):
            m[MUL_K[i][j], j] += MUL_S[i][j] * xi
    return m


def R_matrix(x: Octonion) -> np.ndarray:
    """8x8 matrix of right multiplication by x."""
    m = zeros(8, 8, x.mode)
    for j, xj in enumerate(x.coords):
        if xj == 0:
            continue
        for i in range(8):
            m[MUL_K[i][j], i] += MUL_S[i][j] * xj
    return m


def C_matrix(mode: str = EXACT) -> np.ndarray:
    """Conjugation as a matrix: diag(1, -1, ..., -1)."""
    m = zeros(8, 8, mode)
    one = Fraction(1) if mode == EXACT else 1.0
    m[0, 0] = one
    for i in range(1, 8):
        m[i, i] = -one
    return m


def rand_octonion(rng, mode: str = EXACT) -> Octonion:
    from .scalars import rand_fraction

    fs = [rand_fraction(rng) for _ in range(8)]
    return Octonion.from_coords(fs, EXACT) if mode == EXACT else Octonion.from_coords(
        [float(f) for f in fs], FLOAT
    )


def rational_unit_octonion(rng) -> Octonion:
    """Exact unit octonion via the rational sphere parametrization.

    u = ((1 - |t|^2), 2t) / (1 + |t|^2) for t in Q^7 always has |u| = 1.
    """
    t = [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(7)]
    nt = sum(v * v for v in t)
    den = 1 + nt
    return Octonion.from_coords([(1 - nt) / den] + [2 * v / den for v in t], EXACT)
