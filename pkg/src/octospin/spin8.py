"""Clifford generators on O + O, triality triples, and the spin(8) basis.

A triple (g1, g2, g3) of orthogonal 8x8 matrices belongs to the group H when
g2(xy) = g1(x) g3(y) for all octonions x, y; the three projections realize
Spin(8) on the two half-spinor spaces and the vector space.  Infinitesimally
an element is a triple (a1, a2, a3) of skew matrices with
a2(xy) = a1(x) y + x a3(y).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .linalg import zeros
from .octonion import (
    C_matrix,
    L_matrix,
    MUL_K,
    MUL_S,
    Octonion,
    R_matrix,
    conj,
    norm_sq,
    oct_mul,
)
from .scalars import EXACT, FLOAT, FLOAT_TOL, Scalar

__all__ = [
    "TrialityTriple",
    "Spin8Element",
    "m8",
    "sigma_generator",
    "h_check",
    "triality_alpha",
    "triality_beta",
    "triality_tau",
    "spin8_basis",
    "rho2_of",
    "complete_a2",
    "triple_product",
]


@dataclass(frozen=True)
class TrialityTriple:
    g1: np.ndarray
    g2: np.ndarray
    g3: np.ndarray

    def matrices(self):
        return (self.g1, self.g2, self.g3)


@dataclass(frozen=True)
class Spin8Element:
    a1: np.ndarray
    a2: np.ndarray
    a3: np.ndarray

    def block_diag16(self) -> np.ndarray:
        """The canonical 16x16 embedding diag(a1, a3) on O + O."""
        mode = EXACT if self.a1.dtype == object else FLOAT
        m = zeros(16, 16, mode)
        m[0:8, 0:8] = self.a1
        m[8:16, 8:16] = self.a3
        return m


def m8(x: Octonion) -> np.ndarray:
    """Clifford generator [[0, C R_x], [-C L_x, 0]] on O + O."""
    c = C_matrix(x.mode)
    m = zeros(16, 16, x.mode)
    m[0:8, 8:16] = c @ R_matrix(x)
    m[8:16, 0:8] = -(c @ L_matrix(x))
    return m


def _is_unit(x: Scalar, mode: str) -> bool:
    return x == 1 if mode == EXACT else abs(x - 1) <= FLOAT_TOL


def sigma_generator(u: Octonion) -> TrialityTriple:
    """The H-triple (L_u, L_u R_u, R_u) of a unit octonion."""
    if not _is_unit(norm_sq(u), u.mode):
        raise ValueError("sigma_generator needs |u| = 1")
    lu, ru = L_matrix(u), R_matrix(u)
    return TrialityTriple(lu, lu @ ru, ru)


def h_check(t: TrialityTriple) -> Scalar:
    """Max deviation of g2(e_i e_j) - g1(e_i) g3(e_j) over all basis pairs."""
    worst = Fraction(0) if t.g1.dtype == object else 0.0
    g1cols = [Octonion.from_coords(t.g1[:, i]) for i in range(8)]
    g3cols = [Octonion.from_coords(t.g3[:, j]) for j in range(8)]
    for i in range(8):
        for j in range(8):
            k, s = MUL_K[i][j], MUL_S[i][j]
            lhs = s * t.g2[:, k]
            rhs = oct_mul(g1cols[i], g3cols[j]).vector()
            dev = max(abs(v) for v in (lhs - rhs))
            if dev > worst:
                worst = dev
    return worst


def _require_in_h(t: TrialityTriple):
    res = h_check(t)
    tol = 0 if t.g1.dtype == object else FLOAT_TOL
    if res > tol:
        raise ValueError("triple is not in H (relation residual %s)" % res)


def triality_alpha(t: TrialityTriple) -> TrialityTriple:
    _require_in_h(t)
    c = C_matrix(EXACT if t.g1.dtype == object else FLOAT)
    return TrialityTriple(c @ t.g3 @ c, c @ t.g2 @ c, c @ t.g1 @ c)


def triality_beta(t: TrialityTriple) -> TrialityTriple:
    _require_in_h(t)
    c = C_matrix(EXACT if t.g1.dtype == object else FLOAT)
    return TrialityTriple(t.g2, t.g1, c @ t.g3 @ c)


def triality_tau(t: TrialityTriple) -> TrialityTriple:
    return triality_alpha(triality_beta(t))


def triple_product(s: TrialityTriple, t: TrialityTriple) -> TrialityTriple:
    return TrialityTriple(s.g1 @ t.g1, s.g2 @ t.g2, s.g3 @ t.g3)


def complete_a2(a1: np.ndarray, a3: np.ndarray) -> np.ndarray:
    """Solve a2(e_i e_j) = a1(e_i) e_j + e_i a3(e_j) for the middle matrix.

    Since e_i e_j = +-e_k, each pair pins down one column of a2; the 64 pairs
    overdetermine all 8 columns and the solution must be consistent, which is
    asserted.  Inconsistency means (a1, a3) is not an infinitesimal triality
    pair.
    """
    a2 = [None] * 8
    a1cols = [Octonion.from_coords(a1[:, i]) for i in range(8)]
    a3cols = [Octonion.from_coords(a3[:, j]) for j in range(8)]
    exact = a1.dtype == object
    for i in range(8):
        ei = Octonion.unit(i, EXACT if exact else FLOAT)
        for j in range(8):
            ej = Octonion.unit(j, EXACT if exact else FLOAT)
            k, s = MUL_K[i][j], MUL_S[i][j]
            col = s * (oct_mul(a1cols[i], ej) + oct_mul(ei, a3cols[j])).vector()
            if a2[k] is None:
                a2[k] = col
            else:
                dev = max(abs(v) for v in (a2[k] - col))
                if dev > (0 if exact else FLOAT_TOL):
                    raise ValueError(
                        "no middle matrix: infinitesimal triality violated"
                    )
    m = zeros(8, 8, EXACT if exact else FLOAT)
    for k in range(8):
        m[:, k] = a2[k]
    return m


def spin8_element(a1: np.ndarray, a3: np.ndarray) -> Spin8Element:
    return Spin8Element(a1, complete_a2(a1, a3), a3)


@lru_cache(maxsize=None)
def spin8_basis() -> tuple:
    """28 independent triples spanning spin(8).

    The block-diagonal parts come from the Clifford products m_{e_i} m_{e_j}
    = diag(-L_conj(e_i) L_{e_j}, -R_conj(e_i) R_{e_j}) for i < j; each a2 is
    the unique completion of the infinitesimal relation.
    """
    out = []
    for i in range(8):
        li, ri = L_matrix(conj(Octonion.unit(i))), R_matrix(conj(Octonion.unit(i)))
        for j in range(i + 1, 8):
            lj, rj = L_matrix(Octonion.unit(j)), R_matrix(Octonion.unit(j))
            a1 = -(li @ lj)
            a3 = -(ri @ rj)
            out.append(spin8_element(a1, a3))
    return tuple(out)


def rho2_of(a: Spin8Element) -> np.ndarray:
    """Vector-representation image of a triple; validates the triple first."""
    check = complete_a2(a.a1, a.a3)
    dev = max(abs(v) for v in (check - a.a2).ravel())
    if dev > (0 if a.a1.dtype == object else FLOAT_TOL):
        raise ValueError("stored middle matrix violates the triality relation")
    return a.a2
