"""Invariant polynomials, squaring maps, orbit labels, and stabilizers.

The quadratic invariants live on O + O and on pairs of O^2 spinors; the
quartic lives on O^4.  Orbit classification reads invariants only and never
searches for group elements.  Stabilizer subalgebras come from exact (or
SVD-thresholded) nullspaces of the basis action on a fixed spinor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
import numpy as np

from .families import FamilyError, embed_diag32, family_matrices, family_matrices_float
from .linalg import nullspace_basis, zeros
from .octonion import Octonion, inner, norm_sq, oct_mul
from .scalars import EXACT, FLOAT, FLOAT_TOL, Scalar, exact_sqrt, is_exact

__all__ = [
    "Spinor",
    "Vector9",
    "Vector11",
    "OrbitLabel",
    "InconsistentInvariants",
    "q_pair",
    "quads",
    "sigma9",
    "q22",
    "recover_abcd",
    "p_quartic",
    "p_from_quads",
    "p_wedge",
    "sigma101",
    "minkowski",
    "omega",
    "omega_gram",
    "stabilizer_dim",
    "stabilizer",
    "stabilizer_matrices",
    "trace_form_negative_definite",
    "classify",
    "canonical_z_theta",
    "canonical_z_ab",
    "rand_spinor",
]


class InconsistentInvariants(ValueError):
    """Invariant values that no spinor can realize."""


@dataclass(frozen=True)
class Spinor:
    x1: Octonion
    y1: Octonion
    x2: Octonion
    y2: Octonion

    @classmethod
    def pair(cls, x: Octonion, y: Octonion) -> "Spinor":
        """O^2 spinor (x, y); the second pair of slots stays zero."""
        z = Octonion.zero(x.mode)
        return cls(x, y, z, z)

    @classmethod
    def from_vector(cls, v) -> "Spinor":
        v = list(v)
        if len(v) == 16:
            return cls.pair(
                Octonion.from_coords(v[0:8]), Octonion.from_coords(v[8:16])
            )
        if len(v) != 32:
            raise ValueError("spinor vector must have 16 or 32 coordinates")
        return cls(
            Octonion.from_coords(v[0:8]),
            Octonion.from_coords(v[8:16]),
            Octonion.from_coords(v[16:24]),
            Octonion.from_coords(v[24:32]),
        )

    @property
    def mode(self) -> str:
        return self.x1.mode

    def slots(self):
        return (self.x1, self.y1, self.x2, self.y2)

    def vector32(self) -> np.ndarray:
        return np.concatenate([o.vector() for o in self.slots()])

    def vector16(self) -> np.ndarray:
        return np.concatenate([self.x1.vector(), self.y1.vector()])

    def first_pair(self) -> "Spinor":
        return Spinor.pair(self.x1, self.y1)

    def second_pair(self) -> "Spinor":
        return Spinor.pair(self.x2, self.y2)

    def __add__(self, other: "Spinor") -> "Spinor":
        return Spinor(*(a + b for a, b in zip(self.slots(), other.slots())))

    def __sub__(self, other: "Spinor") -> "Spinor":
        return Spinor(*(a - b for a, b in zip(self.slots(), other.slots())))

    def __rmul__(self, s) -> "Spinor":
        return Spinor(*(o.scale(s) for o in self.slots()))


Vector9 = tuple  # (t, Octonion)
Vector11 = tuple  # (a1, a2, a3, Octonion)


@dataclass(frozen=True)
class OrbitLabel:
    family: str
    invariants: dict
    canonical: dict
    orbit: str

    def as_flat_dict(self) -> dict:
        out = {"family": self.family}
        out.update(self.invariants)
        out.update(self.canonical)
        out["orbit"] = self.orbit
        return out


# ---------------------------------------------------------------------------
# Quadratic and quartic invariants
# ---------------------------------------------------------------------------


def q_pair(v: Spinor) -> tuple:
    """(|x|^2, |y|^2) on O + O."""
    return (norm_sq(v.x1), norm_sq(v.y1))


def quads(v1: Spinor, v2: Spinor) -> tuple:
    """(q20, q11, q02) for a pair of O^2 spinors."""
    q20 = norm_sq(v1.x1) + norm_sq(v1.y1)
    q11 = inner(v1.x1, v2.x1) + inner(v1.y1, v2.y1)
    q02 = norm_sq(v2.x1) + norm_sq(v2.y1)
    return (q20, q11, q02)


def sigma9(v: Spinor) -> Vector9:
    """Squaring map O^2 -> R + O: (|x|^2 - |y|^2, 2xy)."""
    return (norm_sq(v.x1) - norm_sq(v.y1), 2 * oct_mul(v.x1, v.y1))


def q22(v1: Spinor, v2: Spinor) -> Scalar:
    """Dot product of the two squaring images in R + O."""
    t1, o1 = sigma9(v1)
    t2, o2 = sigma9(v2)
    return t1 * t2 + inner(o1, o2)


def recover_abcd(q20, q11, q02, q22_val, tol: float = FLOAT_TOL) -> tuple:
    """Canonical parameters (a, b, c, d) >= 0 from the four invariants.

    a = sqrt(q20), c = q11 / a, b^2 = (q02 - q22/q20) / 2,
    d^2 = (q02 + q22/q20) / 2 - c^2.  Raises InconsistentInvariants when a
    derived square is negative beyond tolerance (the input values are not
    realizable by any spinor pair).  Exact inputs whose square roots are
    rational give exact outputs; otherwise floats are returned.
    """
    exact = all(is_exact(v) for v in (q20, q11, q02, q22_val))
    if exact:
        q20, q11, q02, q22_val = map(Fraction, (q20, q11, q02, q22_val))
    if q20 <= 0:
        raise InconsistentInvariants("recover_abcd needs q20 > 0")
    b_sq = (q02 - q22_val / q20) / 2
    c_sq = q11 * q11 / q20
    d_sq = (q02 + q22_val / q20) / 2 - c_sq
    for name, val in (("b^2", b_sq), ("d^2", d_sq)):
        if val < (0 if exact else -tol):
            raise InconsistentInvariants("%s = %s is negative" % (name, val))
    if exact:
        roots = [exact_sqrt(v) for v in (q20, b_sq, c_sq, max(d_sq, Fraction(0)))]
        if all(r is not None for r in roots):
            a, b, c, d = roots
            c = c if q11 >= 0 else -c
            return (a, b, c, d)
    a = math.sqrt(float(q20))
    b = math.sqrt(max(float(b_sq), 0.0))
    c = float(q11) / a
    d = math.sqrt(max(float(d_sq), 0.0))
    return (a, b, c, d)


def p_quartic(z: Spinor) -> Scalar:
    """The degree-4 invariant on O^4 (main expansion)."""
    x1, y1, x2, y2 = z.slots()
    dot = inner(x1, x2) + inner(y1, y2)
    return (
        norm_sq(x1) * norm_sq(x2)
        + norm_sq(y1) * norm_sq(y2)
        - dot * dot
        + 2 * inner(oct_mul(x1, y1), oct_mul(x2, y2))
    )


def p_from_quads(z: Spinor) -> Scalar:
    """Same quartic as (q22 + q20 q02 - 2 q11^2) / 2."""
    v1, v2 = z.first_pair(), z.second_pair()
    q20, q11, q02 = quads(v1, v2)
    s = q22(v1, v2) + q20 * q02 - 2 * q11 * q11
    return s / 2 if is_exact(s) else s / 2.0


def p_wedge(z: Spinor) -> Scalar:
    """Same quartic via wedge norms |u ^ v|^2 = |u|^2 |v|^2 - (u.v)^2."""
    x1, y1, x2, y2 = z.slots()
    dx = inner(x1, x2)
    dy = inner(y1, y2)
    wx = norm_sq(x1) * norm_sq(x2) - dx * dx
    wy = norm_sq(y1) * norm_sq(y2) - dy * dy
    return wx + wy - 2 * dx * dy + 2 * inner(oct_mul(x1, y1), oct_mul(x2, y2))


def sigma101(z: Spinor) -> Vector11:
    """Squaring map O^4 -> R^{2+1} + O."""
    x1, y1, x2, y2 = z.slots()
    return (
        norm_sq(x1) + norm_sq(y1),
        2 * (inner(x1, x2) - inner(y1, y2)),
        norm_sq(x2) + norm_sq(y2),
        2 * (oct_mul(x1, y2) + oct_mul(x2, y1)),
    )


def minkowski(u: Vector11, v: Vector11) -> Scalar:
    """Lorentzian inner product -2(a1 b3 + a3 b1) + a2 b2 + o . o'."""
    return -2 * (u[0] * v[2] + u[2] * v[0]) + u[1] * v[1] + inner(u[3], v[3])


def omega(z: Spinor, w: Spinor) -> Scalar:
    """Symplectic 2-form dx1 ^. dx2 + dy1 ^. dy2 evaluated on two spinors."""
    return (
        inner(z.x1, w.x2)
        - inner(w.x1, z.x2)
        + inner(z.y1, w.y2)
        - inner(w.y1, z.y2)
    )


def omega_gram(mode: str = EXACT) -> np.ndarray:
    """Gram matrix J of the symplectic form; J^2 = -I32."""
    j = zeros(32, 32, mode)
    one = Fraction(1) if mode == EXACT else 1.0
    for i in range(8):
        j[i, 16 + i] = one
        j[8 + i, 24 + i] = one
        j[16 + i, i] = -one
        j[24 + i, 8 + i] = -one
    return j


# ---------------------------------------------------------------------------
# Stabilizers
# ---------------------------------------------------------------------------


def _action_matrices(family: str, size: int, mode: str):
    mats = (
        family_matrices(family) if mode == EXACT else list(family_matrices_float(family))
    )
    if mats[0].shape[0] == size:
        return mats
    if mats[0].shape[0] == 16 and size == 32:
        return [embed_diag32(m) for m in mats]
    raise FamilyError(
        "family %s does not act on %d-dimensional spinors" % (family, size)
    )


def stabilizer(family: str, z: Spinor) -> list:
    """Coefficient vectors spanning {c : sum_i c_i A_i z = 0}."""
    vec = z.vector16() if family in ("spin8", "spin9", "spin91") else z.vector32()
    if family in ("spin8", "spin9", "spin91") and any(
        not o.is_zero() for o in (z.x2, z.y2)
    ):
        raise FamilyError("family %s acts on O + O spinors only" % family)
    mats = _action_matrices(family, vec.size, z.mode)
    return nullspace_basis(mats, vec)


def stabilizer_dim(family: str, z: Spinor) -> int:
    return len(stabilizer(family, z))


def stabilizer_matrices(family: str, z: Spinor) -> list:
    """The stabilizer subalgebra as matrices, integer-scaled in exact mode."""
    vec = z.vector16() if family in ("spin8", "spin9", "spin91") else z.vector32()
    mats = _action_matrices(family, vec.size, z.mode)
    out = []
    for coeffs in stabilizer(family, z):
        if z.mode == EXACT:
            den = math.lcm(*(Fraction(c).denominator for c in coeffs))
            coeffs = [Fraction(c) * den for c in coeffs]
        acc = sum((c * m for c, m in zip(coeffs, mats) if c != 0), zeros(vec.size, vec.size, z.mode))
        out.append(acc)
    return out


def _trace_product(a: np.ndarray, b: np.ndarray) -> Fraction:
    """tr(ab) without forming the product: sum of a[k,l] b[l,k]."""
    return Fraction(sum(x * y for x, y in zip(a.ravel(), b.T.ravel()) if x and y))


def trace_form_negative_definite(mats: list) -> bool:
    """Whether tr(AB) is negative definite on the span of the given matrices.

    Exact symmetric elimination: definiteness is equivalent to all pivots
    being negative (a zero or positive pivot ends the check).
    """
    n = len(mats)
    gram = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            gram[i][j] = gram[j][i] = _trace_product(mats[i], mats[j])
    for k in range(n):
        piv = gram[k][k]
        if piv >= 0:
            return False
        for i in range(k + 1, n):
            f = gram[i][k] / piv
            for j in range(k, n):
                gram[i][j] -= f * gram[k][j]
    return True


# ---------------------------------------------------------------------------
# Canonical representatives and classification
# ---------------------------------------------------------------------------


def canonical_z_theta(theta: float, u_index: int = 1) -> Spinor:
    """Unit-sphere representative (cos(t) + i sin(t) u, 0) on O^4."""
    z = Octonion.zero(FLOAT)
    return Spinor(
        Octonion.from_coords([math.cos(theta)] + [0.0] * 7, FLOAT),
        z,
        Octonion.from_coords(
            [0.0] * u_index + [math.sin(theta)] + [0.0] * (7 - u_index), FLOAT
        ),
        z,
    )


def canonical_z_ab(a, b, u_index: int = 1) -> Spinor:
    """Representative (a 1, 0, b u, 0) on O^4; exact for rational a, b."""
    mode = EXACT if is_exact(a) and is_exact(b) else FLOAT
    z = Octonion.zero(mode)
    return Spinor(
        Octonion.unit(0, mode).scale(a),
        z,
        Octonion.unit(u_index, mode).scale(b),
        z,
    )


def _sqrt_scalar(v):
    if is_exact(v):
        r = exact_sqrt(Fraction(v))
        if r is not None:
            return r
    return math.sqrt(max(float(v), 0.0))


# Endpoint orbits of the quartic are snapped within this tolerance of the
# critical values; they are measure zero and float noise must not miss them.
THETA_SNAP_TOL = 1e-9


def classify(family: str, z: Spinor) -> OrbitLabel:
    """Orbit label from invariant values only (no group search)."""
    if family == "spin8":
        q1, q2 = q_pair(z)
        return OrbitLabel(
            family,
            {"q1": q1, "q2": q2},
            {"a": _sqrt_scalar(q1), "b": _sqrt_scalar(q2)},
            "generic" if q1 != 0 and q2 != 0 else "degenerate",
        )
    if family == "spin9":
        v1, v2 = z.first_pair(), z.second_pair()
        q20, q11, q02 = quads(v1, v2)
        q22v = q22(v1, v2)
        inv = {"q20": q20, "q11": q11, "q02": q02, "q22": q22v}
        if q20 == 0:
            return OrbitLabel(family, inv, {}, "first-slot-zero")
        a, b, c, d = recover_abcd(q20, q11, q02, q22v)
        return OrbitLabel(family, inv, {"a": a, "b": b, "c": c, "d": d}, "generic")
    if family == "spin10":
        v1, v2 = z.first_pair(), z.second_pair()
        q20, q11, q02 = quads(v1, v2)
        qv = q20 + q02
        pv = p_quartic(z)
        inv = {"q": qv, "p": pv}
        if qv == 0:
            return OrbitLabel(family, inv, {"theta": 0.0}, "origin")
        ratio = 2.0 * math.sqrt(max(float(pv), 0.0)) / float(qv)
        theta = 0.5 * math.asin(min(1.0, max(-1.0, ratio)))
        if abs(float(pv)) <= THETA_SNAP_TOL * float(qv) ** 2:
            return OrbitLabel(family, inv, {"theta": 0.0}, "M")
        if abs(float(pv) - float(qv) ** 2 / 4.0) <= THETA_SNAP_TOL * float(qv) ** 2:
            return OrbitLabel(family, inv, {"theta": math.pi / 4}, "M*")
        return OrbitLabel(family, inv, {"theta": theta}, "generic")
    if family == "spin101":
        pv = p_quartic(z)
        inv = {"p": pv}
        if pv == 0:
            if all(o.is_zero() for o in z.slots()):
                return OrbitLabel(family, inv, {}, "origin")
            return OrbitLabel(family, inv, {}, "null-cone")
        return OrbitLabel(family, inv, {}, "p-level")
    raise FamilyError("classify supports spin8, spin9, spin10, spin101")


def rand_spinor(rng, mode: str = EXACT, half: bool = False) -> Spinor:
    from .octonion import rand_octonion

    z = Octonion.zero(mode)
    if half:
        return Spinor(rand_octonion(rng, mode), rand_octonion(rng, mode), z, z)
    return Spinor(*(rand_octonion(rng, mode) for _ in range(4)))
