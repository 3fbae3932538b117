"""Named verification suites over the whole library.

Each suite draws its own deterministically-seeded randomness, runs a batch
of identity checks in one arithmetic mode, and reports the worst residual.
Exact-mode residuals must be exactly zero; float residuals are compared
against the absolute tolerance.  Suites are independent and the report is
sorted by suite name, so a fixed (seed, config) always produces identical
bytes.
"""

from __future__ import annotations

import hashlib
import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import families as fam
from . import invariants as inv
from .linalg import (
    SpanSolver,
    eye,
    exact_rank,
    fast_bracket,
    bracket,
    mat_mul,
    nullspace_basis,
    poly_directional_coeffs,
    zeros,
)
from .octonion import (
    C_matrix,
    L_matrix,
    Octonion,
    R_matrix,
    conj,
    inner,
    norm_sq,
    oct_mul,
    rand_octonion,
    rational_unit_octonion,
    structure_constants,
)
from .scalars import EXACT, FLOAT, FLOAT_TOL, rand_fraction
from .spin8 import (
    Spin8Element,
    TrialityTriple,
    h_check,
    m8,
    rho2_of,
    sigma_generator,
    spin8_basis,
    triple_product,
    triality_alpha,
    triality_beta,
)

__all__ = ["SUITES", "SuiteResult", "run_suites", "suite_names", "GROUPS"]

GROUPS = (
    "octonion",
    "linalg",
    "spin8",
    "spin9",
    "spin10",
    "spin101",
    "spin102",
    "spin91",
)


@dataclass
class SuiteResult:
    name: str
    group: str
    mode: str
    trials: int
    max_residual: str
    passed: bool
    detail: str


class Recorder:
    """Tracks the worst residual of a batch of comparisons."""

    def __init__(self, mode: str):
        self.mode = mode
        self.tol = 0 if mode == EXACT else FLOAT_TOL
        self.max_res = Fraction(0) if mode == EXACT else 0.0
        self.failures = []

    @staticmethod
    def _residual(a, b):
        if isinstance(a, np.ndarray) or isinstance(b, np.ndarray):
            d = np.asarray(a) - np.asarray(b)
            vals = [abs(v) for v in d.ravel()]
            return max(vals) if vals else 0
        if isinstance(a, Octonion):
            return max(abs(v) for v in (a - b).coords)
        if isinstance(a, (tuple, list)):
            return max(Recorder._residual(x, y) for x, y in zip(a, b))
        return abs(a - b)

    def equal(self, a, b, what: str = ""):
        res = self._residual(a, b)
        if res > self.max_res:
            self.max_res = res
        if res > self.tol:
            self.failures.append("%s (residual %s)" % (what or "check", res))

    def require(self, cond: bool, what: str):
        if not cond:
            self.failures.append(what)

    def nonzero(self, value, what: str):
        ok = value != 0 if self.mode == EXACT else abs(value) > self.tol
        if not ok:
            self.failures.append("%s unexpectedly zero" % what)


def _suite_rng(seed: int, name: str) -> random.Random:
    digest = hashlib.sha256(("%d:%s" % (seed, name)).encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def _rand_oct(rng, mode):
    x = rand_octonion(rng, EXACT)
    return x if mode == EXACT else Octonion.from_coords([float(v) for v in x.coords], FLOAT)


def _rand_spinor(rng, mode, half=False):
    z = inv.rand_spinor(rng, EXACT, half=half)
    if mode == EXACT:
        return z
    return inv.Spinor.from_vector(
        [float(v) for v in (z.vector16() if half else z.vector32())]
    )


@lru_cache(maxsize=None)
def family_solver(family: str) -> SpanSolver:
    return SpanSolver([m.ravel() for m in fam.family_matrices(family)])


def _act(matrix: np.ndarray, z: inv.Spinor) -> inv.Spinor:
    v = z.vector16() if matrix.shape[0] == 16 else z.vector32()
    return inv.Spinor.from_vector(matrix @ v)


def _deriv1(f, z, a_matrix):
    """Exact t^1 coefficient of f(z + t A z)."""
    az = _act(a_matrix, z)
    return poly_directional_coeffs(f, z, az, 4)[1]


# ---------------------------------------------------------------------------
# Octonion suites
# ---------------------------------------------------------------------------


def suite_oct_axioms(rng, trials, mode):
    rec = Recorder(mode)
    one = Octonion.unit(0, mode)
    for _ in range(trials):
        x, y, z = (_rand_oct(rng, mode) for _ in range(3))
        xy = oct_mul(x, y)
        rec.equal(norm_sq(xy), norm_sq(x) * norm_sq(y), "composition law")
        rec.equal(conj(xy), oct_mul(conj(y), conj(x)), "conjugation identity")
        rec.equal(conj(conj(x)), x, "conjugation involution")
        rec.equal(oct_mul(x, conj(x)), norm_sq(x) * one, "x conj(x) = |x|^2")
        xyx = oct_mul(xy, x)
        rec.equal(xyx, oct_mul(x, oct_mul(y, x)), "x y x is unambiguous")
        rec.equal(oct_mul(xyx, z), oct_mul(x, oct_mul(y, oct_mul(x, z))), "Moufang 1")
        rec.equal(oct_mul(z, xyx), oct_mul(oct_mul(oct_mul(z, x), y), x), "Moufang 2")
        rec.equal(
            oct_mul(oct_mul(x, oct_mul(y, z)), x),
            oct_mul(xy, oct_mul(z, x)),
            "Moufang 3",
        )
        rec.equal(oct_mul(x, oct_mul(conj(x), y)), norm_sq(x) * y, "x(conj(x)y)")
        c = C_matrix(mode)
        rec.equal(c @ L_matrix(x) @ c, R_matrix(conj(x)), "C L_x C = R_conj(x)")
        rec.equal(c @ R_matrix(x) @ c, L_matrix(conj(x)), "C R_x C = L_conj(x)")
        rec.equal(R_matrix(x) @ L_matrix(x), L_matrix(x) @ R_matrix(x), "R_x L_x = L_x R_x")
        both = oct_mul(x, conj(y)) + oct_mul(y, conj(x))
        rec.equal(both.coords[0], 2 * inner(x, y), "inner from conjugation")
    # mixed left/right multiplications do not commute in general
    found = any(
        (
            R_matrix(Octonion.unit(i, mode)) @ L_matrix(Octonion.unit(j, mode))
            != L_matrix(Octonion.unit(j, mode)) @ R_matrix(Octonion.unit(i, mode))
        ).any()
        for i in range(1, 8)
        for j in range(1, 8)
        if i != j
    )
    rec.require(found, "no basis pair with R_x L_y != L_y R_x")
    if mode == EXACT:
        for _ in range(max(1, trials // 4)):
            u = rational_unit_octonion(rng)
            rec.equal(L_matrix(u).T @ L_matrix(u), eye(8), "L_u isometry")
            rec.equal(R_matrix(u).T @ R_matrix(u), eye(8), "R_u isometry")
    return rec, "octonion algebra identities"


def suite_oct_multable(rng, trials, mode):
    rec = Recorder(EXACT)
    triples = structure_constants()
    rec.require(len(triples) == 64, "table must have 64 nonzero triples")
    rec.require(all(c in (-1, 1) for _, _, _, c in triples), "coefficients +-1")
    quat = {(i, j): (k, c) for i, j, k, c in triples if i < 4 and j < 4}
    rec.require(
        all(k < 4 for k, _ in quat.values()), "quaternion subtable closed"
    )
    one = Octonion.unit(0)
    for i in range(1, 8):
        ei = Octonion.unit(i)
        rec.equal(oct_mul(ei, ei), -one, "e_%d squares to -1" % i)
        rec.equal(oct_mul(one, ei), ei, "unit acts trivially")
    # left multiplications by distinct imaginary units anticommute
    for i in range(1, 8):
        for j in range(i + 1, 8):
            li, lj = L_matrix(Octonion.unit(i)), L_matrix(Octonion.unit(j))
            rec.equal(li @ lj, -(lj @ li), "L_%d L_%d anticommute" % (i, j))
    return rec, "structure constants from the doubling construction"


# ---------------------------------------------------------------------------
# Linear algebra plumbing
# ---------------------------------------------------------------------------


def suite_linalg(rng, trials, mode):
    rec = Recorder(mode)
    def rand_mat(n, m):
        vals = [[rand_fraction(rng) for _ in range(m)] for _ in range(n)]
        if mode == EXACT:
            out = np.empty((n, m), dtype=object)
            for i, row in enumerate(vals):
                out[i, :] = row
            return out
        return np.array(vals, dtype=float)

    for _ in range(trials):
        a, b, c = rand_mat(5, 4), rand_mat(4, 6), rand_mat(6, 3)
        rec.equal(mat_mul(mat_mul(a, b), c), mat_mul(a, mat_mul(b, c)), "associativity")
        s = rand_mat(4, 4)
        rec.equal(bracket(s, s), zeros(4, 4, mode), "bracket antisymmetry")
        rec.equal(bracket(eye(4, mode), s), zeros(4, 4, mode), "identity is central")
    if mode == EXACT:
        mats = fam.family_matrices("spin8")
        vec = inv.Spinor.pair(Octonion.unit(0), Octonion.unit(0)).vector16()
        null = nullspace_basis(mats, vec)
        rec.require(len(null) == 14, "spin8 nullspace at (1,1) is 14-dimensional")
        for coeffs in null[:4]:
            acc = sum((c * m for c, m in zip(coeffs, mats)), zeros(16, 16, EXACT))
            rec.equal(acc @ vec, zeros(16, 1, EXACT).ravel(), "nullspace substitution")
        for _ in range(trials):
            z, w = _rand_spinor(rng, EXACT), _rand_spinor(rng, EXACT)
            coeffs = poly_directional_coeffs(inv.p_quartic, z, w, 4)
            for t in (Fraction(-2), Fraction(-1), Fraction(7), Fraction(11)):
                direct = inv.p_quartic(z + t * w)
                via = sum(coeffs[k] * t ** k for k in range(5))
                rec.equal(via, direct, "quartic interpolation at held-out t")
    return rec, "matrix plumbing and exact interpolation"


# ---------------------------------------------------------------------------
# Clifford generator suites
# ---------------------------------------------------------------------------


def suite_clifford_m8(rng, trials, mode):
    rec = Recorder(mode)
    rec.equal(m8(Octonion.unit(0, mode)) @ m8(Octonion.unit(0, mode)), -eye(16, mode), "m8(1)^2")
    e2p3e5 = Octonion.from_coords([0, 0, 1, 0, 0, 3, 0, 0])
    if mode == FLOAT:
        e2p3e5 = Octonion.from_coords([float(v) for v in e2p3e5.coords], FLOAT)
    rec.equal(m8(e2p3e5) @ m8(e2p3e5), -10 * eye(16, mode), "m8(e2+3e5)^2 = -10 I")
    for _ in range(trials):
        x, y = _rand_oct(rng, mode), _rand_oct(rng, mode)
        rec.equal(m8(x) @ m8(x), -norm_sq(x) * eye(16, mode), "m8(x)^2 = -|x|^2 I")
        prod = m8(x) @ m8(y)
        expect = zeros(16, 16, mode)
        expect[0:8, 0:8] = -(L_matrix(conj(x)) @ L_matrix(y))
        expect[8:16, 8:16] = -(R_matrix(conj(x)) @ R_matrix(y))
        rec.equal(prod, expect, "m8 product splits block-diagonally")
    return rec, "Clifford generators on O + O"


def suite_clifford_m9(rng, trials, mode):
    rec = Recorder(mode)
    e3 = Octonion.unit(3, mode)
    two = Fraction(2) if mode == EXACT else 2.0
    mc = fam.m9(two, e3)
    rec.equal(mc.mat @ mc.mat, -5 * eye(32, mode), "m9(2, e3)^2 = -5 I")
    rec.require(mc.commutes_with_J(), "m9 must be complex-linear")
    for _ in range(trials):
        x = _rand_oct(rng, mode)
        r = rand_fraction(rng)
        r = r if mode == EXACT else float(r)
        mc = fam.m9(r, x)
        rec.equal(
            mc.mat @ mc.mat,
            -(r * r + norm_sq(x)) * eye(32, mode),
            "m9(r,x)^2 = -(r^2+|x|^2) I",
        )
        rec.require(mc.commutes_with_J(), "m9 commutes with J")
    rec.equal(fam.p9(1 if mode == EXACT else 1.0, Octonion.zero(mode)), eye(16, mode), "p9(1,0) = I")
    if mode == EXACT:
        for _ in range(max(1, trials // 4)):
            u = rational_unit_octonion(rng)
            # rational point (r, x) = (c, s u) on the unit 8-sphere
            c, s = Fraction(3, 5), Fraction(4, 5)
            g = fam.p9(c, u.scale(s))
            rec.equal(g.T @ g, eye(16), "p9 generator is orthogonal")
    else:
        phi, theta = 0.35, 1.1
        g = fam.p9(math.cos(phi), Octonion.unit(0, FLOAT).scale(math.sin(phi)))
        zv = np.concatenate(
            [
                math.cos(theta) * np.eye(8)[0],
                math.sin(theta) * np.eye(8)[0],
            ]
        )
        out = g @ zv
        expect = np.concatenate(
            [
                math.cos(theta - phi) * np.eye(8)[0],
                math.sin(theta - phi) * np.eye(8)[0],
            ]
        )
        rec.equal(out, expect, "p9 rotates the diagonal circle")
    return rec, "Clifford generators for the 9-dimensional form"


# ---------------------------------------------------------------------------
# Triality suites
# ---------------------------------------------------------------------------


def _random_h_product(rng, count=5) -> TrialityTriple:
    t = sigma_generator(rational_unit_octonion(rng))
    for _ in range(count - 1):
        t = triple_product(t, sigma_generator(rational_unit_octonion(rng)))
    return t


def suite_triality_products(rng, trials, mode):
    rec = Recorder(EXACT)
    for _ in range(trials):
        t = _random_h_product(rng, 5)
        rec.equal(h_check(t), Fraction(0), "product of generators stays in H")
        for g in t.matrices():
            rec.equal(g.T @ g, eye(8), "components stay orthogonal")
    u = Octonion.from_coords([Fraction(3, 5), 0, Fraction(4, 5), 0, 0, 0, 0, 0])
    rec.equal(h_check(sigma_generator(u)), Fraction(0), "rational generator in H")
    rec.equal(
        sigma_generator(Octonion.unit(0)).matrices(),
        (eye(8), eye(8), eye(8)),
        "unit generator is the identity triple",
    )
    return rec, "generator products in the triality group"


def suite_triality_automorphisms(rng, trials, mode):
    rec = Recorder(EXACT)
    def triple_eq(a, b, what):
        for x, y in zip(a.matrices(), b.matrices()):
            rec.equal(x, y, what)

    for _ in range(trials):
        t = _random_h_product(rng, rng.randint(2, 4))
        a, b = triality_alpha(t), triality_beta(t)
        rec.equal(h_check(a), Fraction(0), "alpha lands in H")
        rec.equal(h_check(b), Fraction(0), "beta lands in H")
        triple_eq(triality_alpha(a), t, "alpha is an involution")
        triple_eq(triality_beta(b), t, "beta is an involution")
        ab3 = t
        for _ in range(3):
            ab3 = triality_alpha(triality_beta(ab3))
        triple_eq(ab3, t, "(alpha beta)^3 is the identity")
    return rec, "triality automorphisms generate S3"


def suite_triality_center(rng, trials, mode):
    rec = Recorder(EXACT)
    i8 = eye(8)
    for eps in ((1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)):
        t = TrialityTriple(eps[0] * i8, eps[1] * i8, eps[2] * i8)
        rec.equal(h_check(t), Fraction(0), "center triple in H")
    rec.nonzero(h_check(TrialityTriple(i8, i8, -i8)), "violating triple residual")
    b = triality_beta(TrialityTriple(i8, -i8, -i8))
    rec.equal(b.g1, -i8, "beta moves the center")
    rec.equal(b.g2, i8, "beta moves the center")
    rec.equal(b.g3, -i8, "beta moves the center")
    return rec, "center of the triality group"


def suite_spin8_basis(rng, trials, mode):
    rec = Recorder(EXACT)
    basis = spin8_basis()
    rec.require(len(basis) == 28, "28 basis triples")
    for el in basis:
        for name, m in (("a1", el.a1), ("a2", el.a2), ("a3", el.a3)):
            rec.equal(m, -m.T, "%s skew-symmetric" % name)
        rec.equal(rho2_of(el), el.a2, "middle matrix solves the relation")
    mats = [el.block_diag16() for el in basis]
    rec.require(exact_rank([m.ravel() for m in mats]) == 28, "exact rank 28")
    solver = family_solver("spin8")
    for i, j in itertools.combinations(range(28), 2):
        rec.equal(
            solver.residual(fast_bracket(mats[i], mats[j]).ravel()),
            Fraction(0),
            "bracket closure",
        )
    for _ in range(trials):
        i, j = rng.randrange(28), rng.randrange(28)
        a, b = basis[i], basis[j]
        el = Spin8Element(
            fast_bracket(a.a1, b.a1),
            fast_bracket(a.a2, b.a2),
            fast_bracket(a.a3, b.a3),
        )
        rec.equal(rho2_of(el), el.a2, "rho2 respects brackets")
    return rec, "triple basis of the 28-dimensional algebra"


def suite_q_pair_h_invariance(rng, trials, mode):
    rec = Recorder(EXACT)
    for _ in range(trials):
        t = _random_h_product(rng, 3)
        z = _rand_spinor(rng, EXACT, half=True)
        moved = inv.Spinor.pair(
            Octonion.from_coords(t.g1 @ z.x1.vector()),
            Octonion.from_coords(t.g3 @ z.y1.vector()),
        )
        rec.equal(inv.q_pair(moved), inv.q_pair(z), "q1, q2 invariant under H")
    z = inv.Spinor.pair(Octonion.unit(0), Octonion.zero())
    rec.equal(inv.q_pair(z), (Fraction(1), Fraction(0)), "q on (1, 0)")
    a, b = Fraction(2), Fraction(3)
    z = inv.Spinor.pair(Octonion.unit(0).scale(a), Octonion.unit(0).scale(b))
    rec.equal(inv.q_pair(z), (a * a, b * b), "q on (a 1, b 1)")
    return rec, "half-spinor norms under the triality action"


# ---------------------------------------------------------------------------
# Family structure suites
# ---------------------------------------------------------------------------


def _basis_suite(family):
    def run(rng, trials, mode):
        rec = Recorder(EXACT)
        basis = fam.family_basis(family)
        rec.require(
            basis.dimension == fam.FAMILY_DIMS[family],
            "dimension %d" % fam.FAMILY_DIMS[family],
        )
        mats = basis.matrices()
        rec.require(
            exact_rank([m.ravel() for m in mats]) == basis.dimension,
            "exact-rank linear independence",
        )
        solver = family_solver(family)
        for i, j in itertools.combinations(range(len(mats)), 2):
            res = solver.residual(fast_bracket(mats[i], mats[j]).ravel())
            if res != 0:
                rec.equal(res, Fraction(0), "bracket [%d, %d] closure" % (i, j))
        return rec, "%d basis elements, all pairwise brackets close" % basis.dimension

    return run


def suite_containments(rng, trials, mode):
    rec = Recorder(EXACT)
    s10, s101, s102 = (
        family_solver("spin10"),
        family_solver("spin101"),
        family_solver("spin102"),
    )
    for m in fam.family_matrices("spin9"):
        rec.equal(s10.residual(fam.embed_diag32(m).ravel()), Fraction(0), "spin9 in spin10")
    for m in fam.family_matrices("spin10"):
        rec.equal(s101.residual(m.ravel()), Fraction(0), "spin10 in spin101")
    for m in fam.family_matrices("spin101"):
        rec.equal(s102.residual(m.ravel()), Fraction(0), "spin101 in spin102")
    s9 = family_solver("spin9")
    for m in fam.family_matrices("spin8"):
        rec.equal(s9.residual(m.ravel()), Fraction(0), "spin8 in spin9")
    return rec, "exact span containments along the chain"


def _bracket_vs_template_suite(family):
    def run(rng, trials, mode):
        rec = Recorder(EXACT)
        built = fam.bracket_construction(family)
        template = family_solver(family)
        for m in built:
            rec.equal(template.residual(m.ravel()), Fraction(0), "built inside template")
        span = SpanSolver([m.ravel() for m in built])
        rec.require(span.rank == fam.FAMILY_DIMS[family], "built span has full dimension")
        for m in fam.family_matrices(family):
            rec.equal(span.residual(m.ravel()), Fraction(0), "template inside built span")
        return rec, "boost construction spans the printed template"

    return run


def suite_boost_trace_positive(rng, trials, mode):
    rec = Recorder(EXACT)
    r = fam.r_boost()
    mats = [r] + [fast_bracket(m, r) for m in fam.family_matrices("spin10")]
    nonzero = [m for m in mats if any(v != 0 for v in m.ravel())]
    rec.require(
        exact_rank([m.ravel() for m in nonzero]) == 10,
        "boost complement has dimension 10",
    )
    for m in nonzero:
        tr = sum(x * y for x, y in zip(m.ravel(), m.T.ravel()))
        rec.require(tr > 0, "trace of square positive")
    return rec, "non-compact directions have positive trace form"


def suite_rho9(rng, trials, mode):
    rec = Recorder(EXACT)
    basis = fam.family_basis("spin9")
    imgs = [fam.rho9(el) for el in basis.elements]
    for im in imgs:
        rec.equal(im, -im.T, "rho9 image skew")
    zero8 = fam.family_basis("spin8")
    for el in zero8.elements[:4]:
        im = fam.rho9(fam.LieElement("spin9", fam.spin9_matrix(el.params["a"], Octonion.zero())))
        rec.equal(im[0, :], zeros(1, 9, EXACT).ravel(), "block-diagonal input has no vector part")
    mats = basis.matrices()
    for i, j in itertools.combinations(range(len(mats)), 2):
        br = fast_bracket(mats[i], mats[j])
        rec.equal(fam.rho9(br), bracket(imgs[i], imgs[j]), "bracket compatibility")
    return rec, "double cover map onto so(9)"


def suite_rho101(rng, trials, mode):
    rec = Recorder(EXACT)
    basis = fam.family_basis("spin101")
    g = fam.minkowski_gram()
    imgs = [fam.rho101(el) for el in basis.elements]
    for im in imgs:
        rec.equal(im.T @ g + g @ im, zeros(11, 11, EXACT), "Lorentzian metric preserved")
    mats = basis.matrices()
    for i, j in itertools.combinations(range(len(mats)), 2):
        br = fast_bracket(mats[i], mats[j])
        rec.equal(fam.rho101(br), bracket(imgs[i], imgs[j]), "bracket compatibility")
    return rec, "isomorphism onto so(10,1)"


# ---------------------------------------------------------------------------
# Equivariance and invariance suites
# ---------------------------------------------------------------------------


def _sigma9_vec(z):
    t, o = inv.sigma9(z)
    return [t] + list(o.coords)


def _sigma101_vec(z):
    a1, a2, a3, o = inv.sigma101(z)
    return [a1, a2, a3] + list(o.coords)


def suite_sigma9_equivariance(rng, trials, mode):
    rec = Recorder(EXACT)
    basis = fam.family_basis("spin9")
    spinors = [_rand_spinor(rng, EXACT, half=True) for _ in range(trials)]
    for el in basis.elements:
        img = fam.rho9(el)
        for z in spinors:
            az = _act(el.matrix, z)
            lin = poly_directional_coeffs(_sigma9_vec, z, az, 2)[1]
            sz = np.array(_sigma9_vec(z), dtype=object)
            rec.equal(np.array(lin, dtype=object), img @ sz, "squaring map equivariance")
    z = inv.Spinor.pair(Octonion.unit(0), Octonion.zero())
    rec.equal(_sigma9_vec(z), [Fraction(1)] + [Fraction(0)] * 8, "sigma(1,0)")
    return rec, "squaring map intertwines the so(9) action"


def suite_sigma101_equivariance(rng, trials, mode):
    rec = Recorder(EXACT)
    basis = fam.family_basis("spin101")
    spinors = [_rand_spinor(rng, EXACT) for _ in range(trials)]
    for el in basis.elements:
        img = fam.rho101(el)
        for z in spinors:
            az = _act(el.matrix, z)
            lin = poly_directional_coeffs(_sigma101_vec, z, az, 2)[1]
            sz = np.array(_sigma101_vec(z), dtype=object)
            rec.equal(np.array(lin, dtype=object), img @ sz, "squaring map equivariance")
    return rec, "squaring map intertwines the so(10,1) action"


def _q16(z):
    return inv.quads(z.first_pair(), z.first_pair())[0]


def _q32(z):
    v1, v2 = z.first_pair(), z.second_pair()
    q20, _, q02 = inv.quads(v1, v2)
    return q20 + q02


def suite_invariance_q(rng, trials, mode):
    rec = Recorder(EXACT)
    spinors16 = [_rand_spinor(rng, EXACT, half=True) for _ in range(trials)]
    spinors32 = [_rand_spinor(rng, EXACT) for _ in range(trials)]
    for el in fam.family_basis("spin9").elements:
        for z in spinors16:
            rec.equal(_deriv1(_q16, z, el.matrix), Fraction(0), "q frozen along spin9")
    for el in fam.family_basis("spin10").elements:
        for z in spinors32:
            rec.equal(_deriv1(_q32, z, el.matrix), Fraction(0), "q frozen along spin10")
    return rec, "quadratic form has vanishing derivative"


def suite_invariance_quads(rng, trials, mode):
    rec = Recorder(EXACT)
    spinors = [_rand_spinor(rng, EXACT) for _ in range(trials)]

    def all_quads(z):
        v1, v2 = z.first_pair(), z.second_pair()
        return list(inv.quads(v1, v2)) + [inv.q22(v1, v2)]

    for el in fam.family_basis("spin9").elements:
        a32 = fam.embed_diag32(el.matrix)
        for z in spinors:
            lin = _deriv1(all_quads, z, a32)
            rec.equal(
                np.array(lin, dtype=object),
                np.array([Fraction(0)] * 4, dtype=object),
                "q20, q11, q02, q22 frozen along diagonal spin9",
            )
    return rec, "pair invariants frozen along the diagonal action"


def suite_invariance_p(rng, trials, mode):
    rec = Recorder(EXACT)
    spinors = [_rand_spinor(rng, EXACT) for _ in range(trials)]
    for family in ("spin10", "spin101", "spin102"):
        for el in fam.family_basis(family).elements:
            for z in spinors:
                rec.equal(
                    _deriv1(inv.p_quartic, z, el.matrix),
                    Fraction(0),
                    "quartic frozen along %s" % family,
                )
    return rec, "quartic invariant under all three algebras"


def suite_spin91_q_witness(rng, trials, mode):
    rec = Recorder(EXACT)
    witness = None
    for el in fam.family_basis("spin91").elements:
        for _ in range(trials):
            z = _rand_spinor(rng, EXACT, half=True)
            d = _deriv1(_q16, z, el.matrix)
            if d != 0:
                witness = (el, z, d)
                break
        if witness:
            break
    rec.require(witness is not None, "some basis element must move q")
    return rec, "Lorentz boosts break the quadratic form"


def suite_omega_preserved(rng, trials, mode):
    rec = Recorder(EXACT)
    j = inv.omega_gram()
    rec.equal(j @ j, -eye(32), "J^2 = -I")
    for el in fam.family_basis("spin102").elements:
        a = el.matrix
        rec.equal(a.T @ j + j @ a, zeros(32, 32, EXACT), "symplectic condition")
    for _ in range(trials):
        z, w = _rand_spinor(rng, EXACT), _rand_spinor(rng, EXACT)
        rec.equal(inv.omega(z, z), Fraction(0), "antisymmetry on the diagonal")
        rec.equal(
            inv.omega(z, w),
            z.vector32() @ (j @ w.vector32()),
            "Gram matrix matches the 2-form",
        )
    return rec, "the 66-dimensional algebra is symplectic"


def suite_p_expressions(rng, trials, mode):
    rec = Recorder(EXACT)
    for _ in range(trials):
        z = _rand_spinor(rng, EXACT)
        a, b, c = inv.p_quartic(z), inv.p_from_quads(z), inv.p_wedge(z)
        rec.equal(a, b, "expansion vs quadratic combination")
        rec.equal(a, c, "expansion vs wedge form")
    return rec, "three printed forms of the quartic agree"


def suite_p_minkowski(rng, trials, mode):
    rec = Recorder(EXACT)
    for _ in range(trials):
        z = _rand_spinor(rng, EXACT)
        s = inv.sigma101(z)
        rec.equal(inv.p_quartic(z), Fraction(-1, 4) * inv.minkowski(s, s), "p = -1/4 sigma.sigma")
        rec.require(inv.minkowski(s, s) <= 0, "image is non-spacelike")
        rec.require(s[0] >= 0, "image is future pointing")
    s = inv.sigma101(inv.canonical_z_ab(Fraction(1), Fraction(0)))
    rec.equal((s[0], s[1], s[2]), (Fraction(1), Fraction(0), Fraction(0)), "lightlike image")
    rec.equal(inv.minkowski(s, s), Fraction(0), "null vector")
    return rec, "squaring map lands in the forward cone"


def suite_p_group_invariance(rng, trials, mode):
    rec = Recorder(EXACT)
    g6 = fam.G6_element(Fraction(2), 0, 0, Fraction(1, 2), 1, 0, 0, 1)
    g6b = fam.G6_element(Fraction(1), Fraction(3), 0, Fraction(1), Fraction(0), Fraction(1), Fraction(-1), Fraction(2))
    rec.equal(fam.G6_element(1, 0, 0, 1, 1, 0, 0, 1), eye(32), "identity block element")
    rec.equal(fam.R_generator(Fraction(1)), eye(32), "unit scaling is the identity")
    rec.equal(fam.T_generator(Fraction(1), Fraction(0)), eye(32), "unit circle element")
    movers = [
        ("block group", g6),
        ("block group general", g6b),
        ("scaling subgroup", fam.R_generator(Fraction(3, 2))),
        ("second scaling subgroup", fam.Rprime_generator(Fraction(2, 5))),
        ("circle subgroup", fam.T_generator(Fraction(3, 5), Fraction(4, 5))),
    ]
    for _ in range(trials):
        z = _rand_spinor(rng, EXACT)
        pz = inv.p_quartic(z)
        for name, g in movers:
            moved = _act(g, z)
            rec.equal(inv.p_quartic(moved), pz, "quartic preserved by %s" % name)
    return rec, "group elements that visibly preserve the quartic"


def suite_p_range(rng, trials, mode):
    rec = Recorder(FLOAT)
    for _ in range(trials):
        v = np.array([rng.gauss(0, 1) for _ in range(32)])
        v /= np.linalg.norm(v)
        pz = inv.p_quartic(inv.Spinor.from_vector(list(v)))
        rec.require(-1e-12 <= pz <= 0.25 + 1e-10, "0 <= p <= 1/4 on the sphere")
        w = np.array([rng.uniform(-5, 5) for _ in range(32)])
        rec.require(inv.p_quartic(inv.Spinor.from_vector(list(w))) >= -1e-12, "p >= 0")
    return rec, "range of the quartic"


def suite_orbit_p_theta(rng, trials, mode):
    rec = Recorder(FLOAT)
    rec.tol = 1e-12
    for k in range(20):
        theta = (k + 0.5) * (math.pi / 4) / 20
        z = inv.canonical_z_theta(theta)
        rec.equal(inv.p_quartic(z), 0.25 * math.sin(2 * theta) ** 2, "p on the theta family")
        lbl = inv.classify("spin10", z)
        rec.require(abs(lbl.canonical["theta"] - theta) < 1e-9, "theta recovered")
    return rec, "quartic along the canonical circle"


def suite_orbit_p_ab(rng, trials, mode):
    rec = Recorder(EXACT)
    for _ in range(trials):
        a = rand_fraction(rng, 1, 9)
        b = rand_fraction(rng, 0, 9)
        rec.equal(inv.p_quartic(inv.canonical_z_ab(a, b)), a * a * b * b, "p(z_ab) = a^2 b^2")
    return rec, "quartic on the canonical plane"


def suite_recover_roundtrip(rng, trials, mode):
    rec = Recorder(EXACT)
    u, one = Octonion.unit(1), Octonion.unit(0)
    for _ in range(trials):
        a, b, c, d = (rand_fraction(rng, 1, 9) for _ in range(4))
        z = inv.Spinor(one.scale(a), Octonion.zero(), one.scale(c) + u.scale(d), one.scale(b))
        v1, v2 = z.first_pair(), z.second_pair()
        q20, q11, q02 = inv.quads(v1, v2)
        q22v = inv.q22(v1, v2)
        rec.equal((q20, q11, q02), (a * a, a * c, b * b + c * c + d * d), "printed quadratics")
        rec.equal(q22v, a * a * (c * c + d * d - b * b), "printed quartic value")
        rec.equal(inv.recover_abcd(q20, q11, q02, q22v), (a, b, c, d), "round trip")
    rec.equal(inv.recover_abcd(4, 2, 3, 4), (Fraction(2), Fraction(1), Fraction(1), Fraction(1)), "worked example")
    rec.equal(inv.recover_abcd(1, 0, 0, 0), (Fraction(1), Fraction(0), Fraction(0), Fraction(0)), "unit example")
    try:
        inv.recover_abcd(Fraction(1), Fraction(0), Fraction(0), Fraction(9))
        rec.require(False, "unrealizable invariants must raise")
    except inv.InconsistentInvariants:
        pass
    return rec, "canonical quadruple from the four invariants"


def suite_classify(rng, trials, mode):
    rec = Recorder(EXACT)
    lbl = inv.classify("spin10", inv.canonical_z_ab(Fraction(1), Fraction(0)))
    rec.require(lbl.orbit == "M" and lbl.canonical["theta"] == 0.0, "null quartic orbit")
    rec.equal(lbl.invariants["q"], Fraction(1), "q at the base point")
    rec.equal(lbl.invariants["p"], Fraction(0), "p at the base point")
    lbl = inv.classify("spin10", inv.canonical_z_ab(Fraction(1), Fraction(1)))
    rec.require(lbl.orbit == "M*", "critical orbit at p = q^2/4")
    for _ in range(trials):
        z = _rand_spinor(rng, EXACT)
        base = inv.classify("spin101", z)
        for t in (Fraction(2), Fraction(5, 3)):
            moved = _act(fam.R_generator(t), z)
            rec.require(inv.classify("spin101", moved) == base, "scaling preserves the label")
        lbl8 = inv.classify("spin8", z.first_pair())
        rec.equal(
            (lbl8.invariants["q1"], lbl8.invariants["q2"]),
            inv.q_pair(z.first_pair()),
            "half-spinor label invariants",
        )
    return rec, "orbit labels from invariants alone"


def suite_stabilizers_exact(rng, trials, mode):
    rec = Recorder(EXACT)
    one = Octonion.unit(0)
    cases = [
        ("spin8", inv.Spinor.pair(one, one), 14),
        ("spin9", inv.Spinor.pair(one, Octonion.zero()), 21),
        ("spin10", inv.canonical_z_ab(Fraction(1), Fraction(0)), 21),
        ("spin10", inv.canonical_z_ab(Fraction(1), Fraction(1)), 24),
        ("spin101", inv.canonical_z_ab(Fraction(1), Fraction(1)), 24),
        ("spin101", inv.canonical_z_ab(Fraction(1), Fraction(0)), 30),
    ]
    for family, z, expected in cases:
        mats = inv.stabilizer_matrices(family, z)
        rec.require(len(mats) == expected, "%s stabilizer dimension %d" % (family, expected))
        solver = SpanSolver([m.ravel() for m in mats])
        rec.require(solver.rank == expected, "stabilizer basis independent")
        pairs = list(itertools.combinations(range(len(mats)), 2))
        for i, j in pairs:
            rec.equal(
                solver.residual(fast_bracket(mats[i], mats[j]).ravel()),
                Fraction(0),
                "stabilizer bracket closure",
            )
    su5 = inv.stabilizer_matrices("spin10", inv.canonical_z_ab(Fraction(1), Fraction(1)))
    rec.require(inv.trace_form_negative_definite(su5), "trace form negative definite")
    return rec, "exact isotropy dimensions along the orbit strata"


def suite_stabilizer_theta_float(rng, trials, mode):
    rec = Recorder(FLOAT)
    z = inv.canonical_z_theta(math.pi / 6)
    mats = inv.stabilizer_matrices("spin10", z)
    rec.require(len(mats) == 15, "generic stabilizer has dimension 15")
    stack = np.stack([m.ravel() for m in mats], axis=1)
    for i, j in itertools.combinations(range(len(mats)), 2):
        br = mats[i] @ mats[j] - mats[j] @ mats[i]
        sol, *_ = np.linalg.lstsq(stack, br.ravel(), rcond=None)
        rec.equal(stack @ sol, br.ravel(), "float bracket closure")
    return rec, "generic isotropy via numerical rank"


def suite_exp_flows(rng, trials, mode):
    rec = Recorder(FLOAT)
    rec.tol = 1e-10
    basis = fam.family_matrices_float("spin9")
    for _ in range(trials):
        coeffs = [rng.uniform(-1, 1) for _ in range(36)]
        a = sum(c * m for c, m in zip(coeffs, basis))
        g = fam.exp_element(a, rng.uniform(-1, 1))
        v = np.array([rng.uniform(-2, 2) for _ in range(16)])
        rec.equal(float(np.dot(g @ v, g @ v)), float(np.dot(v, v)), "exp preserves q")
    rec.equal(fam.exp_element(fam.r_boost(), 0.0), np.eye(32), "exp(0) = I")
    for t in (0.5, 2.0, 3.7):
        rec.equal(
            fam.exp_element(fam.r_boost(), math.log(t)),
            np.asarray(fam.R_generator(t), dtype=float),
            "boost exponential matches the scaling subgroup",
        )
    return rec, "one-parameter subgroups from the algebra"


SUITES = {
    "basis_spin9": ({"spin9"}, EXACT, _basis_suite("spin9")),
    "basis_spin10": ({"spin10"}, EXACT, _basis_suite("spin10")),
    "basis_spin101": ({"spin101"}, EXACT, _basis_suite("spin101")),
    "basis_spin102": ({"spin102"}, EXACT, _basis_suite("spin102")),
    "basis_spin91": ({"spin91"}, EXACT, _basis_suite("spin91")),
    "boost_trace_positive": ({"spin101"}, EXACT, suite_boost_trace_positive),
    "bracket_vs_template_spin101": ({"spin101"}, EXACT, _bracket_vs_template_suite("spin101")),
    "bracket_vs_template_spin102": ({"spin102"}, EXACT, _bracket_vs_template_suite("spin102")),
    "clifford_m8": ({"spin8"}, "both", suite_clifford_m8),
    "clifford_m9": ({"spin9"}, "both", suite_clifford_m9),
    "classify_labels": ({"spin8", "spin10", "spin101"}, EXACT, suite_classify),
    "containments": ({"spin9", "spin10", "spin101", "spin102"}, EXACT, suite_containments),
    "exp_flows": ({"spin9", "spin101"}, FLOAT, suite_exp_flows),
    "invariance_p": ({"spin10", "spin101", "spin102"}, EXACT, suite_invariance_p),
    "invariance_q": ({"spin9", "spin10"}, EXACT, suite_invariance_q),
    "invariance_quads": ({"spin9"}, EXACT, suite_invariance_quads),
    "linalg": ({"linalg"}, "both", suite_linalg),
    "oct_axioms": ({"octonion"}, "both", suite_oct_axioms),
    "oct_multable": ({"octonion"}, EXACT, suite_oct_multable),
    "omega_preserved": ({"spin102"}, EXACT, suite_omega_preserved),
    "orbit_p_ab": ({"spin101"}, EXACT, suite_orbit_p_ab),
    "orbit_p_theta": ({"spin10"}, FLOAT, suite_orbit_p_theta),
    "p_expressions": ({"spin10"}, EXACT, suite_p_expressions),
    "p_group_invariance": ({"spin101", "spin102"}, EXACT, suite_p_group_invariance),
    "p_minkowski": ({"spin101"}, EXACT, suite_p_minkowski),
    "p_range": ({"spin10"}, FLOAT, suite_p_range),
    "q_pair_h_invariance": ({"spin8"}, EXACT, suite_q_pair_h_invariance),
    "recover_roundtrip": ({"spin9"}, EXACT, suite_recover_roundtrip),
    "rho101_homomorphism": ({"spin101"}, EXACT, suite_rho101),
    "rho9_homomorphism": ({"spin9"}, EXACT, suite_rho9),
    "sigma101_equivariance": ({"spin101"}, EXACT, suite_sigma101_equivariance),
    "sigma9_equivariance": ({"spin9"}, EXACT, suite_sigma9_equivariance),
    "spin8_basis": ({"spin8"}, EXACT, suite_spin8_basis),
    "spin91_q_witness": ({"spin91"}, EXACT, suite_spin91_q_witness),
    "stabilizer_theta_float": ({"spin10"}, FLOAT, suite_stabilizer_theta_float),
    "stabilizers_exact": ({"spin8", "spin9", "spin10", "spin101"}, EXACT, suite_stabilizers_exact),
    "triality_automorphisms": ({"spin8"}, EXACT, suite_triality_automorphisms),
    "triality_center": ({"spin8"}, EXACT, suite_triality_center),
    "triality_products": ({"spin8"}, EXACT, suite_triality_products),
}


def suite_names(family: str = "all") -> list:
    if family == "all":
        return sorted(SUITES)
    if family not in GROUPS:
        raise ValueError(
            "unknown family %r (expected one of %s or 'all')"
            % (family, ", ".join(GROUPS))
        )
    return sorted(name for name, (groups, _, _) in SUITES.items() if family in groups)


def run_suites(family: str = "all", trials: int = 20, seed: int = 0, mode: str = EXACT) -> list:
    """Run the selected suites and return SuiteResults sorted by name.

    mode applies to dual-mode suites; single-mode suites always run in their
    native arithmetic.
    """
    if mode not in (EXACT, FLOAT):
        raise ValueError("mode must be 'exact' or 'float'")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    results = []
    for name in suite_names(family):
        groups, suite_mode, fn = SUITES[name]
        actual_mode = mode if suite_mode == "both" else suite_mode
        rng = _suite_rng(seed, name)
        try:
            rec, detail = fn(rng, trials, actual_mode)
            passed = not rec.failures
            if rec.failures:
                detail = "; ".join(rec.failures[:3])
            residual = rec.max_res
        except Exception as exc:  # a crashed suite is a failed suite
            passed, residual, detail = False, "error", "%s: %s" % (type(exc).__name__, exc)
        results.append(
            SuiteResult(
                name=name,
                group=",".join(sorted(groups)),
                mode=actual_mode,
                trials=trials,
                max_residual=str(residual),
                passed=passed,
                detail=detail,
            )
        )
    return results
