"""Acceptance criteria, one test per criterion.

Run with `pytest tests/test_acceptance.py -v -s` to see one pass/fail line
per criterion.  Exact-mode checks require residual exactly zero; float
tolerances are stated inline.  The numbered runtime budgets are asserted.
"""

import itertools
import math
import random
import time
from fractions import Fraction

import numpy as np

from octospin import families as fam
from octospin import invariants as inv
from octospin import verify as V
from octospin.linalg import SpanSolver, exact_rank, fast_bracket
from octospin.octonion import (
    C_matrix,
    L_matrix,
    Octonion,
    R_matrix,
    conj,
    norm_sq,
    oct_mul,
    rand_octonion,
    rational_unit_octonion,
)
from octospin.spin8 import TrialityTriple, h_check, m8, sigma_generator, triple_product
from octospin.scalars import rand_fraction

SEED = 20260809


def _report(num: int, ok: bool, detail: str):
    print("[acceptance] criterion %2d: %s  %s" % (num, "PASS" if ok else "FAIL", detail))
    assert ok, "criterion %d failed: %s" % (num, detail)


def _run_suite(name: str, trials: int):
    groups, mode, fn = V.SUITES[name]
    rng = V._suite_rng(SEED, name)
    rec, detail = fn(rng, trials, mode if mode != "both" else "exact")
    return rec


def test_criterion_01_octonion_axioms():
    rng = random.Random(SEED)
    start = time.perf_counter()
    worst = Fraction(0)
    c = C_matrix()
    for _ in range(100):
        x, y, z = (rand_octonion(rng) for _ in range(3))
        xy = oct_mul(x, y)
        checks = [
            norm_sq(xy) - norm_sq(x) * norm_sq(y),
        ]
        worst = max(worst, *(abs(v) for v in checks))
        d = conj(xy) - oct_mul(conj(y), conj(x))
        worst = max(worst, *(abs(v) for v in d.coords))
        xyx = oct_mul(xy, x)
        for lhs, rhs in (
            (oct_mul(xyx, z), oct_mul(x, oct_mul(y, oct_mul(x, z)))),
            (oct_mul(z, xyx), oct_mul(oct_mul(oct_mul(z, x), y), x)),
            (oct_mul(oct_mul(x, oct_mul(y, z)), x), oct_mul(xy, oct_mul(z, x))),
        ):
            d = lhs - rhs
            worst = max(worst, *(abs(v) for v in d.coords))
        d = (c @ L_matrix(x) @ c) - R_matrix(conj(x))
        worst = max(worst, *(abs(v) for v in d.ravel()))
    elapsed = time.perf_counter() - start
    _report(
        1,
        worst == 0 and elapsed < 5.0,
        "100 rational triples, residual %s, %.2fs (< 5s)" % (worst, elapsed),
    )


def test_criterion_02_clifford_relations():
    from octospin.linalg import eye

    rng = random.Random(SEED + 2)
    worst = Fraction(0)
    for _ in range(100):
        x = rand_octonion(rng)
        d = (m8(x) @ m8(x)) + norm_sq(x) * eye(16)
        worst = max(worst, *(abs(v) for v in d.ravel()))
        r = rand_fraction(rng)
        mc = fam.m9(r, x)
        d = (mc.mat @ mc.mat) + (r * r + norm_sq(x)) * eye(32)
        worst = max(worst, *(abs(v) for v in d.ravel()))
    _report(2, worst == 0, "100 rational inputs, residual %s" % worst)


def test_criterion_03_triality():
    rng = random.Random(SEED + 3)
    from octospin.linalg import eye

    worst = Fraction(0)
    ok = True
    for _ in range(10):
        t = sigma_generator(rational_unit_octonion(rng))
        for _ in range(4):
            t = triple_product(t, sigma_generator(rational_unit_octonion(rng)))
        worst = max(worst, h_check(t))
        from octospin.spin8 import triality_alpha, triality_beta

        a, b = triality_alpha(t), triality_beta(t)
        for got, want in zip(triality_alpha(a).matrices(), t.matrices()):
            d = got - want
            worst = max(worst, *(abs(v) for v in d.ravel()))
        for got, want in zip(triality_beta(b).matrices(), t.matrices()):
            d = got - want
            worst = max(worst, *(abs(v) for v in d.ravel()))
        s = t
        for _ in range(3):
            s = triality_alpha(triality_beta(s))
        for got, want in zip(s.matrices(), t.matrices()):
            d = got - want
            worst = max(worst, *(abs(v) for v in d.ravel()))
    i8 = eye(8)
    for eps in ((1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)):
        worst = max(worst, h_check(TrialityTriple(eps[0] * i8, eps[1] * i8, eps[2] * i8)))
    _report(3, ok and worst == 0, "5-generator products, S3 relations, center; residual %s" % worst)


def test_criterion_04_dimension_table_and_closure():
    dims = {}
    worst = Fraction(0)
    pair_count = 0
    for family, expected in fam.FAMILY_DIMS.items():
        basis = fam.family_basis(family)
        dims[family] = basis.dimension
        assert exact_rank([m.ravel() for m in basis.matrices()]) == expected
        mats = basis.matrices()
        solver = V.family_solver(family)
        for i, j in itertools.combinations(range(len(mats)), 2):
            res = solver.residual(fast_bracket(mats[i], mats[j]).ravel())
            worst = max(worst, res)
            pair_count += 1
    ok = dims == {
        "spin8": 28,
        "spin9": 36,
        "spin10": 45,
        "spin101": 55,
        "spin102": 66,
        "spin91": 45,
    } and worst == 0
    _report(4, ok, "dims %s, %d bracket pairs, residual %s" % (sorted(dims.values()), pair_count, worst))


def test_criterion_05_bracket_vs_template():
    ok = True
    for family in ("spin101", "spin102"):
        built = fam.bracket_construction(family)
        template = V.family_solver(family)
        span = SpanSolver([m.ravel() for m in built])
        ok &= all(template.residual(m.ravel()) == 0 for m in built)
        ok &= span.rank == fam.FAMILY_DIMS[family]
        ok &= all(span.residual(m.ravel()) == 0 for m in fam.family_matrices(family))
    _report(5, ok, "both containments exact for the two boost constructions")


def test_criterion_06_homomorphisms():
    rec9 = _run_suite("rho9_homomorphism", 1)
    rec101 = _run_suite("rho101_homomorphism", 1)
    ok = not rec9.failures and not rec101.failures
    _report(
        6,
        ok and rec9.max_res == 0 and rec101.max_res == 0,
        "all basis pairs bracket-compatible, metric and skewness exact",
    )


def test_criterion_07_equivariance():
    start = time.perf_counter()
    rec9 = _run_suite("sigma9_equivariance", 20)
    rec101 = _run_suite("sigma101_equivariance", 20)
    elapsed = time.perf_counter() - start
    ok = (
        not rec9.failures
        and not rec101.failures
        and rec9.max_res == 0
        and rec101.max_res == 0
        and elapsed < 60.0
    )
    _report(7, ok, "36x20 and 55x20 polarizations exact, %.1fs (< 60s)" % elapsed)


def test_criterion_08_invariance():
    recs = {
        "q": _run_suite("invariance_q", 10),
        "quads": _run_suite("invariance_quads", 10),
        "p": _run_suite("invariance_p", 10),
        "omega": _run_suite("omega_preserved", 10),
        "witness": _run_suite("spin91_q_witness", 10),
    }
    ok = all(not r.failures for r in recs.values()) and all(
        r.max_res == 0 for r in recs.values()
    )
    _report(8, ok, "directional derivatives vanish exactly; boost witness found")


def test_criterion_09_orbit_numerics():
    worst_f = 0.0
    for k in range(20):
        theta = (k + 0.5) * (math.pi / 4) / 20
        z = inv.canonical_z_theta(theta)
        worst_f = max(worst_f, abs(inv.p_quartic(z) - 0.25 * math.sin(2 * theta) ** 2))
    rng = random.Random(SEED + 9)
    exact_ok = True
    for _ in range(50):
        a = rand_fraction(rng, 1, 9)
        b = rand_fraction(rng, 0, 9)
        exact_ok &= inv.p_quartic(inv.canonical_z_ab(a, b)) == a * a * b * b
    one, u = Octonion.unit(0), Octonion.unit(1)
    for _ in range(50):
        a, b, c, d = (rand_fraction(rng, 1, 9) for _ in range(4))
        z = inv.Spinor(one.scale(a), Octonion.zero(), one.scale(c) + u.scale(d), one.scale(b))
        v1, v2 = z.first_pair(), z.second_pair()
        q20, q11, q02 = inv.quads(v1, v2)
        exact_ok &= inv.recover_abcd(q20, q11, q02, inv.q22(v1, v2)) == (a, b, c, d)
    for _ in range(100):
        z = inv.rand_spinor(rng)
        exact_ok &= inv.p_quartic(z) == inv.p_from_quads(z) == inv.p_wedge(z)
    ok = worst_f < 1e-12 and exact_ok
    _report(9, ok, "theta sweep max err %.2e (< 1e-12); rational identities exact" % worst_f)


def test_criterion_10_stabilizers():
    start = time.perf_counter()
    one = Octonion.unit(0)
    cases = [
        ("spin8", inv.Spinor.pair(one, one), 14),
        ("spin9", inv.Spinor.pair(one, Octonion.zero()), 21),
        ("spin10", inv.canonical_z_ab(Fraction(1), Fraction(0)), 21),
        ("spin10", inv.canonical_z_ab(Fraction(1), Fraction(1)), 24),
        ("spin101", inv.canonical_z_ab(Fraction(1), Fraction(1)), 24),
        ("spin101", inv.canonical_z_ab(Fraction(1), Fraction(0)), 30),
    ]
    ok = True
    dims = []
    for family, z, expected in cases:
        mats = inv.stabilizer_matrices(family, z)
        dims.append(len(mats))
        ok &= len(mats) == expected
        solver = SpanSolver([m.ravel() for m in mats])
        ok &= solver.rank == expected
        for i, j in itertools.combinations(range(len(mats)), 2):
            ok &= solver.residual(fast_bracket(mats[i], mats[j]).ravel()) == 0
    # float rank at the generic angle, relative threshold 1e-8
    z = inv.canonical_z_theta(math.pi / 6)
    fmats = inv.stabilizer_matrices("spin10", z)
    dims.append(len(fmats))
    ok &= len(fmats) == 15
    stack = np.stack([m.ravel() for m in fmats], axis=1)
    for i, j in itertools.combinations(range(len(fmats)), 2):
        br = fmats[i] @ fmats[j] - fmats[j] @ fmats[i]
        sol, *_ = np.linalg.lstsq(stack, br.ravel(), rcond=None)
        ok &= float(np.linalg.norm(stack @ sol - br.ravel())) < 1e-8
    su5 = inv.stabilizer_matrices("spin10", inv.canonical_z_ab(Fraction(1), Fraction(1)))
    ok &= inv.trace_form_negative_definite(su5)
    elapsed = time.perf_counter() - start
    ok &= elapsed < 120.0
    _report(10, ok, "dims %s, closures exact, trace form negative definite, %.1fs (< 120s)" % (dims, elapsed))


def test_criterion_11_minkowski_identity():
    rng = random.Random(SEED + 11)
    ok = True
    for _ in range(100):
        z = inv.rand_spinor(rng)
        s = inv.sigma101(z)
        ok &= inv.p_quartic(z) == Fraction(-1, 4) * inv.minkowski(s, s)
        ok &= inv.minkowski(s, s) <= 0
        ok &= s[0] >= 0
    _report(11, ok, "p = -1/4 sigma.sigma exact on 100 spinors; image in the cone")
