"""Invariant polynomials, squaring maps, orbit labels, stabilizers."""

import itertools
import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from octospin import families as fam
from octospin import invariants as inv
from octospin.linalg import SpanSolver, fast_bracket, poly_directional_coeffs
from octospin.octonion import Octonion, rand_octonion

ONE = Octonion.unit(0)
U = Octonion.unit(1)


def canonical_quadruple(a, b, c, d):
    """The orbit representative (a 1, 0; c 1 + d u, b 1) on O^2 + O^2."""
    return inv.Spinor(ONE.scale(a), Octonion.zero(), ONE.scale(c) + U.scale(d), ONE.scale(b))


def test_q_pair_examples():
    assert inv.q_pair(inv.Spinor.pair(ONE, Octonion.zero())) == (1, 0)
    a, b = Fraction(3, 2), Fraction(5)
    z = inv.Spinor.pair(ONE.scale(a), ONE.scale(b))
    assert inv.q_pair(z) == (a * a, b * b)


def test_q_pair_invariant_under_triality_action():
    from octospin.octonion import rational_unit_octonion
    from octospin.spin8 import sigma_generator, triple_product

    rng = random.Random(41)
    for _ in range(10):
        t = triple_product(
            sigma_generator(rational_unit_octonion(rng)),
            sigma_generator(rational_unit_octonion(rng)),
        )
        z = inv.rand_spinor(rng, half=True)
        moved = inv.Spinor.pair(
            Octonion.from_coords(t.g1 @ z.x1.vector()),
            Octonion.from_coords(t.g3 @ z.y1.vector()),
        )
        assert inv.q_pair(moved) == inv.q_pair(z)


def test_quads_on_canonical_element():
    a, b, c, d = Fraction(2), Fraction(1), Fraction(1), Fraction(1)
    z = canonical_quadruple(a, b, c, d)
    v1, v2 = z.first_pair(), z.second_pair()
    assert inv.quads(v1, v2) == (a * a, a * c, b * b + c * c + d * d)
    assert inv.q22(v1, v2) == a * a * (c * c + d * d - b * b)


def test_quads_degenerate_and_swap():
    rng = random.Random(42)
    v1 = inv.rand_spinor(rng, half=True)
    zero = inv.Spinor.pair(Octonion.zero(), Octonion.zero())
    q20, q11, q02 = inv.quads(v1, zero)
    assert (q11, q02) == (0, 0) and q20 == inv.quads(v1, v1)[0]
    v2 = inv.rand_spinor(rng, half=True)
    a = inv.quads(v1, v2)
    b = inv.quads(v2, v1)
    assert (a[0], a[1], a[2]) == (b[2], b[1], b[0])


def test_sigma9_base_cases():
    t, o = inv.sigma9(inv.Spinor.pair(ONE, Octonion.zero()))
    assert t == 1 and o.is_zero()
    theta = 0.8
    zf = inv.Spinor.pair(
        Octonion.unit(0, "float").scale(math.cos(theta)),
        Octonion.unit(0, "float").scale(math.sin(theta)),
    )
    t, o = inv.sigma9(zf)
    # double-angle identities pin the image on the diagonal circle
    assert abs(t - math.cos(2 * theta)) < 1e-12
    assert abs(o.coords[0] - math.sin(2 * theta)) < 1e-12
    assert max(abs(v) for v in o.coords[1:]) < 1e-12


def test_q22_examples():
    z = inv.Spinor.pair(ONE, Octonion.zero())
    assert inv.q22(z, z) == 1
    rng = random.Random(43)
    for _ in range(15):
        v1, v2 = inv.rand_spinor(rng, half=True), inv.rand_spinor(rng, half=True)
        from octospin.octonion import inner, norm_sq, oct_mul

        expand = (norm_sq(v1.x1) - norm_sq(v1.y1)) * (norm_sq(v2.x1) - norm_sq(v2.y1)) + 4 * inner(
            oct_mul(v1.x1, v1.y1), oct_mul(v2.x1, v2.y1)
        )
        assert inv.q22(v1, v2) == expand


def test_recover_abcd_worked_examples():
    assert inv.recover_abcd(1, 0, 0, 0) == (1, 0, 0, 0)
    assert inv.recover_abcd(4, 2, 3, 4) == (2, 1, 1, 1)


@settings(max_examples=25, deadline=None)
@given(
    st.fractions(min_value="1/4", max_value=9, max_denominator=4),
    st.fractions(min_value=0, max_value=9, max_denominator=4),
    st.fractions(min_value=0, max_value=9, max_denominator=4),
    st.fractions(min_value=0, max_value=9, max_denominator=4),
)
def test_recover_abcd_roundtrip(a, b, c, d):
    z = canonical_quadruple(a, b, c, d)
    v1, v2 = z.first_pair(), z.second_pair()
    q20, q11, q02 = inv.quads(v1, v2)
    got = inv.recover_abcd(q20, q11, q02, inv.q22(v1, v2))
    assert got == (a, b, c, d)


def test_recover_abcd_rejects_unrealizable():
    with pytest.raises(inv.InconsistentInvariants):
        inv.recover_abcd(Fraction(1), Fraction(0), Fraction(0), Fraction(9))
    with pytest.raises(inv.InconsistentInvariants):
        inv.recover_abcd(Fraction(0), Fraction(0), Fraction(1), Fraction(0))


def test_p_quartic_zero_slots():
    rng = random.Random(44)
    x1 = rand_octonion(rng)
    z = inv.Spinor(x1, Octonion.zero(), Octonion.zero(), Octonion.zero())
    assert inv.p_quartic(z) == 0


def test_p_expressions_agree():
    rng = random.Random(45)
    for _ in range(25):
        z = inv.rand_spinor(rng)
        assert inv.p_quartic(z) == inv.p_from_quads(z) == inv.p_wedge(z)


def test_p_on_theta_family():
    for k in range(20):
        theta = (k + 0.3) * (math.pi / 4) / 20
        z = inv.canonical_z_theta(theta)
        assert abs(inv.p_quartic(z) - 0.25 * math.sin(2 * theta) ** 2) < 1e-12


def test_p_on_ab_family():
    rng = random.Random(46)
    for _ in range(20):
        a = Fraction(rng.randint(1, 9), rng.randint(1, 4))
        b = Fraction(rng.randint(0, 9), rng.randint(1, 4))
        assert inv.p_quartic(inv.canonical_z_ab(a, b)) == a * a * b * b


def test_p_range_on_unit_sphere():
    rng = random.Random(47)
    for _ in range(200):
        v = np.array([rng.gauss(0, 1) for _ in range(32)])
        v /= np.linalg.norm(v)
        pz = inv.p_quartic(inv.Spinor.from_vector(list(v)))
        assert -1e-12 <= pz <= 0.25 + 1e-10
        w = np.array([rng.uniform(-4, 4) for _ in range(32)])
        assert inv.p_quartic(inv.Spinor.from_vector(list(w))) >= -1e-12


def test_sigma101_and_minkowski():
    rng = random.Random(48)
    for _ in range(25):
        z = inv.rand_spinor(rng)
        s = inv.sigma101(z)
        assert inv.p_quartic(z) == Fraction(-1, 4) * inv.minkowski(s, s)
        assert inv.minkowski(s, s) <= 0
        assert s[0] >= 0
    s = inv.sigma101(inv.canonical_z_ab(Fraction(1), Fraction(0)))
    assert (s[0], s[1], s[2]) == (1, 0, 0) and s[3].is_zero()
    assert inv.minkowski(s, s) == 0


def test_sigma_equivariance_sampled():
    rng = random.Random(49)

    def sig9(z):
        t, o = inv.sigma9(z)
        return [t] + list(o.coords)

    basis9 = fam.family_basis("spin9")
    for el in random.Random(50).sample(list(basis9.elements), 6):
        img = fam.rho9(el)
        z = inv.rand_spinor(rng, half=True)
        az = inv.Spinor.from_vector(el.matrix @ z.vector16())
        lin = poly_directional_coeffs(sig9, z, az, 2)[1]
        assert (np.array(lin, dtype=object) == img @ np.array(sig9(z), dtype=object)).all()

    def sig101(z):
        a1, a2, a3, o = inv.sigma101(z)
        return [a1, a2, a3] + list(o.coords)

    basis101 = fam.family_basis("spin101")
    for el in random.Random(51).sample(list(basis101.elements), 6):
        img = fam.rho101(el)
        z = inv.rand_spinor(rng)
        az = inv.Spinor.from_vector(el.matrix @ z.vector32())
        lin = poly_directional_coeffs(sig101, z, az, 2)[1]
        assert (np.array(lin, dtype=object) == img @ np.array(sig101(z), dtype=object)).all()


def test_omega_properties():
    rng = random.Random(52)
    j = inv.omega_gram()
    jj = j @ j
    assert all(jj[i, k] == (-1 if i == k else 0) for i in range(32) for k in range(32))
    for _ in range(10):
        z, w = inv.rand_spinor(rng), inv.rand_spinor(rng)
        assert inv.omega(z, z) == 0
        assert inv.omega(z, w) == -inv.omega(w, z)
        assert inv.omega(z, w) == z.vector32() @ (j @ w.vector32())
    e_x1 = inv.Spinor.from_vector([1] + [0] * 31)
    e_x2 = inv.Spinor.from_vector([0] * 16 + [1] + [0] * 15)
    assert inv.omega(e_x1, e_x2) == 1


def test_omega_preserved_by_spin102_sampled():
    j = inv.omega_gram()
    rng = random.Random(53)
    mats = fam.family_matrices("spin102")
    for m in rng.sample(mats, 12):
        assert all(v == 0 for v in (m.T @ j + j @ m).ravel())


def test_stabilizer_dimensions():
    assert inv.stabilizer_dim("spin8", inv.Spinor.pair(ONE, ONE)) == 14
    assert inv.stabilizer_dim("spin9", inv.Spinor.pair(ONE, Octonion.zero())) == 21
    z0 = inv.canonical_z_ab(Fraction(1), Fraction(0))
    z11 = inv.canonical_z_ab(Fraction(1), Fraction(1))
    assert inv.stabilizer_dim("spin10", z0) == 21
    assert inv.stabilizer_dim("spin10", z11) == 24
    assert inv.stabilizer_dim("spin101", z11) == 24
    assert inv.stabilizer_dim("spin101", z0) == 30


def test_stabilizer_float_generic_theta():
    z = inv.canonical_z_theta(math.pi / 6)
    assert inv.stabilizer_dim("spin10", z) == 15


def test_stabilizer_closure_and_trace_form():
    z11 = inv.canonical_z_ab(Fraction(1), Fraction(1))
    mats = inv.stabilizer_matrices("spin10", z11)
    solver = SpanSolver([m.ravel() for m in mats])
    assert solver.rank == 24
    rng = random.Random(54)
    pairs = list(itertools.combinations(range(24), 2))
    for i, j in rng.sample(pairs, 40):
        assert solver.residual(fast_bracket(mats[i], mats[j]).ravel()) == 0
    assert inv.trace_form_negative_definite(mats)


def test_stabilizer_rejects_wrong_spinor_shape():
    z32 = inv.rand_spinor(random.Random(55))
    with pytest.raises(fam.FamilyError):
        inv.stabilizer("spin9", z32)


def test_classify_spin10_labels():
    lbl = inv.classify("spin10", inv.canonical_z_ab(Fraction(1), Fraction(0)))
    assert lbl.orbit == "M"
    assert lbl.invariants == {"q": 1, "p": 0}
    assert lbl.canonical == {"theta": 0.0}
    lbl = inv.classify("spin10", inv.canonical_z_ab(Fraction(1), Fraction(1)))
    assert lbl.orbit == "M*"
    lbl = inv.classify("spin10", inv.canonical_z_theta(0.31))
    assert lbl.orbit == "generic"
    assert abs(lbl.canonical["theta"] - 0.31) < 1e-9


def test_classify_spin101_labels():
    rng = random.Random(56)
    z = inv.rand_spinor(rng)
    base = inv.classify("spin101", z)
    for t in (Fraction(3), Fraction(2, 7)):
        moved = inv.Spinor.from_vector(fam.R_generator(t) @ z.vector32())
        assert inv.classify("spin101", moved) == base
    zero = inv.Spinor.from_vector([0] * 32)
    assert inv.classify("spin101", zero).orbit == "origin"
    cone = inv.canonical_z_ab(Fraction(1), Fraction(0))
    assert inv.classify("spin101", cone).orbit == "null-cone"
    bulk = inv.canonical_z_ab(Fraction(1), Fraction(2))
    assert inv.classify("spin101", bulk).orbit == "p-level"


def test_classify_spin9_roundtrip():
    z = canonical_quadruple(Fraction(2), Fraction(1), Fraction(1), Fraction(1))
    lbl = inv.classify("spin9", z)
    assert lbl.canonical == {"a": 2, "b": 1, "c": 1, "d": 1}
    assert lbl.invariants["q20"] == 4


def test_directional_invariance_sampled():
    rng = random.Random(57)
    spinors = [inv.rand_spinor(rng) for _ in range(3)]
    for family in ("spin10", "spin101", "spin102"):
        mats = fam.family_matrices(family)
        for m in random.Random(58).sample(mats, 8):
            for z in spinors:
                az = inv.Spinor.from_vector(m @ z.vector32())
                assert poly_directional_coeffs(inv.p_quartic, z, az, 4)[1] == 0


def test_spin91_breaks_the_quadratic_form():
    def q16(z):
        v = z.vector16()
        return sum(x * x for x in v)

    rng = random.Random(59)
    witness = 0
    for m in fam.family_matrices("spin91"):
        z = inv.rand_spinor(rng, half=True)
        az = inv.Spinor.from_vector(m @ z.vector16())
        if poly_directional_coeffs(q16, z, az, 2)[1] != 0:
            witness += 1
    assert witness > 0
