from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

import chow_oracle
from conftest import K1, kclasses, divisors
from tiltlab.kclass import point_class, twist_B
from tiltlab.lattice import S1, S2, DivisorClass, intersect
from tiltlab.tilt import (
    INF,
    LocusKind,
    StabilityParams,
    central_charge,
    discriminant,
    mu_B,
    tilt_slope,
    vertical_beta,
    vertical_locus_kind,
)

ZERO1 = DivisorClass([0])
pos_rationals = st.fractions(min_value=Fraction(1, 16), max_value=8, max_denominator=16)


def test_params_reject_nonpositive_alpha():
    with pytest.raises(ValueError):
        StabilityParams(0, 0, ZERO1)


class TestMu:
    def test_example(self):
        assert mu_B(K1(2, 1, 0), ZERO1, S1) == Fraction(1, 2)

    def test_torsion(self):
        assert mu_B(K1(0, 1, 5), ZERO1, S1) == INF
        assert mu_B(point_class(S2), DivisorClass([1, 0]), S2) == INF

    @given(kclasses(2), divisors(2))
    def test_shift(self, a, b):
        if a.ch0 == 0:
            return
        B = DivisorClass(b)
        zero = DivisorClass([0, 0])
        assert mu_B(a, B, S2) == mu_B(a, zero, S2) - intersect(S2.H, B, S2) / S2.degree


class TestCentralCharge:
    def test_point(self):
        for al, be in [(1, 0), (Fraction(1, 3), 5), (2, Fraction(-7, 2))]:
            z = central_charge(point_class(S1), StabilityParams(al, be, ZERO1), S1)
            assert (z.re, z.im) == (-1, 0)

    def test_vertical_wall_vanishing(self):
        z = central_charge(K1(2, 0, -1), StabilityParams(1, 0, ZERO1), S1)
        assert z.im == 0

    def test_structure_sheaf(self):
        z = central_charge(K1(1, 0, 0), StabilityParams(1, 0, ZERO1), S1)
        assert (z.re, z.im) == (Fraction(1, 2), 0)

    @pytest.mark.parametrize("s", [S1, S2])
    @given(data=st.data())
    @settings(max_examples=40, deadline=None)
    def test_matches_integral_oracle(self, s, data):
        a = data.draw(kclasses(s.rank))
        B = DivisorClass(data.draw(divisors(s.rank)))
        al = data.draw(pos_rationals)
        be = data.draw(st.fractions(min_value=-6, max_value=6, max_denominator=8))
        z = central_charge(a, StabilityParams(al, be, B), s)
        ref = chow_oracle.charge(a, al, be, B, s)
        assert sp.re(ref) == sp.Rational(z.re.numerator, z.re.denominator)
        assert sp.im(ref) == sp.Rational(z.im.numerator, z.im.denominator)


class TestTiltSlope:
    def test_infinite_on_vertical_wall(self):
        assert tilt_slope(K1(2, 0, -1), StabilityParams(1, 0, ZERO1), S1) == INF

    def test_point_infinite(self):
        assert tilt_slope(point_class(S1), StabilityParams(3, 2, ZERO1), S1) == INF

    def test_against_oracle(self):
        a = K1(1, 0, 0)
        ref = chow_oracle.charge(a, Fraction(1), Fraction(-1), ZERO1, S1)
        expected = -sp.re(ref) / sp.im(ref)
        nu = tilt_slope(a, StabilityParams(1, -1, ZERO1), S1)
        assert nu == 0 and sp.Rational(nu.numerator, nu.denominator) == expected

    @given(kclasses(2), pos_rationals, st.fractions(max_denominator=7), pos_rationals)
    @settings(max_examples=50)
    def test_scale_invariance(self, a, al, be, lam):
        p = StabilityParams(al, be, DivisorClass([Fraction(1, 2), 0]))
        assert tilt_slope(lam * a, p, S2) == tilt_slope(a, p, S2)


class TestVerticalBeta:
    def test_examples(self):
        assert vertical_beta(K1(2, 0, -1), ZERO1, S1) == 0
        assert vertical_beta(K1(2, 1, 0), ZERO1, S1) == Fraction(1, 2)
        assert vertical_beta(K1(2, 1, 0), S1.H, S1) == Fraction(-1, 2)

    def test_rank_zero_rejected(self):
        with pytest.raises(ValueError):
            vertical_beta(K1(0, 1, 0), ZERO1, S1)

    @given(kclasses(2), divisors(2), pos_rationals, pos_rationals)
    @settings(max_examples=50)
    def test_imaginary_part_vanishes(self, v, b, al, lam):
        if v.ch0 <= 0:
            return
        B = DivisorClass(b)
        p = StabilityParams(al, vertical_beta(v, B, S2), B)
        assert central_charge(v, p, S2).im == 0
        assert central_charge(lam * v, p, S2).im == 0


class TestDiscriminant:
    def test_examples(self):
        assert discriminant(K1(1, 0, 0), S1) == 0
        assert discriminant(point_class(S1), S1) == 0
        assert discriminant(K1(1, 0, -1), S1) == 2

    def test_invariant_under_H_twists(self):
        v = K1(3, 2, -5)
        for b in (Fraction(1, 2), 3, Fraction(-7, 3)):
            assert discriminant(twist_B(v, S1.H * b, S1), S1) == discriminant(v, S1)


class TestLocusKind:
    def test_examples(self):
        v = K1(2, 1, 0)
        assert vertical_locus_kind(v, StabilityParams(3, vertical_beta(v, ZERO1, S1), ZERO1), S1) == LocusKind.ZERO
        for al, be in [(1, 0), (Fraction(1, 5), 9), (4, -3)]:
            assert vertical_locus_kind(K1(0, 1, 0), StabilityParams(al, be, ZERO1), S1) == LocusKind.POSITIVE
        assert vertical_locus_kind(K1(1, 0, 0), StabilityParams(1, 1, ZERO1), S1) == LocusKind.NEGATIVE

    @given(kclasses(2), kclasses(2), divisors(2))
    def test_hc_additive(self, e, f, b):
        B = DivisorClass(b)
        g = e + f
        hc = lambda x: intersect(S2.H, twist_B(x, B, S2).ch1, S2)
        assert hc(g) == hc(e) + hc(f)
