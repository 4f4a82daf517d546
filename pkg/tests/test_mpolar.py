"""Modular-parameter arithmetic and the j quadratic."""

import random
from fractions import Fraction as F

import pytest
import sympy

from kumfib.exact import Polynomial, RationalFunction
from kumfib.mpolar import (
    CuspError,
    ModularParams,
    SigmaPi,
    discriminant_delta,
    fiber_cubic,
    fiber_locus,
    j_pair,
    normalize,
    sigma_pi,
)


class TestNormalize:
    def test_unit_d(self):
        assert normalize(ModularParams(2, 3, 1)) == (F(2), F(9))

    def test_family_point(self):
        p = ModularParams(F(145, 144), F(647, 1728), 1)
        assert normalize(p) == (F(145, 144), F(647, 1728) ** 2)

    def test_cube_d(self):
        # weights (2,3,6): scaling by t=2 sends (a,b,d) -> (4a, 8b, 64d)
        assert normalize(ModularParams(4 * 2, 8 * 3, 64)) == (F(2), F(9))

    def test_cusp_rejected(self):
        with pytest.raises(CuspError):
            ModularParams(1, 1, 0)

    def test_non_cube_rejected(self):
        with pytest.raises(ValueError, match="perfect cube"):
            normalize(ModularParams(1, 1, 2))

    def test_weighted_rescaling_invariance(self):
        rng = random.Random(8)
        for _ in range(25):
            a = F(rng.randint(-9, 9), rng.randint(1, 5))
            b = F(rng.randint(-9, 9), rng.randint(1, 5))
            d = F(rng.randint(1, 9), rng.randint(1, 5)) ** 3
            t = F(rng.randint(1, 6), rng.randint(1, 6))
            scaled = ModularParams(t**2 * a, t**3 * b, t**6 * d)
            assert normalize(scaled) == normalize(ModularParams(a, b, d))


class TestSigmaPi:
    def test_trivial_points(self):
        assert sigma_pi(0, 0) == SigmaPi(F(1), F(0))
        assert sigma_pi(1, 1) == SigmaPi(F(1), F(1))

    def test_family_value(self):
        sp = sigma_pi(F(145, 144), F(647, 1728))
        assert sp.sigma == F(1625, 864)
        assert sp.pi == F(145, 144) ** 3


class TestDiscriminant:
    def test_trivial_values(self):
        assert discriminant_delta(0, 0) == 1
        assert discriminant_delta(1, 0) == 0

    def test_equals_sigma_squared_minus_four_pi_randomly(self):
        rng = random.Random(2)
        for _ in range(50):
            a = F(rng.randint(-30, 30), rng.randint(1, 9))
            b = F(rng.randint(-30, 30), rng.randint(1, 9))
            sp = sigma_pi(a, b)
            assert discriminant_delta(a, b) == sp.sigma**2 - 4 * sp.pi

    def test_symbolic_identity_native_tower(self):
        # a and b as nested rational-function variables over Q
        a_var = RationalFunction.x()
        one = RationalFunction.constant(F(1))
        zero = RationalFunction.constant(F(0))
        b_var = RationalFunction(Polynomial((zero, one)))
        a_lift = RationalFunction(Polynomial((a_var,)))
        sp = sigma_pi(a_lift, b_var)
        assert sp.sigma * sp.sigma - 4 * sp.pi == discriminant_delta(a_lift, b_var)

    def test_symbolic_identity_sympy_oracle(self):
        a, b = sympy.symbols("a b")
        sigma = a**3 - b**2 + 1
        pi = a**3
        assert sympy.expand(
            sigma**2 - 4 * pi - (a**3 - (b - 1) ** 2) * (a**3 - (b + 1) ** 2)
        ) == 0


class TestFiberLocus:
    def test_origin(self):
        minus, plus = fiber_locus(0, 0)
        assert minus == Polynomial((-1, 0, 0, 4))
        assert plus == Polynomial((1, 0, 0, 4))

    def test_leading_and_constant_coefficients(self):
        rng = random.Random(5)
        for _ in range(20):
            a = F(rng.randint(-9, 9), rng.randint(1, 4))
            b = F(rng.randint(-9, 9), rng.randint(1, 4))
            minus, plus = fiber_locus(a, b)
            assert minus.leading == 4 and plus.leading == 4
            assert minus.coeffs[0] == -b - 1
            assert plus.coeffs[0] == -b + 1

    def test_distinct_roots_iff_discriminant(self):
        # at (1, 0) both a^3 = (b-1)^2 and a^3 = (b+1)^2 hold: both degenerate
        minus, plus = fiber_locus(1, 0)
        assert not plus.squarefree_part_is_self()
        assert not minus.squarefree_part_is_self()
        # at (4, 7) only a^3 = (b+1)^2 holds: only the P - 1 factor degenerates
        minus, plus = fiber_locus(4, 7)
        assert not minus.squarefree_part_is_self()
        assert plus.squarefree_part_is_self()
        # generic point: all six distinct and the two cubics are coprime
        minus, plus = fiber_locus(F(2), F(3))
        assert discriminant_delta(F(2), F(3)) != 0
        assert minus.squarefree_part_is_self() and plus.squarefree_part_is_self()
        assert minus.gcd(plus).degree == 0

    def test_cubic(self):
        assert fiber_cubic(F(1, 2), 7) == Polynomial((-7, F(-3, 2), 0, 4))


class TestJPair:
    def test_double_root(self):
        j1, j2 = j_pair(SigmaPi(F(2), F(1)))
        assert j1.as_rational() == 1 and j2.as_rational() == 1

    def test_split_case(self):
        j1, j2 = j_pair(SigmaPi(F(1), F(0)))
        assert {j1.as_rational(), j2.as_rational()} == {F(0), F(1)}

    def test_family_point_vieta(self):
        sp = SigmaPi(F(1625, 864), F(145, 144) ** 3)
        j1, j2 = j_pair(sp)
        assert (j1 + j2).as_rational() == sp.sigma
        assert (j1 * j2).as_rational() == sp.pi
        assert not j1.is_rational  # the discriminant is negative here
        assert j1.radicand < 0

    def test_vieta_randomly(self):
        rng = random.Random(11)
        for _ in range(50):
            sp = SigmaPi(
                F(rng.randint(-200, 200), rng.randint(1, 20)),
                F(rng.randint(-200, 200), rng.randint(1, 20)),
            )
            j1, j2 = j_pair(sp)
            assert (j1 + j2).as_rational() == sp.sigma
            assert (j1 * j2).as_rational() == sp.pi
