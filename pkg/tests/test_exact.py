"""Exact polynomial / rational-function layer."""

import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kumfib.exact import (
    ExactAlgebraError,
    Place,
    PoleError,
    Polynomial,
    RationalFunction,
    compose,
    divisor_of,
    irreducible_factors,
    multiplicity_in,
    order_at,
)

X = RationalFunction.x()


def rf(num, den=(1,)):
    return RationalFunction(Polynomial(num), Polynomial(den))


class TestPolynomial:
    def test_normalization_trims_trailing_zeros(self):
        assert Polynomial((1, 2, 0, 0)).degree == 1
        assert Polynomial(()).is_zero
        assert Polynomial((0,)).is_zero

    def test_int_coefficients_become_fractions(self):
        p = Polynomial((1, 2))
        assert all(isinstance(c, F) for c in p.coeffs)

    def test_divmod(self):
        p = Polynomial((-1, 0, 1))  # x^2 - 1
        q, r = divmod(p, Polynomial((-1, 1)))  # x - 1
        assert q == Polynomial((1, 1)) and r.is_zero

    def test_gcd_is_monic(self):
        a = Polynomial((-2, 0, 2))  # 2x^2 - 2
        b = Polynomial((-3, 3))  # 3x - 3
        assert a.gcd(b) == Polynomial((-1, 1))

    def test_compose(self):
        sq = Polynomial((0, 0, 1))
        shift = Polynomial((1, 1))
        assert sq.compose(shift) == Polynomial((1, 2, 1))


class TestRationalFunction:
    def test_reduction_and_monic_denominator(self):
        f = rf((0, 2), (0, 0, 4))  # 2x / 4x^2
        assert f == rf((F(1, 2),), (0, 1))

    def test_zero_is_canonical(self):
        f = rf((0,), (1, 1))
        assert f == rf((0,)) and f.den == Polynomial((1,))

    def test_pole_evaluation(self):
        f = 1 / (X - 1)
        with pytest.raises(PoleError):
            f(F(1))
        assert f(F(3)) == F(1, 2)

    def test_arithmetic_with_scalars(self):
        f = (X + 1) / (X - 1)
        assert (f - 1) * (X - 1) == rf((2,))


class TestCompose:
    def test_tower_composite(self):
        # outer lam = 1/256 - mu^2 against the exact middle composite
        f1 = F(1, 256) - X**2
        middle = F(1, 16) - F(1, 8) * ((1 - X**2) / (1 + X**2)) ** 2
        lam = compose(f1, middle)
        expected = F(1, 16) * X**2 * (1 - X**2) ** 2 / (1 + X**2) ** 4
        assert lam == expected

    def test_identity_cases(self):
        f = (X**2 + 1) / (X - 2)
        assert compose(X, f) == f
        assert compose(f, X) == f

    def test_polynomial_example(self):
        assert compose(X**2, X + 1) == X**2 + 2 * X + 1

    def test_constant_inner(self):
        f = (X + 1) / (X - 1)
        assert compose(f, RationalFunction.constant(F(3))) == RationalFunction.constant(F(2))

    def test_inner_lands_on_pole(self):
        with pytest.raises(PoleError):
            compose(1 / X, RationalFunction.constant(F(0)))


def _random_rf(rng, max_deg=4):
    while True:
        num = Polynomial([F(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(rng.randint(1, max_deg + 1))])
        den = Polynomial([F(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(rng.randint(1, max_deg + 1))])
        if not num.is_zero and not den.is_zero:
            return RationalFunction(num, den)


def test_compose_evaluate_round_trip():
    rng = random.Random(12345)
    for _ in range(10):
        f = _random_rf(rng)
        g = _random_rf(rng)
        try:
            h = compose(f, g)
        except PoleError:
            continue
        hits = 0
        q = F(-7, 2)
        while hits < 20:
            q += F(1, 3)
            try:
                inner = g(q)
                expected = f(inner)
                got = h(q)
            except PoleError:
                continue
            assert got == expected
            hits += 1


class TestPlacesAndOrders:
    def test_order_examples(self):
        nu = X
        assert order_at(nu**3, Place.at(0)) == 3
        assert order_at(1 / nu, Place.at_infinity()) == 1
        assert order_at((nu - 1) ** 2 / (nu + 2), Place.at(1)) == 2
        assert order_at((nu - 1) ** 2 / (nu + 2), Place.at(-2)) == -1

    def test_zero_function_rejected(self):
        with pytest.raises(ExactAlgebraError):
            order_at(rf((0,)), Place.at(0))

    def test_place_requires_irreducible(self):
        with pytest.raises(ExactAlgebraError):
            Place.finite(Polynomial((-1, 0, 1)))  # x^2 - 1 splits

    def test_degree_weighted_orders_sum_to_zero(self):
        rng = random.Random(99)
        for _ in range(15):
            f = _random_rf(rng)
            total = sum(order * place.degree for place, order in divisor_of(f))
            assert total == 0


class TestFactorization:
    def test_quartic_example(self):
        factors = irreducible_factors(Polynomial((-1, 0, 0, 0, 1)))  # x^4 - 1
        polys = {(place.minimal_polynomial.coeffs, mult) for place, mult in factors}
        assert polys == {
            ((F(-1), F(1)), 1),
            ((F(1), F(1)), 1),
            ((F(1), F(0), F(1)), 1),
        }

    def test_constant_has_no_factors(self):
        assert irreducible_factors(Polynomial((5,))) == []

    def test_zero_rejected(self):
        with pytest.raises(ExactAlgebraError):
            irreducible_factors(Polynomial(()))

    def test_multiplicities_sum_to_degree_and_reconstruct(self):
        rng = random.Random(4)
        for _ in range(10):
            p = Polynomial([F(rng.randint(-4, 4)) for _ in range(rng.randint(2, 9))])
            if p.degree < 1:
                continue
            factors = irreducible_factors(p)
            assert sum(place.degree * mult for place, mult in factors) == p.degree
            product = Polynomial((1,))
            for place, mult in factors:
                product = product * place.minimal_polynomial**mult
            ratio = divmod(p, product)
            assert ratio[1].is_zero and ratio[0].degree == 0

    def test_e1_discriminant_factorization(self):
        # Delta of z^2 = t(t-1)(t-nu^2) via the standard formulary: 16 nu^4 (nu^2-1)^2
        nu = X
        delta = 16 * nu**4 * (nu**2 - 1) ** 2
        got = {
            (place.minimal_polynomial.coeffs, mult)
            for place, mult in irreducible_factors(delta.num)
        }
        assert got == {
            ((F(0), F(1)), 4),
            ((F(-1), F(1)), 2),
            ((F(1), F(1)), 2),
        }

    def test_multiplicity_in(self):
        p = Polynomial((0, 0, 0, 1))  # x^3
        assert multiplicity_in(p, Polynomial((0, 1))) == 3

    def test_degree_24_within_seconds(self):
        import time

        x = X
        product = (
            (x**4 - x**2 + 1) ** 3 * (x**2 + 1) ** 2 * (x**2 - 2) ** 2 * (x**2 - F(1, 2)) ** 2
        )
        start = time.perf_counter()
        factors = irreducible_factors(product.num)
        elapsed = time.perf_counter() - start
        assert elapsed < 2.0
        assert sum(place.degree * mult for place, mult in factors) == 24
        assert {
            (place.minimal_polynomial.coeffs, mult) for place, mult in factors
        } == {
            ((F(1), F(0), F(-1), F(0), F(1)), 3),
            ((F(1), F(0), F(1)), 2),
            ((F(-2), F(0), F(1)), 2),
            ((F(-1, 2), F(0), F(1)), 2),
        }


coeffs = st.integers(min_value=-6, max_value=6)


@settings(max_examples=60, deadline=None)
@given(st.lists(coeffs, min_size=1, max_size=5), st.lists(coeffs, min_size=1, max_size=5))
def test_addition_and_multiplication_commute_with_evaluation(a, b):
    p, q = Polynomial(a), Polynomial(b)
    x = F(3, 7)
    assert (p + q)(x) == p(x) + q(x)
    assert (p * q)(x) == p(x) * q(x)


@settings(max_examples=40, deadline=None)
@given(
    st.lists(coeffs, min_size=1, max_size=4),
    st.lists(coeffs, min_size=1, max_size=4),
    st.lists(coeffs, min_size=1, max_size=4),
)
def test_rational_function_field_laws(a, b, c):
    den = Polynomial(c)
    if den.is_zero:
        return
    f = RationalFunction(Polynomial(a), den)
    g = RationalFunction(Polynomial(b), den)
    assert f + g == g + f
    assert f * g == g * f
    assert f - f == RationalFunction(Polynomial(()))
    if g:
        assert (f / g) * g == f
