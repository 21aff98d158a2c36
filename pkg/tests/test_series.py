from fractions import Fraction

import pytest

from bezKit.src.errors import DomainError, OracleInapplicableError
from bezKit.src.ratfun import RationalFunction
from bezKit.src.series import PowerSeries

from helpers import P, random_fraction, random_poly


def test_rational_function_is_reduced():
    f = RationalFunction(P(-1, 0, 1), P(-2, 2))
    assert f.num == P(Fraction(1, 2), Fraction(1, 2))
    assert f.den == P(1)
    assert RationalFunction(P(0), P(3, 1)).den == P(1)


def test_rational_function_arithmetic(rng):
    for _ in range(40):
        f = RationalFunction(random_poly(rng, rng.randint(0, 3)), random_poly(rng, rng.randint(0, 3)))
        g = RationalFunction(random_poly(rng, rng.randint(0, 3)), random_poly(rng, rng.randint(0, 3)))
        t = random_fraction(rng)
        if f.den(t) == 0 or g.den(t) == 0:
            continue
        assert (f + g)(t) == f(t) + g(t)
        assert (f * g)(t) == f(t) * g(t)
        assert (f * g).derivative() == f.derivative() * g + f * g.derivative()


def test_rational_function_pole():
    f = RationalFunction(P(1), P(-1, 1))
    with pytest.raises(DomainError):
        f(1)
    with pytest.raises(ZeroDivisionError):
        RationalFunction(P(1), P(0))


def test_series_from_rational():
    s = PowerSeries.from_rational(P(1), P(1, -1), 4)
    assert s.coeffs == (1, 1, 1, 1, 1)
    with pytest.raises(OracleInapplicableError):
        PowerSeries.from_rational(P(1), P(0, 1), 4)


def test_series_reversion(rng):
    for _ in range(20):
        coeffs = [0] + [random_fraction(rng) for _ in range(5)]
        if coeffs[1] == 0:
            coeffs[1] = 1
        u = PowerSeries(coeffs, 5)
        w = u.reversion()
        assert u.compose(w) == PowerSeries([0, 1], 5)
        assert w.compose(u) == PowerSeries([0, 1], 5)


def test_series_reversion_preconditions():
    with pytest.raises(OracleInapplicableError):
        PowerSeries([1, 1], 3).reversion()
    with pytest.raises(OracleInapplicableError):
        PowerSeries([0, 0, 1], 3).reversion()
    with pytest.raises(OracleInapplicableError):
        PowerSeries([1], 3).compose(PowerSeries([1, 1], 3))


def test_series_valuation():
    assert PowerSeries([0, 0, 3], 4).valuation() == 2
    assert PowerSeries([], 4).valuation() is None
    s = PowerSeries.from_polynomial(P(1, 2), 3)
    assert (s * s).coeffs == (1, 4, 4, 0)
