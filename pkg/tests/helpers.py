"""Small builders shared by the test modules."""

from fractions import Fraction

from bezKit.src.bivariate import BivariatePolynomial
from bezKit.src.polynomial import Polynomial
from bezKit.src.scalars import QQ, QQI, GaussianRational

I = GaussianRational(0, 1)


def P(*coeffs):
    """Rational polynomial from ascending coefficients."""
    return Polynomial(coeffs, QQ)


def G(*coeffs):
    """Gaussian-rational polynomial from ascending coefficients."""
    return Polynomial(coeffs, QQI)


def biv(terms, field=QQ):
    return BivariatePolynomial.from_terms(terms, field)


def random_fraction(rng, bound=9, den=4):
    return Fraction(rng.randint(-bound, bound), rng.randint(1, den))


def random_poly(rng, degree, bound=9):
    """Integer-coefficient polynomial of exact degree ``degree``."""
    coeffs = [rng.randint(-bound, bound) for _ in range(degree)]
    lead = 0
    while lead == 0:
        lead = rng.randint(-bound, bound)
    return P(*coeffs, lead)


def random_gaussian(rng, bound=5, den=3):
    return GaussianRational(random_fraction(rng, bound, den), random_fraction(rng, bound, den))
