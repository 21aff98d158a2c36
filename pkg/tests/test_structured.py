from fractions import Fraction

import pytest

from bezKit.src.bezout import bezout_matrix
from bezKit.src.errors import CommonZeroError, DegreeError, MultipleZeroError, ShapeError, SingularMatrixError, SymmetryError
from bezKit.src.matrix import DenseMatrix
from bezKit.src.polynomial import Polynomial, poly_gcd
from bezKit.src.scalars import QQI, GaussianRational
from bezKit.src.structured import (
    HankelMatrix,
    RootLocation,
    bezout_inverse,
    hankel_deviation,
    hankel_from_roots,
    hankel_generator,
    hermite_upper_halfplane,
)

from helpers import G, I, P, random_poly


def test_bezout_inverse_examples():
    H = bezout_inverse(P(-1, 0, 1), P(-4, 0, 1))
    assert H.generator == (0, Fraction(-1, 3), 0)
    assert bezout_inverse(P(0, 1), P(1)).generator == (1,)
    assert bezout_inverse(P(-2, 1), P(-3, 1)).generator == (-1,)


def test_bezout_inverse_singular():
    with pytest.raises(SingularMatrixError) as info:
        bezout_inverse(P(2, -3, 1), P(2, -3, 1))
    assert info.value.dim_ker == 2
    with pytest.raises(SingularMatrixError) as info:
        bezout_inverse(P(2, -3, 1), P(3, -4, 1))
    assert info.value.dim_ker == 1


def test_bezout_inverse_roundtrip(rng):
    checked = 0
    while checked < 100:
        n = rng.randint(1, 6)
        p = random_poly(rng, n)
        q = random_poly(rng, rng.randint(0, n))
        if poly_gcd(p, q).degree >= 1:
            continue
        B = bezout_matrix(p, q).matrix
        H = bezout_inverse(p, q)
        assert B * H.to_dense() == DenseMatrix.identity(n)
        assert hankel_generator(H.to_dense()) == H.generator
        checked += 1


def test_hankel_matrix_helpers():
    H = HankelMatrix(2, (1, 2, 3))
    assert H.to_dense().to_rows() == [[1, 2], [2, 3]]
    assert HankelMatrix.from_dense(H.to_dense()) == H
    with pytest.raises(ShapeError):
        HankelMatrix(2, (1, 2))
    with pytest.raises(SymmetryError):
        HankelMatrix.from_dense(DenseMatrix.from_rows([[1, 2], [3, 4]]))


def test_hankel_from_roots_examples():
    exact = bezout_inverse(P(-1, 0, 1), P(-4, 0, 1))
    approx = hankel_from_roots(P(-1, 0, 1), P(-4, 0, 1))
    assert hankel_deviation(approx, exact) <= 1e-10
    approx = hankel_from_roots(P(-2, 1), P(-3, 1))
    assert abs(approx.generator[0] - (-1)) <= 1e-12


def test_hankel_from_roots_preconditions():
    with pytest.raises(CommonZeroError):
        hankel_from_roots(P(-1, 0, 1), P(-1, 0, 1))
    with pytest.raises(MultipleZeroError):
        hankel_from_roots(P(1, -2, 1), P(1, 0, 1))
    with pytest.raises(DegreeError):
        hankel_from_roots(P(-1, 0, 1), P(1, 1))


def test_root_formula_agrees_with_exact_inverse(rng):
    # p roots on the integers, q roots on the half-integers: at least 1/2 apart
    p_grid = list(range(-3, 4))
    q_grid = [Fraction(2 * k + 1, 2) for k in range(-4, 4)]
    for _ in range(50):
        n = rng.randint(1, 5)
        p = Polynomial.from_roots(rng.sample(p_grid, n))
        q = Polynomial.from_roots(rng.sample(q_grid, n))
        exact = bezout_inverse(p, q)
        approx = hankel_from_roots(p, q)
        assert hankel_deviation(approx, exact) <= 1e-8


def test_hermite_examples():
    upper = hermite_upper_halfplane(G(-I, 1))
    assert upper.verdict is RootLocation.ALL_UPPER
    assert upper.minors == (1,)
    lower = hermite_upper_halfplane(G(I, 1))
    assert lower.verdict is RootLocation.NOT_ALL_UPPER
    assert lower.minors == (-1,)
    assert hermite_upper_halfplane(P(-1, 1)).verdict is RootLocation.BOUNDARY
    assert hermite_upper_halfplane(P(1, 0, 1)).verdict is RootLocation.BOUNDARY


def test_hermite_zero_leading_minor_with_nonzero_det():
    c = GaussianRational(-3, -3)
    result = hermite_upper_halfplane(G(c, c, 1))
    assert result.minors == (0, -9)
    assert result.verdict is RootLocation.NOT_ALL_UPPER


def test_hermite_matrix_is_hermitian():
    result = hermite_upper_halfplane(G(GaussianRational(1, 2), -I, 3))
    assert result.matrix == result.matrix.conjugate_transpose()
    with pytest.raises(DegreeError):
        hermite_upper_halfplane(G(5))


def _random_upper(rng):
    return GaussianRational(Fraction(rng.randint(-6, 6), 3), Fraction(rng.randint(1, 6), 3))


def test_hermite_random_upper_halfplane(rng):
    for _ in range(100):
        roots = [_random_upper(rng) for _ in range(rng.randint(1, 5))]
        p = Polynomial.from_roots(roots, QQI)
        assert hermite_upper_halfplane(p).verdict is RootLocation.ALL_UPPER


def test_hermite_one_root_flipped(rng):
    for _ in range(100):
        roots = []
        target = rng.randint(1, 5)
        while len(roots) < target:
            r = _random_upper(rng)
            if r not in roots:
                roots.append(r)
        k = rng.randrange(len(roots))
        roots[k] = roots[k].conjugate()
        p = Polynomial.from_roots(roots, QQI)
        assert hermite_upper_halfplane(p).verdict is RootLocation.NOT_ALL_UPPER
