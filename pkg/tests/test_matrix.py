from fractions import Fraction

import pytest

from bezKit.src.errors import ShapeError, SingularMatrixError, SymmetryError
from bezKit.src.matrix import (
    DenseMatrix,
    det_cofactor,
    leading_principal_minors,
    matrix_det,
    matrix_inverse,
    matrix_rank_kernel,
    matrix_solve,
)
from bezKit.src.scalars import QQI, GaussianRational

from helpers import random_fraction


def M(rows):
    return DenseMatrix.from_rows(rows)


def random_matrix(rng, rows, cols, rank=None):
    """Random rational matrix; with ``rank`` set, a product of thin factors."""
    if rank is None:
        return M([[random_fraction(rng) for _ in range(cols)] for _ in range(rows)])
    left = random_matrix(rng, rows, rank)
    right = random_matrix(rng, rank, cols)
    return left * right


def test_rank_kernel_examples():
    assert matrix_rank_kernel(DenseMatrix.identity(3)) == (3, [])
    rank, kernel = matrix_rank_kernel(M([[-1, 1], [1, -1]]))
    assert rank == 1
    assert kernel == [(1, 1)]
    rank, kernel = matrix_rank_kernel(DenseMatrix.zeros(2, 3))
    assert rank == 0 and len(kernel) == 3


def test_det_examples():
    assert matrix_det(M([[-4, 2], [2, -1]])) == 0
    assert matrix_det(DenseMatrix.identity(4)) == 1
    assert matrix_det(M([[1, 2, 3], [1, 2, 3], [0, 1, 5]])) == 0
    assert matrix_det(M([[0, 1], [1, 0]])) == -1
    with pytest.raises(ShapeError):
        matrix_det(DenseMatrix.zeros(2, 3))


def test_det_matches_cofactor_expansion(rng):
    for n in range(1, 7):
        for _ in range(5):
            A = random_matrix(rng, n, n)
            assert matrix_det(A) == det_cofactor(A)


def test_det_over_gaussian_rationals(rng):
    for _ in range(10):
        A = DenseMatrix.from_rows(
            [[GaussianRational(random_fraction(rng), random_fraction(rng)) for _ in range(3)] for _ in range(3)],
            QQI,
        )
        assert matrix_det(A) == det_cofactor(A)


def test_rank_plus_nullity(rng):
    for _ in range(30):
        rows, cols = rng.randint(1, 6), rng.randint(1, 6)
        r = rng.randint(1, min(rows, cols))
        A = random_matrix(rng, rows, cols, rank=r)
        rank, kernel = matrix_rank_kernel(A)
        assert rank + len(kernel) == cols
        assert rank <= r
        for v in kernel:
            assert all(e == 0 for e in A.matvec(v))


def test_rank_is_permutation_invariant(rng):
    for _ in range(10):
        A = random_matrix(rng, 4, 5, rank=2)
        rows = A.to_rows()
        rng.shuffle(rows)
        assert matrix_rank_kernel(M(rows))[0] == matrix_rank_kernel(A)[0]


def test_leading_principal_minors():
    assert leading_principal_minors(M([[2, 0], [0, 3]])) == [2, 6]
    assert leading_principal_minors(M([[1]])) == [1]
    assert leading_principal_minors(M([[0, -3], [-3, 0]])) == [0, -9]


def test_hermitian_minors_are_real():
    H = DenseMatrix.from_rows([[2, GaussianRational(0, 1)], [GaussianRational(0, -1), 3]], QQI)
    assert leading_principal_minors(H, hermitian=True) == [Fraction(2), Fraction(5)]
    not_hermitian = DenseMatrix.from_rows([[1, GaussianRational(0, 1)], [GaussianRational(0, 1), 1]], QQI)
    with pytest.raises(SymmetryError):
        leading_principal_minors(not_hermitian, hermitian=True)


def test_solve_and_inverse(rng):
    for _ in range(20):
        n = rng.randint(1, 5)
        A = random_matrix(rng, n, n)
        if matrix_det(A) == 0:
            continue
        B = random_matrix(rng, n, 2)
        assert A * matrix_solve(A, B) == B
        assert A * matrix_inverse(A) == DenseMatrix.identity(n)


def test_singular_solve_reports_kernel_dimension():
    with pytest.raises(SingularMatrixError) as info:
        matrix_inverse(M([[1, 2, 3], [2, 4, 6], [3, 6, 9]]))
    assert info.value.dim_ker == 2
