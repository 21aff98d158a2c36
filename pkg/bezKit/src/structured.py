"""
Inverses of Bezout matrices, their Hankel structure and the Hermite
upper-half-plane test.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .bezout import bezout_matrix
from .errors import (
    ArithmeticInvariantError,
    CommonZeroError,
    DegreeError,
    HankelStructureError,
    MultipleZeroError,
    ShapeError,
    SymmetryError,
)
from .matrix import DenseMatrix, leading_principal_minors, matrix_inverse
from .polynomial import MINUS_INFINITY, poly_conjugate, poly_gcd
from .roots import DEFAULT_TOL, poly_roots
from .scalars import CC, QQ, QQI, GaussianRational

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HankelMatrix:
    """n x n matrix with entry (i, j) = generator[i + j] (0-based)."""

    n: int
    generator: tuple
    field: object = QQ

    def __post_init__(self):
        if len(self.generator) != 2 * self.n - 1:
            raise ShapeError(f"a {self.n}x{self.n} Hankel matrix needs {2 * self.n - 1} generators")

    def entry(self, i, j):
        return self.generator[i + j]

    def to_dense(self):
        return DenseMatrix(
            self.n, self.n,
            [self.generator[i + j] for i in range(self.n) for j in range(self.n)],
            self.field,
        )

    @classmethod
    def from_dense(cls, M):
        gen = hankel_generator(M)
        if gen is None:
            raise SymmetryError("matrix is not constant along its anti-diagonals")
        return cls(M.rows, gen, M.field)


def hankel_generator(M):
    """Anti-diagonal values of M, or None when M is not Hankel."""
    if not M.is_square:
        return None
    n = M.rows
    gen = [None] * (2 * n - 1)
    for i in range(n):
        for j in range(n):
            v = M[i, j]
            if gen[i + j] is None:
                gen[i + j] = v
            elif gen[i + j] != v:
                return None
    return tuple(gen)


def bezout_inverse(p, q):
    """Exact B(p, q)^-1 in generator form.

    Raises SingularMatrixError (carrying dim ker) when gcd(p, q) != 1.
    """
    B = bezout_matrix(p, q).matrix
    inv = matrix_inverse(B)
    gen = hankel_generator(inv)
    if gen is None:
        raise HankelStructureError(f"[bezout_inverse] inverse of B(p, q) is not Hankel: {inv!r}")
    logger.debug("[bezout_inverse] size %d inverse generator %s", B.rows, [str(g) for g in gen])
    return HankelMatrix(B.rows, gen, B.field)


def hankel_from_roots(p, q, tol=DEFAULT_TOL):
    """Complex-float Hankel matrix from the root sums
    h_s = sum_k x_k^s / (q(x_k) p'(x_k)), x_k the zeros of p."""
    n = p.degree
    if n is MINUS_INFINITY or n < 1 or q.degree != n:
        raise DegreeError(f"root formula needs deg p = deg q >= 1, got {p.degree} and {q.degree}")
    dp = p.derivative()
    if poly_gcd(p, dp).degree >= 1:
        raise MultipleZeroError("p has a multiple zero")
    if poly_gcd(p, q).degree >= 1:
        raise CommonZeroError("p and q share a zero")
    roots = poly_roots(p, tol=tol)
    weights = [1.0 / (q.evaluate_float(r) * dp.evaluate_float(r)) for r in roots]
    gen = tuple(
        complex(sum(w * r**s for w, r in zip(weights, roots)))
        for s in range(2 * n - 1)
    )
    return HankelMatrix(n, gen, CC)


def hankel_deviation(approx, exact):
    """Max entrywise |approx - exact| after embedding exact values into floats."""
    if approx.n != exact.n:
        raise ShapeError(f"Hankel sizes {approx.n} and {exact.n} differ")
    return max(
        abs(complex(a) - exact.field.to_complex(b))
        for a, b in zip(approx.generator, exact.generator)
    )


class RootLocation(str, Enum):
    ALL_UPPER = "ALL_UPPER"
    NOT_ALL_UPPER = "NOT_ALL_UPPER"
    BOUNDARY = "BOUNDARY"


@dataclass(frozen=True)
class HermiteResult:
    verdict: RootLocation
    minors: tuple
    matrix: DenseMatrix


_INV_2I = GaussianRational(0, Fraction(-1, 2))


def hermite_upper_halfplane(p):
    """Decide whether every zero of p lies in the open upper half-plane.

    M = (1/2i) B(p, conj p) is Hermitian; all zeros are in the upper
    half-plane iff M is positive definite (all leading minors > 0).
    det M = 0 exactly when p and conj p share a zero, i.e. p has a real
    zero or a conjugate pair, and is reported as BOUNDARY.
    """
    if p.field is QQ:
        p = p.to_field(QQI)
    if p.degree is MINUS_INFINITY or p.degree < 1:
        raise DegreeError(f"Hermite test needs degree >= 1, got {p.degree}")
    M = bezout_matrix(p, poly_conjugate(p)).matrix.scale(_INV_2I)
    if M != M.conjugate_transpose():
        raise ArithmeticInvariantError("(1/2i) B(p, conj p) is not Hermitian")
    minors = tuple(leading_principal_minors(M, hermitian=True))
    if minors[-1] == 0:
        verdict = RootLocation.BOUNDARY
    elif all(m > 0 for m in minors):
        verdict = RootLocation.ALL_UPPER
    else:
        verdict = RootLocation.NOT_ALL_UPPER
    logger.info("[hermite] degree %d minors %s -> %s", p.degree, [str(m) for m in minors], verdict.value)
    return HermiteResult(verdict, minors, M)
