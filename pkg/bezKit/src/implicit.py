"""
Determinantal implicitization of rational plane curves and the boundary of
polynomial quadrature domains.

The image of t -> (p1(t)/p0(t), p2(t)/p0(t)) is the zero set of
    Delta(x1, x2) = det(B(p1, p2) + x1 B(p2, p0) + x2 B(p0, p1)).
Delta is recovered exactly by evaluating the scalar determinant on the grid
{0, ..., n}^2 and solving the tensor-product interpolation system.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .bezout import BezoutMatrix, bezout_matrix
from .bivariate import BivariatePolynomial
from .errors import (
    ArithmeticInvariantError,
    DegenerateTripleError,
    DegreeError,
    DomainError,
    ShapeError,
    SingularMatrixError,
)
from .matrix import DenseMatrix, matrix_det, matrix_solve
from .polynomial import MINUS_INFINITY, Polynomial, degree_or_zero
from .scalars import QQ, QQI, GaussianRational, require_exact, require_same_field

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RationalTriple:
    p0: Polynomial
    p1: Polynomial
    p2: Polynomial
    n: int

    @classmethod
    def of(cls, p0, p1, p2, n=None):
        field = require_exact(require_same_field(p0.field, p1.field, p2.field))
        if p0.is_zero and p1.is_zero and p2.is_zero:
            raise DegenerateTripleError("all three polynomials are zero")
        need = max(degree_or_zero(p) for p in (p0, p1, p2))
        n = need if n is None else n
        if n < max(need, 1):
            raise DegreeError(f"triple of maximal degree {need} cannot use size {n}")
        logger.debug("[RationalTriple] field %s size %d", field.name, n)
        return cls(p0, p1, p2, n)

    @property
    def field(self):
        return self.p0.field

    def point(self, t):
        """Exact image point (p1(t)/p0(t), p2(t)/p0(t))."""
        d = self.p0(t)
        if d == 0:
            raise DomainError(f"p0 vanishes at t = {t}")
        return self.p1(t) / d, self.p2(t) / d


@dataclass(frozen=True)
class PencilDeterminant:
    B_const: BezoutMatrix
    B_x1: BezoutMatrix
    B_x2: BezoutMatrix
    delta: BivariatePolynomial


def pencil_det(B_const, B_x1, B_x2, n=None, workers=None):
    """Exact det(B_const + x1 B_x1 + x2 B_x2) as a bivariate polynomial.

    Args:
        B_const, B_x1, B_x2 (DenseMatrix): n x n over one exact field.
        n (int): size; defaults to B_const.rows.
        workers (int): evaluate grid determinants on a thread pool.
    """
    field = require_exact(require_same_field(B_const.field, B_x1.field, B_x2.field))
    n = B_const.rows if n is None else n
    for M in (B_const, B_x1, B_x2):
        if M.shape != (n, n):
            raise ShapeError(f"pencil matrix of shape {M.shape}, expected {n}x{n}")

    grid = [(a, b) for a in range(n + 1) for b in range(n + 1)]

    def evaluate(ab):
        a, b = ab
        return matrix_det(B_const + B_x1.scale(a) + B_x2.scale(b))

    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(evaluate, grid))
    else:
        values = [evaluate(ab) for ab in grid]

    # values[a][b] = sum_ij c_ij a^i b^j, i.e. Vals = V C V^T
    V = DenseMatrix.from_rows([[a**i for i in range(n + 1)] for a in range(n + 1)], field)
    vals = DenseMatrix(n + 1, n + 1, values, field)
    try:
        Y = matrix_solve(V, vals)
        C = matrix_solve(V, Y.transpose()).transpose()
    except SingularMatrixError as exc:
        raise ArithmeticInvariantError("interpolation grid produced a singular system") from exc
    return BivariatePolynomial(C.to_rows(), field)


def determinantal_pencil(triple, workers=None):
    """The three Bezout matrices of the triple and their raw determinant."""
    n = triple.n
    B_const = bezout_matrix(triple.p1, triple.p2, n)
    B_x1 = bezout_matrix(triple.p2, triple.p0, n)
    B_x2 = bezout_matrix(triple.p0, triple.p1, n)
    delta = pencil_det(B_const.matrix, B_x1.matrix, B_x2.matrix, n, workers=workers)
    return PencilDeterminant(B_const, B_x1, B_x2, delta)


def implicitize(triple, normalize=True, workers=None):
    """Implicit equation of the image curve of ``triple``.

    With ``normalize`` the result has primitive integer content and a
    positive lexicographically-first coefficient.
    """
    delta = determinantal_pencil(triple, workers=workers).delta
    if delta.is_zero:
        logger.warning("[implicitize] pencil determinant vanishes identically")
        raise DegenerateTripleError("pencil determinant is identically zero")
    if delta.total_degree > triple.n:
        raise ArithmeticInvariantError(
            f"[implicitize] total degree {delta.total_degree} exceeds size {triple.n}"
        )
    return delta.normalized() if normalize else delta


def reciprocal_conjugate_triple(q):
    """(z^m, z^m q(z), sum_k conj(a_k) z^(m-k)) for q = sum_k a_k z^k of degree m.

    Then q = p1/p0 and conj(q(1/conj z)) = p2/p0; all three are sized 2m.
    """
    if q.field is QQ:
        q = q.to_field(QQI)
    require_same_field(q.field, QQI)
    m = q.degree
    if m is MINUS_INFINITY or m < 1:
        raise DegreeError(f"quadrature map needs degree >= 1, got {m}")
    zm = Polynomial.monomial(m, 1, QQI)
    p2 = Polynomial([QQI.conj(q.coeff(m - j)) for j in range(m + 1)], QQI)
    return RationalTriple.of(zm, zm * q, p2, 2 * m)


def quadrature_boundary(q, workers=None):
    """Boundary polynomial Delta(z, conj z) of the image of the unit disk under q.

    Monomial factors z^a conj(z)^b introduced by the common sizing are
    divided out before normalization.
    """
    triple = reciprocal_conjugate_triple(q)
    delta = determinantal_pencil(triple, workers=workers).delta
    if delta.is_zero:
        raise DegenerateTripleError("quadrature pencil determinant is identically zero")
    a, b = delta.monomial_factor()
    if a or b:
        logger.info("[quadrature_boundary] removing monomial factor z^%d zbar^%d", a, b)
        delta = delta.divide_monomial(a, b)
    return delta.normalized()


def circle_point(t):
    """Exact unimodular point (1 - t^2 + 2it) / (1 + t^2) for rational t."""
    den = 1 + t * t
    return GaussianRational((1 - t * t) / den, 2 * t / den)


def _real_coeffs(p):
    if p.field is QQI and not all(c.is_real for c in p.coeffs):
        raise DomainError("curve sampling needs real coefficients")
    return np.array([float(p.field.to_complex(c).real) for c in p.coeffs] or [0.0])


def sample_curve(triple, interval=(-1.0, 1.0), samples=512, pole_tol=1e-12):
    """Float samples (t, x1, x2) of the parametrization on a uniform grid.

    Parameters where |p0(t)| <= pole_tol are skipped.
    """
    ts = np.linspace(float(interval[0]), float(interval[1]), int(samples))
    polys = [_real_coeffs(p) for p in (triple.p0, triple.p1, triple.p2)]
    v0, v1, v2 = (np.polynomial.polynomial.polyval(ts, c) for c in polys)
    keep = np.abs(v0) > pole_tol
    if not keep.all():
        logger.info("[sample_curve] skipped %d samples at poles of p0", int((~keep).sum()))
    return ts[keep], v1[keep] / v0[keep], v2[keep] / v0[keep]


def sample_boundary(q, samples=512):
    """Float samples (theta, Re q(e^{i theta}), Im q(e^{i theta}))."""
    theta = np.linspace(0.0, 2.0 * np.pi, int(samples), endpoint=False)
    coeffs = np.array([q.field.to_complex(c) for c in q.coeffs], dtype=np.complex128)
    z = np.polynomial.polynomial.polyval(np.exp(1j * theta), coeffs)
    return theta, z.real, z.imag
