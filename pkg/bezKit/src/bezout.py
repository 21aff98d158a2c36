"""
Bezout matrices of polynomial pairs, Vandermonde vectors of every order,
the bilinear identity suite and kernel-based common-zero counting.

Matrix index 1..n of the classical formulas is exponent 0..n-1 here: entry
(i, j) of B(p, q) is the coefficient of x^i y^j in the Cayley quotient
(p(x)q(y) - q(x)p(y)) / (x - y).
"""

import logging
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import perm

from tqdm import tqdm

from .bivariate import BivariatePolynomial
from .errors import ArithmeticInvariantError, DomainError, SizeError, UndefinedGcdError
from .matrix import DenseMatrix, matrix_rank_kernel
from .polynomial import Polynomial, degree_or_zero
from .scalars import QQ, QQI, GaussianRational, field_of, require_exact, require_same_field

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BezoutMatrix:
    size: int
    matrix: DenseMatrix
    p: Polynomial
    q: Polynomial

    @property
    def field(self):
        return self.matrix.field

    def quotient(self):
        """The Cayley quotient rebuilt from the entries."""
        return BivariatePolynomial(self.matrix.to_rows(), self.field)


@dataclass(frozen=True)
class VandermondeVector:
    length: int
    order: int
    point: object
    entries: tuple

    def as_column(self, field=None):
        return DenseMatrix.column(self.entries, field or field_of(self.point))


def _size_for(p, q, n):
    need = max(degree_or_zero(p), degree_or_zero(q))
    if n is None:
        n = need
    if n < need:
        raise SizeError(f"size {n} is below the maximal degree {need}")
    if n < 1:
        raise SizeError("Bezout matrices need size n >= 1 (both polynomials are constant)")
    return n


def cayley_quotient(p, q, n=None):
    """Exact (p(x)q(y) - q(x)p(y)) / (x - y).

    The numerator is read as a polynomial in x whose coefficients
    c_k(y) = p_k q(y) - q_k p(y) are polynomials in y, then divided by
    (x - y) synthetically: q_{d-1} = c_d, q_{k-1} = c_k + y q_k. The final
    remainder c_0 + y q_0 must vanish.
    """
    field = require_exact(require_same_field(p.field, q.field))
    n = _size_for(p, q, n)
    d = max(degree_or_zero(p), degree_or_zero(q))
    c = [q.scale(p.coeff(k)) - p.scale(q.coeff(k)) for k in range(d + 1)]
    y = Polynomial.x(field)
    rows = [Polynomial.zero(field)] * d
    if d:
        rows[d - 1] = c[d]
        for k in range(d - 1, 0, -1):
            rows[k - 1] = c[k] + y * rows[k]
        remainder = c[0] + y * rows[0]
    else:
        remainder = c[0]
    if not remainder.is_zero:
        raise ArithmeticInvariantError(f"[cayley_quotient] nonzero remainder {remainder}")
    return BivariatePolynomial([r.padded(n) for r in rows], field)


def bezout_matrix(p, q, n=None):
    """B(p, q) of size n (default max(deg p, deg q)).

    Padding beyond the maximal degree inflates the kernel by the excess.
    """
    n = _size_for(p, q, n)
    quot = cayley_quotient(p, q, n)
    entries = [quot.coeff(i, j) for i in range(n) for j in range(n)]
    return BezoutMatrix(n, DenseMatrix(n, n, entries, quot.field), p, q)


def vandermonde(point, n, k=0, field=None):
    """Entry i is d^k/dx^k x^i at ``point``, zero for i < k."""
    if n < 1:
        raise SizeError(f"Vandermonde length must be >= 1, got {n}")
    if k < 0:
        raise ValueError(f"derivative order must be non-negative, got {k}")
    field = field or field_of(point)
    point = field.coerce(point)
    entries = tuple(
        field.coerce(perm(i, k)) * point ** (i - k) if i >= k else field.zero
        for i in range(n)
    )
    return VandermondeVector(n, k, point, entries)


def confluent_vandermonde_rank(points, n=None):
    """Rank of the columns V^j_n(x) for every (x, max_order) and j <= max_order."""
    count = sum(order + 1 for _, order in points)
    n = count if n is None else n
    if count > n:
        raise SizeError(f"{count} Vandermonde vectors requested for length {n}")
    field = field_of(*(x for x, _ in points))
    cols = [vandermonde(x, n, j, field).entries for x, order in points for j in range(order + 1)]
    M = DenseMatrix.from_rows([[col[i] for col in cols] for i in range(n)], field)
    rank, _ = matrix_rank_kernel(M)
    return rank


def common_zero_count(p, q):
    """Number of common zeros of p and q counted with multiplicity.

    Computed as dim ker B(p, q) at the default size, which equals
    deg gcd(p, q).
    """
    if p.is_zero and q.is_zero:
        raise UndefinedGcdError("common zeros of two zero polynomials are undefined")
    n = max(degree_or_zero(p), degree_or_zero(q))
    if n == 0:
        return 0
    B = bezout_matrix(p, q, n)
    rank, _ = matrix_rank_kernel(B.matrix)
    logger.debug("[common_zero_count] size %d rank %d", n, rank)
    return n - rank


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    x: object
    y: object
    lhs: object
    rhs: object

    @property
    def passed(self):
        return self.lhs == self.rhs


@dataclass
class IdentityReport:
    checks: list = dc_field(default_factory=list)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def summary(self):
        """Per identity name: (passed count, total count)."""
        out = {}
        for c in self.checks:
            ok, total = out.get(c.name, (0, 0))
            out[c.name] = (ok + int(c.passed), total + 1)
        return out


IDENTITY_NAMES = ("quotient", "decomposition", "diagonal", "weighted")


def _bilinear(u, M, v):
    return sum((a * b for a, b in zip(u, M.matvec(v))), M.field.zero)


def identity_suite(p, q, points, w=None, n=None, progress=False):
    """Evaluate the four bilinear identities of B(p, q) at exact sample pairs.

    For every (x, y) in ``points``:
      quotient       V(x)^T B V(y) = (p(x)q(y) - q(x)p(y)) / (x - y)
      decomposition  V(x)^T B V(y) = V(x)^T (B(p,1)q(y) - B(q,1)p(y)) V(y)
      diagonal       V(x)^T B V(x) = q(x)p'(x) - p(x)q'(x)
      weighted       w^T B V(y)    = w^T (B(p,1)q(y) - B(q,1)p(y)) V(y)
    w defaults to (1, 2, ..., n).
    """
    field = require_exact(require_same_field(p.field, q.field))
    n = _size_for(p, q, n)
    one = Polynomial.constant(1, field)
    B = bezout_matrix(p, q, n).matrix
    Bp1 = bezout_matrix(p, one, n).matrix
    Bq1 = bezout_matrix(q, one, n).matrix
    w = tuple(field.coerce(v) for v in (w if w is not None else range(1, n + 1)))
    if len(w) != n:
        raise SizeError(f"vector w has length {len(w)}, expected {n}")
    dp, dq = p.derivative(), q.derivative()

    report = IdentityReport()
    for x, y in tqdm(points, desc="identities", disable=not progress):
        x, y = field.coerce(x), field.coerce(y)
        if x == y:
            raise DomainError("the quotient identity needs x != y; the diagonal identity covers x = y")
        Vx = vandermonde(x, n, 0, field).entries
        Vy = vandermonde(y, n, 0, field).entries
        split = Bp1.scale(q(y)) - Bq1.scale(p(y))
        lhs = _bilinear(Vx, B, Vy)
        report.checks.append(
            IdentityCheck("quotient", x, y, lhs, (p(x) * q(y) - q(x) * p(y)) / (x - y))
        )
        report.checks.append(IdentityCheck("decomposition", x, y, lhs, _bilinear(Vx, split, Vy)))
        report.checks.append(
            IdentityCheck("diagonal", x, x, _bilinear(Vx, B, Vx), q(x) * dp(x) - p(x) * dq(x))
        )
        report.checks.append(
            IdentityCheck("weighted", None, y, _bilinear(w, B, Vy), _bilinear(w, split, Vy))
        )
    failed = [c for c in report.checks if not c.passed]
    if failed:
        logger.warning("[identity_suite] %d of %d checks failed", len(failed), len(report.checks))
    return report


def random_sample_points(rng, count, field=QQ, bound=20):
    """``count`` exact pairs (x, y) with x != y drawn from ``rng``."""
    def part():
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

    def draw():
        return GaussianRational(part(), part()) if field is QQI else part()

    pairs = []
    while len(pairs) < count:
        x, y = draw(), draw()
        if x != y:
            pairs.append((x, y))
    return pairs
