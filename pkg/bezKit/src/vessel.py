"""
Finite-dimensional operator nodes and commutative vessels on complex floats.

Conventions used throughout (Kronecker order is Bezout matrix (x) sigma):
    node         Phi* sigma Phi = (1/i)(A - A*)
    colligation  Phi* sigma_k Phi = (1/i)(A_k - A_k*),  k = 1, 2
    input        gamma_in Phi  = sigma_1 Phi A_2* - sigma_2 Phi A_1*
    output       gamma_out Phi = sigma_1 Phi A_2  - sigma_2 Phi A_1
    linkage      gamma_out = gamma_in + i(sigma_1 Phi Phi* sigma_2 - sigma_2 Phi Phi* sigma_1)
"""

import logging
from dataclasses import dataclass, fields

import numpy as np
import scipy.linalg

from .bezout import bezout_matrix
from .errors import DomainError, InvertibilityError, ShapeError, SymmetryError
from .implicit import RationalTriple, implicitize
from .polynomial import degree_or_zero
from .scalars import QQI

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-10
HERMITIAN_TOL = 1e-12
COND_LIMIT = 1e12


def _as_matrix(value, name):
    arr = np.atleast_2d(np.asarray(value, dtype=np.complex128))
    if arr.ndim != 2:
        raise ShapeError(f"{name} must be a matrix, got shape {arr.shape}")
    return arr


def _max_abs(M):
    return float(np.max(np.abs(M))) if M.size else 0.0


def to_array(M):
    """Embed a DenseMatrix into a complex numpy array."""
    return np.array(
        [[M.field.to_complex(e) for e in row] for row in M.to_rows()],
        dtype=np.complex128,
    ).reshape(M.rows, M.cols)


def poly_at_matrix(p, A):
    """p(A) by Horner's scheme."""
    n = A.shape[0]
    out = np.zeros((n, n), dtype=np.complex128)
    eye = np.eye(n, dtype=np.complex128)
    for c in reversed(p.coeffs):
        out = out @ A + p.field.to_complex(c) * eye
    return out


@dataclass(frozen=True)
class OperatorNode:
    A: np.ndarray
    Phi: np.ndarray
    sigma: np.ndarray

    def __post_init__(self):
        A = _as_matrix(self.A, "A")
        Phi = _as_matrix(self.Phi, "Phi")
        sigma = _as_matrix(self.sigma, "sigma")
        h, e = A.shape[0], sigma.shape[0]
        if A.shape != (h, h) or sigma.shape != (e, e) or Phi.shape != (e, h):
            raise ShapeError(
                f"node shapes A {A.shape}, Phi {Phi.shape}, sigma {sigma.shape} are incompatible"
            )
        if _max_abs(sigma - sigma.conj().T) > HERMITIAN_TOL:
            raise SymmetryError("sigma is not Hermitian")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "Phi", Phi)
        object.__setattr__(self, "sigma", sigma)

    @property
    def inner_dim(self):
        return self.A.shape[0]

    @property
    def outer_dim(self):
        return self.sigma.shape[0]


@dataclass(frozen=True)
class CommutativeVessel:
    A1: np.ndarray
    A2: np.ndarray
    Phi: np.ndarray
    sigma1: np.ndarray
    sigma2: np.ndarray
    gamma_in: np.ndarray
    gamma_out: np.ndarray

    def __post_init__(self):
        for f in fields(self):
            object.__setattr__(self, f.name, _as_matrix(getattr(self, f.name), f.name))
        h = self.A1.shape[0]
        E = self.sigma1.shape[0]
        square_h = (self.A1, self.A2)
        square_e = (self.sigma1, self.sigma2, self.gamma_in, self.gamma_out)
        if (
            any(M.shape != (h, h) for M in square_h)
            or any(M.shape != (E, E) for M in square_e)
            or self.Phi.shape != (E, h)
        ):
            raise ShapeError("vessel matrices have incompatible shapes")


@dataclass(frozen=True)
class VesselResiduals:
    colligation_1: float
    colligation_2: float
    input_gamma: float
    output_gamma: float
    linkage: float
    commutativity: float

    def is_vessel(self, tol=DEFAULT_TOL):
        return all(getattr(self, f.name) <= tol for f in fields(self))

    def as_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}


def node_residual(c):
    """Max-entry magnitude of Phi* sigma Phi - (1/i)(A - A*)."""
    lhs = c.Phi.conj().T @ c.sigma @ c.Phi
    rhs = (c.A - c.A.conj().T) / 1j
    return _max_abs(lhs - rhs)


def vessel_residuals(v):
    Phi, PhiH = v.Phi, v.Phi.conj().T
    s1, s2 = v.sigma1, v.sigma2
    A1H, A2H = v.A1.conj().T, v.A2.conj().T
    linkage_rhs = v.gamma_in + 1j * (s1 @ Phi @ PhiH @ s2 - s2 @ Phi @ PhiH @ s1)
    return VesselResiduals(
        colligation_1=_max_abs(PhiH @ s1 @ Phi - (v.A1 - A1H) / 1j),
        colligation_2=_max_abs(PhiH @ s2 @ Phi - (v.A2 - A2H) / 1j),
        input_gamma=_max_abs(v.gamma_in @ Phi - (s1 @ Phi @ A2H - s2 @ Phi @ A1H)),
        output_gamma=_max_abs(v.gamma_out @ Phi - (s1 @ Phi @ v.A2 - s2 @ Phi @ v.A1)),
        linkage=_max_abs(v.gamma_out - linkage_rhs),
        commutativity=_max_abs(v.A1 @ v.A2 - v.A2 @ v.A1),
    )


def _size(p0, p1, p2, n):
    need = max(degree_or_zero(p) for p in (p0, p1, p2))
    n = max(need, 1) if n is None else n
    if n < need:
        raise ShapeError(f"size {n} is below the maximal degree {need}")
    return n


def _invert_p0(p0, A):
    P0 = poly_at_matrix(p0, A)
    cond = np.linalg.cond(P0) if P0.size else 1.0
    logger.debug("[vessel] condition number of p0(A): %.3e", cond)
    if not np.isfinite(cond) or cond > COND_LIMIT:
        raise InvertibilityError(f"p0(A) is numerically singular (condition {cond:.3e})")
    return P0


def vessel_from_node(c, p0, p1, p2, phi_prime, n=None):
    """Commutative vessel generated by a node and a polynomial triple.

    A_k = p_k(A) p0(A)^-1, sigma_1 = B(p1, p0) (x) sigma,
    sigma_2 = B(p2, p0) (x) sigma, gamma_in = B(p1, p2) (x) sigma and
    gamma_out from the linkage identity with Phi = phi_prime (e*n x h).
    The collection is returned unchecked; see vessel_residuals.
    """
    n = _size(p0, p1, p2, n)
    P0 = _invert_p0(p0, c.A)
    A1 = scipy.linalg.solve(P0, poly_at_matrix(p1, c.A))
    A2 = scipy.linalg.solve(P0, poly_at_matrix(p2, c.A))

    Phi = _as_matrix(phi_prime, "phi_prime")
    if Phi.shape != (c.outer_dim * n, c.inner_dim):
        raise ShapeError(
            f"phi_prime has shape {Phi.shape}, expected {(c.outer_dim * n, c.inner_dim)}"
        )
    s1 = np.kron(to_array(bezout_matrix(p1, p0, n).matrix), c.sigma)
    s2 = np.kron(to_array(bezout_matrix(p2, p0, n).matrix), c.sigma)
    g_in = np.kron(to_array(bezout_matrix(p1, p2, n).matrix), c.sigma)
    PhiH = Phi.conj().T
    g_out = g_in + 1j * (s1 @ Phi @ PhiH @ s2 - s2 @ Phi @ PhiH @ s1)
    return CommutativeVessel(A1, A2, Phi, s1, s2, g_in, g_out)


def stacked_phi_prime(c, p0, n):
    """Blocks Phi (A*)^j p0(A*)^-1 for j = 0..n-1, stacked vertically.

    Together with vessel_from_node this yields a vessel whenever p0, p1, p2
    have real coefficients.
    """
    if p0.field is QQI and not all(x.is_real for x in p0.coeffs):
        raise DomainError("stacked phi_prime needs a real-coefficient p0")
    AH = c.A.conj().T
    P0H = _invert_p0(p0, AH)
    inv = scipy.linalg.inv(P0H)
    blocks = []
    power = np.eye(c.inner_dim, dtype=np.complex128)
    for _ in range(n):
        blocks.append(c.Phi @ power @ inv)
        power = power @ AH
    return np.vstack(blocks)


def vessel_discriminant(p0, p1, p2, n=None, workers=None):
    """Base determinant Delta of the vessel pencil gamma_in + x1 sigma_2 - x2 sigma_1.

    Identical to the implicit equation of the triple.
    """
    return implicitize(RationalTriple.of(p0, p1, p2, n), workers=workers)


def discriminant_exponent(c):
    """Exponent m with det(pencil (x) sigma) = Delta^m det(sigma)^n, namely dim E."""
    return c.outer_dim
