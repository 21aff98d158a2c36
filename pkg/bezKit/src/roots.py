"""
Simultaneous-iteration (Aberth) root finder on complex floats.

Roots are only consumed by oracles (the Hankel root-sum formula, the braid
intersection search), never by the exact paths.
"""

import logging

import numpy as np

from .errors import ConvergenceError, DegreeError
from .polynomial import MINUS_INFINITY

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 1000
POLISH_STEPS = 2
EPS = np.finfo(float).eps


def _aberth_step(z, desc, ddesc, it):
    pv = np.polyval(desc, z)
    dpv = np.polyval(ddesc, z)
    diff = z[:, None] - z[None, :]
    np.fill_diagonal(diff, 1.0)
    inv = 1.0 / diff
    np.fill_diagonal(inv, 0.0)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        ratio = pv / dpv
        w = ratio / (1.0 - ratio * inv.sum(axis=1))
    bad = ~np.isfinite(w)
    if bad.any():
        # kick stalled estimates off critical points and collisions
        w[bad] = 1e-3 * (1.0 + np.abs(z[bad])) * np.exp(1j * it)
    return z - w


def poly_roots(p, tol=DEFAULT_TOL, max_iter=DEFAULT_MAX_ITER):
    """All complex roots of p, with multiplicity.

    Args:
        p (Polynomial): degree >= 1, any scalar field.
        tol (float): every returned root r satisfies
            |p(r)| <= tol * (1 + ||coeffs||_2), or sits within the rounding
            floor of evaluating p at r when that is larger.
        max_iter (int): iteration cap before ConvergenceError.
    Returns:
        list[complex]: deg p roots, sorted by (real, imag).
    """
    deg = p.degree
    if deg is MINUS_INFINITY or deg < 1:
        raise DegreeError(f"root finding needs degree >= 1, got {deg}")
    coeffs = np.array([p.field.to_complex(c) for c in p.coeffs], dtype=np.complex128)
    orig_desc = coeffs[::-1]
    desc = orig_desc / orig_desc[0]
    ddesc = np.polyder(desc)
    bound = tol * (1.0 + np.linalg.norm(coeffs))

    if deg == 1:
        return [complex(-desc[1])]

    radius = 1.0 + np.max(np.abs(desc[1:]))
    angles = 2.0 * np.pi * np.arange(deg) / deg + 0.4
    z = radius * np.exp(1j * angles)

    abs_desc = np.abs(orig_desc)
    polish = None
    residuals = np.abs(np.polyval(orig_desc, z))
    for it in range(1, max_iter + 1):
        z = _aberth_step(z, desc, ddesc, it)
        residuals = np.abs(np.polyval(orig_desc, z))
        # rounding floor of Horner evaluation at large |z|
        floor = 16.0 * EPS * np.polyval(abs_desc, np.abs(z))
        if polish is None and np.all(residuals <= np.maximum(bound, floor)):
            polish = POLISH_STEPS
        if polish is not None:
            if polish == 0:
                break
            polish -= 1
    else:
        if not np.all(residuals <= np.maximum(bound, floor)):
            raise ConvergenceError(
                f"[poly_roots] no convergence after {max_iter} iterations "
                f"(max residual {residuals.max():.3e}, bound {bound:.3e})",
                residuals=residuals.tolist(),
            )
    by_floor = int(np.count_nonzero(residuals > bound))
    if by_floor:
        logger.debug(
            "[poly_roots] %d root(s) accepted by the rounding floor (max residual %.3e, bound %.3e)",
            by_floor, residuals.max(), bound,
        )
    logger.debug("[poly_roots] degree %d converged in %d iterations", deg, it)
    return sorted((complex(r) for r in z), key=lambda r: (round(r.real, 12), round(r.imag, 12)))
