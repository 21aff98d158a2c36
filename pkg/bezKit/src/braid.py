"""
Degree-2 rational images of two intersecting lines.

The lines are the coordinate axes (see ``map_to_axes`` for arbitrary lines).
Along each axis the map restricts to a univariate rational curve
t -> (r1(t), r2(t)); the D/E recursion takes iterated derivatives of r2 with
respect to r1, D_1 = r2'/r1', D_k = D_{k-1}'/r1'. Two axis points with a
common image separate at the first index where their D and E values differ.
"""

import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .bivariate import BivariatePolynomial
from .errors import (
    DegenerateMapError,
    DegenerateProjectionError,
    DegenerateTripleError,
    DegreeError,
    DomainError,
    FieldMismatchError,
    NotAnIntersectionError,
    OracleInapplicableError,
)
from .implicit import RationalTriple, implicitize
from .polynomial import MINUS_INFINITY, Polynomial
from .ratfun import RationalFunction
from .roots import poly_roots
from .scalars import QQ, QQI, GaussianRational, field_of
from .series import PowerSeries

logger = logging.getLogger(__name__)

DEFAULT_DEPTH = 8
DEFAULT_TOL = 1e-9
SNAP_DENOMINATOR = 10**6
MATCH_TOL = 1e-7


class Axis(str, Enum):
    X_AXIS = "X_AXIS"
    Y_AXIS = "Y_AXIS"


class Divergence(str, Enum):
    DIVERGES = "diverges"


DIVERGES = Divergence.DIVERGES


@dataclass(frozen=True)
class PlaneRationalMap:
    p0: BivariatePolynomial
    p1: BivariatePolynomial
    p2: BivariatePolynomial

    def __post_init__(self):
        for name in ("p0", "p1", "p2"):
            p = getattr(self, name)
            if p.field is not QQ:
                raise FieldMismatchError(f"{name} must have rational coefficients")
            if p.total_degree is not MINUS_INFINITY and p.total_degree > 2:
                raise DegreeError(f"{name} has total degree {p.total_degree} > 2")

    @classmethod
    def from_grids(cls, g0, g1, g2):
        return cls(*(BivariatePolynomial(g, QQ) for g in (g0, g1, g2)))

    def restriction(self, axis):
        """(p0, p1, p2) along the axis as univariate polynomials in its parameter."""
        if axis is Axis.X_AXIS:
            return tuple(p.restrict_x(0) for p in (self.p0, self.p1, self.p2))
        return tuple(p.restrict_y(0) for p in (self.p0, self.p1, self.p2))

    def branch(self, axis):
        """(r1, r2) along the axis."""
        q0, q1, q2 = self.restriction(axis)
        if q0.is_zero:
            raise DegenerateProjectionError(f"p0 vanishes identically on {axis.value}")
        return RationalFunction(q1, q0), RationalFunction(q2, q0)

    def swapped(self):
        """The map with x and y exchanged."""
        return PlaneRationalMap(self.p0.transpose(), self.p1.transpose(), self.p2.transpose())


@dataclass(frozen=True)
class BranchSequence:
    axis: Axis
    functions: tuple


@dataclass(frozen=True)
class IntersectionReport:
    point: tuple
    preimage: tuple
    is_real: bool
    minimal_index_i: object
    paper_multiplicity: object
    twist_count: object

    def as_dict(self):
        x1, x2 = self.point
        diverges = self.minimal_index_i is DIVERGES
        return {
            "image": [x1.real, x1.imag, x2.real, x2.imag],
            "real": self.is_real,
            "min_index": DIVERGES.value if diverges else self.minimal_index_i,
            "paper_multiplicity": None if diverges else self.paper_multiplicity,
            "full_twists": None if diverges else self.twist_count,
        }


@dataclass(frozen=True)
class MonodromyDescriptor:
    points: tuple

    def multiset(self):
        """Counter of (is_real, twist count or DIVERGES)."""
        return Counter(
            (r.is_real, DIVERGES if r.minimal_index_i is DIVERGES else r.twist_count)
            for r in self.points
        )

    def as_dict(self):
        return {"points": [r.as_dict() for r in self.points]}


def de_sequence(m, axis, depth=DEFAULT_DEPTH):
    """D_1..D_depth along the X axis or E_1..E_depth along the Y axis."""
    r1, r2 = m.branch(axis)
    dr1 = r1.derivative()
    if dr1.is_zero:
        raise DegenerateProjectionError(f"r1 is constant along {axis.value}")
    funcs = [r2.derivative() / dr1]
    while len(funcs) < depth:
        funcs.append(funcs[-1].derivative() / dr1)
    return BranchSequence(axis, tuple(funcs))


def _is_exact(v):
    return isinstance(v, (int, Fraction, GaussianRational))


def _value(f, t):
    return f(t) if _is_exact(t) else f.evaluate_float(complex(t))


def _differ(a, b, tol):
    if _is_exact(a) and _is_exact(b):
        return a != b
    a, b = complex(a), complex(b)
    return abs(a - b) > tol * (1.0 + max(abs(a), abs(b)))


def _image(m, axis, t, tol):
    """Image point of parameter t on the axis; p0 must not vanish there."""
    q0 = m.restriction(axis)[0]
    r1, r2 = m.branch(axis)
    if _is_exact(t):
        if q0(t) == 0:
            raise DomainError(f"p0 vanishes at parameter {t} on {axis.value}")
    elif abs(q0.evaluate_float(complex(t))) <= tol:
        raise DomainError(f"p0 vanishes at parameter {t} on {axis.value}")
    return _value(r1, t), _value(r2, t)


def multiplicity_index(m, preimage, depth_cap=DEFAULT_DEPTH, tol=DEFAULT_TOL):
    """Separation index of the axis branches through (x0, 0) and (0, y0).

    Exact arithmetic is used when both parameters are exact, tolerance
    ``tol`` otherwise. The intersection multiplicity is reported as i + 1.
    """
    x0, y0 = preimage
    px = _image(m, Axis.X_AXIS, x0, tol)
    py = _image(m, Axis.Y_AXIS, y0, tol)
    if any(_differ(a, b, tol) for a, b in zip(px, py)):
        raise NotAnIntersectionError(f"({x0}, 0) and (0, {y0}) have different images")
    D = de_sequence(m, Axis.X_AXIS, depth_cap).functions
    E = de_sequence(m, Axis.Y_AXIS, depth_cap).functions
    index = DIVERGES
    for i, (d, e) in enumerate(zip(D, E), start=1):
        try:
            separated = _differ(_value(d, x0), _value(e, y0), tol)
        except DomainError as exc:
            raise DegenerateProjectionError(f"D/E sequence has a pole at index {i}") from exc
        if separated:
            index = i
            break

    point = tuple(complex(v) for v in px)
    if all(map(_is_exact, px)):
        is_real = all(not isinstance(v, GaussianRational) or v.is_real for v in px)
    else:
        is_real = all(abs(v.imag) <= tol for v in point)
    logger.debug("[multiplicity_index] preimage %s -> index %s", preimage, index)
    if index is DIVERGES:
        return IntersectionReport(point, preimage, is_real, DIVERGES, None, None)
    return IntersectionReport(point, preimage, is_real, index, index + 1, index + 1)


def _branch_series(m, axis, t0, order, field):
    """The axis branch around parameter t0 as a series x2 = f(x1 - x1(t0))."""
    q0, q1, q2 = (q.to_field(field).shift(t0) for q in m.restriction(axis))
    u = PowerSeries.from_rational(q1, q0, order)
    v = PowerSeries.from_rational(q2, q0, order)
    u = u - PowerSeries([u.coeff(0)], order, field)
    if field.is_zero(u.coeff(1)):
        raise OracleInapplicableError(f"r1 has a critical point at {t0} on {axis.value}")
    return v.compose(u.reversion())


def branch_contact_order(m, preimage, depth_cap=DEFAULT_DEPTH):
    """Order of contact of the two branches as graphs over x1.

    Returns depth_cap + 1 when the series agree through order depth_cap.
    """
    x0, y0 = preimage
    if not (_is_exact(x0) and _is_exact(y0)):
        raise OracleInapplicableError("series oracle needs exact preimage parameters")
    field = field_of(x0, y0)
    x0, y0 = field.coerce(x0), field.coerce(y0)
    f = _branch_series(m, Axis.X_AXIS, x0, depth_cap, field)
    g = _branch_series(m, Axis.Y_AXIS, y0, depth_cap, field)
    if f.coeff(0) != g.coeff(0):
        raise NotAnIntersectionError(f"({x0}, 0) and (0, {y0}) have different images")
    val = (f - g).valuation()
    return depth_cap + 1 if val is None else val


def _axis_triple(m, axis):
    q0, q1, q2 = m.restriction(axis)
    try:
        return RationalTriple.of(q0, q1, q2)
    except (DegreeError, DegenerateTripleError) as exc:
        raise DegenerateMapError(f"{axis.value} collapses to a point") from exc


def image_conics(m, workers=None):
    """Normalized implicit equations of the images of the X and Y axes."""
    out = []
    for axis in (Axis.X_AXIS, Axis.Y_AXIS):
        try:
            out.append(implicitize(_axis_triple(m, axis), workers=workers))
        except DegenerateTripleError as exc:
            raise DegenerateMapError(f"image of {axis.value} is a point") from exc
    return tuple(out)


def map_to_axes(m, point, direction1, direction2):
    """Re-express m so the lines point + u*direction1 and point + v*direction2
    become the coordinate axes."""
    (a, c), (b, d) = direction1, direction2
    if Fraction(a) * Fraction(d) - Fraction(b) * Fraction(c) == 0:
        raise DegenerateMapError("line directions are parallel")
    e, f = point
    return PlaneRationalMap(
        *(p.affine_substitute(a, b, c, d, e, f) for p in (m.p0, m.p1, m.p2))
    )


def _homogenized(conic, q0, q1, q2):
    """conic(q1/q0, q2/q0) * q0^deg as a polynomial in the axis parameter."""
    deg = conic.total_degree
    total = Polynomial.zero(q0.field)
    for i, j, c in conic.terms():
        total = total + (q1**i * q2**j * q0 ** (deg - i - j)).scale(c)
    return total


def _snap(value, poly, tol):
    """An exact rational or Gaussian-rational root of poly near ``value``,
    or ``value`` itself when no such root is found."""
    re = Fraction(value.real).limit_denominator(SNAP_DENOMINATOR)
    if abs(value.imag) <= tol and poly(re) == 0:
        return re
    im = Fraction(value.imag).limit_denominator(SNAP_DENOMINATOR)
    candidate = GaussianRational(re, im)
    if poly.to_field(QQI)(candidate) == 0:
        return candidate
    return value


def _parameter_roots(poly, tol):
    if poly.degree is MINUS_INFINITY or poly.degree < 1:
        return []
    sf = poly.squarefree_part()
    return [_snap(r, sf, tol) for r in poly_roots(sf)]


def _finite_image(m, axis, t, tol):
    try:
        return _image(m, axis, t, tol)
    except DomainError:
        logger.info("[monodromy_descriptor] parameter %s on %s maps to infinity", t, axis.value)
        return None


def intersection_preimages(m, tol=DEFAULT_TOL, match_tol=MATCH_TOL):
    """Pairs (x0, y0) with (x0, 0) and (0, y0) mapping to a common point.

    X-axis parameters are the roots of the Y image conic pulled back along
    the X axis, and symmetrically; roots are snapped to exact values when an
    exact check confirms them, and the two lists are matched by image point.
    """
    cx, cy = image_conics(m)
    if cx == cy:
        raise DegenerateMapError("the two image conics coincide")
    gx = _homogenized(cy, *m.restriction(Axis.X_AXIS))
    gy = _homogenized(cx, *m.restriction(Axis.Y_AXIS))
    if gx.is_zero or gy.is_zero:
        raise DegenerateMapError("one axis image lies on the other image conic")

    xs = [(s, _finite_image(m, Axis.X_AXIS, s, tol)) for s in _parameter_roots(gx, tol)]
    ys = [(t, _finite_image(m, Axis.Y_AXIS, t, tol)) for t in _parameter_roots(gy, tol)]
    pairs = []
    for s, ps in xs:
        if ps is None:
            continue
        for t, pt in ys:
            if pt is not None and not any(_differ(a, b, match_tol) for a, b in zip(ps, pt)):
                pairs.append((s, t))
    logger.info("[monodromy_descriptor] %d intersection preimages", len(pairs))
    return pairs


def monodromy_descriptor(m, depth_cap=DEFAULT_DEPTH, tol=DEFAULT_TOL, workers=None):
    """Every common point of the two image conics with its reality and twist count.

    The multiset of (is_real, twist count) determines the braid monodromy of
    the image curve.
    """
    pairs = intersection_preimages(m, tol)

    def analyse(pair):
        return multiplicity_index(m, pair, depth_cap=depth_cap, tol=tol)

    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(analyse, pairs))
    else:
        reports = [analyse(pair) for pair in pairs]
    return MonodromyDescriptor(tuple(reports))
