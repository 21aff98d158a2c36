"""
JSON payloads of the bezkit command line.

Exact scalars travel as lists of decimal strings: ["num", "den"] over Q and
["re_num", "re_den", "im_num", "im_den"] over Q[i]. Polynomials are
{"field": ..., "coeffs": [scalar, ...]} in ascending degree; complex float
matrices are {"re": [[...]], "im": [[...]]}.
"""

from fractions import Fraction
from typing import Literal, Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from bezKit.src.bivariate import BivariatePolynomial
from bezKit.src.polynomial import Polynomial
from bezKit.src.scalars import QQ, QQI, GaussianRational, field_by_name

FieldName = Literal["Q", "Q[i]"]
Scalar = list[str]


def _fraction(num, den):
    den = int(den)
    if den == 0:
        raise ValueError("zero denominator")
    return Fraction(int(num), den)


def parse_scalar(raw, field):
    """Exact scalar from its string list."""
    if field is QQ:
        if len(raw) != 2:
            raise ValueError(f"a Q scalar has 2 entries, got {len(raw)}")
        return _fraction(*raw)
    if len(raw) != 4:
        raise ValueError(f"a Q[i] scalar has 4 entries, got {len(raw)}")
    return GaussianRational(_fraction(raw[0], raw[1]), _fraction(raw[2], raw[3]))


def parse_any_scalar(raw):
    """Exact scalar whose field is read off its length."""
    return parse_scalar(raw, QQ if len(raw) == 2 else QQI)


def dump_scalar(value, field):
    if field is QQ:
        value = Fraction(value)
        return [str(value.numerator), str(value.denominator)]
    value = field.coerce(value)
    return [
        str(value.re.numerator), str(value.re.denominator),
        str(value.im.numerator), str(value.im.denominator),
    ]


def field_label(field):
    return "Q" if field is QQ else "Q[i]"


class Payload(BaseModel):
    model_config = ConfigDict(extra="forbid")


class PolynomialPayload(Payload):
    field: FieldName = "Q"
    coeffs: list[Scalar]

    @model_validator(mode="after")
    def _parse(self):
        fld = field_by_name(self.field)
        for raw in self.coeffs:
            parse_scalar(raw, fld)
        return self

    def to_polynomial(self):
        fld = field_by_name(self.field)
        return Polynomial([parse_scalar(raw, fld) for raw in self.coeffs], fld)

    @classmethod
    def from_polynomial(cls, p):
        return cls(field=field_label(p.field), coeffs=[dump_scalar(c, p.field) for c in p.coeffs])


class BivariatePayload(Payload):
    field: FieldName = "Q"
    coeffs: list[list[Scalar]]

    @model_validator(mode="after")
    def _parse(self):
        fld = field_by_name(self.field)
        for row in self.coeffs:
            for raw in row:
                parse_scalar(raw, fld)
        return self

    def to_bivariate(self):
        fld = field_by_name(self.field)
        return BivariatePolynomial(
            [[parse_scalar(raw, fld) for raw in row] for row in self.coeffs], fld
        )

    @classmethod
    def from_bivariate(cls, b):
        return cls(
            field=field_label(b.field),
            coeffs=[[dump_scalar(c, b.field) for c in row] for row in b.coeffs],
        )


class ComplexMatrixPayload(Payload):
    re: list[list[float]]
    im: Optional[list[list[float]]] = None

    @model_validator(mode="after")
    def _shape(self):
        widths = {len(r) for r in self.re}
        if len(widths) > 1:
            raise ValueError("ragged rows in 're'")
        if self.im is not None:
            if len(self.im) != len(self.re) or any(len(a) != len(b) for a, b in zip(self.im, self.re)):
                raise ValueError("'re' and 'im' have different shapes")
        return self

    def to_array(self):
        re = np.array(self.re, dtype=float)
        im = np.array(self.im, dtype=float) if self.im is not None else np.zeros_like(re)
        return re + 1j * im

    @classmethod
    def from_array(cls, arr):
        arr = np.atleast_2d(np.asarray(arr, dtype=np.complex128))
        return cls(re=arr.real.tolist(), im=arr.imag.tolist())


# requests


class PairRequest(Payload):
    p: PolynomialPayload
    q: PolynomialPayload
    n: Optional[int] = None


class SingleRequest(Payload):
    p: PolynomialPayload


class QuadratureRequest(Payload):
    q: PolynomialPayload


class TripleRequest(Payload):
    p0: PolynomialPayload
    p1: PolynomialPayload
    p2: PolynomialPayload
    n: Optional[int] = None


class IdentitiesRequest(Payload):
    p: PolynomialPayload
    q: PolynomialPayload
    points: Optional[list[tuple[Scalar, Scalar]]] = None
    w: Optional[list[Scalar]] = None
    n: Optional[int] = None

    @model_validator(mode="after")
    def _parse(self):
        for x, y in self.points or ():
            parse_any_scalar(x)
            parse_any_scalar(y)
        for raw in self.w or ():
            parse_any_scalar(raw)
        return self

    def sample_points(self, field):
        return [(field.coerce(parse_any_scalar(x)), field.coerce(parse_any_scalar(y))) for x, y in self.points]

    def weights(self, field):
        if self.w is None:
            return None
        return [field.coerce(parse_any_scalar(raw)) for raw in self.w]


class NodePayload(Payload):
    A: ComplexMatrixPayload
    Phi: ComplexMatrixPayload
    sigma: ComplexMatrixPayload


class VesselPayload(Payload):
    A1: ComplexMatrixPayload
    A2: ComplexMatrixPayload
    Phi: ComplexMatrixPayload
    sigma1: ComplexMatrixPayload
    sigma2: ComplexMatrixPayload
    gamma_in: ComplexMatrixPayload
    gamma_out: ComplexMatrixPayload

    @classmethod
    def from_vessel(cls, v):
        return cls(**{
            name: ComplexMatrixPayload.from_array(getattr(v, name))
            for name in ("A1", "A2", "Phi", "sigma1", "sigma2", "gamma_in", "gamma_out")
        })


class VesselBuildRequest(Payload):
    node: NodePayload
    p0: PolynomialPayload
    p1: PolynomialPayload
    p2: PolynomialPayload
    n: Optional[int] = None
    phi_prime: Optional[ComplexMatrixPayload] = None


class BraidRequest(Payload):
    p0: BivariatePayload
    p1: BivariatePayload
    p2: BivariatePayload


# responses


class BezoutResponse(Payload):
    field: FieldName
    size: int
    matrix: list[list[Scalar]]


class CommonZerosResponse(Payload):
    common_zeros: int


class HankelResponse(Payload):
    field: FieldName
    n: int
    generator: list[Scalar]


class HermiteResponse(Payload):
    verdict: Literal["ALL_UPPER", "NOT_ALL_UPPER", "BOUNDARY"]
    minors: list[Scalar]


class NodeResidualResponse(Payload):
    node_residual: float
    is_node: bool


class VesselResidualsResponse(Payload):
    colligation_1: float
    colligation_2: float
    input_gamma: float
    output_gamma: float
    linkage: float
    commutativity: float
    is_vessel: bool


class BraidPoint(Payload):
    image: list[float]
    real: bool
    min_index: Union[int, Literal["diverges"]]
    paper_multiplicity: Optional[int] = None
    full_twists: Optional[int] = None


class BraidResponse(Payload):
    points: list[BraidPoint]


def matrix_rows(M):
    return [[dump_scalar(e, M.field) for e in row] for row in M.to_rows()]


def promote(p, field_flag):
    """Apply the --field selector to a parsed polynomial."""
    if field_flag == "Qi" and p.field is QQ:
        return p.to_field(QQI)
    return p


def lift_common(*polys):
    """Promote every polynomial to Q[i] when any of them is over Q[i]."""
    if any(p.field is QQI for p in polys):
        return tuple(p.to_field(QQI) for p in polys)
    return polys
