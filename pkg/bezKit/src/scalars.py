"""
Scalar fields used throughout bezKit.

Rational numbers are plain ``fractions.Fraction`` values (already canonical:
positive denominator, reduced). Gaussian rationals are pairs of Fractions.
Complex floats are Python ``complex`` and only appear on oracle and
root-finding paths.
"""

from fractions import Fraction
from numbers import Rational as _RationalABC

from .errors import FieldMismatchError

Rational = Fraction


class GaussianRational:
    """Exact complex number re + i*im with rational parts."""

    __slots__ = ("_re", "_im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "_re", Fraction(re))
        object.__setattr__(self, "_im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @property
    def re(self):
        return self._re

    @property
    def im(self):
        return self._im

    @staticmethod
    def _lift(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, _RationalABC)):
            return GaussianRational(other, 0)
        return None

    def conjugate(self):
        return GaussianRational(self._re, -self._im)

    @property
    def is_real(self):
        return self._im == 0

    def norm(self):
        """Squared modulus, an exact Fraction."""
        return self._re * self._re + self._im * self._im

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return complex(self) + other if isinstance(other, complex) else NotImplemented
        return GaussianRational(self._re + o._re, self._im + o._im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self._re, -self._im)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return complex(self) - other if isinstance(other, complex) else NotImplemented
        return GaussianRational(self._re - o._re, self._im - o._im)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return other - complex(self) if isinstance(other, complex) else NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return complex(self) * other if isinstance(other, complex) else NotImplemented
        return GaussianRational(
            self._re * o._re - self._im * o._im,
            self._re * o._im + self._im * o._re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return complex(self) / other if isinstance(other, complex) else NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * o.conjugate()
        return GaussianRational(num._re / n, num._im / n)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return other / complex(self) if isinstance(other, complex) else NotImplemented
        return o / self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return GaussianRational(1) / (self ** (-k))
        result = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            if isinstance(other, complex):
                return complex(self) == other
            return NotImplemented
        return self._re == o._re and self._im == o._im

    def __hash__(self):
        if self._im == 0:
            return hash(self._re)
        return hash((self._re, self._im))

    def __bool__(self):
        return bool(self._re) or bool(self._im)

    def __complex__(self):
        return complex(float(self._re), float(self._im))

    def __repr__(self):
        return f"GaussianRational({self._re!s}, {self._im!s})"

    def __str__(self):
        if self._im == 0:
            return str(self._re)
        if self._re == 0:
            return f"{self._im}i"
        sign = "-" if self._im < 0 else "+"
        return f"{self._re} {sign} {abs(self._im)}i"


I = GaussianRational(0, 1)


class ScalarField:
    """Coefficient field descriptor shared by polynomials and matrices."""

    name = None
    exact = True

    def coerce(self, value):
        raise NotImplementedError

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    def conj(self, value):
        return value

    def to_complex(self, value):
        return complex(value)

    def is_zero(self, value):
        return value == 0

    def __repr__(self):
        return f"<ScalarField {self.name}>"


class _RationalField(ScalarField):
    name = "Q"

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, (int, _RationalABC, str)) and not isinstance(value, bool):
            return Fraction(value)
        if isinstance(value, GaussianRational) and value.is_real:
            return value.re
        raise FieldMismatchError(f"cannot read {value!r} as an element of Q")


class _GaussianField(ScalarField):
    name = "Q[i]"

    def coerce(self, value):
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, _RationalABC, str)) and not isinstance(value, bool):
            return GaussianRational(Fraction(value), 0)
        raise FieldMismatchError(f"cannot read {value!r} as an element of Q[i]")

    def conj(self, value):
        return value.conjugate()


class _ComplexField(ScalarField):
    name = "C"
    exact = False

    def coerce(self, value):
        try:
            return complex(value)
        except TypeError as exc:
            raise FieldMismatchError(f"cannot read {value!r} as a complex float") from exc

    def conj(self, value):
        return value.conjugate()

    def is_zero(self, value):
        return value == 0j


QQ = _RationalField()
QQI = _GaussianField()
CC = _ComplexField()

_FIELDS = {"Q": QQ, "Q[i]": QQI, "Qi": QQI, "C": CC}


def field_by_name(name):
    try:
        return _FIELDS[name]
    except KeyError:
        raise FieldMismatchError(
            f"unknown scalar field {name!r}; expected one of {sorted(_FIELDS)}"
        ) from None


def field_of(*values):
    """Smallest field holding every value: Q, then Q[i], then C."""
    field = QQ
    for v in values:
        if isinstance(v, complex):
            return CC
        if isinstance(v, GaussianRational):
            field = QQI
        elif isinstance(v, float):
            return CC
    return field


def require_exact(field):
    if not field.exact:
        raise FieldMismatchError(f"an exact field is required, got {field.name}")
    return field


def require_same_field(*fields):
    first = fields[0]
    for f in fields[1:]:
        if f is not first:
            raise FieldMismatchError(f"mixed scalar fields {first.name} and {f.name}")
    return first
