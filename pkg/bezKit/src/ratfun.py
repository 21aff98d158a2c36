"""
Univariate rational functions num/den with exact coefficients.

The stored pair is reduced: gcd(num, den) = 1 and den is monic. Two rational
functions are therefore equal iff their stored pairs are equal.
"""

from .errors import DomainError
from .polynomial import Polynomial, poly_gcd
from .scalars import QQ, require_same_field


class RationalFunction:
    __slots__ = ("_num", "_den")

    def __init__(self, num, den=None):
        if den is None:
            den = Polynomial.constant(1, num.field)
        require_same_field(num.field, den.field)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            self._num = num
            self._den = Polynomial.constant(1, num.field)
            return
        g = poly_gcd(num, den)
        num, den = num // g, den // g
        lead = den.leading_coefficient
        self._num = num.scale(1 / lead)
        self._den = den.scale(1 / lead)

    @classmethod
    def constant(cls, c, field=QQ):
        return cls(Polynomial.constant(c, field))

    @property
    def num(self):
        return self._num

    @property
    def den(self):
        return self._den

    @property
    def field(self):
        return self._num.field

    @property
    def is_zero(self):
        return self._num.is_zero

    def _lift(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            return RationalFunction(other)
        return RationalFunction(Polynomial.constant(other, self.field))

    def __add__(self, other):
        o = self._lift(other)
        return RationalFunction(self._num * o._den + o._num * self._den, self._den * o._den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self._num, self._den)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return RationalFunction(self._num * o._num, self._den * o._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self._num * o._den, self._den * o._num)

    def derivative(self):
        """Quotient rule, reduced."""
        return RationalFunction(
            self._num.derivative() * self._den - self._num * self._den.derivative(),
            self._den * self._den,
        )

    def __call__(self, x):
        d = self._den(x)
        if d == 0:
            raise DomainError(f"rational function has a pole at {x}")
        return self._num(x) / d

    def evaluate_float(self, z):
        return self._num.evaluate_float(z) / self._den.evaluate_float(z)

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        return hash((self._num, self._den))

    def __repr__(self):
        return f"RationalFunction(({self._num}) / ({self._den}))"
