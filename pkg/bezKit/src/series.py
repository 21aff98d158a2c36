"""
Truncated power series sum_{k <= order} c_k s^k with exact coefficients.
"""

from .errors import OracleInapplicableError, ShapeError
from .scalars import QQ, require_same_field


class PowerSeries:
    __slots__ = ("_coeffs", "_order", "_field")

    def __init__(self, coeffs, order, field=QQ):
        cs = [field.coerce(c) for c in list(coeffs)[:order + 1]]
        cs += [field.zero] * (order + 1 - len(cs))
        self._coeffs = tuple(cs)
        self._order = order
        self._field = field

    @classmethod
    def from_polynomial(cls, p, order):
        return cls(p.coeffs, order, p.field)

    @classmethod
    def from_rational(cls, num, den, order):
        """Expansion of num/den at s = 0; requires den(0) != 0."""
        require_same_field(num.field, den.field)
        field = num.field
        d0 = den.coeff(0)
        if field.is_zero(d0):
            raise OracleInapplicableError("denominator vanishes at the expansion point")
        out = []
        for k in range(order + 1):
            acc = num.coeff(k)
            for j in range(1, k + 1):
                acc = acc - den.coeff(j) * out[k - j]
            out.append(acc / d0)
        return cls(out, order, field)

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def order(self):
        return self._order

    @property
    def field(self):
        return self._field

    def coeff(self, k):
        return self._coeffs[k] if 0 <= k <= self._order else self._field.zero

    def valuation(self):
        """Index of the first nonzero coefficient, or None if all vanish."""
        return next((k for k, c in enumerate(self._coeffs) if not self._field.is_zero(c)), None)

    def _check(self, other):
        require_same_field(self._field, other._field)
        if self._order != other._order:
            raise ShapeError(f"series truncated at {self._order} and {other._order}")

    def __add__(self, other):
        self._check(other)
        return PowerSeries([a + b for a, b in zip(self._coeffs, other._coeffs)], self._order, self._field)

    def __neg__(self):
        return PowerSeries([-c for c in self._coeffs], self._order, self._field)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            c = self._field.coerce(other)
            return PowerSeries([c * a for a in self._coeffs], self._order, self._field)
        self._check(other)
        out = [self._field.zero] * (self._order + 1)
        for i, a in enumerate(self._coeffs):
            if self._field.is_zero(a):
                continue
            for j in range(self._order + 1 - i):
                out[i + j] = out[i + j] + a * other._coeffs[j]
        return PowerSeries(out, self._order, self._field)

    __rmul__ = __mul__

    def compose(self, inner):
        """self(inner(s)); inner must have zero constant term."""
        self._check(inner)
        if not self._field.is_zero(inner.coeff(0)):
            raise OracleInapplicableError("inner series must vanish at the origin")
        result = PowerSeries([], self._order, self._field)
        for c in reversed(self._coeffs):
            result = result * inner + PowerSeries([c], self._order, self._field)
        return result

    def reversion(self):
        """Compositional inverse s(w) with self(s(w)) = w + O(w^(order+1)).

        Coefficients are fixed one degree at a time: with s known up to
        w^(k-1), the w^k coefficient e_k of self(s) is cancelled by
        c_k = -e_k / c_1.
        """
        if not self._field.is_zero(self.coeff(0)):
            raise OracleInapplicableError("series reversion needs a zero constant term")
        u1 = self.coeff(1)
        if self._field.is_zero(u1):
            raise OracleInapplicableError("series reversion needs a nonzero linear term")
        cs = [self._field.zero, 1 / u1]
        for k in range(2, self._order + 1):
            partial = PowerSeries(cs, self._order, self._field)
            e_k = self.compose(partial).coeff(k)
            cs.append(-e_k / u1)
        return PowerSeries(cs, self._order, self._field)

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return (
            self._field is other._field
            and self._order == other._order
            and self._coeffs == other._coeffs
        )

    def __hash__(self):
        return hash((self._field.name, self._order, self._coeffs))

    def __repr__(self):
        return f"PowerSeries({[str(c) for c in self._coeffs]}, order={self._order})"
