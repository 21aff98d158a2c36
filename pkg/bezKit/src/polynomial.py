"""
Dense univariate polynomials over a ScalarField.

Coefficients are stored ascending: index i holds the coefficient of x^i.
The stored tuple is always canonical (no trailing zeros); a padded view of
a given length is available through ``padded``. Matrix index 1..n of the
Bezout and Vandermonde formulas maps to exponent 0..n-1 here.
"""

from fractions import Fraction
from math import gcd, lcm

from .errors import FieldMismatchError, SizeError, UndefinedGcdError
from .scalars import CC, QQ, QQI, require_same_field


class _MinusInfinity:
    """Degree of the zero polynomial. Compares below every integer and
    refuses arithmetic."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("-inf-degree")

    def __repr__(self):
        return "MINUS_INFINITY"


MINUS_INFINITY = _MinusInfinity()


def degree_or_zero(p):
    """Degree with the zero polynomial counted as 0 (sizing helper)."""
    d = p.degree
    return 0 if d is MINUS_INFINITY else d


class Polynomial:
    __slots__ = ("_coeffs", "_field")

    def __init__(self, coeffs=(), field=QQ):
        cs = [field.coerce(c) for c in coeffs]
        while cs and field.is_zero(cs[-1]):
            cs.pop()
        self._coeffs = tuple(cs)
        self._field = field

    # construction helpers

    @classmethod
    def zero(cls, field=QQ):
        return cls((), field)

    @classmethod
    def constant(cls, c, field=QQ):
        return cls((c,), field)

    @classmethod
    def monomial(cls, k, c=1, field=QQ):
        return cls([0] * k + [c], field)

    @classmethod
    def x(cls, field=QQ):
        return cls.monomial(1, 1, field)

    @classmethod
    def from_roots(cls, roots, field=QQ):
        p = cls.constant(1, field)
        for r in roots:
            p = p * cls((-field.coerce(r), 1), field)
        return p

    # basic accessors

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def field(self):
        return self._field

    @property
    def degree(self):
        if not self._coeffs:
            return MINUS_INFINITY
        return len(self._coeffs) - 1

    @property
    def is_zero(self):
        return not self._coeffs

    @property
    def leading_coefficient(self):
        return self._coeffs[-1] if self._coeffs else self._field.zero

    def coeff(self, i):
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return self._field.zero

    def padded(self, length):
        """Coefficient list of exactly ``length`` entries."""
        if len(self._coeffs) > length:
            raise SizeError(
                f"polynomial of degree {self.degree} does not fit in {length} coefficients"
            )
        return list(self._coeffs) + [self._field.zero] * (length - len(self._coeffs))

    def to_field(self, field):
        if field is self._field:
            return self
        if field is CC:
            return Polynomial([self._field.to_complex(c) for c in self._coeffs], CC)
        return Polynomial(self._coeffs, field)

    # arithmetic

    def _lift(self, other):
        if isinstance(other, Polynomial):
            require_same_field(self._field, other._field)
            return other
        return Polynomial.constant(self._field.coerce(other), self._field)

    def __add__(self, other):
        o = self._lift(other)
        n = max(len(self._coeffs), len(o._coeffs))
        return Polynomial(
            [self.coeff(i) + o.coeff(i) for i in range(n)], self._field
        )

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self._coeffs], self._field)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        o = self._lift(other)
        if self.is_zero or o.is_zero:
            return Polynomial.zero(self._field)
        out = [self._field.zero] * (len(self._coeffs) + len(o._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if self._field.is_zero(a):
                continue
            for j, b in enumerate(o._coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(out, self._field)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        c = self._field.coerce(c)
        return Polynomial([c * a for a in self._coeffs], self._field)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = Polynomial.constant(1, self._field)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def compose(self, inner):
        """self(inner(x))."""
        inner = self._lift(inner)
        result = Polynomial.zero(self._field)
        for c in reversed(self._coeffs):
            result = result * inner + c
        return result

    def __divmod__(self, other):
        o = self._lift(other)
        if o.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        dq = len(o._coeffs) - 1
        lead = o._coeffs[-1]
        if len(rem) - 1 < dq:
            return Polynomial.zero(self._field), self
        quot = [self._field.zero] * (len(rem) - dq)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] / lead
            quot[k - dq] = c
            if self._field.is_zero(c):
                continue
            for j, b in enumerate(o._coeffs):
                rem[k - dq + j] = rem[k - dq + j] - c * b
        return Polynomial(quot, self._field), Polynomial(rem[:dq], self._field)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    # evaluation

    def __call__(self, x):
        if isinstance(x, Polynomial):
            return self.compose(x)
        acc = self._field.zero
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def evaluate_float(self, z):
        acc = 0j
        for c in reversed(self._coeffs):
            acc = acc * z + self._field.to_complex(c)
        return acc

    # derived polynomials

    def derivative(self, k=1):
        cs = list(self._coeffs)
        for _ in range(k):
            cs = [i * cs[i] for i in range(1, len(cs))]
        return Polynomial(cs, self._field)

    def monic(self):
        if self.is_zero:
            return self
        lead = self._coeffs[-1]
        return Polynomial([c / lead for c in self._coeffs], self._field)

    def conjugate(self):
        return Polynomial([self._field.conj(c) for c in self._coeffs], self._field)

    def shift(self, x0):
        """The polynomial s -> p(x0 + s)."""
        return self.compose(Polynomial((x0, 1), self._field))

    def squarefree_part(self):
        if self.degree is MINUS_INFINITY or self.degree < 1:
            return self.monic()
        return (self // poly_gcd(self, self.derivative())).monic()

    def primitive(self):
        """Integer polynomial with coprime coefficients and positive leading
        coefficient, proportional to self (Q only)."""
        require_same_field(self._field, QQ)
        if self.is_zero:
            return self
        den = lcm(*(c.denominator for c in self._coeffs))
        ints = [int(c * den) for c in self._coeffs]
        g = gcd(*ints)
        sign = -1 if ints[-1] < 0 else 1
        return Polynomial([Fraction(sign * v, g) for v in ints], QQ)

    # comparison and display

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._field is other._field and self._coeffs == other._coeffs
        try:
            return self == self._lift(other)
        except (FieldMismatchError, TypeError):
            return NotImplemented

    def __hash__(self):
        return hash((self._field.name, self._coeffs))

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self._coeffs]}, field={self._field.name})"

    def __str__(self):
        if self.is_zero:
            return "0"
        terms = []
        for i in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[i]
            if self._field.is_zero(c):
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            coef = f"({c})"
            terms.append(coef if not mono else f"{coef}*{mono}")
        return " + ".join(terms)


def poly_derivative(p, k=1):
    if k < 0:
        raise ValueError(f"derivative order must be non-negative, got {k}")
    return p.derivative(k)


def poly_gcd(p, q):
    """Monic gcd by the exact Euclidean remainder sequence."""
    require_same_field(p.field, q.field)
    if p.is_zero and q.is_zero:
        raise UndefinedGcdError("gcd(0, 0) is undefined")
    a, b = p, q
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def poly_conjugate(p):
    """Coefficient-wise conjugate; requires Gaussian-rational coefficients."""
    require_same_field(p.field, QQI)
    return p.conjugate()
