"""
Dense bivariate polynomials: entry (i, j) of the coefficient grid holds the
coefficient of x^i y^j.
"""

from fractions import Fraction
from math import gcd, lcm

from .errors import FieldMismatchError
from .polynomial import MINUS_INFINITY, Polynomial
from .scalars import CC, QQ, QQI, GaussianRational, require_same_field


class BivariatePolynomial:
    __slots__ = ("_coeffs", "_field")

    def __init__(self, coeffs=(), field=QQ):
        rows = [[field.coerce(c) for c in row] for row in coeffs]
        width = max((len(r) for r in rows), default=0)
        rows = [r + [field.zero] * (width - len(r)) for r in rows]
        while rows and all(field.is_zero(c) for c in rows[-1]):
            rows.pop()
        while width and all(field.is_zero(r[width - 1]) for r in rows):
            width -= 1
        if not rows or not width:
            rows, width = [], 0
        self._coeffs = tuple(tuple(r[:width]) for r in rows)
        self._field = field

    @classmethod
    def zero(cls, field=QQ):
        return cls((), field)

    @classmethod
    def from_terms(cls, terms, field=QQ):
        """Build from an iterable of (i, j, coefficient)."""
        terms = list(terms)
        if not terms:
            return cls.zero(field)
        rows = max(i for i, _, _ in terms) + 1
        cols = max(j for _, j, _ in terms) + 1
        grid = [[field.zero] * cols for _ in range(rows)]
        for i, j, c in terms:
            grid[i][j] = grid[i][j] + field.coerce(c)
        return cls(grid, field)

    @classmethod
    def from_univariate(cls, p, var="x"):
        if var == "x":
            return cls([[c] for c in p.coeffs], p.field)
        return cls([list(p.coeffs)], p.field)

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def field(self):
        return self._field

    @property
    def is_zero(self):
        return not self._coeffs

    def coeff(self, i, j):
        if 0 <= i < len(self._coeffs) and 0 <= j < len(self._coeffs[0]):
            return self._coeffs[i][j]
        return self._field.zero

    def terms(self):
        """Nonzero terms (i, j, c) in lexicographic order of (i, j)."""
        for i, row in enumerate(self._coeffs):
            for j, c in enumerate(row):
                if not self._field.is_zero(c):
                    yield i, j, c

    @property
    def degree_x(self):
        return len(self._coeffs) - 1 if self._coeffs else MINUS_INFINITY

    @property
    def degree_y(self):
        return len(self._coeffs[0]) - 1 if self._coeffs else MINUS_INFINITY

    @property
    def total_degree(self):
        degs = [i + j for i, j, _ in self.terms()]
        return max(degs) if degs else MINUS_INFINITY

    def to_field(self, field):
        if field is self._field:
            return self
        if field is CC:
            return BivariatePolynomial(
                [[self._field.to_complex(c) for c in row] for row in self._coeffs], CC
            )
        return BivariatePolynomial(self._coeffs, field)

    def restrict_x(self, y0):
        """Univariate polynomial t -> self(t, y0)."""
        return Polynomial([Polynomial(row, self._field)(y0) for row in self._coeffs], self._field)

    def restrict_y(self, x0):
        """Univariate polynomial t -> self(x0, t)."""
        return self.transpose().restrict_x(x0)

    def transpose(self):
        """Swap the roles of x and y."""
        return BivariatePolynomial.from_terms(
            ((j, i, c) for i, j, c in self.terms()), self._field
        )

    # evaluation

    def __call__(self, x, y):
        acc = self._field.zero
        for row in reversed(self._coeffs):
            inner = self._field.zero
            for c in reversed(row):
                inner = inner * y + c
            acc = acc * x + inner
        return acc

    def evaluate_naive(self, x, y):
        total = self._field.zero
        for i, row in enumerate(self._coeffs):
            for j, c in enumerate(row):
                total = total + c * x**i * y**j
        return total

    def evaluate_float(self, x, y):
        acc = 0j
        for row in reversed(self._coeffs):
            inner = 0j
            for c in reversed(row):
                inner = inner * y + self._field.to_complex(c)
            acc = acc * x + inner
        return acc

    # arithmetic

    def _lift(self, other):
        if isinstance(other, BivariatePolynomial):
            require_same_field(self._field, other._field)
            return other
        if isinstance(other, Polynomial):
            raise FieldMismatchError("mix univariate and bivariate explicitly via from_univariate")
        return BivariatePolynomial([[self._field.coerce(other)]], self._field)

    def __add__(self, other):
        o = self._lift(other)
        return BivariatePolynomial.from_terms(
            list(self.terms()) + list(o.terms()), self._field
        )

    __radd__ = __add__

    def __neg__(self):
        return BivariatePolynomial([[-c for c in row] for row in self._coeffs], self._field)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, BivariatePolynomial):
            return self.scale(other)
        o = self._lift(other)
        out = {}
        for i, j, a in self.terms():
            for k, l, b in o.terms():
                out[(i + k, j + l)] = out.get((i + k, j + l), self._field.zero) + a * b
        return BivariatePolynomial.from_terms(
            ((i, j, c) for (i, j), c in out.items()), self._field
        )

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        c = self._field.coerce(c)
        return BivariatePolynomial([[c * a for a in row] for row in self._coeffs], self._field)

    def __pow__(self, k):
        result = BivariatePolynomial([[1]], self._field)
        for _ in range(k):
            result = result * self
        return result

    def affine_substitute(self, a, b, c, d, e=0, f=0):
        """Polynomial in (u, v) obtained from x = a*u + b*v + e, y = c*u + d*v + f."""
        fld = self._field
        xs = BivariatePolynomial([[e, b], [a, 0]], fld)
        ys = BivariatePolynomial([[f, d], [c, 0]], fld)
        x_pows = [BivariatePolynomial([[1]], fld)]
        y_pows = [BivariatePolynomial([[1]], fld)]
        for _ in range(len(self._coeffs)):
            x_pows.append(x_pows[-1] * xs)
        for _ in range(len(self._coeffs[0]) if self._coeffs else 0):
            y_pows.append(y_pows[-1] * ys)
        result = BivariatePolynomial.zero(fld)
        for i, j, coef in self.terms():
            result = result + (x_pows[i] * y_pows[j]).scale(coef)
        return result

    # normalization

    def monomial_factor(self):
        """Largest (a, b) with x^a y^b dividing self."""
        terms = list(self.terms())
        if not terms:
            return 0, 0
        return min(i for i, _, _ in terms), min(j for _, j, _ in terms)

    def divide_monomial(self, a, b):
        return BivariatePolynomial.from_terms(
            ((i - a, j - b, c) for i, j, c in self.terms()), self._field
        )

    def normalized(self):
        """Canonical representative up to a nonzero scalar: primitive integer
        content and a positive lexicographically-first coefficient."""
        terms = list(self.terms())
        if not terms:
            return self
        if self._field is QQ:
            return self._normalized_rational(terms)
        if self._field is QQI:
            if all(c.is_real for _, _, c in terms):
                real = BivariatePolynomial.from_terms(((i, j, c.re) for i, j, c in terms), QQ)
                return real.normalized().to_field(QQI)
            return self._normalized_gaussian(terms)
        lead = terms[0][2]
        return self.scale(1 / lead)

    def _normalized_rational(self, terms):
        den = lcm(*(c.denominator for _, _, c in terms))
        ints = [int(c * den) for _, _, c in terms]
        g = gcd(*ints)
        if ints[0] < 0:
            g = -g
        return BivariatePolynomial.from_terms(
            ((i, j, Fraction(v, g)) for (i, j, _), v in zip(terms, ints)), QQ
        )

    def _normalized_gaussian(self, terms):
        lead = terms[0][2]
        scaled = [(i, j, c / lead) for i, j, c in terms]
        den = lcm(*(d for _, _, c in scaled for d in (c.re.denominator, c.im.denominator)))
        parts = [(int(c.re * den), int(c.im * den)) for _, _, c in scaled]
        g = gcd(*(v for pair in parts for v in pair))
        return BivariatePolynomial.from_terms(
            (
                (i, j, GaussianRational(Fraction(re, g), Fraction(im, g)))
                for (i, j, _), (re, im) in zip(scaled, parts)
            ),
            QQI,
        )

    # comparison and display

    def __eq__(self, other):
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self._field is other._field and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self._field.name, self._coeffs))

    def __repr__(self):
        body = " + ".join(f"({c})*x1^{i}*x2^{j}" for i, j, c in self.terms()) or "0"
        return f"BivariatePolynomial[{self._field.name}]({body})"
