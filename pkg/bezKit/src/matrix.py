"""
Dense matrices over a ScalarField and exact elimination.

Determinant, rank, kernel and linear solves all run on one fraction-free
(Bareiss) forward elimination, so intermediate entries stay minors of the
input instead of growing through repeated fraction pivoting.
"""

from .errors import ArithmeticInvariantError, ShapeError, SingularMatrixError, SymmetryError
from .scalars import QQ, QQI, require_same_field


class DenseMatrix:
    __slots__ = ("_rows", "_cols", "_entries", "_field")

    def __init__(self, rows, cols, entries, field=QQ):
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise ShapeError(f"{len(entries)} entries do not fill a {rows}x{cols} matrix")
        self._rows = rows
        self._cols = cols
        self._entries = tuple(field.coerce(e) for e in entries)
        self._field = field

    @classmethod
    def from_rows(cls, rows, field=QQ):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ShapeError("ragged rows")
        return cls(len(rows), ncols, [e for r in rows for e in r], field)

    @classmethod
    def zeros(cls, rows, cols, field=QQ):
        return cls(rows, cols, [field.zero] * (rows * cols), field)

    @classmethod
    def identity(cls, n, field=QQ):
        return cls(n, n, [field.one if i == j else field.zero for i in range(n) for j in range(n)], field)

    @classmethod
    def column(cls, vector, field=QQ):
        vector = list(vector)
        return cls(len(vector), 1, vector, field)

    @property
    def rows(self):
        return self._rows

    @property
    def cols(self):
        return self._cols

    @property
    def shape(self):
        return self._rows, self._cols

    @property
    def field(self):
        return self._field

    @property
    def entries(self):
        return self._entries

    @property
    def is_square(self):
        return self._rows == self._cols

    def __getitem__(self, ij):
        i, j = ij
        return self._entries[i * self._cols + j]

    def row(self, i):
        return self._entries[i * self._cols:(i + 1) * self._cols]

    def to_rows(self):
        return [list(self.row(i)) for i in range(self._rows)]

    def to_field(self, field):
        if field is self._field:
            return self
        entries = self._entries if field.exact else [self._field.to_complex(e) for e in self._entries]
        return DenseMatrix(self._rows, self._cols, entries, field)

    def leading(self, k):
        """Leading principal k x k submatrix."""
        return DenseMatrix.from_rows([self.row(i)[:k] for i in range(k)], self._field)

    def transpose(self):
        return DenseMatrix(
            self._cols, self._rows,
            [self[i, j] for j in range(self._cols) for i in range(self._rows)],
            self._field,
        )

    def conjugate_transpose(self):
        conj = self._field.conj
        return DenseMatrix(
            self._cols, self._rows,
            [conj(self[i, j]) for j in range(self._cols) for i in range(self._rows)],
            self._field,
        )

    def _same_shape(self, other):
        require_same_field(self._field, other._field)
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other):
        self._same_shape(other)
        return DenseMatrix(
            self._rows, self._cols,
            [a + b for a, b in zip(self._entries, other._entries)], self._field,
        )

    def __sub__(self, other):
        self._same_shape(other)
        return DenseMatrix(
            self._rows, self._cols,
            [a - b for a, b in zip(self._entries, other._entries)], self._field,
        )

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        c = self._field.coerce(c)
        return DenseMatrix(self._rows, self._cols, [c * e for e in self._entries], self._field)

    def __mul__(self, other):
        if not isinstance(other, DenseMatrix):
            return self.scale(other)
        require_same_field(self._field, other._field)
        if self._cols != other._rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        zero = self._field.zero
        out = []
        for i in range(self._rows):
            r = self.row(i)
            for j in range(other._cols):
                acc = zero
                for k in range(self._cols):
                    acc = acc + r[k] * other[k, j]
                out.append(acc)
        return DenseMatrix(self._rows, other._cols, out, self._field)

    def __rmul__(self, other):
        return self.scale(other)

    def matvec(self, vector):
        vector = [self._field.coerce(v) for v in vector]
        if len(vector) != self._cols:
            raise ShapeError(f"vector of length {len(vector)} for {self.shape} matrix")
        zero = self._field.zero
        out = []
        for i in range(self._rows):
            acc = zero
            for a, v in zip(self.row(i), vector):
                acc = acc + a * v
            out.append(acc)
        return tuple(out)

    def kron(self, other):
        require_same_field(self._field, other._field)
        rows, cols = self._rows * other._rows, self._cols * other._cols
        out = []
        for i in range(rows):
            for j in range(cols):
                out.append(self[i // other._rows, j // other._cols] * other[i % other._rows, j % other._cols])
        return DenseMatrix(rows, cols, out, self._field)

    def __eq__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return (
            self._field is other._field
            and self.shape == other.shape
            and self._entries == other._entries
        )

    def __hash__(self):
        return hash((self._field.name, self.shape, self._entries))

    def __repr__(self):
        body = "; ".join(", ".join(str(e) for e in self.row(i)) for i in range(self._rows))
        return f"DenseMatrix[{self._field.name}]({self._rows}x{self._cols}: {body})"


def _echelon(rows, field, pivot_cols):
    """Fraction-free forward elimination in place.

    Pivots are searched in the first ``pivot_cols`` columns only, which lets
    callers carry augmented right-hand sides along. Returns the pivot column
    of each echelon row and the sign of the row permutation.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    sign = 1
    prev = field.one
    r = 0
    for c in range(pivot_cols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if not field.is_zero(rows[i][c])), None)
        if p is None:
            continue
        if p != r:
            rows[p], rows[r] = rows[r], rows[p]
            sign = -sign
        piv = rows[r][c]
        for i in range(r + 1, nrows):
            lead = rows[i][c]
            row_i = rows[i]
            row_r = rows[r]
            for j in range(c + 1, ncols):
                row_i[j] = (piv * row_i[j] - lead * row_r[j]) / prev
            row_i[c] = field.zero
        prev = piv
        pivots.append(c)
        r += 1
    return pivots, sign


def matrix_det(M):
    if not M.is_square:
        raise ShapeError(f"determinant of non-square {M.shape} matrix")
    n = M.rows
    if n == 0:
        return M.field.one
    rows = M.to_rows()
    pivots, sign = _echelon(rows, M.field, n)
    if len(pivots) < n:
        return M.field.zero
    return rows[n - 1][n - 1] if sign > 0 else -rows[n - 1][n - 1]


def matrix_rank_kernel(M):
    """Rank and an exact kernel basis (one vector per free column)."""
    field = M.field
    rows = M.to_rows()
    pivots, _ = _echelon(rows, field, M.cols)
    rank = len(pivots)
    free = [c for c in range(M.cols) if c not in pivots]
    basis = []
    for f in free:
        x = [field.zero] * M.cols
        x[f] = field.one
        for r in range(rank - 1, -1, -1):
            c = pivots[r]
            s = field.zero
            for j in range(c + 1, M.cols):
                s = s + rows[r][j] * x[j]
            x[c] = -s / rows[r][c]
        basis.append(tuple(x))
    return rank, basis


def matrix_solve(M, B):
    """Exact X with M X = B for square nonsingular M."""
    if not M.is_square:
        raise ShapeError(f"solve with non-square {M.shape} matrix")
    require_same_field(M.field, B.field)
    if B.rows != M.rows:
        raise ShapeError(f"right-hand side {B.shape} for {M.shape} system")
    n, k = M.rows, B.cols
    field = M.field
    rows = [list(M.row(i)) + list(B.row(i)) for i in range(n)]
    pivots, _ = _echelon(rows, field, n)
    if len(pivots) < n:
        raise SingularMatrixError(
            f"matrix is singular (dim ker = {n - len(pivots)})", dim_ker=n - len(pivots)
        )
    out = [[field.zero] * k for _ in range(n)]
    for t in range(k):
        x = [field.zero] * n
        for r in range(n - 1, -1, -1):
            s = rows[r][n + t]
            for j in range(r + 1, n):
                s = s - rows[r][j] * x[j]
            x[r] = s / rows[r][r]
        for i in range(n):
            out[i][t] = x[i]
    return DenseMatrix.from_rows(out, field)


def matrix_inverse(M):
    return matrix_solve(M, DenseMatrix.identity(M.rows, M.field))


def det_cofactor(M):
    """Laplace expansion along the first row; a slow independent oracle."""
    if not M.is_square:
        raise ShapeError(f"determinant of non-square {M.shape} matrix")
    n = M.rows
    if n == 0:
        return M.field.one
    if n == 1:
        return M[0, 0]
    total = M.field.zero
    for j in range(n):
        if M.field.is_zero(M[0, j]):
            continue
        minor = DenseMatrix.from_rows(
            [[M[i, c] for c in range(n) if c != j] for i in range(1, n)], M.field
        )
        term = M[0, j] * det_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def leading_principal_minors(M, hermitian=False):
    """Minors of orders 1..n. With ``hermitian`` set, M must equal its
    conjugate transpose and every minor is returned as an exact real."""
    if not M.is_square:
        raise ShapeError(f"minors of non-square {M.shape} matrix")
    if hermitian and M != M.conjugate_transpose():
        raise SymmetryError("matrix is not equal to its conjugate transpose")
    minors = [matrix_det(M.leading(k)) for k in range(1, M.rows + 1)]
    if hermitian and M.field is QQI:
        for k, m in enumerate(minors, start=1):
            if not m.is_real:
                raise ArithmeticInvariantError(f"Hermitian minor of order {k} is not real: {m}")
        minors = [m.re for m in minors]
    return minors
