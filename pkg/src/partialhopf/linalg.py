"""Dense exact linear algebra over a field: matrices, rref, subspaces.

Every routine is deterministic: row reduction always picks the first
nonzero pivot, subspace bases are the unique reduced row-echelon basis,
so equal subspaces have byte-identical bases.
"""

from __future__ import annotations

from .errors import DimensionMismatch, SingularMatrix


def zero_vec(field, n):
    return [field.zero] * n


def unit_vec(field, n, i):
    v = [field.zero] * n
    v[i] = field.one
    return v


def vec_add(u, v):
    return [a + b for a, b in zip(u, v)]


def vec_sub(u, v):
    return [a - b for a, b in zip(u, v)]


def vec_scale(c, v):
    return [c * a for a in v]


def vec_is_zero(v):
    return all(not a for a in v)


def outer_flatten(u, v):
    """u (x) v flattened row-major: index i*len(v)+j."""
    out = []
    for a in u:
        for b in v:
            out.append(a * b)
    return out


class Matrix:
    """Dense matrix with entries in one exact field."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field, data, cols=None):
        self.field = field
        self.data = [list(r) for r in data]
        self.rows = len(self.data)
        if self.rows:
            self.cols = len(self.data[0])
            for r in self.data:
                if len(r) != self.cols:
                    raise DimensionMismatch("ragged matrix rows")
            if cols is not None and cols != self.cols:
                raise DimensionMismatch("explicit column count disagrees with rows")
        else:
            if cols is None:
                raise DimensionMismatch("a matrix with no rows needs an explicit column count")
            self.cols = cols

    @classmethod
    def zeros(cls, field, rows, cols):
        return cls(field, [[field.zero] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, field, n):
        m = cls.zeros(field, n, n)
        for i in range(n):
            m.data[i][i] = field.one
        return m

    @classmethod
    def build(cls, field, data, cols=None):
        """Like the constructor but coerces entries (e.g. plain ints)."""
        return cls(field, [[field.coerce(x) for x in row] for row in data], cols=cols)

    @classmethod
    def from_cols(cls, field, cols_list, rows=None):
        if not cols_list:
            if rows is None:
                raise DimensionMismatch("a matrix with no columns needs an explicit row count")
            return cls(field, [[] for _ in range(rows)], cols=0)
        n = len(cols_list[0])
        return cls(field, [[c[i] for c in cols_list] for i in range(n)], cols=len(cols_list))

    def copy(self):
        return Matrix(self.field, self.data, cols=self.cols)

    def row(self, i):
        return list(self.data[i])

    def col(self, j):
        return [self.data[i][j] for i in range(self.rows)]

    def transpose(self):
        return Matrix(
            self.field,
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def add(self, other):
        self._same_shape(other)
        return Matrix(
            self.field,
            [vec_add(a, b) for a, b in zip(self.data, other.data)],
            cols=self.cols,
        )

    def sub(self, other):
        self._same_shape(other)
        return Matrix(
            self.field,
            [vec_sub(a, b) for a, b in zip(self.data, other.data)],
            cols=self.cols,
        )

    def scale(self, c):
        return Matrix(self.field, [vec_scale(c, r) for r in self.data], cols=self.cols)

    def mul(self, other):
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        F = self.field
        out = [[F.zero] * other.cols for _ in range(self.rows)]
        for i in range(self.rows):
            ri = self.data[i]
            oi = out[i]
            for k in range(self.cols):
                a = ri[k]
                if not a:
                    continue
                rk = other.data[k]
                for j in range(other.cols):
                    b = rk[j]
                    if b:
                        oi[j] = oi[j] + a * b
        return Matrix(F, out, cols=other.cols)

    def mul_vec(self, v):
        if len(v) != self.cols:
            raise DimensionMismatch("vector length does not match column count")
        F = self.field
        out = [F.zero] * self.rows
        for j, x in enumerate(v):
            if not x:
                continue
            for i in range(self.rows):
                a = self.data[i][j]
                if a:
                    out[i] = out[i] + a * x
        return out

    def rref(self):
        """Unique reduced row-echelon form; returns (Matrix, pivot column list).

        Zero rows are dropped, so the result's rows are a canonical basis of
        the row space.
        """
        F = self.field
        m = [row[:] for row in self.data]
        rows, cols = self.rows, self.cols
        pivots = []
        r = 0
        for c in range(cols):
            pr = None
            for i in range(r, rows):
                if m[i][c]:
                    pr = i
                    break
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            pv = m[r][c]
            if pv != F.one:
                m[r] = [x / pv for x in m[r]]
            for i in range(rows):
                if i != r and m[i][c]:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == rows:
                break
        return Matrix(F, m[:r], cols=cols), pivots

    def rank(self):
        return self.rref()[0].rows

    def nullspace(self):
        """Canonical basis of {x : Mx = 0}, one vector per free column."""
        F = self.field
        R, pivots = self.rref()
        pivset = set(pivots)
        basis = []
        for f in range(self.cols):
            if f in pivset:
                continue
            v = [F.zero] * self.cols
            v[f] = F.one
            for r, pc in enumerate(pivots):
                v[pc] = -R.data[r][f]
            basis.append(v)
        return basis

    def solve(self, b):
        """One solution of Mx = b with all free variables zero, or None."""
        if len(b) != self.rows:
            raise DimensionMismatch("rhs length does not match row count")
        F = self.field
        aug = Matrix(
            F,
            [row + [bi] for row, bi in zip(self.data, b)],
            cols=self.cols + 1,
        )
        R, pivots = aug.rref()
        if self.cols in pivots:
            return None
        x = [F.zero] * self.cols
        for r, pc in enumerate(pivots):
            x[pc] = R.data[r][self.cols]
        return x

    def inverse(self):
        if self.rows != self.cols:
            raise DimensionMismatch("only square matrices invert")
        n = self.rows
        F = self.field
        ident = Matrix.identity(F, n)
        aug = Matrix(
            F,
            [self.data[i] + ident.data[i] for i in range(n)],
            cols=2 * n,
        )
        R, pivots = aug.rref()
        if pivots != list(range(n)):
            raise SingularMatrix("matrix is singular")
        return Matrix(F, [row[n:] for row in R.data], cols=n)

    def _same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch("matrix shapes differ")

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __repr__(self):
        if not self.rows:
            return f"Matrix(0x{self.cols})"
        body = "; ".join(" ".join(self.field.format(x) for x in row) for row in self.data)
        return f"Matrix[{body}]"


class Subspace:
    """Subspace of k^n held as its unique rref basis."""

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field, basis: Matrix, pivots):
        self.field = field
        self.ambient_dim = basis.cols
        self.basis = basis
        self.pivots = list(pivots)

    @classmethod
    def span(cls, field, vectors, ambient_dim):
        vectors = list(vectors)
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatch("spanning vector has wrong length")
        m = Matrix(field, vectors, cols=ambient_dim)
        R, piv = m.rref()
        return cls(field, R, piv)

    @property
    def dim(self):
        return self.basis.rows

    def coords_of(self, v):
        """Coefficients of v in the rref basis, or None if v is outside."""
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector has wrong ambient dimension")
        coeffs = [v[pc] for pc in self.pivots]
        residue = list(v)
        for c, row in zip(coeffs, self.basis.data):
            if c:
                residue = [a - c * b for a, b in zip(residue, row)]
        if vec_is_zero(residue):
            return coeffs
        return None

    def contains(self, v):
        return self.coords_of(v) is not None

    def to_ambient(self, coords):
        if len(coords) != self.dim:
            raise DimensionMismatch("coordinate vector has wrong length")
        out = [self.field.zero] * self.ambient_dim
        for c, row in zip(coords, self.basis.data):
            if c:
                out = [a + c * b for a, b in zip(out, row)]
        return out

    def sum(self, other):
        self._same_ambient(other)
        return Subspace.span(
            self.field, self.basis.data + other.basis.data, self.ambient_dim
        )

    def intersect(self, other):
        """Zassenhaus: rref of [[A|A],[B|0]]; zero-left rows carry the intersection."""
        self._same_ambient(other)
        F = self.field
        n = self.ambient_dim
        zero = [F.zero] * n
        rows = [list(r) + list(r) for r in self.basis.data]
        rows += [list(r) + zero for r in other.basis.data]
        M = Matrix(F, rows, cols=2 * n)
        R, _ = M.rref()
        inter = [row[n:] for row in R.data if vec_is_zero(row[:n])]
        return Subspace.span(F, inter, n)

    def perp_constraints(self):
        """Matrix Q with rows spanning the dot-product annihilator: x in self iff Qx = 0."""
        return Matrix(self.field, self.basis.nullspace(), cols=self.ambient_dim)

    def _same_ambient(self, other):
        if self.ambient_dim != other.ambient_dim or self.field != other.field:
            raise DimensionMismatch("subspaces live in different ambient spaces")

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.basis.data == other.basis.data
        )

    def __repr__(self):
        return f"Subspace(dim {self.dim} of k^{self.ambient_dim})"


def rref(m: Matrix):
    return m.rref()


def span(field, vectors, ambient_dim) -> Subspace:
    return Subspace.span(field, vectors, ambient_dim)


def contains(s: Subspace, v) -> bool:
    return s.contains(v)


def solve(m: Matrix, b):
    return m.solve(b)
