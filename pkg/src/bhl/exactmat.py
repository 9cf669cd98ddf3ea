"""Sparse matrices over the exact scalars (int / Fraction / Cyclotomic).

Entries live in a flat dict keyed by (row, col); zeros are never stored.
Everything downstream (rank, kernels, inverses, centers) reduces to the
fraction-style Gauss-Jordan elimination here, so this module has no idea
about gradings or algebras — it only needs scalars that support
+ - * and exact inversion.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import Cyclotomic


def _inv_scalar(x):
    if isinstance(x, Cyclotomic):
        return x.inverse()
    return Fraction(1) / Fraction(x)


class Mat:
    """An immutable-by-convention sparse exact matrix."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows, cols, data=None):
        self.rows = rows
        self.cols = cols
        clean = {}
        if data:
            for key, value in data.items():
                if value:
                    i, j = key
                    if not (0 <= i < rows and 0 <= j < cols):
                        raise IndexError("entry %r outside %dx%d" % (key, rows, cols))
                    clean[key] = value
        self.data = clean

    # -- constructors -------------------------------------------------------

    @staticmethod
    def from_rows(rows_list):
        r = len(rows_list)
        c = len(rows_list[0]) if r else 0
        data = {}
        for i, row in enumerate(rows_list):
            if len(row) != c:
                raise ValueError("ragged rows")
            for j, v in enumerate(row):
                if v:
                    data[i, j] = v
        return Mat(r, c, data)

    @staticmethod
    def identity(n):
        return Mat(n, n, {(i, i): 1 for i in range(n)})

    @staticmethod
    def zeros(rows, cols):
        return Mat(rows, cols)

    @staticmethod
    def diagonal(values):
        vals = list(values)
        return Mat(len(vals), len(vals), {(i, i): v for i, v in enumerate(vals)})

    @staticmethod
    def column(values):
        vals = list(values)
        return Mat(len(vals), 1, {(i, 0): v for i, v in enumerate(vals)})

    # -- access --------------------------------------------------------------

    def __getitem__(self, key):
        return self.data.get(key, 0)

    def col_dict(self, j):
        return {i: v for (i, jj), v in self.data.items() if jj == j}

    def to_dense(self):
        out = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.data.items():
            out[i][j] = v
        return out

    def is_zero(self):
        return not self.data

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self.data == other.data

    def __hash__(self):
        raise TypeError("Mat is unhashable")

    def __repr__(self):
        return "Mat(%dx%d, %d entries)" % (self.rows, self.cols, len(self.data))

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in +")
        data = dict(self.data)
        for key, v in other.data.items():
            s = data.get(key, 0) + v
            if s:
                data[key] = s
            else:
                data.pop(key, None)
        return Mat(self.rows, self.cols, data)

    def __neg__(self):
        return Mat(self.rows, self.cols, {k: -v for k, v in self.data.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar):
        if not scalar:
            return Mat.zeros(self.rows, self.cols)
        return Mat(self.rows, self.cols, {k: scalar * v for k, v in self.data.items()})

    def __mul__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(
                "shape mismatch in *: %dx%d times %dx%d"
                % (self.rows, self.cols, other.rows, other.cols)
            )
        by_row = {}
        for (k, j), v in other.data.items():
            by_row.setdefault(k, []).append((j, v))
        acc = {}
        for (i, k), a in self.data.items():
            hits = by_row.get(k)
            if hits:
                for j, b in hits:
                    key = (i, j)
                    s = acc.get(key, 0) + a * b
                    if s:
                        acc[key] = s
                    else:
                        acc.pop(key, None)
        return Mat(self.rows, other.cols, acc)

    def transpose(self):
        return Mat(self.cols, self.rows, {(j, i): v for (i, j), v in self.data.items()})

    def times_col(self, vec):
        """Apply to a sparse column given as {row_index: scalar}."""
        out = {}
        for (i, j), a in self.data.items():
            v = vec.get(j)
            if v:
                s = out.get(i, 0) + a * v
                if s:
                    out[i] = s
                else:
                    out.pop(i, None)
        return out

    def __pow__(self, e):
        if self.rows != self.cols or e < 0:
            raise ValueError("power needs a square matrix and e >= 0")
        result = Mat.identity(self.rows)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    # -- elimination -----------------------------------------------------------

    def _row_dicts(self):
        rows = [dict() for _ in range(self.rows)]
        for (i, j), v in self.data.items():
            rows[i][j] = v
        return rows

    def rref(self):
        """Reduced row echelon form; returns (Mat, pivot column list)."""
        rows, pivots = _eliminate(self._row_dicts(), self.cols)
        data = {}
        for i, r in enumerate(rows):
            for j, v in r.items():
                data[i, j] = v
        return Mat(self.rows, self.cols, data), pivots

    def rank(self):
        _, pivots = _eliminate(self._row_dicts(), self.cols)
        return len(pivots)

    def kernel_basis(self):
        """Basis of the right kernel as a list of sparse columns {row: scalar}."""
        rows, pivots = _eliminate(self._row_dicts(), self.cols)
        pivot_set = set(pivots)
        basis = []
        for free in range(self.cols):
            if free in pivot_set:
                continue
            vec = {free: 1}
            for r, p in enumerate(pivots):
                v = rows[r].get(free)
                if v:
                    vec[p] = -v
            basis.append(vec)
        return basis

    def nullity(self):
        return self.cols - self.rank()

    def inverse(self):
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        rows = self._row_dicts()
        for i, r in enumerate(rows):
            r[n + i] = 1
        reduced, pivots = _eliminate(rows, 2 * n)
        if pivots[:n] != list(range(n)) or len(pivots) < n:
            raise ValueError("matrix is singular")
        data = {}
        for i, r in enumerate(reduced[:n]):
            for j, v in r.items():
                if j >= n:
                    data[i, j - n] = v
        return Mat(n, n, data)

    # -- combination ------------------------------------------------------------

    def kron(self, other):
        """Kronecker product, row-major index convention."""
        data = {}
        for (i, j), a in self.data.items():
            for (k, l), b in other.data.items():
                data[i * other.rows + k, j * other.cols + l] = a * b
        return Mat(self.rows * other.rows, self.cols * other.cols, data)

    def stack_below(self, other):
        if self.cols != other.cols:
            raise ValueError("column mismatch in stack")
        data = dict(self.data)
        for (i, j), v in other.data.items():
            data[self.rows + i, j] = v
        return Mat(self.rows + other.rows, self.cols, data)


def _eliminate(rows, ncols):
    """In-place Gauss-Jordan on a list of {col: scalar} rows; returns (rows, pivots)."""
    pivots = []
    rank = 0
    nrows = len(rows)
    for col in range(ncols):
        piv = None
        best = None
        for idx in range(rank, nrows):
            v = rows[idx].get(col)
            if v:
                size = len(rows[idx])
                if best is None or size < best:
                    piv, best = idx, size
                    if size <= 2:
                        break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        lead = prow[col]
        if lead != 1:
            inv = _inv_scalar(lead)
            prow = {j: inv * v for j, v in prow.items()}
            rows[rank] = prow
        for idx in range(nrows):
            if idx == rank:
                continue
            r = rows[idx]
            factor = r.get(col)
            if factor:
                for j, v in prow.items():
                    s = r.get(j, 0) - factor * v
                    if s:
                        r[j] = s
                    else:
                        r.pop(j, None)
        pivots.append(col)
        rank += 1
        if rank == nrows:
            break
    return rows[:rank], pivots


def from_cols(nrows, cols):
    """Assemble a Mat whose columns are the given sparse {row: scalar} dicts."""
    data = {}
    for j, col in enumerate(cols):
        for i, v in col.items():
            if v:
                data[i, j] = v
    return Mat(nrows, len(cols), data)
