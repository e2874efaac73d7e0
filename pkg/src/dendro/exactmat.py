"""
Exact rational scalars, vectors and dense matrices.

Scalars are ``fractions.Fraction`` (always in lowest terms, positive
denominator).  Elimination keeps rows sparse internally, since the
coboundary matrices assembled by the cohomology code are mostly zero.
Pivoting is deterministic: columns are scanned left to right and the first
row (in row order) with a nonzero entry becomes the pivot.
"""

from fractions import Fraction

import numpy

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def scalar(x):
    """Coerce an int, Fraction or "p/q" string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, (numpy.integer,)):
        return Fraction(int(x))
    raise TypeError("cannot convert %r to an exact scalar" % (x,))


def format_scalar(x):
    x = scalar(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def array(data, shape=None):
    """Object array of Fractions from nested lists (or a flat list + shape)."""
    a = numpy.array(data, dtype=object)
    if shape is not None:
        a = a.reshape(shape)
    flat = a.reshape(-1)
    for idx in range(flat.size):
        flat[idx] = scalar(flat[idx])
    return a


def zeros(shape):
    a = numpy.empty(shape, dtype=object)
    a.fill(ZERO)
    return a


def identity(n):
    a = zeros((n, n))
    for i in range(n):
        a[i, i] = ONE
    return a


def is_zero(a):
    return all(x == 0 for x in numpy.asarray(a, dtype=object).reshape(-1))


def common_denominator(a):
    """Least common multiple of the denominators of an array of Fractions."""
    from math import lcm
    den = 1
    a = numpy.asarray(a, dtype=object).reshape(-1)
    for i in numpy.flatnonzero(a):
        den = lcm(den, scalar(a[i]).denominator)
    return den


def to_integers(a, scale=1):
    """
    Object array of Python ints equal to scale * a, or None when some entry
    of scale * a is not an integer.
    """
    a = numpy.asarray(a, dtype=object)
    out = numpy.zeros(a.shape, dtype=object)
    flat, src = out.reshape(-1), a.reshape(-1)
    for i in numpy.flatnonzero(a):
        x = scalar(src[i])
        q, rem = divmod(scale, x.denominator)
        if rem:
            return None
        flat[i] = x.numerator * q
    return out


def from_integers(a, scale=1):
    """Fractions a / scale from an integer array, touching only nonzero entries."""
    a = numpy.asarray(a)
    out = zeros(a.shape)
    for idx in zip(*numpy.nonzero(a)):
        out[idx] = Fraction(int(a[idx]), scale)
    return out


class Matrix:
    """Immutable rows x cols matrix of Fractions stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = tuple(scalar(x) for x in entries)
        if len(entries) != rows * cols:
            raise ValueError("expected %d entries, got %d" % (rows * cols, len(entries)))
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cannot infer column count of an empty matrix")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, [x for r in rows for x in r])

    @classmethod
    def from_array(cls, a):
        a = numpy.asarray(a, dtype=object)
        assert a.ndim == 2, a.shape
        return cls(a.shape[0], a.shape[1], a.reshape(-1).tolist())

    @classmethod
    def from_columns(cls, columns, rows):
        """Matrix whose j-th column is columns[j] (each of length rows)."""
        columns = [list(c) for c in columns]
        for c in columns:
            if len(c) != rows:
                raise ValueError("column of length %d, expected %d" % (len(c), rows))
        return cls(rows, len(columns),
                   [columns[j][i] for i in range(rows) for j in range(len(columns))])

    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols, [ZERO] * (rows * cols))

    @classmethod
    def identity(cls, n):
        return cls(n, n, [ONE if i == j else ZERO for i in range(n) for j in range(n)])

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i):
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self):
        return [self.row(i) for i in range(self.rows)]

    def to_array(self):
        return array(list(self.entries), (self.rows, self.cols)) if self.entries else zeros((self.rows, self.cols))

    def transpose(self):
        return Matrix(self.cols, self.rows,
                      [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    T = property(transpose)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return "Matrix(%d, %d, %s)" % (self.rows, self.cols,
                                       [[format_scalar(x) for x in r] for r in self.to_rows()])

    def __add__(self, other):
        assert self.shape == other.shape
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        assert self.shape == other.shape
        return Matrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return Matrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c):
        c = scalar(c)
        return Matrix(self.rows, self.cols, [c * a for a in self.entries])

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch %s @ %s" % (self.shape, other.shape))
            ocols = [other_col for other_col in zip(*other.to_rows())] if other.rows else [()] * other.cols
            out = []
            for i in range(self.rows):
                r = self.entries[i * self.cols:(i + 1) * self.cols]
                for col in ocols:
                    s = ZERO
                    for a, b in zip(r, col):
                        if a and b:
                            s += a * b
                    out.append(s)
            return Matrix(self.rows, other.cols, out)
        return self.apply(other)

    def apply(self, v):
        v = [scalar(x) for x in v]
        if len(v) != self.cols:
            raise ValueError("vector of length %d, matrix has %d columns" % (len(v), self.cols))
        out = []
        for i in range(self.rows):
            s = ZERO
            for a, b in zip(self.entries[i * self.cols:(i + 1) * self.cols], v):
                if a and b:
                    s += a * b
            out.append(s)
        return out


def _as_matrix(m):
    if isinstance(m, Matrix):
        return m
    if isinstance(m, numpy.ndarray):
        return Matrix.from_array(m)
    return Matrix.from_rows(m)


def _sparse_rows(m):
    rows = []
    for i in range(m.rows):
        r = {}
        for j, x in enumerate(m.entries[i * m.cols:(i + 1) * m.cols]):
            if x:
                r[j] = x
        rows.append(r)
    return rows


def _eliminate(rows, ncols, reduced):
    """
    Row-reduce sparse rows in place.  Returns the list of (pivot_col, row)
    pairs in pivot order; with reduced=True the result is the RREF (pivots
    normalised to 1 and cleared above as well as below).
    """
    pivots = []
    remaining = [r for r in rows if r]
    for c in range(ncols):
        if not remaining:
            break
        k = None
        for idx, r in enumerate(remaining):
            if c in r:
                k = idx
                break
        if k is None:
            continue
        prow = remaining.pop(k)
        inv = ONE / prow[c]
        prow = {j: x * inv for j, x in prow.items()}
        nxt = []
        for r in remaining:
            f = r.get(c)
            if f:
                for j, x in prow.items():
                    y = r.get(j, ZERO) - f * x
                    if y:
                        r[j] = y
                    else:
                        r.pop(j, None)
            if r:
                nxt.append(r)
        remaining = nxt
        if reduced:
            for _, q in pivots:
                f = q.get(c)
                if f:
                    for j, x in prow.items():
                        y = q.get(j, ZERO) - f * x
                        if y:
                            q[j] = y
                        else:
                            q.pop(j, None)
        pivots.append((c, prow))
    return pivots


def _int_rank(rows, ncols):
    """Fraction-free rank of sparse rows (entries already cleared to ints)."""
    from math import gcd
    rank = 0
    remaining = [r for r in rows if r]
    for c in range(ncols):
        if not remaining:
            break
        k = None
        for idx, r in enumerate(remaining):
            if c in r:
                k = idx
                break
        if k is None:
            continue
        prow = remaining.pop(k)
        p = prow[c]
        nxt = []
        for r in remaining:
            f = r.get(c)
            if f:
                new = {}
                for j in set(r) | set(prow):
                    y = p * r.get(j, 0) - f * prow.get(j, 0)
                    if y:
                        new[j] = y
                r = new
                if r:
                    g = 0
                    for y in r.values():
                        g = gcd(g, y)
                        if g == 1:
                            break
                    if g > 1:
                        r = {j: y // g for j, y in r.items()}
            if r:
                nxt.append(r)
        remaining = nxt
        rank += 1
    return rank


def _array_rows(a):
    """Sparse rows straight from a 2-d object array (skips building a Matrix)."""
    rows = [{} for _ in range(a.shape[0])]
    for i, j in zip(*numpy.nonzero(a)):
        rows[i][int(j)] = scalar(a[i, j])
    return rows


def rank(m):
    """Rank over the rationals."""
    from math import lcm
    if isinstance(m, numpy.ndarray):
        assert m.ndim == 2, m.shape
        sparse, ncols = _array_rows(m), m.shape[1]
    else:
        m = _as_matrix(m)
        sparse, ncols = _sparse_rows(m), m.cols
    rows = []
    for r in sparse:
        if not r:
            continue
        den = 1
        for x in r.values():
            den = lcm(den, x.denominator)
        rows.append({j: int(x * den) for j, x in r.items()})
    return _int_rank(rows, ncols)


def rref(m):
    """Reduced row echelon form and the list of pivot columns."""
    m = _as_matrix(m)
    pivots = _eliminate(_sparse_rows(m), m.cols, reduced=True)
    out = []
    for _, r in pivots:
        out.append([r.get(j, ZERO) for j in range(m.cols)])
    for _ in range(m.rows - len(pivots)):
        out.append([ZERO] * m.cols)
    return Matrix(m.rows, m.cols, [x for r in out for x in r]), [c for c, _ in pivots]


def row_basis(a):
    """Nonzero rows of the reduced row echelon form of a 2-d array."""
    assert a.ndim == 2, a.shape
    pivots = _eliminate(_array_rows(a), a.shape[1], reduced=True)
    out = zeros((len(pivots), a.shape[1]))
    for i, (_, r) in enumerate(pivots):
        for j, x in r.items():
            out[i, j] = x
    return out


def kernel_basis(m):
    """
    Basis of the null space.  One vector per free column, with a 1 in that
    column, so the result is deterministic.
    """
    m = _as_matrix(m)
    pivots = _eliminate(_sparse_rows(m), m.cols, reduced=True)
    pivot_cols = {c for c, _ in pivots}
    basis = []
    for free in range(m.cols):
        if free in pivot_cols:
            continue
        v = [ZERO] * m.cols
        v[free] = ONE
        for c, r in pivots:
            x = r.get(free)
            if x:
                v[c] = -x
        basis.append(v)
    return basis


def solve(m, b):
    """Some x with m x = b, or None when the system is inconsistent."""
    m = _as_matrix(m)
    b = [scalar(x) for x in b]
    if len(b) != m.rows:
        raise ValueError("right-hand side has length %d, matrix has %d rows" % (len(b), m.rows))
    rows = _sparse_rows(m)
    aug = m.cols
    for r, x in zip(rows, b):
        if x:
            r[aug] = x
    pivots = _eliminate(rows, m.cols + 1, reduced=True)
    x = [ZERO] * m.cols
    for c, r in pivots:
        if c == aug:
            return None
        x[c] = r.get(aug, ZERO)
    return x


def column_space_basis(m):
    """Pivot columns of m, as vectors (a basis of the image)."""
    m = _as_matrix(m)
    pivots = _eliminate(_sparse_rows(m), m.cols, reduced=False)
    cols = sorted(c for c, _ in pivots)
    return [[m[i, c] for i in range(m.rows)] for c in cols]


def in_span(vectors, v):
    """True when v is a linear combination of the given vectors."""
    v = [scalar(x) for x in v]
    if not vectors:
        return all(x == 0 for x in v)
    return solve(Matrix.from_columns(vectors, len(v)), v) is not None


def inverse(a):
    """Inverse of a square object array; raises ValueError if singular."""
    a = numpy.asarray(a, dtype=object)
    n = a.shape[0]
    assert a.shape == (n, n), a.shape
    aug = numpy.concatenate([a, identity(n)], axis=1)
    red, piv = rref(Matrix.from_array(aug))
    if piv[:n] != list(range(n)) or len(piv) < n or (len(piv) > n and piv[n] < n):
        raise ValueError("matrix is singular")
    out = red.to_array()[:, n:]
    return out
