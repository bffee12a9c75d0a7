"""Immutable exact matrices over the cyclotomic scalars."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .scalar import Scalar, parse_scalar

ZERO = Scalar(0)
ONE = Scalar(1)


def _s(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    return Scalar(x)


class Matrix:
    """Dense matrix of Scalars; ``@`` multiplies matrices, ``*`` scales."""

    __slots__ = ("rows", "cols", "_e", "_hash")

    def __init__(self, entries: Iterable[Iterable] = (), rows: int | None = None, cols: int | None = None):
        data = tuple(tuple(_s(x) for x in row) for row in entries)
        if rows is None:
            rows = len(data)
        if cols is None:
            cols = len(data[0]) if data else 0
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError("ragged or mis-sized matrix")
        self.rows = rows
        self.cols = cols
        self._e = data
        self._hash = None

    @classmethod
    def _wrap(cls, data, rows, cols):
        m = object.__new__(cls)
        m._e = data
        m.rows = rows
        m.cols = cols
        m._hash = None
        return m

    # -- constructors -------------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._wrap(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)), n, n)

    @classmethod
    def zeros(cls, r: int, c: int | None = None) -> "Matrix":
        c = r if c is None else c
        return cls._wrap(tuple(tuple(ZERO for _ in range(c)) for _ in range(r)), r, c)

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        vals = [_s(v) for v in values]
        n = len(vals)
        return cls._wrap(tuple(tuple(vals[i] if i == j else ZERO for j in range(n)) for i in range(n)), n, n)

    @classmethod
    def unit(cls, n: int, i: int, j: int, value=1) -> "Matrix":
        v = _s(value)
        return cls._wrap(tuple(tuple(v if (a, b) == (i, j) else ZERO for b in range(n)) for a in range(n)), n, n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "Matrix":
        if not columns:
            raise ValueError("need at least one column")
        cols = [tuple(_s(x) for x in c) for c in columns]
        r = len(cols[0])
        return cls._wrap(tuple(tuple(c[i] for c in cols) for i in range(r)), r, len(cols))

    @classmethod
    def block_diag(cls, blocks: Sequence["Matrix"]) -> "Matrix":
        n = sum(b.rows for b in blocks)
        m = sum(b.cols for b in blocks)
        out = [[ZERO] * m for _ in range(n)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[r0 + i][c0 + j] = b._e[i][j]
            r0 += b.rows
            c0 += b.cols
        return cls._wrap(tuple(map(tuple, out)), n, m)

    # -- access -------------------------------------------------------------

    @property
    def shape(self):
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self._e[i][j]

    def row(self, i):
        return self._e[i]

    def col(self, j):
        return tuple(r[j] for r in self._e)

    def columns(self):
        return [self.col(j) for j in range(self.cols)]

    def tolist(self):
        return [list(r) for r in self._e]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self._e for x in r)

    # -- arithmetic ---------------------------------------------------------

    def _check_same(self, other):
        if not isinstance(other, Matrix):
            raise TypeError("expected a Matrix")
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other):
        self._check_same(other)
        return Matrix._wrap(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._e, other._e)), self.rows, self.cols)

    def __sub__(self, other):
        self._check_same(other)
        return Matrix._wrap(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._e, other._e)), self.rows, self.cols)

    def __neg__(self):
        return Matrix._wrap(tuple(tuple(-a for a in r) for r in self._e), self.rows, self.cols)

    def __mul__(self, k):
        if isinstance(k, Matrix):
            raise TypeError("use @ for matrix products")
        k = _s(k)
        return Matrix._wrap(tuple(tuple(a * k for a in r) for r in self._e), self.rows, self.cols)

    __rmul__ = __mul__

    def __truediv__(self, k):
        return self * _s(k).inverse()

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        ocols = other.columns()
        if self.is_rational() and other.is_rational():
            return self._rational_matmul(ocols, other.cols)
        out = []
        for r in self._e:
            row = []
            for c in ocols:
                acc = ZERO
                for a, b in zip(r, c):
                    if a.is_zero() or b.is_zero():
                        continue
                    acc = acc + a * b
                row.append(acc)
            out.append(tuple(row))
        return Matrix._wrap(tuple(out), self.rows, other.cols)

    def is_rational(self) -> bool:
        return all(x.n == 1 for r in self._e for x in r)

    def _rational_matmul(self, ocols, ncols):
        # plain Fraction arithmetic; avoids building a Scalar per partial sum
        cols = [[b.c[0] for b in c] for c in ocols]
        out = []
        for r in self._e:
            fr = [a.c[0] for a in r]
            row = []
            for c in cols:
                acc = 0
                for a, b in zip(fr, c):
                    if a and b:
                        acc += a * b
                row.append(Scalar._raw(1, (Fraction(acc),)))
            out.append(tuple(row))
        return Matrix._wrap(tuple(out), self.rows, ncols)

    def apply(self, v: Sequence) -> tuple:
        """Matrix times a column vector given as a sequence."""
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        out = []
        for r in self._e:
            acc = ZERO
            for a, b in zip(r, v):
                if a.is_zero() or b.is_zero():
                    continue
                acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def __pow__(self, e: int):
        if not self.is_square():
            raise ValueError("power of non-square matrix")
        if e < 0:
            return self.inverse() ** (-e)
        result = Matrix.identity(self.rows)
        base = self
        while e:
            if e & 1:
                result = result @ base
            e >>= 1
            if e:
                base = base @ base
        return result

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._e == other._e

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.shape, self._e))
        return self._hash

    def transpose(self) -> "Matrix":
        return Matrix._wrap(tuple(zip(*self._e)) if self.rows else (), self.cols, self.rows)

    @property
    def T(self):
        return self.transpose()

    def conj(self) -> "Matrix":
        return Matrix._wrap(tuple(tuple(a.conj() for a in r) for r in self._e), self.rows, self.cols)

    def map(self, f) -> "Matrix":
        return Matrix._wrap(tuple(tuple(f(a) for a in r) for r in self._e), self.rows, self.cols)

    def trace(self) -> Scalar:
        if not self.is_square():
            raise ValueError("trace of non-square matrix")
        acc = ZERO
        for i in range(self.rows):
            acc = acc + self._e[i][i]
        return acc

    def kron(self, other: "Matrix") -> "Matrix":
        out = []
        for r in self._e:
            for s in other._e:
                out.append(tuple(a * b for a in r for b in s))
        return Matrix._wrap(tuple(out), self.rows * other.rows, self.cols * other.cols)

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return Matrix._wrap(tuple(r + s for r, s in zip(self._e, other._e)), self.rows, self.cols + other.cols)

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise ValueError("column count mismatch")
        return Matrix._wrap(self._e + other._e, self.rows + other.rows, self.cols)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix._wrap(tuple(tuple(self._e[i][j] for j in cols) for i in rows), len(rows), len(cols))

    # -- elimination --------------------------------------------------------

    def rref(self):
        """Reduced row echelon form and the pivot column indices."""
        m = [list(r) for r in self._e]
        pivots = []
        r = 0
        for c in range(self.cols):
            if r == self.rows:
                break
            pr = next((i for i in range(r, self.rows) if not m[i][c].is_zero()), None)
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            inv = m[r][c].inverse()
            m[r] = [x * inv for x in m[r]]
            for i in range(self.rows):
                if i != r and not m[i][c].is_zero():
                    f = m[i][c]
                    m[i] = [x - f * y for x, y in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
        return Matrix._wrap(tuple(map(tuple, m)), self.rows, self.cols), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> list[tuple]:
        """Basis of {v : M v = 0} as tuples, one free variable per vector."""
        R, piv = self.rref()
        free = [c for c in range(self.cols) if c not in piv]
        basis = []
        for f in free:
            v = [ZERO] * self.cols
            v[f] = ONE
            for i, p in enumerate(piv):
                v[p] = -R[i, f]
            basis.append(tuple(v))
        return basis

    def column_space(self) -> list[tuple]:
        _, piv = self.rref()
        return [self.col(p) for p in piv]

    def det(self) -> Scalar:
        if not self.is_square():
            raise ValueError("determinant of non-square matrix")
        m = [list(r) for r in self._e]
        n = self.rows
        det = ONE
        for c in range(n):
            pr = next((i for i in range(c, n) if not m[i][c].is_zero()), None)
            if pr is None:
                return ZERO
            if pr != c:
                m[c], m[pr] = m[pr], m[c]
                det = -det
            det = det * m[c][c]
            inv = m[c][c].inverse()
            for i in range(c + 1, n):
                if not m[i][c].is_zero():
                    f = m[i][c] * inv
                    m[i] = [x - f * y for x, y in zip(m[i], m[c])]
        return det

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise ValueError("inverse of non-square matrix")
        n = self.rows
        aug = self.hstack(Matrix.identity(n))
        R, piv = aug.rref()
        if piv[:n] != tuple(range(n)) or len(piv) < n:
            raise ZeroDivisionError("matrix is singular")
        return R.submatrix(range(n), range(n, 2 * n))

    def is_invertible(self) -> bool:
        return self.is_square() and self.rank() == self.rows

    def solve(self, b: Sequence):
        """One solution of M x = b, or None when inconsistent."""
        bcol = Matrix.from_columns([b])
        R, piv = self.hstack(bcol).rref()
        if self.cols in piv:
            return None
        x = [ZERO] * self.cols
        for i, p in enumerate(piv):
            x[p] = R[i, self.cols]
        return tuple(x)

    # -- spectral helpers ---------------------------------------------------

    def char_poly(self):
        """Monic characteristic polynomial by the Faddeev-LeVerrier recursion."""
        from .polynomial import Polynomial

        if not self.is_square():
            raise ValueError("characteristic polynomial of non-square matrix")
        n = self.rows
        coeffs = [ZERO] * (n + 1)
        coeffs[n] = ONE
        ident = Matrix.identity(n)
        M = Matrix.zeros(n)
        c = ONE
        for k in range(1, n + 1):
            M = self @ M + ident * c
            c = -(self @ M).trace() / k
            coeffs[n - k] = c
        return Polynomial(coeffs)

    def is_nilpotent(self) -> bool:
        if not self.is_square():
            return False
        return (self ** self.rows).is_zero()

    def __str__(self):
        cells = [[str(x) for x in r] for r in self._e]
        w = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[" + "  ".join(c.rjust(w) for c in r) + "]" for r in cells)

    def __repr__(self):
        return f"Matrix({[[str(x) for x in r] for r in self._e]!r})"


# ---------------------------------------------------------------------------
# vector helpers


def span_rank(vectors: Sequence[Sequence]) -> int:
    if not vectors:
        return 0
    return Matrix.from_columns(vectors).rank()


def extend_basis(base: Sequence[Sequence], candidates: Sequence[Sequence]) -> list:
    """Greedily pick candidates that are independent modulo span(base)."""
    chosen = []
    cur = list(base)
    r = span_rank(cur)
    for v in candidates:
        trial = cur + [v]
        rt = span_rank(trial)
        if rt > r:
            cur, r = trial, rt
            chosen.append(tuple(v))
    return chosen


def in_span(v: Sequence, vectors: Sequence[Sequence]) -> bool:
    if not vectors:
        return all(x.is_zero() for x in v)
    return Matrix.from_columns(vectors).solve(v) is not None


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_scale(u, k):
    k = _s(k)
    return tuple(a * k for a in u)


def dot(u, v) -> Scalar:
    acc = ZERO
    for a, b in zip(u, v):
        acc = acc + a * b
    return acc


def commutant_basis(mats: Sequence[Matrix]) -> list[Matrix]:
    """Basis of {X : X m = m X for every m}."""
    if not mats:
        raise ValueError("need at least one matrix")
    n = mats[0].rows
    rows = []
    for m in mats:
        for i in range(n):
            for j in range(n):
                row = [ZERO] * (n * n)
                for k in range(n):
                    # (X m)_ij gets X_ik m_kj ; (m X)_ij gets m_ik X_kj
                    if not m[k, j].is_zero():
                        row[i * n + k] = row[i * n + k] + m[k, j]
                    if not m[i, k].is_zero():
                        row[k * n + j] = row[k * n + j] - m[i, k]
                if any(not x.is_zero() for x in row):
                    rows.append(row)
    if not rows:
        return [Matrix.unit(n, i, j) for i in range(n) for j in range(n)]
    # compress before solving
    R, piv = Matrix(rows).rref()
    sys = Matrix([R.row(i) for i in range(len(piv))], cols=n * n) if piv else None
    if sys is None:
        return [Matrix.unit(n, i, j) for i in range(n) for j in range(n)]
    return [Matrix([v[i * n:(i + 1) * n] for i in range(n)]) for v in sys.nullspace()]
