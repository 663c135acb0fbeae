"""Exact rational linear algebra: vectors, matrices, quadratic forms, lattice enumeration.

Everything is arbitrary-precision rational; there is no floating point
anywhere.  Matrices are immutable and hashable so that finite matrix groups
can be deduplicated exactly.  Entries that happen to be integers are stored
as plain ints (same hash and equality as the equivalent Fraction, much
cheaper arithmetic in group closures).
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil, floor, isqrt
from typing import Iterable, Optional, Sequence

Num = int | Fraction
Vector = tuple[Num, ...]


def fr(x) -> Num:
    """Coerce to an exact rational, collapsing integral values to int."""
    if isinstance(x, int):
        return x
    f = Fraction(x)
    return f.numerator if f.denominator == 1 else f


def vec(items: Iterable) -> Vector:
    return tuple(fr(x) for x in items)


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_neg(u: Vector) -> Vector:
    return tuple(-a for a in u)


def vec_scale(c: Num, u: Vector) -> Vector:
    return tuple(fr(c * a) for a in u)


def vec_dot(u: Vector, v: Vector) -> Num:
    return sum(a * b for a, b in zip(u, v, strict=True))


def is_zero_vec(u: Vector) -> bool:
    return all(a == 0 for a in u)


class Mat:
    """Immutable exact rational matrix."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]) -> None:
        rs = tuple(vec(r) for r in rows)
        if not rs or not rs[0]:
            raise ValueError("matrix must be nonempty")
        if any(len(r) != len(rs[0]) for r in rs):
            raise ValueError("matrix rows must all have the same length")
        object.__setattr__(self, "rows", rs)

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, cols: Sequence[Vector]) -> "Mat":
        return cls([[c[i] for c in cols] for i in range(len(cols[0]))])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def entry(self, i: int, j: int) -> Num:
        return self.rows[i][j]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, Mat) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Mat({[list(r) for r in self.rows]})"

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        bt = tuple(zip(*other.rows))
        return Mat([[sum(a * b for a, b in zip(row, col)) for col in bt] for row in self.rows])

    def __add__(self, other: "Mat") -> "Mat":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("dimension mismatch")
        return Mat([vec_add(r, s) for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "Mat") -> "Mat":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("dimension mismatch")
        return Mat([vec_sub(r, s) for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> "Mat":
        return Mat([vec_neg(r) for r in self.rows])

    def scale(self, c: Num) -> "Mat":
        return Mat([vec_scale(c, r) for r in self.rows])

    def apply(self, v: Vector) -> Vector:
        """Matrix times column vector."""
        if len(v) != self.ncols:
            raise ValueError("dimension mismatch")
        return tuple(fr(sum(a * b for a, b in zip(row, v))) for row in self.rows)

    def transpose(self) -> "Mat":
        return Mat(list(zip(*self.rows)))

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_identity(self) -> bool:
        return self.is_square() and all(
            self.rows[i][j] == (1 if i == j else 0) for i in range(self.nrows) for j in range(self.ncols)
        )

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self.rows[i][j] == self.rows[j][i] for i in range(self.nrows) for j in range(i + 1, self.ncols)
        )

    def det(self) -> Num:
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        n = self.nrows
        a = [[Fraction(x) for x in row] for row in self.rows]
        det = Fraction(1)
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col] != 0), None)
            if piv is None:
                return 0
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                det = -det
            det *= a[col][col]
            inv = 1 / a[col][col]
            for r in range(col + 1, n):
                if a[r][col] != 0:
                    f = a[r][col] * inv
                    for c in range(col, n):
                        a[r][c] -= f * a[col][c]
        return fr(det)

    def inverse(self) -> "Mat":
        if not self.is_square():
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        a = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
             for i, row in enumerate(self.rows)]
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col] != 0), None)
            if piv is None:
                raise ValueError("singular matrix")
            a[col], a[piv] = a[piv], a[col]
            inv = 1 / a[col][col]
            a[col] = [x * inv for x in a[col]]
            for r in range(n):
                if r != col and a[r][col] != 0:
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return Mat([row[n:] for row in a])

    def _rref(self, rhs: Optional[Vector] = None):
        """Row-reduce; returns (reduced rows, pivot columns, reduced rhs)."""
        a = [[Fraction(x) for x in row] for row in self.rows]
        b = [Fraction(x) for x in rhs] if rhs is not None else None
        pivots: list[int] = []
        r = 0
        for col in range(self.ncols):
            piv = next((i for i in range(r, self.nrows) if a[i][col] != 0), None)
            if piv is None:
                continue
            a[r], a[piv] = a[piv], a[r]
            if b is not None:
                b[r], b[piv] = b[piv], b[r]
            inv = 1 / a[r][col]
            a[r] = [x * inv for x in a[r]]
            if b is not None:
                b[r] *= inv
            for i in range(self.nrows):
                if i != r and a[i][col] != 0:
                    f = a[i][col]
                    a[i] = [x - f * y for x, y in zip(a[i], a[r])]
                    if b is not None:
                        b[i] -= f * b[r]
            pivots.append(col)
            r += 1
            if r == self.nrows:
                break
        return a, pivots, b

    def rank(self) -> int:
        _, pivots, _ = self._rref()
        return len(pivots)

    def solve(self, rhs: Vector) -> Optional[Vector]:
        """One exact solution of self @ x = rhs, or None if inconsistent."""
        if len(rhs) != self.nrows:
            raise ValueError("dimension mismatch")
        a, pivots, b = self._rref(rhs)
        assert b is not None
        for i in range(len(pivots), self.nrows):
            if b[i] != 0:
                return None
        x = [Fraction(0)] * self.ncols
        for r, col in enumerate(pivots):
            x[col] = b[r]
        return vec(x)

    def kernel(self) -> list[Vector]:
        """Basis of the null space."""
        a, pivots, _ = self._rref()
        free = [c for c in range(self.ncols) if c not in pivots]
        basis = []
        for fcol in free:
            v = [Fraction(0)] * self.ncols
            v[fcol] = Fraction(1)
            for r, col in enumerate(pivots):
                v[col] = -a[r][fcol]
            basis.append(vec(v))
        return basis


class QuadForm:
    """Symmetric bilinear form given by its Gram matrix."""

    __slots__ = ("gram",)

    def __init__(self, gram: Mat) -> None:
        if not gram.is_symmetric():
            raise ValueError("gram matrix must be symmetric")
        object.__setattr__(self, "gram", gram)

    @property
    def dim(self) -> int:
        return self.gram.nrows

    def pair(self, u: Vector, v: Vector) -> Num:
        return fr(vec_dot(u, self.gram.apply(v)))

    def value(self, v: Vector) -> Num:
        return self.pair(v, v)

    def is_positive_definite(self) -> bool:
        """All leading principal minors positive."""
        for k in range(1, self.dim + 1):
            minor = Mat([r[:k] for r in self.gram.rows[:k]]).det()
            if minor <= 0:
                return False
        return True

    def _ldl(self):
        """Rational Cholesky: value(x) = sum_i d[i]*(x[i] + sum_{j>i} u[i][j]*x[j])^2."""
        n = self.dim
        q = [[Fraction(x) for x in row] for row in self.gram.rows]
        d = [Fraction(0)] * n
        u = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            d[i] = q[i][i]
            if d[i] <= 0:
                raise ValueError("form is not positive-definite")
            for j in range(i + 1, n):
                u[i][j] = q[i][j] / d[i]
            for k in range(i + 1, n):
                for l in range(k, n):
                    q[k][l] -= q[k][i] * q[i][l] / d[i]
                    q[l][k] = q[k][l]
        return d, u

    def __eq__(self, other) -> bool:
        return isinstance(other, QuadForm) and self.gram == other.gram

    def __hash__(self) -> int:
        return hash(self.gram)

    def __repr__(self) -> str:
        return f"QuadForm({self.gram!r})"


def _sqrt_upper(t: Fraction) -> Fraction:
    """An exact rational upper bound for sqrt(t), t >= 0."""
    return Fraction(isqrt(t.numerator * t.denominator) + 1, t.denominator)


def _enumerate(form: QuadForm, bound: Fraction, exact: bool) -> list[tuple[int, ...]]:
    d, u = form._ldl()
    n = form.dim
    out: list[tuple[int, ...]] = []
    x = [0] * n

    def descend(i: int, rem: Fraction) -> None:
        if i < 0:
            if not exact or rem == 0:
                out.append(tuple(x))
            return
        c = sum(u[i][j] * x[j] for j in range(i + 1, n))
        s = _sqrt_upper(rem / d[i])
        lo = ceil(-c - s)
        hi = floor(-c + s)
        for xi in range(lo, hi + 1):
            contrib = d[i] * (xi + c) ** 2
            if contrib <= rem:
                x[i] = xi
                descend(i - 1, rem - contrib)
        x[i] = 0

    descend(n - 1, Fraction(bound))
    return sorted(out)


def enumerate_level_set(form: QuadForm, level) -> list[tuple[int, ...]]:
    """All integer vectors v with form.value(v) == level, sorted lexicographically.

    Finiteness is guaranteed by positive-definiteness; the search uses exact
    rational diagonalization to bound every coordinate, so nothing is missed.
    """
    lvl = Fraction(level)
    if lvl < 0:
        raise ValueError("level must be nonnegative")
    if not form.is_positive_definite():
        raise ValueError("form is not positive-definite")
    return _enumerate(form, lvl, exact=True)


def enumerate_ball(form: QuadForm, bound) -> list[tuple[int, ...]]:
    """All integer vectors v with form.value(v) <= bound, sorted lexicographically."""
    b = Fraction(bound)
    if b < 0:
        return []
    if not form.is_positive_definite():
        raise ValueError("form is not positive-definite")
    return _enumerate(form, b, exact=False)
