"""Exact rational and integer matrix arithmetic.

This is the bedrock of the package: arbitrary-precision rationals
(``fractions.Fraction``), dense square rational matrices (``MatQ``) and
integer matrices (``MatZ``), with exact determinants, inverses, Hermite
normal forms and LDL^T factorizations.  Nothing in this module rounds;
floating point belongs to the explicitly metric outputs elsewhere.

All values are immutable after construction and all operations are pure.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, NotSymmetric, PivotBreakdown, SingularMatrix

# The scalar of the exact layer.  Fraction already guarantees the invariants
# we need: positive denominator and gcd(|num|, den) = 1 after construction.
Rational = Fraction

# Inverses switch from adjugate/Cramer to straight elimination above this size.
_ADJUGATE_LIMIT = 6


def _frac(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floating-point entries are not allowed in exact matrices")
    return Fraction(x)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with x*a + y*b = g = gcd(a, b), g >= 0."""
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        g, x, y = -g, -x, -y
    return g, x, y


def _int_det_bareiss(a: list[list[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination.

    Mutates its argument.  Every division below is exact, which keeps the
    intermediate entries as small as minors of the input instead of the
    exponential growth naive elimination would produce.
    """
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i = a[i]
            row_k = a[k]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


class MatQ:
    """Immutable n-by-n matrix of exact rationals, stored row-major."""

    __slots__ = ("n", "rows")

    def __init__(self, rows: Sequence[Sequence]):
        data = tuple(tuple(_frac(x) for x in row) for row in rows)
        n = len(data)
        if n < 1 or any(len(row) != n for row in data):
            raise ValueError("matrix must be square with n >= 1")
        self.n = n
        self.rows = data

    @classmethod
    def identity(cls, n: int) -> "MatQ":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence]) -> "MatQ":
        return cls(cols).transpose()

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.rows)

    def transpose(self) -> "MatQ":
        return MatQ(tuple(zip(*self.rows)))

    def __eq__(self, other) -> bool:
        return isinstance(other, MatQ) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.rows)
        return f"MatQ([{body}])"

    def __add__(self, other: "MatQ") -> "MatQ":
        self._check_same_size(other)
        return MatQ([[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other: "MatQ") -> "MatQ":
        self._check_same_size(other)
        return MatQ([[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __neg__(self) -> "MatQ":
        return MatQ([[-x for x in row] for row in self.rows])

    def __rmul__(self, c) -> "MatQ":
        c = _frac(c)
        return MatQ([[c * x for x in row] for row in self.rows])

    def __matmul__(self, other: "MatQ") -> "MatQ":
        self._check_same_size(other)
        cols = tuple(zip(*other.rows))
        return MatQ([[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows])

    def _check_same_size(self, other: "MatQ") -> None:
        if not isinstance(other, MatQ):
            raise TypeError(f"expected MatQ, got {type(other).__name__}")
        if self.n != other.n:
            raise DimensionMismatch(f"matrix sizes differ: {self.n} vs {other.n}")

    def mul_vec(self, v: Sequence) -> tuple[Fraction, ...]:
        if len(v) != self.n:
            raise DimensionMismatch(f"vector length {len(v)} does not match matrix size {self.n}")
        w = tuple(_frac(x) for x in v)
        return tuple(sum(a * b for a, b in zip(row, w)) for row in self.rows)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.rows for x in row)

    def to_matz(self) -> "MatZ":
        if not self.is_integral():
            raise ValueError("matrix has non-integer entries")
        return MatZ([[x.numerator for x in row] for row in self.rows])

    def det(self) -> Fraction:
        """Exact determinant: Bareiss elimination on a common-denominator integer lift."""
        d = math.lcm(*[x.denominator for row in self.rows for x in row])
        lift = [[int(x * d) for x in row] for row in self.rows]
        return Fraction(_int_det_bareiss(lift), d**self.n)

    def inverse(self) -> "MatQ":
        """Exact inverse; adjugate/Cramer for small sizes, elimination above."""
        d = self.det()
        if d == 0:
            raise SingularMatrix("matrix has determinant 0")
        if self.n <= _ADJUGATE_LIMIT:
            return self._inverse_adjugate(d)
        return self._inverse_elimination()

    def _minor(self, i: int, j: int) -> "MatQ":
        return MatQ([
            [x for c, x in enumerate(row) if c != j]
            for r, row in enumerate(self.rows)
            if r != i
        ])

    def _inverse_adjugate(self, d: Fraction) -> "MatQ":
        n = self.n
        if n == 1:
            return MatQ([[1 / d]])
        inv = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                cof = self._minor(i, j).det()
                if (i + j) % 2:
                    cof = -cof
                inv[j][i] = cof / d
        return MatQ(inv)

    def _inverse_elimination(self) -> "MatQ":
        n = self.n
        a = [list(row) for row in self.rows]
        inv = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
        for col in range(n):
            piv = next(r for r in range(col, n) if a[r][col] != 0)
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                inv[col], inv[piv] = inv[piv], inv[col]
            p = a[col][col]
            a[col] = [x / p for x in a[col]]
            inv[col] = [x / p for x in inv[col]]
            for r in range(n):
                if r == col or a[r][col] == 0:
                    continue
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
        return MatQ(inv)


class MatZ:
    """Immutable n-by-n matrix of arbitrary-precision integers."""

    __slots__ = ("n", "rows")

    def __init__(self, rows: Sequence[Sequence[int]]):
        data = []
        for row in rows:
            out = []
            for x in row:
                if isinstance(x, Fraction):
                    if x.denominator != 1:
                        raise ValueError("MatZ entries must be integers")
                    x = x.numerator
                if not isinstance(x, int) or isinstance(x, bool):
                    raise ValueError("MatZ entries must be integers")
                out.append(x)
            data.append(tuple(out))
        n = len(data)
        if n < 1 or any(len(row) != n for row in data):
            raise ValueError("matrix must be square with n >= 1")
        self.n = n
        self.rows = tuple(data)

    @classmethod
    def identity(cls, n: int) -> "MatZ":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def transpose(self) -> "MatZ":
        return MatZ(tuple(zip(*self.rows)))

    def __matmul__(self, other: "MatZ") -> "MatZ":
        if not isinstance(other, MatZ):
            raise TypeError(f"expected MatZ, got {type(other).__name__}")
        if self.n != other.n:
            raise DimensionMismatch(f"matrix sizes differ: {self.n} vs {other.n}")
        cols = tuple(zip(*other.rows))
        return MatZ([[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows])

    def __eq__(self, other) -> bool:
        return isinstance(other, MatZ) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"MatZ({[list(row) for row in self.rows]})"

    def det(self) -> int:
        return _int_det_bareiss([list(row) for row in self.rows])

    def to_matq(self) -> MatQ:
        return MatQ(self.rows)

    def mul_vec(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.n:
            raise DimensionMismatch(f"vector length {len(v)} does not match matrix size {self.n}")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.rows)


def det(m: MatQ) -> Fraction:
    return m.det()


def inverse(m: MatQ) -> MatQ:
    return m.inverse()


def hnf(m: MatZ) -> MatZ:
    """Column-style Hermite normal form of a nonsingular integer matrix.

    The result H is reachable from m by unimodular column operations (so both
    generate the same column lattice), is lower triangular with positive
    diagonal, and has every entry left of a diagonal pivot reduced into
    [0, pivot).  These conditions pin H down uniquely, which is what makes it
    usable as a canonical form.
    """
    if m.det() == 0:
        raise SingularMatrix("matrix has determinant 0")
    n = m.n
    a = [list(row) for row in m.rows]
    for i in range(n):
        # gcd-fold everything in row i at columns >= i into column i
        for j in range(i + 1, n):
            if a[i][j] == 0:
                continue
            p, q = a[i][i], a[i][j]
            g, u, v = _xgcd(p, q)
            ps, qs = p // g, q // g
            for r in range(n):
                ci, cj = a[r][i], a[r][j]
                a[r][i] = u * ci + v * cj
                a[r][j] = ps * cj - qs * ci
        if a[i][i] < 0:
            for r in range(n):
                a[r][i] = -a[r][i]
        # reduce the entries left of the pivot into [0, pivot)
        piv = a[i][i]
        for j in range(i):
            f = a[i][j] // piv
            if f:
                for r in range(n):
                    a[r][j] -= f * a[r][i]
    return MatZ(a)


def ldl(s: MatQ) -> tuple[MatQ, tuple[Fraction, ...]]:
    """Exact LDL^T factorization of a symmetric rational matrix.

    Returns (L, D) with S = L * diag(D) * L^T and L unit lower triangular.
    A zero pivot is tolerated only when its whole residual column vanishes;
    otherwise no such factorization exists without pivoting and
    PivotBreakdown is raised.  The pivot signs in D decide positive
    definiteness exactly, which is how the rest of the library tests it.
    """
    if s != s.transpose():
        raise NotSymmetric("matrix is not symmetric")
    n = s.n
    low = [[Fraction(0)] * n for _ in range(n)]
    diag: list[Fraction] = []
    for j in range(n):
        dj = s.rows[j][j] - sum(low[j][k] * low[j][k] * diag[k] for k in range(j))
        diag.append(dj)
        low[j][j] = Fraction(1)
        for i in range(j + 1, n):
            r = s.rows[i][j] - sum(low[i][k] * low[j][k] * diag[k] for k in range(j))
            if dj == 0:
                if r != 0:
                    raise PivotBreakdown(
                        f"non-positive pivot 0 at index {j} with nonzero residual; "
                        "matrix is not positive definite"
                    )
                low[i][j] = Fraction(0)
            else:
                low[i][j] = r / dj
    return MatQ(low), tuple(diag)


def is_positive_definite(s: MatQ) -> bool:
    """Exact positive-definiteness test via the signs of the LDL^T pivots."""
    try:
        _, diag = ldl(s)
    except PivotBreakdown:
        return False
    return all(d > 0 for d in diag)
