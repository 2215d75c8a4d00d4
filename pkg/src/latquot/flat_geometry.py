"""Flat metric structure of lattice quotients.

Everything metric about R^n / L is encoded by the Gram form of the basis:
squared lengths of closed geodesics (one homotopy class per lattice vector),
the angles at which they meet, the injectivity radius of the quotient map,
and isometry of two quotients by an ambient rotation.  Minimality claims are
exact: the enumeration runs over the rational LDL^T factorization of the
Gram form, never over floating-point approximations.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import (
    DimensionMismatch,
    DimensionTooLarge,
    LatticeMismatch,
    NonPositiveBound,
    NotPositiveDefinite,
    NotSymmetric,
    ZeroVector,
)
from .exactnum import MatQ, MatZ, is_positive_definite, ldl
from .lattice_core import Lattice, equals

_ISOMETRY_MAX_DIM = 4


class GramForm:
    """Symmetric positive-definite form basis^T * basis; all metric data."""

    __slots__ = ("n", "matrix")

    def __init__(self, matrix: MatQ):
        if matrix != matrix.transpose():
            raise NotSymmetric("Gram matrix must be symmetric")
        if not is_positive_definite(matrix):
            raise NotPositiveDefinite("Gram matrix must be positive definite")
        self.n = matrix.n
        self.matrix = matrix

    def __eq__(self, other) -> bool:
        return isinstance(other, GramForm) and self.matrix == other.matrix

    def __repr__(self) -> str:
        return f"GramForm({self.matrix!r})"


class LatticeVector:
    """An integer combination of the basis: the homotopy class of a closed geodesic."""

    __slots__ = ("lattice", "coeffs")

    def __init__(self, lattice: Lattice, coeffs: Sequence[int]):
        cs = []
        for c in coeffs:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise ValueError("lattice vector coefficients must be integers")
                c = c.numerator
            if not isinstance(c, int) or isinstance(c, bool):
                raise ValueError("lattice vector coefficients must be integers")
            cs.append(c)
        if len(cs) != lattice.n:
            raise DimensionMismatch(
                f"coefficient length {len(cs)} does not match dimension {lattice.n}"
            )
        self.lattice = lattice
        self.coeffs = tuple(cs)

    def ambient(self) -> tuple[Fraction, ...]:
        return self.lattice.basis.mul_vec(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LatticeVector):
            return NotImplemented
        if self.lattice is other.lattice:
            return self.coeffs == other.coeffs
        if self.lattice.n != other.lattice.n or not equals(self.lattice, other.lattice):
            return False
        return self.ambient() == other.ambient()

    def __repr__(self) -> str:
        return f"LatticeVector({self.lattice!r}, {list(self.coeffs)})"


def gram(lattice: Lattice) -> GramForm:
    """The Gram form basis^T * basis of the lattice basis."""
    return GramForm(lattice.gram_matrix())


def squared_length(v: LatticeVector) -> Fraction:
    """Exact squared length of the geodesic class: coeffs^T G coeffs."""
    return _form_value(v.lattice.gram_matrix(), v.coeffs, v.coeffs)


def _form_value(g: MatQ, a: Sequence, b: Sequence) -> Fraction:
    gb = g.mul_vec(b)
    return sum((x * y for x, y in zip(a, gb)), Fraction(0))


def _floor_sqrt(r: Fraction) -> int:
    """Largest integer s with s*s <= r, for rational r >= 0."""
    return math.isqrt(r.numerator // r.denominator)


def _nearest_int(r: Fraction) -> int:
    return math.floor(r + Fraction(1, 2))


def _size_reduce(gram_matrix: MatQ) -> tuple[MatQ, MatZ]:
    """Cheap unimodular column reduction of a Gram form.

    Returns (G', V) with G' = V^T G V and V unimodular, where repeated
    pairwise reduction steps shrink the diagonal.  Only a speedup for the
    enumeration windows; results are mapped back through V, so semantics
    never depend on how far the reduction got.
    """
    n = gram_matrix.n
    g = [list(row) for row in gram_matrix.rows]
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(32):
        changed = False
        for i in range(n):
            for j in range(n):
                if i == j or g[j][j] == 0:
                    continue
                k = _nearest_int(g[i][j] / g[j][j])
                if k == 0:
                    continue
                new_ii = g[i][i] - 2 * k * g[i][j] + k * k * g[j][j]
                if new_ii >= g[i][i]:
                    continue
                # column op c_i <- c_i - k c_j on the form and on V
                for r in range(n):
                    if r != i:
                        g[r][i] -= k * g[r][j]
                        g[i][r] = g[r][i]
                g[i][i] = new_ii
                for r in range(n):
                    v[r][i] -= k * v[r][j]
                changed = True
        if not changed:
            break
    return MatQ(g), MatZ(v)


def _enumerate_bounded(gram_matrix: MatQ, bound: Fraction) -> Iterator[tuple[tuple[int, ...], Fraction]]:
    """All nonzero integer vectors with value <= bound, one per +- pair.

    With G = L diag(D) L^T the form splits as sum_k D_k (x_k + t_k)^2 where
    t_k depends only on the coordinates above k, so choosing x_{n-1} first
    and descending gives exact interval bounds at every level.  The
    representative of each +-c pair is the one whose highest-index nonzero
    coordinate is positive, obtained for free by restricting the first
    not-yet-nonzero coordinate to be >= 0.
    """
    if bound < 0:
        return
    lmat, diag = ldl(gram_matrix)
    n = gram_matrix.n
    lrows = lmat.rows
    coeff = [0] * n

    def descend(k: int, remaining: Fraction, acc: Fraction, zeros_above: bool):
        if k < 0:
            if acc > 0:
                yield tuple(coeff), acc
            return
        t = sum((lrows[j][k] * coeff[j] for j in range(k + 1, n)), Fraction(0))
        dk = diag[k]
        radius = _floor_sqrt(remaining / dk) + 1
        center = math.floor(-t)
        lo = max(0, center - radius) if zeros_above else center - radius
        for x in range(lo, center + radius + 1):
            term = dk * (x + t) ** 2
            if term > remaining:
                continue
            coeff[k] = x
            yield from descend(k - 1, remaining - term, acc + term, zeros_above and x == 0)
        coeff[k] = 0

    yield from descend(n - 1, bound, Fraction(0), True)


def _canonical_sign(coeffs: tuple[int, ...]) -> tuple[int, ...]:
    for c in reversed(coeffs):
        if c > 0:
            return coeffs
        if c < 0:
            return tuple(-x for x in coeffs)
    return coeffs


def shortest_vectors(lattice: Lattice) -> list[LatticeVector]:
    """All shortest nonzero vector classes, one per +- pair, in coefficient order.

    Exact: the initial bound is the smallest diagonal entry of the reduced
    Gram form (always attained) and the enumeration below it is complete.
    """
    reduced, v = _size_reduce(lattice.gram_matrix())
    start = min(reduced.rows[i][i] for i in range(reduced.n))
    best: Fraction | None = None
    found: list[tuple[int, ...]] = []
    for coeffs, value in _enumerate_bounded(reduced, start):
        if best is None or value < best:
            best = value
            found = [coeffs]
        elif value == best:
            found.append(coeffs)
    out = sorted(_canonical_sign(v.mul_vec(c)) for c in found)
    return [LatticeVector(lattice, c) for c in out]


def geodesic_spectrum(lattice: Lattice, bound) -> list[tuple[Fraction, int]]:
    """Squared lengths <= bound with multiplicities (each +- pair counted once)."""
    bound = Fraction(bound)
    if bound <= 0:
        raise NonPositiveBound("spectrum bound must be positive")
    reduced, _ = _size_reduce(lattice.gram_matrix())
    tally: dict[Fraction, int] = {}
    for _, value in _enumerate_bounded(reduced, bound):
        tally[value] = tally.get(value, 0) + 1
    return sorted(tally.items())


def angle(v: LatticeVector, w: LatticeVector) -> float:
    """Angle between two geodesic direction vectors, in radians.

    Closed flat geodesics have constant direction, so the angle between two
    homotopy classes is well defined; this is the floating rendering of the
    exact value exposed by ``signed_cos_squared``.
    """
    num, den = _cos_data(v, w)
    c = float(num) / math.sqrt(float(den))
    c = max(-1.0, min(1.0, c))
    return math.acos(c)


def signed_cos_squared(v: LatticeVector, w: LatticeVector) -> Fraction:
    """Exact sign(cos) * cos^2 of the angle between two geodesic classes."""
    num, den = _cos_data(v, w)
    value = num * num / den
    return value if num >= 0 else -value


def _cos_data(v: LatticeVector, w: LatticeVector) -> tuple[Fraction, Fraction]:
    if v.lattice.n != w.lattice.n or not equals(v.lattice, w.lattice):
        raise LatticeMismatch("vectors belong to different lattices")
    if not any(v.coeffs) or not any(w.coeffs):
        raise ZeroVector("angle is undefined for the zero vector")
    g = v.lattice.gram_matrix()
    wc = w.coeffs if v.lattice is w.lattice else _reexpress(w, v.lattice)
    num = _form_value(g, v.coeffs, wc)
    den = _form_value(g, v.coeffs, v.coeffs) * _form_value(g, wc, wc)
    return num, den


def _reexpress(w: LatticeVector, lattice: Lattice) -> tuple[int, ...]:
    coords = lattice.basis.inverse().mul_vec(w.ambient())
    return tuple(c.numerator for c in coords)


def injectivity_radius(lattice: Lattice) -> tuple[Fraction, float]:
    """(r^2 exact, r float) for the largest r with the quotient map injective on r-balls.

    r is half the minimal geodesic length.
    """
    shortest = shortest_vectors(lattice)
    lam_sq = squared_length(shortest[0])
    return lam_sq / 4, math.sqrt(float(lam_sq)) / 2


def is_orthogonal(t: MatQ) -> bool:
    """True iff t^T t is exactly the identity."""
    return t.transpose() @ t == MatQ.identity(t.n)


def _vectors_with_norm(gram_matrix: MatQ, value: Fraction) -> list[tuple[int, ...]]:
    """Both signs of every integer vector with exact form value ``value``."""
    if value <= 0:
        return []
    reduced, v = _size_reduce(gram_matrix)
    reps = [v.mul_vec(c) for c, q in _enumerate_bounded(reduced, value) if q == value]
    return sorted(reps + [tuple(-x for x in c) for c in reps])


def isometric_mod_rotation(l1: Lattice, l2: Lattice, oriented: bool = False) -> MatZ | None:
    """Search for a unimodular U with U^T G1 U = G2, exactly.

    Such a U certifies an ambient orthogonal map taking the first lattice
    onto the second, i.e. that the two quotient tori are isometric by a
    rotation.  The search matches the second basis's Gram data against
    enumerated vectors of the first lattice, column by column.

    With ``oriented`` the witness must additionally have determinant +1 and
    the implied ambient map must preserve orientation.
    """
    if l1.n != l2.n:
        raise DimensionMismatch(f"lattice dimensions differ: {l1.n} vs {l2.n}")
    if l1.n > _ISOMETRY_MAX_DIM:
        raise DimensionTooLarge(f"isometry search is limited to dimension {_ISOMETRY_MAX_DIM}")
    g1 = l1.gram_matrix()
    g2 = l2.gram_matrix()
    if g1.det() != g2.det():
        return None
    if oriented and (l1.basis.det() > 0) != (l2.basis.det() > 0):
        return None
    n = l1.n

    candidates: dict[Fraction, list[tuple[int, ...]]] = {}
    for j in range(n):
        value = g2.rows[j][j]
        if value not in candidates:
            candidates[value] = _vectors_with_norm(g1, value)
        if not candidates[value]:
            return None

    cols: list[tuple[int, ...]] = []

    def backtrack(j: int) -> MatZ | None:
        if j == n:
            u = MatZ([[cols[c][r] for c in range(n)] for r in range(n)])
            d = u.det()
            if abs(d) != 1 or (oriented and d != 1):
                return None
            return u
        target_row = g2.rows[j]
        for cand in candidates[g2.rows[j][j]]:
            if all(_form_value(g1, cols[i], cand) == target_row[i] for i in range(j)):
                cols.append(cand)
                result = backtrack(j + 1)
                cols.pop()
                if result is not None:
                    return result
        return None

    return backtrack(0)
