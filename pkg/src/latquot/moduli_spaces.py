"""Coset descriptions of spaces of lattices and of quadratic forms.

The map T -> T^T T identifies invertible matrices modulo left multiplication
by orthogonal ones with positive-definite symmetric forms; cutting down to
determinant 1 and integer stabilizers gives the space of unit-covolume
lattices with orientation data, and rotation equivalence of those lattices
is decided by the exact arithmetic isometry search.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    CovolumeMismatch,
    NotPositiveDefinite,
    NotSymmetric,
    PivotBreakdown,
    SingularMatrix,
)
from .exactnum import MatQ, MatZ, is_positive_definite, ldl
from .flat_geometry import is_orthogonal, isometric_mod_rotation
from .lattice_core import Lattice, covolume


class PosDefForm:
    """A symmetric positive-definite rational matrix (exact pivot test)."""

    __slots__ = ("n", "matrix")

    def __init__(self, matrix: MatQ):
        if matrix != matrix.transpose():
            raise NotSymmetric("form must be symmetric")
        if not is_positive_definite(matrix):
            raise NotPositiveDefinite("form must be positive definite")
        self.n = matrix.n
        self.matrix = matrix

    def __eq__(self, other) -> bool:
        return isinstance(other, PosDefForm) and self.matrix == other.matrix

    def __repr__(self) -> str:
        return f"PosDefForm({self.matrix!r})"


def gram_map(t: MatQ) -> PosDefForm:
    """T -> T^T T; lands in the positive-definite symmetric forms."""
    if t.det() == 0:
        raise SingularMatrix("matrix has determinant 0")
    return PosDefForm(t.transpose() @ t)


def same_left_coset(t1: MatQ, t2: MatQ) -> bool:
    """Whether t2 = R t1 for some orthogonal R.

    Decided two ways, as equality of the Gram images and as orthogonality of
    t2 * t1^-1; the characterizations provably coincide and both are
    computed here as a self-check.
    """
    if t1.det() == 0 or t2.det() == 0:
        raise SingularMatrix("matrices must be invertible")
    by_gram = t1.transpose() @ t1 == t2.transpose() @ t2
    by_factor = is_orthogonal(t2 @ t1.inverse())
    assert by_gram == by_factor
    return by_gram


def posdef_witness(s: PosDefForm | MatQ) -> list[list[float]]:
    """A matrix T with T^T T equal to the form, up to floating square roots.

    Built as sqrt(D) * L^T from the exact LDL^T factorization, so the result
    is upper triangular and the only inexactness is one square root per
    pivot.  This is the module's single floating-point output.
    """
    matrix = s.matrix if isinstance(s, PosDefForm) else s
    try:
        low, diag = ldl(matrix)
    except PivotBreakdown as exc:
        raise NotPositiveDefinite(str(exc)) from exc
    if any(d <= 0 for d in diag):
        raise NotPositiveDefinite("form has a non-positive pivot")
    n = matrix.n
    roots = [math.sqrt(float(d)) for d in diag]
    return [[roots[i] * float(low.rows[j][i]) for j in range(n)] for i in range(n)]


def in_M(s: MatQ) -> bool:
    """Symmetric, positive definite, determinant exactly 1."""
    if s != s.transpose():
        return False
    return is_positive_definite(s) and s.det() == 1


def in_Sigma(u: MatQ) -> bool:
    """Integer entries and determinant exactly 1 (the stabilizer of Z^n in SL)."""
    return u.is_integral() and u.det() == 1


def orientation(a: MatQ) -> int:
    """Sign of the determinant: the orientation datum of a basis."""
    d = a.det()
    if d == 0:
        raise SingularMatrix("matrix has determinant 0")
    return 1 if d > 0 else -1


@dataclass(frozen=True)
class UnitCovolumeForm:
    """Gram form of a lattice together with its unit-covolume normalization.

    ``scale * gram`` is the Gram form of the rescaled lattice whose quotient
    has volume 1.  When the covolume is an n-th power of a rational the
    scale (and hence the normalized form) is also available exactly.
    """

    gram: MatQ
    scale: float
    scale_exact: Fraction | None

    def normalized_float(self) -> list[list[float]]:
        if self.scale_exact is not None:
            return [[float(self.scale_exact * x) for x in row] for row in self.gram.rows]
        return [[self.scale * float(x) for x in row] for row in self.gram.rows]

    def normalized_exact(self) -> MatQ | None:
        if self.scale_exact is None:
            return None
        return self.scale_exact * self.gram


def _nth_root_int(k: int, n: int) -> int | None:
    """The exact integer n-th root of k >= 1, or None if k is not an n-th power."""
    if k == 1:
        return 1
    lo, hi = 1, 1 << (k.bit_length() // n + 1)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**n < k:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo**n == k else None


def unit_covolume_form(lattice: Lattice) -> UnitCovolumeForm:
    """Gram form plus the scalar rescaling it to covolume 1.

    The scalar is covolume^(-2/n): rescaling the basis by covolume^(-1/n)
    multiplies the Gram form by that square.
    """
    g = lattice.gram_matrix()
    vol = covolume(lattice)
    n = lattice.n
    scale = float(vol) ** (-2.0 / n)
    p_root = _nth_root_int(vol.numerator, n)
    q_root = _nth_root_int(vol.denominator, n)
    exact = None
    if p_root is not None and q_root is not None:
        exact = Fraction(q_root, p_root) ** 2
        scale = float(exact)
    return UnitCovolumeForm(gram=g, scale=scale, scale_exact=exact)


def double_coset_equivalent(l1: Lattice, l2: Lattice, oriented: bool = False) -> MatZ | None:
    """Rotation equivalence of two equal-covolume lattices, with witness.

    Delegates to the exact isometry search; with ``oriented`` the witness is
    required to respect orientations on both sides.
    """
    if covolume(l1) != covolume(l2):
        raise CovolumeMismatch("lattices have different covolumes")
    return isometric_mod_rotation(l1, l2, oriented=oriented)
