"""The quotient torus R^n / L and the maps between such quotients.

Points are stored by exact fractional coordinates in the lattice basis, so
two points are equal iff their representatives differ by a lattice vector,
with no tolerance anywhere.  The only floating-point operations here are the
angle-style circle parametrization and irrational volume scalings, both
documented as such.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .errors import (
    DegenerateParallelepiped,
    DimensionMismatch,
    LatticeMismatch,
    NonFiniteInput,
    NotLatticePreserving,
    SingularMatrix,
    ZeroScale,
)
from .exactnum import MatQ, MatZ
from .lattice_core import Lattice, covolume, equals


class TorusPoint:
    """A point of R^n / L: fractional coordinates in [0, 1)^n over the basis."""

    __slots__ = ("lattice", "coords")

    def __init__(self, lattice: Lattice, coords: Sequence):
        cs = tuple(Fraction(c) for c in coords)
        if len(cs) != lattice.n:
            raise DimensionMismatch(
                f"coordinate length {len(cs)} does not match dimension {lattice.n}"
            )
        if any(c < 0 or c >= 1 for c in cs):
            raise ValueError("torus coordinates must lie in [0, 1)")
        self.lattice = lattice
        self.coords = cs

    def ambient(self) -> tuple[Fraction, ...]:
        """The canonical representative basis * coords in R^n."""
        return self.lattice.basis.mul_vec(self.coords)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TorusPoint):
            return NotImplemented
        if self.lattice.n != other.lattice.n or not equals(self.lattice, other.lattice):
            return False
        return reduce(self.lattice, other.ambient()).coords == self.coords

    def __repr__(self) -> str:
        return f"TorusPoint({self.lattice!r}, {[str(c) for c in self.coords]})"


def reduce(lattice: Lattice, x: Sequence) -> TorusPoint:
    """Canonical quotient map: send x in R^n to its class modulo the lattice."""
    if len(x) != lattice.n:
        raise DimensionMismatch(f"vector length {len(x)} does not match dimension {lattice.n}")
    coords = lattice.basis.inverse().mul_vec([Fraction(c) for c in x])
    return TorusPoint(lattice, tuple(c % 1 for c in coords))


def torus_add(p: TorusPoint, q: TorusPoint) -> TorusPoint:
    """Group addition on the quotient torus."""
    if p.lattice.n != q.lattice.n or not equals(p.lattice, q.lattice):
        raise LatticeMismatch("points live on quotients by different lattices")
    total = tuple(a + b for a, b in zip(p.ambient(), q.ambient()))
    return reduce(p.lattice, total)


class InducedMap:
    """The map R^n/L1 -> R^n/L2 induced by an ambient A with A(L1) = L2."""

    __slots__ = ("matrix", "source", "target", "witness")

    def __init__(self, matrix: MatQ, source: Lattice, target: Lattice):
        if matrix.n != source.n or source.n != target.n:
            raise DimensionMismatch("matrix and lattice dimensions must all agree")
        if matrix.det() == 0:
            raise SingularMatrix("ambient matrix has determinant 0")
        u = target.basis.inverse() @ matrix @ source.basis
        if not (u.is_integral() and abs(u.det()) == 1):
            raise NotLatticePreserving("ambient matrix does not take the source lattice onto the target")
        self.matrix = matrix
        self.source = source
        self.target = target
        # unimodular coordinate change certifying A(L1) = L2
        self.witness: MatZ = u.to_matz()

    def __repr__(self) -> str:
        return f"InducedMap({self.matrix!r}, {self.source!r}, {self.target!r})"


def make_induced_map(matrix: MatQ, source: Lattice, target: Lattice) -> InducedMap:
    """Validate A(L1) = L2 and build the induced quotient map."""
    return InducedMap(matrix, source, target)


def apply_induced(f: InducedMap, p: TorusPoint) -> TorusPoint:
    """Image of a torus point; independent of the chosen representative."""
    if p.lattice.n != f.source.n or not equals(p.lattice, f.source):
        raise LatticeMismatch("point does not live on the map's source torus")
    return reduce(f.target, f.matrix.mul_vec(p.ambient()))


def compose(f: InducedMap, g: InducedMap) -> InducedMap:
    """The induced map of the composition: first g, then f."""
    if not equals(g.target, f.source):
        raise LatticeMismatch("maps are not composable: target of g differs from source of f")
    return InducedMap(f.matrix @ g.matrix, g.source, f.target)


def circle_map(t) -> tuple[float, float]:
    """The unit-circle parametrization t -> (cos t, sin t).

    This is the explicit n = 1 identification of R / (2*pi)Z with the unit
    circle; it is the one place angles enter in floating point.
    """
    t = float(t)
    if not math.isfinite(t):
        raise NonFiniteInput("circle parameter must be finite")
    return (math.cos(t), math.sin(t))


def volume_scale(f: InducedMap) -> Fraction:
    """|det A|: the exact factor by which the induced map scales volumes."""
    return abs(f.matrix.det())


def volume_of_scaled(lattice: Lattice, c) -> float:
    """Volume of the quotient by c*L for a real (possibly irrational) c.

    The only sanctioned irrational-scaling path; everything rational stays in
    the exact layer via ``lattice_core.scale``.
    """
    c = float(c)
    if c == 0:
        raise ZeroScale("scaling a lattice by 0 is not allowed")
    return abs(c) ** lattice.n * float(covolume(lattice))


def parallelepiped_image_volume(f: InducedMap, edge_coords: MatQ) -> Fraction:
    """Exact volume of the image of a small parallelepiped under the map.

    The columns of ``edge_coords`` are edge vectors in fractional coordinates
    of the source lattice, so the parallelepiped has volume
    |det(basis1 * edge_coords)| upstairs and the image scales it by |det A|.
    """
    if edge_coords.n != f.source.n:
        raise DimensionMismatch("edge matrix size does not match the source dimension")
    if any(x < 0 or x >= 1 for row in edge_coords.rows for x in row):
        raise ValueError("edge coordinates must lie in [0, 1)")
    d = edge_coords.det()
    if d == 0:
        raise DegenerateParallelepiped("edge vectors are linearly dependent")
    return abs(f.matrix.det() * f.source.basis.det() * d)
