"""JSON interchange: rationals as "p/q" strings, bit-exact round-trips.

Inputs never contain floating-point numbers.  Rational values are strings
("p" or "p/q" with positive q), integer values are plain JSON integers, and
floats appear only in output fields whose keys end in "_float", rendered to
12 significant digits.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Sequence

from .errors import ParseError, SchemaError, ZeroDenominator
from .exactnum import MatQ, MatZ
from .complex_lattices import ComplexMatrix
from .flat_geometry import LatticeVector
from .lattice_core import Lattice
from .quotient_torus import TorusPoint

_DIGITS = set("0123456789")


def parse_rational(text: str) -> Fraction:
    """Parse "p", "-p" or "p/q" (q a positive integer) into a normalized Fraction."""
    if not isinstance(text, str):
        raise ParseError(f"expected a rational string, got {type(text).__name__}")
    i = 0
    n = len(text)
    if i < n and text[i] in "+-":
        i += 1
    start = i
    while i < n and text[i] in _DIGITS:
        i += 1
    if i == start:
        raise ParseError("expected a digit", offset=i)
    numerator = int(text[:i])
    if i == n:
        return Fraction(numerator)
    if text[i] != "/":
        raise ParseError(f"unexpected character {text[i]!r}", offset=i)
    i += 1
    den_start = i
    while i < n and text[i] in _DIGITS:
        i += 1
    if i == den_start:
        raise ParseError("expected a digit after '/'", offset=i)
    if i != n:
        raise ParseError(f"unexpected character {text[i]!r}", offset=i)
    denominator = int(text[den_start:])
    if denominator == 0:
        raise ZeroDenominator("denominator must be a positive integer")
    return Fraction(numerator, denominator)


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_float(x: float) -> str:
    """Floating output rendering: 12 significant digits."""
    return f"{x:.12g}"


def _rational_from_json(value: Any) -> Fraction:
    if isinstance(value, bool):
        raise SchemaError("expected a rational string or integer, got a boolean")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise SchemaError(f"expected a rational string or integer, got {type(value).__name__}")


def parse_vector(doc: Any) -> tuple[Fraction, ...]:
    if not isinstance(doc, list) or not doc:
        raise SchemaError("vector must be a non-empty array of rationals")
    return tuple(_rational_from_json(x) for x in doc)


def vector_to_json(v: Sequence[Fraction]) -> list[str]:
    return [format_rational(x) for x in v]


def parse_matrix(doc: Any) -> MatQ:
    if not isinstance(doc, list) or not doc or not all(isinstance(row, list) for row in doc):
        raise SchemaError("matrix must be a non-empty array of rows")
    n = len(doc)
    if any(len(row) != n for row in doc):
        raise SchemaError("matrix must be square")
    return MatQ([[_rational_from_json(x) for x in row] for row in doc])


def matrix_to_json(m: MatQ) -> list[list[str]]:
    return [[format_rational(x) for x in row] for row in m.rows]


def matz_to_json(m: MatZ) -> list[list[int]]:
    return [list(row) for row in m.rows]


def parse_lattice(doc: Any) -> Lattice:
    if not isinstance(doc, dict):
        raise SchemaError("lattice must be an object with 'n' and 'basis'")
    try:
        n = doc["n"]
        basis = doc["basis"]
    except KeyError as exc:
        raise SchemaError(f"lattice object is missing key {exc}") from exc
    if not isinstance(n, int) or isinstance(n, bool):
        raise SchemaError("lattice 'n' must be an integer")
    m = parse_matrix(basis)
    if m.n != n:
        raise SchemaError(f"lattice 'n' is {n} but basis is {m.n}x{m.n}")
    return Lattice(m)


def lattice_to_json(lattice: Lattice) -> dict[str, Any]:
    return {"n": lattice.n, "basis": matrix_to_json(lattice.basis)}


def parse_point(doc: Any) -> TorusPoint:
    if not isinstance(doc, dict) or "lattice" not in doc or "coords" not in doc:
        raise SchemaError("torus point must be an object with 'lattice' and 'coords'")
    lattice = parse_lattice(doc["lattice"])
    coords = parse_vector(doc["coords"])
    if any(c < 0 or c >= 1 for c in coords):
        raise SchemaError("torus point coordinates must lie in [0, 1)")
    return TorusPoint(lattice, coords)


def point_to_json(p: TorusPoint) -> dict[str, Any]:
    return {"lattice": lattice_to_json(p.lattice), "coords": vector_to_json(p.coords)}


def parse_lattice_vector(doc: Any) -> LatticeVector:
    if not isinstance(doc, dict) or "lattice" not in doc or "coeffs" not in doc:
        raise SchemaError("lattice vector must be an object with 'lattice' and 'coeffs'")
    lattice = parse_lattice(doc["lattice"])
    coeffs = doc["coeffs"]
    if not isinstance(coeffs, list) or not all(
        isinstance(c, int) and not isinstance(c, bool) for c in coeffs
    ):
        raise SchemaError("lattice vector 'coeffs' must be an array of integers")
    return LatticeVector(lattice, coeffs)


def lattice_vector_to_json(v: LatticeVector) -> dict[str, Any]:
    return {"lattice": lattice_to_json(v.lattice), "coeffs": list(v.coeffs)}


def parse_complex_matrix(doc: Any) -> ComplexMatrix:
    if not isinstance(doc, list) or not doc or not all(isinstance(row, list) for row in doc):
        raise SchemaError("complex matrix must be a non-empty array of rows")
    n = len(doc)
    entries = []
    for row in doc:
        if len(row) != n:
            raise SchemaError("complex matrix must be square")
        out = []
        for cell in row:
            if not isinstance(cell, list) or len(cell) != 2:
                raise SchemaError("complex entries must be two-element [re, im] arrays")
            out.append((_rational_from_json(cell[0]), _rational_from_json(cell[1])))
        entries.append(out)
    return ComplexMatrix(entries)


def complex_matrix_to_json(m: ComplexMatrix) -> list[list[list[str]]]:
    return [[[format_rational(a), format_rational(b)] for a, b in row] for row in m.entries]
