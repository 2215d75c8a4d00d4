"""Command-line front end.

Each subcommand wraps exactly one library operation: inputs are JSON files
(rationals as strings, never floats), the output is a single JSON document
on stdout (or --output), and identical inputs produce byte-identical output.
Exit codes: 0 success, 1 domain error, 2 parse/schema failure; errors are
emitted as {"error": {"kind", "message", "input"}}.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any

from . import complex_lattices, flat_geometry, lattice_core, moduli_spaces, quotient_torus
from .errors import InputError, LatquotError, SchemaError
from .serialize import (
    complex_matrix_to_json,
    format_float,
    format_rational,
    lattice_to_json,
    matrix_to_json,
    matz_to_json,
    parse_complex_matrix,
    parse_lattice,
    parse_lattice_vector,
    parse_matrix,
    parse_point,
    parse_rational,
    parse_vector,
    point_to_json,
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latquot",
        description="Exact computations with lattices, quotient tori, and spaces of lattices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--output", metavar="PATH", help="write the result document here instead of stdout")
        return p

    p = cmd("reduce", "canonical quotient map: reduce an ambient vector modulo a lattice")
    p.add_argument("--lattice", required=True)
    p.add_argument("--vector", required=True)

    p = cmd("add", "add two torus points (pass --point twice)")
    p.add_argument("--point", action="append", required=True)

    p = cmd("induce", "validate A(L1) = L2 and report the induced map (optionally apply it)")
    p.add_argument("--matrix", required=True)
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--point")

    p = cmd("volume", "covolume of a lattice (volume of its quotient torus)")
    p.add_argument("--lattice", required=True)

    p = cmd("volume-scaled", "volume of the quotient by c*L for a real scale c")
    p.add_argument("--lattice", required=True)
    p.add_argument("--scale", required=True, help='rational "p/q" or the token "2pi"')

    p = cmd("gram", "Gram form of the lattice basis")
    p.add_argument("--lattice", required=True)

    p = cmd("shortest", "all shortest nonzero vector classes of a lattice")
    p.add_argument("--lattice", required=True)

    p = cmd("spectrum", "squared geodesic lengths up to a bound, with multiplicities")
    p.add_argument("--lattice", required=True)
    p.add_argument("--bound", required=True, help='rational bound "p/q"')

    p = cmd("angle", "angle between two geodesic classes (pass --vector twice)")
    p.add_argument("--vector", action="append", required=True)

    p = cmd("injectivity", "injectivity radius of the quotient map")
    p.add_argument("--lattice", required=True)

    p = cmd("isometric", "rotation-isometry test for two lattices (pass --lattice twice)")
    p.add_argument("--lattice", action="append", required=True)
    p.add_argument("--oriented", action="store_true")

    p = cmd("realify", "real 2n x 2n matrix of a complex matrix")
    p.add_argument("--cmatrix", required=True)

    p = cmd("is-unitary", "complex-linearity plus orthogonality test")
    p.add_argument("--matrix", required=True)
    p.add_argument("--cdim", required=True, type=int, help="complex dimension n")

    p = cmd("complex-induce", "validate that a complex matrix takes one lattice onto another")
    p.add_argument("--cmatrix", required=True)
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)

    p = cmd("gram-map", "T -> T^T T into the positive-definite forms")
    p.add_argument("--matrix", required=True)

    p = cmd("coset-eq", "orthogonal left-coset test for two matrices (pass --matrix twice)")
    p.add_argument("--matrix", action="append", required=True)

    p = cmd("in-m", "symmetric positive definite with determinant 1")
    p.add_argument("--matrix", required=True)

    p = cmd("in-sigma", "integer entries with determinant 1")
    p.add_argument("--matrix", required=True)

    p = cmd("orientation", "sign of the determinant")
    p.add_argument("--matrix", required=True)

    p = cmd("double-coset", "rotation equivalence of equal-covolume lattices (pass --lattice twice)")
    p.add_argument("--lattice", action="append", required=True)
    p.add_argument("--oriented", action="store_true")

    return parser


def _load_json(path: str) -> Any:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        err = SchemaError(f"cannot read input file: {exc}")
        err.input_path = path
        raise err from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        err = SchemaError(f"invalid JSON: {exc}")
        err.input_path = path
        raise err from exc


def _parse_file(path: str, parse):
    try:
        return parse(_load_json(path))
    except InputError as exc:
        if not getattr(exc, "input_path", None):
            exc.input_path = path
        raise


def _pair(paths, flag: str) -> tuple[str, str]:
    if len(paths) != 2:
        raise SchemaError(f"expected exactly two {flag} arguments, got {len(paths)}")
    return paths[0], paths[1]


def _parse_scale(text: str) -> float | Fraction:
    if text == "2pi":
        return 2 * math.pi
    return parse_rational(text)


def _witness_doc(witness) -> Any:
    return matz_to_json(witness) if witness is not None else None


def _dispatch(args: argparse.Namespace) -> dict[str, Any]:
    cmd = args.command

    if cmd == "reduce":
        lattice = _parse_file(args.lattice, parse_lattice)
        vector = _parse_file(args.vector, parse_vector)
        return point_to_json(quotient_torus.reduce(lattice, vector))

    if cmd == "add":
        a, b = _pair(args.point, "--point")
        p = _parse_file(a, parse_point)
        q = _parse_file(b, parse_point)
        return point_to_json(quotient_torus.torus_add(p, q))

    if cmd == "induce":
        matrix = _parse_file(args.matrix, parse_matrix)
        source = _parse_file(args.source, parse_lattice)
        target = _parse_file(args.target, parse_lattice)
        f = quotient_torus.make_induced_map(matrix, source, target)
        if args.point is not None:
            point = _parse_file(args.point, parse_point)
            return point_to_json(quotient_torus.apply_induced(f, point))
        return {
            "volume_scale": format_rational(quotient_torus.volume_scale(f)),
            "witness": matz_to_json(f.witness),
        }

    if cmd == "volume":
        lattice = _parse_file(args.lattice, parse_lattice)
        return {"covolume": format_rational(lattice_core.covolume(lattice))}

    if cmd == "volume-scaled":
        lattice = _parse_file(args.lattice, parse_lattice)
        value = quotient_torus.volume_of_scaled(lattice, _parse_scale(args.scale))
        return {"volume_float": format_float(value)}

    if cmd == "gram":
        lattice = _parse_file(args.lattice, parse_lattice)
        return {"gram": matrix_to_json(flat_geometry.gram(lattice).matrix)}

    if cmd == "shortest":
        lattice = _parse_file(args.lattice, parse_lattice)
        vectors = flat_geometry.shortest_vectors(lattice)
        value = flat_geometry.squared_length(vectors[0])
        return {
            "squared_length": format_rational(value),
            "length_float": format_float(math.sqrt(float(value))),
            "vectors": [list(v.coeffs) for v in vectors],
        }

    if cmd == "spectrum":
        lattice = _parse_file(args.lattice, parse_lattice)
        bound = parse_rational(args.bound)
        spectrum = flat_geometry.geodesic_spectrum(lattice, bound)
        return {"spectrum": [[format_rational(q), mult] for q, mult in spectrum]}

    if cmd == "angle":
        a, b = _pair(args.vector, "--vector")
        v = _parse_file(a, parse_lattice_vector)
        w = _parse_file(b, parse_lattice_vector)
        return {
            "cos_squared_signed": format_rational(flat_geometry.signed_cos_squared(v, w)),
            "angle_float": format_float(flat_geometry.angle(v, w)),
        }

    if cmd == "injectivity":
        lattice = _parse_file(args.lattice, parse_lattice)
        r_sq, r = flat_geometry.injectivity_radius(lattice)
        return {"radius_squared": format_rational(r_sq), "radius_float": format_float(r)}

    if cmd == "isometric":
        a, b = _pair(args.lattice, "--lattice")
        l1 = _parse_file(a, parse_lattice)
        l2 = _parse_file(b, parse_lattice)
        witness = flat_geometry.isometric_mod_rotation(l1, l2, oriented=args.oriented)
        return {"isometric": witness is not None, "witness": _witness_doc(witness)}

    if cmd == "realify":
        cm = _parse_file(args.cmatrix, parse_complex_matrix)
        return {"matrix": matrix_to_json(complex_lattices.realify(cm))}

    if cmd == "is-unitary":
        matrix = _parse_file(args.matrix, parse_matrix)
        return {"unitary": complex_lattices.is_unitary(matrix, args.cdim)}

    if cmd == "complex-induce":
        cm = _parse_file(args.cmatrix, parse_complex_matrix)
        source = _parse_file(args.source, parse_lattice)
        target = _parse_file(args.target, parse_lattice)
        f = complex_lattices.complex_map_check(cm, source, target)
        return {
            "volume_scale": format_rational(quotient_torus.volume_scale(f)),
            "witness": matz_to_json(f.witness),
        }

    if cmd == "gram-map":
        matrix = _parse_file(args.matrix, parse_matrix)
        return {"gram": matrix_to_json(moduli_spaces.gram_map(matrix).matrix)}

    if cmd == "coset-eq":
        a, b = _pair(args.matrix, "--matrix")
        t1 = _parse_file(a, parse_matrix)
        t2 = _parse_file(b, parse_matrix)
        return {"same_coset": moduli_spaces.same_left_coset(t1, t2)}

    if cmd == "in-m":
        matrix = _parse_file(args.matrix, parse_matrix)
        return {"in_m": moduli_spaces.in_M(matrix)}

    if cmd == "in-sigma":
        matrix = _parse_file(args.matrix, parse_matrix)
        return {"in_sigma": moduli_spaces.in_Sigma(matrix)}

    if cmd == "orientation":
        matrix = _parse_file(args.matrix, parse_matrix)
        return {"orientation": moduli_spaces.orientation(matrix)}

    if cmd == "double-coset":
        a, b = _pair(args.lattice, "--lattice")
        l1 = _parse_file(a, parse_lattice)
        l2 = _parse_file(b, parse_lattice)
        witness = moduli_spaces.double_coset_equivalent(l1, l2, oriented=args.oriented)
        return {"equivalent": witness is not None, "witness": _witness_doc(witness)}

    raise SchemaError(f"unknown subcommand {cmd!r}")


def _emit(doc: dict[str, Any], output: str | None) -> None:
    text = json.dumps(doc, separators=(",", ":")) + "\n"
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        doc = _dispatch(args)
    except LatquotError as exc:
        error_doc = {
            "error": {
                "kind": exc.kind,
                "message": str(exc),
                "input": getattr(exc, "input_path", None),
            }
        }
        sys.stdout.write(json.dumps(error_doc, separators=(",", ":")) + "\n")
        return 2 if isinstance(exc, InputError) else 1
    _emit(doc, args.output)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
