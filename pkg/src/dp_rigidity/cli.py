"""Exact checks of anticanonical thresholds on del Pezzo surfaces and fibrations.

Every subcommand builds a JSON-ready result, so ``--format text`` and
``--format json`` render the same data.  Exit status: 0 success, 1 domain
error, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import anticanonical as ac
from .curves import coefficient_bound, enumerate_curves
from .exact import as_rational, rational_str
from .fibrations import EXAMPLES, FibrationError, verify_example
from .lct import (LABEL_TO_SINGULARITY, LOCAL_LCT, NewtonPolyhedron, WeightSystem, global_lct_bound, kuwata_combine,
                  lct_local, lct_newton, lct_support, lct_weighted_homogeneous,
                  rigidity_certificate, total_lct_condition)
from .picard import BLOWUP, QUADRIC, DelPezzoLattice, LatticeError, arithmetic_genus, intersect
from .polynomial import PolynomialSyntaxError, parse_polynomial
from .tables import emit_tables

SCHEMA_VERSION = 1
PARAM_MAX = 10**6


# --- argument types -------------------------------------------------------

def _rational(text: str) -> Fraction:
    try:
        return as_rational(text.strip())
    except (ValueError, ZeroDivisionError, TypeError):
        raise argparse.ArgumentTypeError(f"expected a rational 'p/q', got {text!r}")


def _param(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if not 1 <= v <= PARAM_MAX:
        raise argparse.ArgumentTypeError(f"must lie in [1, {PARAM_MAX}], got {v}")
    return v


def _support(text: str) -> list[tuple[int, ...]]:
    """``"3,0;0,3"`` -> ``[(3, 0), (0, 3)]``."""
    try:
        pts = [tuple(int(x) for x in chunk.split(",")) for chunk in text.split(";") if chunk.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected exponent vectors like '3,0;0,3', got {text!r}")
    if not pts or len({len(p) for p in pts}) != 1 or min(min(p) for p in pts) < 0:
        raise argparse.ArgumentTypeError(f"exponent vectors must be nonnegative and equal length: {text!r}")
    return pts


def _rationals(text: str) -> list[Fraction]:
    return [_rational(x) for x in text.split(",")]


# --- result builders --------------------------------------------------------

def _r(q) -> str | None:
    return None if q is None else rational_str(q)


def cmd_lattice(args) -> dict:
    lat = DelPezzoLattice(args.degree, args.variant)
    k = lat.canonical_class
    return {
        "degree": lat.degree, "variant": lat.variant, "rank": lat.rank,
        "gram": [list(r) for r in lat.gram],
        "canonical_class": list(k.coefficients),
        "K_squared": intersect(k, k),
        "fano_index": lat.fano_index,
        "fundamental_class": list(lat.fundamental_class.coefficients),
        "determinant": lat.determinant(),
        "signature": list(lat.signature()),
        "genus_of_anticanonical": _r(arithmetic_genus(lat.anticanonical_class)),
    }


def cmd_curves(args) -> dict:
    lat = DelPezzoLattice(args.degree, args.variant)
    bound = coefficient_bound(lat, args.h_degree)
    curves = enumerate_curves(lat, args.h_degree, args.bound)
    return {
        "degree": lat.degree, "variant": lat.variant, "h_degree": args.h_degree,
        "bound": bound.bound, "bound_verified": bound.verified(),
        "count": len(curves),
        "classes": [{"coefficients": list(c.divisor.coefficients), "label": str(c),
                     "self_intersection": c.self_intersection} for c in curves],
    }


def _config_json(c: ac.Configuration) -> dict:
    return {
        "multiplicities": list(c.shape.multiplicities),
        "h_degrees": list(c.h_degrees),
        "self_intersections": list(c.self_intersections),
        "pairwise": [list(r) for r in c.pairwise],
        "lattice_only": c.lattice_only,
        "realization": None if c.realization is None else [str(x) for x in c.realization],
    }


def cmd_decomps(args) -> dict:
    data = ac.survey(args.degree)
    return {
        "degree": args.degree,
        "shapes": [str(s) for s in data["shapes"]],
        "excluded_by_index": [str(s) for s in data["excluded"]],
        "configurations": {str(s): [_config_json(c) for c in cs]
                           for s, cs in data["solved"].items()},
        "excluded_by_intersections": [str(s) for s, cs in data["solved"].items() if not cs],
    }


def cmd_classify(args) -> dict:
    entries = ac.classify_degenerations(args.degree)
    return {
        "degree": args.degree,
        "count": len(entries),
        "entries": [{"label": e.singularity_label, "verdict": e.verdict,
                     "description": e.description, "configuration": _config_json(e.configuration),
                     "lct": _r(lct_local(LABEL_TO_SINGULARITY[e.singularity_label]))}
                    for e in entries],
    }


def cmd_lct(args) -> dict:
    if args.kind:
        return {"mode": "local", "kind": args.kind, "lct": _r(lct_local(args.kind))}
    if args.weights:
        return {"mode": "weighted_homogeneous", "weights": [_r(w) for w in args.weights],
                "lct": _r(lct_weighted_homogeneous(WeightSystem(tuple(args.weights))))}
    if args.support:
        return {"mode": "newton", "support": [list(p) for p in args.support],
                "lct": _r(lct_newton(NewtonPolyhedron.of(args.support)))}
    if args.poly:
        variables = tuple(args.vars)
        poly = parse_polynomial(args.poly, variables)
        return {"mode": "polynomial", "polynomial": str(poly), "variables": list(variables),
                "lct": _r(lct_support(poly.support()))}
    if args.combine:
        a, b = args.combine
        return {"mode": "combine", "inputs": [_r(a), _r(b)], "lct": _r(kuwata_combine(a, b))}
    d = args.global_degree
    return {"mode": "global", "degree": d, "variant": args.variant,
            "lct": _r(global_lct_bound(d, args.variant))}


def cmd_rigidity(args) -> dict:
    cert = rigidity_certificate(args.tau_x, args.tau_y)
    w = cert.witness
    return {
        "tau_x": _r(args.tau_x), "tau_y": _r(args.tau_y),
        "total_lct_condition": total_lct_condition(args.tau_x, args.tau_y),
        "rigid": cert.rigid,
        "witness": None if w is None else {"a": _r(w.a), "n": _r(w.n), "l": _r(w.l),
                                           "e": _r(w.e), "b": w.b, "m": w.m},
    }


def cmd_verify(args) -> dict:
    params = {k: v for k, v in (("n", args.n), ("m", args.m)) if v is not None}
    r = verify_example(args.name, params)
    return {
        "name": r.name, "params": dict(r.params),
        "map_valid": r.map_valid, "t_power": r.t_power, "expected_t_power": r.expected_t_power,
        "transformed_divisor": r.transformed_divisor,
        "fiber_configuration": r.fiber_configuration, "fiber_label": r.fiber_label,
        "local_equation": r.local_equation,
        "local_lct": _r(r.local_lct), "expected_lct": _r(r.expected_lct),
        "is_lc": r.is_lc, "matches": r.matches,
    }


def cmd_tables(args) -> dict:
    return {"markdown": emit_tables()}


# --- rendering --------------------------------------------------------------

def _text(value: Any, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v and not _flat_list(v):
                lines.append(f"{pad}{k}:")
                lines += _text(v, indent + 1)
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, (dict, list)) and not _flat_list(v):
                lines.append(f"{pad}-")
                lines += _text(v, indent + 1)
            else:
                lines.append(f"{pad}- {_scalar(v)}")
    else:
        lines.append(pad + _scalar(value))
    return lines


def _flat_list(v: Any) -> bool:
    return isinstance(v, list) and all(not isinstance(x, dict) for x in v) and \
        all(not isinstance(y, (dict, list)) for x in v if isinstance(x, list) for y in x)


def _scalar(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "-"
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    return str(v)


def render(command: str, result: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"schema_version": SCHEMA_VERSION, "command": command,
                           "result": result}, indent=2, sort_keys=False)
    if command == "emit-tables":
        return result["markdown"].rstrip("\n")
    return "\n".join(_text(result))


# --- parser ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dp-rigidity", description=__doc__.splitlines()[0],
                                allow_abbrev=False)
    sub = p.add_subparsers(dest="command", required=True, metavar="SUBCOMMAND")

    def add(name: str, func, help_: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_, description=help_, allow_abbrev=False)
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.set_defaults(func=func)
        return sp

    sp = add("lattice", cmd_lattice, "Picard lattice data of a del Pezzo surface")
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--variant", choices=(BLOWUP, QUADRIC), default=BLOWUP)

    sp = add("curves", cmd_curves, "enumerate lines, conics or cubics")
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--variant", choices=(BLOWUP, QUADRIC), default=BLOWUP)
    sp.add_argument("--h-degree", type=int, choices=(1, 2, 3), required=True)
    sp.add_argument("--bound", type=int, default=None, help="override the coefficient bound")

    sp = add("decomps", cmd_decomps, "anticanonical decomposition shapes and configurations")
    sp.add_argument("--degree", type=int, required=True)

    sp = add("classify", cmd_classify, "worse-than-lc anticanonical members")
    sp.add_argument("--degree", type=int, required=True)

    sp = add("lct", cmd_lct, "log canonical thresholds")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--kind", choices=sorted(LOCAL_LCT))
    g.add_argument("--weights", type=_rationals, help="comma-separated weights, e.g. 1/2,1/3")
    g.add_argument("--support", type=_support, help="exponent vectors, e.g. '3,0;0,3'")
    g.add_argument("--poly", help="polynomial in the variables given by --vars")
    g.add_argument("--combine", type=_rational, nargs=2, metavar=("C_G", "C_H"))
    g.add_argument("--global", dest="global_degree", type=int, metavar="DEGREE")
    sp.add_argument("--vars", default="xyz", help="single-letter variables for --poly")
    sp.add_argument("--variant", choices=(BLOWUP, QUADRIC), default=BLOWUP)

    sp = add("rigidity", cmd_rigidity, "total lc threshold condition and ledger certificate")
    sp.add_argument("--tau-x", type=_rational, required=True)
    sp.add_argument("--tau-y", type=_rational, required=True)

    sp = add("verify-example", cmd_verify, "verify a fibration example end to end")
    sp.add_argument("--name", choices=EXAMPLES, required=True)
    sp.add_argument("--n", type=_param)
    sp.add_argument("--m", type=_param)

    add("emit-tables", cmd_tables, "markdown tables of every reproduced value")
    return p


DOMAIN_ERRORS = (ValueError, ArithmeticError, LatticeError, FibrationError,
                 PolynomialSyntaxError, KeyError)


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.func(args)
    except DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    print(render(args.command, result, args.format), file=stdout)
    return 0


def main() -> None:
    sys.exit(run())
