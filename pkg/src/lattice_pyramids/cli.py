"""Command-line interface.

Every subcommand prints compact JSON with sorted keys on stdout.  Exit codes:
0 on success, 1 for unreadable or malformed input, 2 when an internal
consistency check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from .bounds import check_all
from .box import EmbeddedSimplex, enumerate_box_points, hstar_from_box, simplex_support
from .circuits import check_circuit_bound, combinatorial_pyramid_apexes, enumerate_circuits
from .ehrhart import codegree_by_interior, hstar, hstar_via_interpolation
from .errors import InvariantError
from .generators import CorpusSpec, random_corpus
from .greedy import greedy_trace, verify_greedy_claim
from .polytope import LatticePolytope, PolytopeInputError, make_polytope
from .pyramids import decompose


class InputError(Exception):
    pass


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def polytope_to_json(p: LatticePolytope) -> dict:
    return {"ambient_dim": p.ambient_dim, "vertices": [list(v) for v in p.vertices]}


def _parse_one(obj) -> LatticePolytope:
    if not isinstance(obj, dict) or "vertices" not in obj:
        raise InputError('expected an object with a "vertices" list')
    verts = obj["vertices"]
    if not isinstance(verts, list) or not verts:
        raise InputError("vertex list is empty")
    for v in verts:
        if not isinstance(v, list) or any(type(x) is not int for x in v):
            raise InputError(f"vertex {v!r} is not a list of integers")
    ambient = obj.get("ambient_dim", len(verts[0]))
    if type(ambient) is not int or any(len(v) != ambient for v in verts):
        raise InputError("vertex lengths do not match ambient_dim")
    return make_polytope(verts)


def load_polytopes(path: str) -> tuple[list[LatticePolytope], bool]:
    """Parse a polytope file; returns the polytopes and whether the file held a list."""
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path}: {exc.msg} at line {exc.lineno}") from None
    try:
        if isinstance(data, list):
            return [_parse_one(obj) for obj in data], True
        return [_parse_one(data)], False
    except PolytopeInputError as exc:
        raise InputError(str(exc)) from None


def _checked_hstar(p: LatticePolytope):
    h = hstar_via_interpolation(p)
    if p.is_simplex:
        hb = hstar_from_box(EmbeddedSimplex.from_polytope(p))
        if hb != h:
            raise InvariantError(f"h* paths disagree: interpolation {h}, box points {hb}")
    by_interior = codegree_by_interior(p)
    if by_interior != h.codegree:
        raise InvariantError(f"codegree {h.codegree} from h* but {by_interior} from interior points")
    return h, by_interior


def hstar_section(p: LatticePolytope, h=None) -> dict:
    if h is None:
        h, _ = _checked_hstar(p)
    return {
        "hstar": h.trimmed(),
        "degree": h.degree,
        "codegree": h.codegree,
        "volume": h.volume,
    }


def circuits_section(p: LatticePolytope, degree: int, full: bool = True) -> dict:
    circuits = enumerate_circuits(p)
    verdict = check_circuit_bound(p, degree, circuits)
    if not verdict.passed:
        raise InvariantError(f"circuit with {verdict.witness.size} > {verdict.bound} members")
    out = verdict.to_json()
    out["combinatorial_apexes"] = sorted(combinatorial_pyramid_apexes(p, circuits))
    if full:
        out["circuits"] = [c.to_json() for c in circuits]
    return out


def simplex_section(p: LatticePolytope, degree: int, trace: bool) -> dict:
    s = EmbeddedSimplex.from_polytope(p)
    pts = enumerate_box_points(s)
    out = {
        "box_points": [b.to_json() for b in pts],
        "support": sorted(simplex_support(s, pts)),
        "embedded_vertices": [list(v) for v in s.vertices],
    }
    if trace:
        t = greedy_trace(s, points=pts)
        verdict = verify_greedy_claim(t, degree)
        if not verdict.passed:
            raise InvariantError("; ".join(verdict.failures))
        out["greedy_trace"] = t.to_json()
    return out


def analyze(p: LatticePolytope, trace: bool = False, circuits: bool = True) -> dict:
    h, by_interior = _checked_hstar(p)
    report = {
        "input": {
            "ambient_dim": p.ambient_dim,
            "dim": p.dim,
            "vertices": [list(v) for v in p.vertices],
        },
        **hstar_section(p, h),
        "codegree_by_interior": by_interior,
        "pyramid": decompose(p).to_json(),
        "bounds": [r.to_json() for r in check_all(p, h, strict=True)],
    }
    if circuits:
        report["circuits"] = circuits_section(p, h.degree, full=False)
    if p.is_simplex:
        report["simplex"] = simplex_section(p, h.degree, trace)
    return report


def _each(path, fn):
    polys, many = load_polytopes(path)
    results = [fn(p) for p in polys]
    return results if many else results[0]


def _dim_range(text: str) -> tuple[int, int]:
    try:
        if ":" in text:
            lo, hi = text.split(":", 1)
            return int(lo), int(hi)
        return int(text), int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad dimension range {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lattice-pyramids",
        description="Exact h*-polynomials, pyramid structure and circuit data of lattice polytopes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="full report")
    a.add_argument("path")
    a.add_argument("--trace", action="store_true", help="include the greedy support trace (simplices)")
    a.add_argument("--no-circuits", action="store_true", help="skip circuit enumeration")

    for name, text in [
        ("hstar", "h*-polynomial, degree, codegree, volume"),
        ("pyramid", "lattice pyramid decomposition"),
        ("circuits", "circuits and the circuit size bound"),
        ("check-bounds", "dimension bounds and h* inequalities"),
    ]:
        sp = sub.add_parser(name, help=text)
        sp.add_argument("path")

    g = sub.add_parser("generate", help="seeded random corpus")
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--dim", type=_dim_range, default=(1, 3), help="N or MIN:MAX (default 1:3)")
    g.add_argument("--bound", type=int, default=3)
    g.add_argument("--count", type=int, default=10)
    g.add_argument("--shape", choices=["simplex", "general"], default="simplex")
    g.add_argument("--max-volume", type=int, default=None)
    g.add_argument("--output", "-o", default=None, help="write to a file instead of stdout")
    return parser


def run(args) -> Any:
    cmd = args.command
    if cmd == "analyze":
        return _each(args.path, lambda p: analyze(p, trace=args.trace, circuits=not args.no_circuits))
    if cmd == "hstar":
        return _each(args.path, lambda p: hstar_section(p))
    if cmd == "pyramid":
        return _each(args.path, lambda p: decompose(p).to_json())
    if cmd == "circuits":
        return _each(args.path, lambda p: circuits_section(p, hstar(p).degree))
    if cmd == "check-bounds":
        return _each(args.path, lambda p: [r.to_json() for r in check_all(p, strict=True)])
    if cmd == "generate":
        try:
            spec = CorpusSpec(
                seed=args.seed,
                dim_min=args.dim[0],
                dim_max=args.dim[1],
                bound=args.bound,
                count=args.count,
                shape=args.shape,
                max_volume=args.max_volume,
            )
        except ValueError as exc:
            raise InputError(str(exc)) from None
        return [polytope_to_json(p) for p in random_corpus(spec)]
    raise InputError(f"unknown command {cmd}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = run(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InvariantError as exc:
        print(f"invariant failure: {exc}", file=sys.stderr)
        return 2
    text = dumps(result) + "\n"
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
