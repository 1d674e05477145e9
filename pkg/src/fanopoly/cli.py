"""Command-line front end.

Exit codes: 0 success (or PASS / YES), 1 verification failure or a NO
answer, 2 malformed input or violated preconditions.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import polyfile
from .analysis import (
    classify_case,
    hyperplane_distribution,
    section_2d,
    special_facet_indices,
    vertex_sum,
    vertex_sum_kind,
)
from .constructions import NAMES, construct, free_sum
from .errors import FanopolyError
from .normalform import is_isomorphic, normal_form
from .polygons import enumerate_reflexive_polygons
from .verify import verify_casagrande, verify_polygon_landscape, verify_theorem


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fanopoly",
        description="Exact analysis of lattice polytopes with an interior origin.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="print predicates and statistics")
    p_analyze.add_argument("path")

    p_construct = sub.add_parser("construct", help="emit a catalog polytope")
    p_construct.add_argument("name", choices=NAMES)
    p_construct.add_argument(
        "--dim",
        type=int,
        default=None,
        help="pad with hexagon summands up to this dimension",
    )

    p_enum = sub.add_parser(
        "enumerate-polygons", help="write the 16 reflexive polygon classes"
    )
    p_enum.add_argument("outdir")

    p_verify = sub.add_parser("verify", help="run a verification report")
    group = p_verify.add_mutually_exclusive_group(required=True)
    group.add_argument("--dim", type=int, help="verify the 3d-1 vertex catalog")
    group.add_argument(
        "--casagrande", type=int, help="verify the even-dimensional 3d-vertex extremal"
    )
    group.add_argument(
        "--polygons", action="store_true", help="verify the polygon landscape"
    )

    p_nf = sub.add_parser("normal-form", help="print the canonical vertex matrix")
    p_nf.add_argument("path")

    p_dual = sub.add_parser("dual", help="print the polar dual")
    p_dual.add_argument("path")

    p_iso = sub.add_parser("iso", help="decide unimodular equivalence")
    p_iso.add_argument("path_a")
    p_iso.add_argument("path_b")

    p_sec = sub.add_parser("section", help="print a plane section through 3 vertices")
    p_sec.add_argument("path")
    p_sec.add_argument("i", type=int)
    p_sec.add_argument("j", type=int)
    p_sec.add_argument("k", type=int)

    return parser


def _cmd_analyze(args) -> int:
    p = polyfile.load(args.path)
    out = [
        f"dimension: {p.dim}",
        f"vertices: {p.vertex_count}",
        f"reflexive: {'yes' if p.is_reflexive() else 'no'}",
        f"simplicial: {'yes' if p.is_simplicial() else 'no'}",
        f"smooth: {'yes' if p.is_smooth_fano() else 'no'}",
        f"vertex_sum: {' '.join(str(x) for x in vertex_sum(p))}",
        f"vertex_sum_kind: {vertex_sum_kind(p)}",
    ]
    simp_refl = p.is_simplicial() and p.is_reflexive()
    if simp_refl:
        out.append(f"picard: {p.picard_number()}")
        specials = special_facet_indices(p)
        out.append(f"special_facets: {len(specials)}")
        with_cases = p.vertex_count == 3 * p.dim - 1
        for fi in specials:
            dist = hyperplane_distribution(p, fi)
            levels = " ".join(
                f"{lvl}:{cnt}" for lvl, cnt in sorted(dist.counts.items(), reverse=True)
            )
            line = (
                f"special_facet {fi}: normal="
                + " ".join(str(x) for x in p.facets[fi].normal)
                + f" levels {levels}"
            )
            if with_cases:
                line += f" case={classify_case(p, fi)}"
            out.append(line)
    else:
        out.append("picard: n/a")
        out.append("special_facets: n/a")
    print("\n".join(out))
    return 0


def _cmd_construct(args) -> int:
    p = construct(args.name)
    if args.dim is not None:
        if args.dim < p.dim or (args.dim - p.dim) % 2:
            raise FanopolyError(
                f"cannot pad {args.name} (dimension {p.dim}) to dimension {args.dim}: "
                "hexagon summands add 2 each"
            )
        hexagon = construct("v2")
        while p.dim < args.dim:
            p = free_sum(p, hexagon)
    sys.stdout.write(polyfile.dumps(p))
    return 0


def _cmd_enumerate(args) -> int:
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    classes = enumerate_reflexive_polygons()
    for i, c in enumerate(classes):
        name = f"polygon-{i + 1:02d}.poly"
        polyfile.dump(c.representative, outdir / name)
        print(
            f"{name}: {c.vertex_count} vertices,"
            f" {'smooth' if c.smooth else 'singular'}, vertex sum {c.nu_kind}"
        )
    return 0


def _cmd_verify(args) -> int:
    if args.polygons:
        report = verify_polygon_landscape()
    elif args.casagrande is not None:
        report = verify_casagrande(args.casagrande)
    else:
        report = verify_theorem(args.dim)
    print(report.render())
    return 0 if report.verdict else 1


def _cmd_normal_form(args) -> int:
    p = polyfile.load(args.path)
    sys.stdout.write(polyfile.dumps_matrix(normal_form(p).matrix))
    return 0


def _cmd_dual(args) -> int:
    p = polyfile.load(args.path)
    dual = p.dual()
    if dual.is_lattice():
        sys.stdout.write(polyfile.dumps(dual.to_lattice()))
    else:
        sys.stdout.write(polyfile.dumps_rational(dual))
    return 0


def _cmd_iso(args) -> int:
    a = polyfile.load(args.path_a)
    b = polyfile.load(args.path_b)
    if is_isomorphic(a, b):
        print("YES")
        return 0
    print("NO")
    return 1


def _cmd_section(args) -> int:
    p = polyfile.load(args.path)
    sys.stdout.write(polyfile.dumps(section_2d(p, args.i, args.j, args.k)))
    return 0


_DISPATCH = {
    "analyze": _cmd_analyze,
    "construct": _cmd_construct,
    "enumerate-polygons": _cmd_enumerate,
    "verify": _cmd_verify,
    "normal-form": _cmd_normal_form,
    "dual": _cmd_dual,
    "iso": _cmd_iso,
    "section": _cmd_section,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except FanopolyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
