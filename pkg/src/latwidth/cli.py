"""Command-line front end.

Subcommands: width, lattice-size, minimal, classify, enumerate, verify, plot.
All machine-readable output is JSON with fixed key order; exit status is 0 on
success, 1 on verification failure, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .bounds import point_bound, verify_point_bound, verify_volume_bound
from .canonical import canonical_form
from .classify import (
    BRUTE_FORCE_LIMIT,
    brute_force_minimal,
    classify_polygon,
    enumerate_minimal_with_stats,
    four_direction_quadrangle,
    generate,
    is_inscribed_in_hexagon,
)
from .core import OutOfRange, Polygon, UnimodularMap, apply_map, convex_hull, polygon_from_json
from .canonical import are_equivalent
from .minimal import is_minimal
from .svg import render_figure
from .width import embed_in_square, lattice_size_square, lattice_width

COORD_LIMIT = 10**6
WIDTH_LIMIT = 1000


class CliError(Exception):
    """Usage or input problem; maps to exit status 2."""


def _read_polygon(path: str) -> Polygon:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc
    try:
        p = polygon_from_json(text)
    except (ValueError, json.JSONDecodeError) as exc:
        raise CliError(f"{path}: {exc}") from exc
    for x, y in p.vertices:
        if abs(x) > COORD_LIMIT or abs(y) > COORD_LIMIT:
            raise CliError(f"{path}: coordinate magnitude exceeds {COORD_LIMIT}")
    return p


def _check_d(d: int) -> int:
    if d < 0 or d > WIDTH_LIMIT:
        raise CliError(f"width parameter must be in [0, {WIDTH_LIMIT}]")
    return d


def _map_json(m: UnimodularMap) -> dict:
    return {"a": [[m.a11, m.a12], [m.a21, m.a22]], "b": [m.bx, m.by]}


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")


def _class_json(cls) -> dict:
    return {
        "key": cls.key,
        "tag": cls.params.tag if cls.params else None,
        "d": cls.params.d if cls.params else None,
        "params": cls.params.as_dict() if cls.params else None,
        "point_count": cls.point_count,
        "doubled_area": cls.doubled_area,
        "vertices": [list(v) for v in cls.canonical.vertices],
    }


def cmd_width(args) -> int:
    p = _read_polygon(args.polygon)
    w = lattice_width(p)
    s = lattice_size_square(p)
    _emit(
        json.dumps(
            {
                "lw": w.width,
                "ls_square": s.size,
                "directions": [list(v) for v in w.directions],
            }
        ),
        args.output,
    )
    return 0


def cmd_lattice_size(args) -> int:
    p = _read_polygon(args.polygon)
    s = lattice_size_square(p)
    _emit(json.dumps({"ls_square": s.size, "witness": _map_json(s.witness)}), args.output)
    return 0


def cmd_minimal(args) -> int:
    p = _read_polygon(args.polygon)
    rep = is_minimal(p)
    _emit(
        json.dumps(
            {
                "minimal": rep.is_minimal,
                "width": rep.width,
                "offending_vertex": list(rep.offending_vertex) if rep.offending_vertex else None,
            }
        ),
        args.output,
    )
    return 0


def cmd_classify(args) -> int:
    p = _read_polygon(args.polygon)
    rep = is_minimal(p)
    if not rep.is_minimal:
        _emit(
            json.dumps(
                {
                    "minimal": False,
                    "width": rep.width,
                    "offending_vertex": list(rep.offending_vertex),
                }
            ),
            args.output,
        )
        return 0
    _check_d(rep.width)
    cls, witness = classify_polygon(p)
    _emit(
        json.dumps(
            {
                "minimal": True,
                "tag": cls.params.tag,
                "d": cls.params.d,
                "params": cls.params.as_dict(),
                "key": cls.key,
                "witness": _map_json(witness),
            }
        ),
        args.output,
    )
    return 0


def cmd_enumerate(args) -> int:
    d = _check_d(args.d)
    if args.oracle and d > BRUTE_FORCE_LIMIT:
        raise CliError(f"--oracle requires d <= {BRUTE_FORCE_LIMIT}")
    classes, stats = enumerate_minimal_with_stats(d, jobs=args.jobs)
    class_array = [_class_json(c) for c in classes]
    if not args.oracle:
        _emit(json.dumps(class_array, indent=2), args.output)
        return 0
    oracle = brute_force_minimal(d)
    keys = {c.key for c in classes}
    oracle_keys = {c.key for c in oracle}
    diff = {
        "missing_from_enumerator": sorted(oracle_keys - keys),
        "extra_in_enumerator": sorted(keys - oracle_keys),
    }
    payload = {
        "classes": class_array,
        "oracle": [_class_json(c) for c in oracle],
        "diff": diff,
        "duplicates_per_tag": dict(sorted(stats.duplicates.items())),
    }
    _emit(json.dumps(payload, indent=2), args.output)
    return 0 if not diff["missing_from_enumerator"] and not diff["extra_in_enumerator"] else 1


def _verify_one(d: int, use_oracle: bool, lines: list[str], reports: list[dict]) -> bool:
    ok = True
    classes, _ = enumerate_minimal_with_stats(d)

    def record(name: str, passed: bool, detail: str) -> None:
        nonlocal ok
        ok = ok and passed
        lines.append(f"d={d} {name} {'PASS' if passed else 'FAIL'} {detail}")

    if d >= 1:
        rep = verify_volume_bound(d, classes)
        passed = rep.holds and rep.achieved == rep.bound_value
        record("volume-bound", passed, f"bound={rep.bound_value} achieved={rep.achieved}")
        reports.append({"kind": "volume-bound", "d": d, "bound_value": rep.bound_value,
                        "achieved": rep.achieved, "witnesses": list(rep.witnesses),
                        "holds": rep.holds})
    else:
        lines.append(f"d={d} volume-bound not-applicable")
    if d >= 2:
        rep = verify_point_bound(d, classes)
        passed = rep.holds and rep.achieved == rep.bound_value
        record("point-bound", passed, f"bound={rep.bound_value} achieved={rep.achieved}")
        reports.append({"kind": "point-bound", "d": d, "bound_value": rep.bound_value,
                        "achieved": rep.achieved, "witnesses": list(rep.witnesses),
                        "holds": rep.holds})
    else:
        lines.append(f"d={d} point-bound not-applicable")

    if d >= 1:
        good = True
        for c in classes:
            p = convex_hull(c.canonical.vertices)
            if lattice_size_square(p).size != d:
                good = False
                break
            m = embed_in_square(p)
            if m is None:
                good = False
                break
            q = apply_map(m, p)
            if not all(0 <= x <= d and 0 <= y <= d for x, y in q.vertices):
                good = False
                break
        record("lattice-size-equals-width", good, f"classes={len(classes)}")

        if d % 2 == 0 and d >= 2:
            quad = four_direction_quadrangle(d)
            good = len(lattice_width(quad).directions) == 4
            for c in classes:
                p = convex_hull(c.canonical.vertices)
                if len(lattice_width(p).directions) >= 4:
                    good = good and are_equivalent(p, quad) is not None
            record("four-direction-rigidity", good, "")

        hex_classes = [c for c in classes if c.params.tag in ("T3", "T4", "T5")]
        good = all(
            is_inscribed_in_hexagon(generate(c.params), d, c.params["l"])
            for c in hex_classes
        )
        record("hexagon-inscription", good, f"classes={len(hex_classes)}")

    if use_oracle:
        oracle_keys = {c.key for c in brute_force_minimal(d)}
        keys = {c.key for c in classes}
        record(
            "oracle-equivalence",
            keys == oracle_keys,
            f"classes={len(keys)} oracle={len(oracle_keys)}",
        )
    return ok


def cmd_verify(args) -> int:
    d_min = _check_d(args.d_min)
    d_max = _check_d(args.d_max if args.d_max is not None else args.d_min)
    if d_max < d_min:
        raise CliError("empty width range")
    if args.oracle and d_max > BRUTE_FORCE_LIMIT:
        raise CliError(f"--oracle requires d <= {BRUTE_FORCE_LIMIT}")
    lines: list[str] = []
    reports: list[dict] = []
    ok = True
    for d in range(d_min, d_max + 1):
        ok = _verify_one(d, args.oracle, lines, reports) and ok
    sys.stdout.write("\n".join(lines) + "\n")
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(reports, indent=2) + "\n")
    return 0 if ok else 1


def cmd_plot(args) -> int:
    p = _read_polygon(args.polygon)
    if args.hexagon is not None:
        d = lattice_width(p).width
        if not 0 <= args.hexagon <= d:
            raise CliError(f"--hexagon must be in [0, {d}] for this polygon")
    _emit(render_figure(p, args.hexagon), args.output)
    return 0


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("LATWIDTH_JOBS", "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latwidth",
        description="Exact lattice-width computations and minimal-polygon classification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_polygon_cmd(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("polygon", help="polygon JSON file")
        sp.add_argument("-o", "--output", default=None, help="write result here instead of stdout")
        sp.set_defaults(func=func)
        return sp

    add_polygon_cmd("width", cmd_width, "lattice width, width directions, and lattice size")
    add_polygon_cmd("lattice-size", cmd_lattice_size, "lattice size w.r.t. the unit square, with witness")
    add_polygon_cmd("minimal", cmd_minimal, "inclusion-minimality report")
    add_polygon_cmd("classify", cmd_classify, "classification of a minimal polygon")

    sp = sub.add_parser("enumerate", help="enumerate minimal classes of a given width")
    sp.add_argument("d", type=int, help="lattice width")
    sp.add_argument("--oracle", action="store_true",
                    help=f"cross-check against brute force (d <= {BRUTE_FORCE_LIMIT})")
    sp.add_argument("--jobs", type=int, default=_default_jobs(),
                    help="parallel workers (default from LATWIDTH_JOBS)")
    sp.add_argument("-o", "--output", default=None)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("verify", help="verify the bounds and structure properties over a width range")
    sp.add_argument("d_min", type=int)
    sp.add_argument("d_max", type=int, nargs="?", default=None)
    sp.add_argument("--oracle", action="store_true")
    sp.add_argument("-o", "--output", default=None, help="write JSON bound reports here")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("plot", help="render a polygon as an SVG figure")
    sp.add_argument("polygon")
    sp.add_argument("--hexagon", type=int, default=None, metavar="L",
                    help="overlay the dashed hexagon with this shoulder parameter")
    sp.add_argument("-o", "--output", default=None)
    sp.set_defaults(func=cmd_plot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OutOfRange as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
