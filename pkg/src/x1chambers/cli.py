"""Command line front end.

    x1chambers report A [--component D] [--format text|json]
    x1chambers graph A [--component D] [--which chambers|triangles] [--format text|json|dot]
    x1chambers table A_MIN A_MAX [--format text|json|csv]
    x1chambers verify A_MIN A_MAX [--format text|json]

Exit status: 0 on success, 1 when ``verify`` finds a failing identity,
2 on usage errors (including an invalid component).
"""

import argparse
import json
import sys

from .chamber import BALANCED, CYLINDER, TRIANGLE, UNBALANCED, check_component
from .formulas import total_walls
from .graph import chamber_graph, triangle_graph
from .topology import component_report, cross_validate

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

TABLE_COLUMNS = ("a", "level", "S", "F", "CT", "DT", "CC", "C", "cusps", "genus")

# cylinder = white circle, triangle = black circle, degenerate = small black disk
DOT_STYLE = {
    CYLINDER: 'shape=circle, style=filled, fillcolor=white, color=black, width=0.25',
    TRIANGLE: 'shape=circle, style=filled, fillcolor=black, color=black, width=0.25',
    BALANCED: 'shape=point, color=black, width=0.08',
    UNBALANCED: 'shape=point, color=black, width=0.08',
}


class UsageError(Exception):
    pass


def _dumps(payload):
    return json.dumps(payload, indent=2)


def _component(a, d):
    try:
        check_component(a, d)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _range(lo, hi):
    if lo < 2 or lo > hi:
        raise UsageError(f"need 2 <= a_min <= a_max, got {lo} {hi}")


def render_report(report, fmt):
    if fmt == "json":
        return _dumps(report.to_dict())
    c = report.chambers
    orbifold = ", ".join(f"order {o} in {key}" for o, key in report.orbifold_points) or "none"
    return "\n".join(
        [
            f"PH({report.a},-{report.a}) component d={report.d}  ~  X_1({report.level})",
            f"  chambers: {report.total_chambers} (cylinder {c[CYLINDER]}, triangle {c[TRIANGLE]}, "
            f"balanced {c[BALANCED]}, unbalanced {c[UNBALANCED]})",
            f"  walls: {report.walls}",
            f"  cusps: {report.punctures} (discriminant {report.discriminant_cusps}, "
            f"interior {report.interior_cusps})",
            f"  euler characteristic: {report.euler_characteristic}",
            f"  genus: {report.genus}",
            f"  orbifold points: {orbifold}",
        ]
    )


def render_graph(g, which, fmt):
    name = ("G" if which == "chambers" else "T") + f"_{g.a}_{g.d}"
    if fmt == "json":
        return _dumps(
            {
                "a": g.a,
                "d": g.d,
                "graph": which,
                "vertices": [
                    {"key": key, "kind": kind, "invariant": g.chambers[key].invariant_data()}
                    for key, kind, _ in g.vertices
                ],
                "edges": [{"key": key, "source": u, "target": v} for key, u, v in g.edges],
            }
        )
    if fmt == "dot":
        lines = [f'graph "{name}" {{', '  node [label=""];']
        for key, kind, _ in g.vertices:
            lines.append(f'  "{key}" [kind="{kind}", tooltip="{key}", {DOT_STYLE[kind]}];')
        for key, u, v in g.edges:
            lines.append(f'  "{u}" -- "{v}" [key="{key}"];')
        lines.append("}")
        return "\n".join(lines)
    lines = [f"{name}: {len(g.vertices)} vertices, {len(g.edges)} edges"]
    lines += [f"  {key}  {kind}" for key, kind, _ in g.vertices]
    lines += [f"  {key}: {u} -- {v}" for key, u, v in g.edges]
    return "\n".join(lines)


def table_rows(lo, hi):
    rows = []
    for a in range(lo, hi + 1):
        r = component_report(a, 1)
        c = r.chambers
        rows.append(
            {
                "a": a,
                "level": r.level,
                "S": total_walls(a),
                "F": r.walls,
                "CT": c[TRIANGLE],
                "DT": c[BALANCED] + c[UNBALANCED],
                "CC": c[CYLINDER],
                "C": r.total_chambers,
                "cusps": r.punctures,
                "genus": r.genus,
            }
        )
    return rows


def render_table(rows, fmt):
    if fmt == "json":
        return _dumps(rows)
    if fmt == "csv":
        out = [",".join(TABLE_COLUMNS)]
        out += [",".join(str(row[k]) for k in TABLE_COLUMNS) for row in rows]
        return "\n".join(out)
    cells = [list(TABLE_COLUMNS)] + [[str(row[k]) for k in TABLE_COLUMNS] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(TABLE_COLUMNS))]
    return "\n".join("  ".join(v.rjust(w) for v, w in zip(r, widths)) for r in cells)


def cmd_report(args):
    _component(args.a, args.component)
    print(render_report(component_report(args.a, args.component), args.format))
    return EXIT_OK


def cmd_graph(args):
    _component(args.a, args.component)
    build = chamber_graph if args.which == "chambers" else triangle_graph
    print(render_graph(build(args.a, args.component), args.which, args.format))
    return EXIT_OK


def cmd_table(args):
    _range(args.a_min, args.a_max)
    print(render_table(table_rows(args.a_min, args.a_max), args.format))
    return EXIT_OK


def cmd_verify(args):
    _range(args.a_min, args.a_max)
    summary = cross_validate(args.a_min, args.a_max)
    if args.format == "json" or not summary.passed:
        print(_dumps(summary.to_dict()))
    else:
        print(f"verify {args.a_min}..{args.a_max}: {len(summary.checks)} checks passed")
    return EXIT_OK if summary.passed else EXIT_FAILED


def build_parser():
    parser = argparse.ArgumentParser(
        prog="x1chambers",
        description="Walls-and-chambers structure of PH(a,-a) and the modular curves X_1(N).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("report", help="topological summary of one component")
    p.add_argument("a", type=int)
    p.add_argument("--component", type=int, default=1, metavar="D", help="rotation number d (default 1)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("graph", help="chamber graph G or triangle graph T of one component")
    p.add_argument("a", type=int)
    p.add_argument("--component", type=int, default=1, metavar="D")
    p.add_argument("--which", choices=("chambers", "triangles"), default="chambers")
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("table", help="invariants of the principal component for a range of a")
    p.add_argument("a_min", type=int)
    p.add_argument("a_max", type=int)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="check enumeration against the closed forms")
    p.add_argument("a_min", type=int)
    p.add_argument("a_max", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
