"""Command-line front end: ``collabdist <command> ...``.

Exit status is 0 on success, 1 on usage or input errors and 2 when the
requested distance or bound does not exist (different components, or no
chain of facts).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from .bounds import load_facts
from .distance import (
    UNREACHABLE,
    Metric,
    a_numbers_from,
    distance_distribution,
    geodesic,
    weighted_a_numbers_from,
)
from .errors import CollabDistError
from .formatting import DEFAULT_PRECISION, describe, format_decimal, fraction_str
from .graph import build_graph, components
from .ingest import expand_publications, load_edge_csv, load_publications_jsonl, write_edge_csv

EXIT_OK, EXIT_ERROR, EXIT_MISSING = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _common() -> argparse.ArgumentParser:
    # SUPPRESS defaults let the flags appear before or after the command
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--precision", type=int, metavar="N", default=argparse.SUPPRESS,
                        help=f"decimal places (default {DEFAULT_PRECISION})")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="collabdist", parents=[common],
                     description="Collaboration distances on co-authorship graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("dist", parents=[common], help="distance between two authors")
    p.add_argument("graph")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--weighted", action="store_true")

    p = sub.add_parser("from", parents=[common], help="distances from one author to all others")
    p.add_argument("graph")
    p.add_argument("source")
    p.add_argument("--weighted", action="store_true")
    p.add_argument("--top", type=int, metavar="N")

    p = sub.add_parser("path", parents=[common], help="a shortest path between two authors")
    p.add_argument("graph")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--weighted", action="store_true")

    p = sub.add_parser("bounds", parents=[common], help="upper bound derived from a facts file")
    p.add_argument("facts")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--metric", choices=("u", "w"), default="u")
    p.add_argument("--trace", action="store_true")

    p = sub.add_parser("stats", parents=[common], help="graph size, components, distance histogram")
    p.add_argument("graph")
    p.add_argument("--source")
    p.add_argument("--weighted", action="store_true")

    p = sub.add_parser("ingest", parents=[common], help="publications JSONL to edge CSV")
    p.add_argument("publications")
    p.add_argument("output")
    return parser


def _value(q, precision: int) -> dict:
    return {"distance": fraction_str(q), "decimal": format_decimal(q, precision)}


def _emit(args, record: dict, text: str) -> None:
    if args.json:
        print(json.dumps(record, ensure_ascii=False))
    else:
        print(text)


def _load_graph(path: str):
    return build_graph(load_edge_csv(path))


def _cmd_dist(args) -> int:
    g = _load_graph(args.graph)
    s, t = g.node_id(args.source), g.node_id(args.target)
    metric = Metric.coerce(args.weighted)
    if metric is Metric.WEIGHTED:
        d = weighted_a_numbers_from(g, s)[t]
    else:
        d = a_numbers_from(g, s)[t]
    record = {"command": "dist", "source": g.labels[s], "target": g.labels[t],
              "metric": metric.value, "reachable": d is not UNREACHABLE}
    if d is UNREACHABLE:
        record.update(distance=None, decimal=None)
        _emit(args, record, "unreachable")
        return EXIT_MISSING
    record.update(_value(d, args.precision))
    text = describe(d, args.precision) if metric is Metric.WEIGHTED else str(d)
    _emit(args, record, text)
    return EXIT_OK


def _cmd_from(args) -> int:
    g = _load_graph(args.graph)
    s = g.node_id(args.source)
    metric = Metric.coerce(args.weighted)
    dist = weighted_a_numbers_from(g, s) if metric is Metric.WEIGHTED else a_numbers_from(g, s)
    rows = sorted(
        ((d, g.labels[v]) for v, d in dist.items() if d is not UNREACHABLE),
        key=lambda item: (item[0], item[1]),
    )
    if args.top is not None:
        rows = rows[: args.top]
    record = {"command": "from", "source": g.labels[s], "metric": metric.value,
              "results": [{"author": label, **_value(d, args.precision)} for d, label in rows]}
    text = "\n".join(
        f"{label} {describe(d, args.precision) if metric is Metric.WEIGHTED else d}"
        for d, label in rows
    )
    _emit(args, record, text)
    return EXIT_OK


def _cmd_path(args) -> int:
    g = _load_graph(args.graph)
    s, t = g.node_id(args.source), g.node_id(args.target)
    metric = Metric.coerce(args.weighted)
    path = geodesic(g, s, t, metric)
    record = {"command": "path", "source": g.labels[s], "target": g.labels[t],
              "metric": metric.value, "reachable": path is not UNREACHABLE}
    if path is UNREACHABLE:
        record.update(vertices=None, edge_weights=None, total=None, decimal=None)
        _emit(args, record, "unreachable")
        return EXIT_MISSING
    labels = path.labels(g)
    record.update(
        vertices=labels,
        edge_weights=[fraction_str(w) for w in path.edge_weights],
        total=fraction_str(path.total),
        decimal=format_decimal(path.total, args.precision),
    )
    parts = [labels[0]]
    for w, label in zip(path.edge_weights, labels[1:]):
        parts.append(f"-({fraction_str(w)})- {label}")
    _emit(args, record, f"{' '.join(parts)} total {fraction_str(path.total)}")
    return EXIT_OK


def _cmd_bounds(args) -> int:
    with open(args.facts, encoding="utf-8") as fh:
        ledger = load_facts(fh)
    metric = Metric.coerce(args.metric)
    known = all(label in ledger for label in (args.source, args.target))
    derivation = ledger.tightest_upper_bound(args.source, args.target, metric) if known else None
    bound = derivation.bound if derivation is not None else None
    record = {"command": "bounds", "source": args.source.strip(), "target": args.target.strip(),
              "metric": metric.value, "known": bound is not None}
    if bound is None:
        record.update(bound=None, decimal=None, steps=[])
        _emit(args, record, "unknown")
        return EXIT_MISSING
    record.update(
        bound=fraction_str(bound),
        decimal=format_decimal(bound, args.precision),
        steps=[
            {"rule": st.rule, "metric": st.metric.value, "a": st.a, "b": st.b,
             "value": fraction_str(st.value), "facts": [str(f) for f in st.facts],
             "premises": [p + 1 for p in st.premises]}
            for st in derivation.steps
        ],
    )
    lines = [describe(bound, args.precision)]
    if args.trace:
        lines += [f"  {i}. {st.describe()}" for i, st in enumerate(derivation.steps, start=1)]
    _emit(args, record, "\n".join(lines))
    return EXIT_OK


def _cmd_stats(args) -> int:
    g = _load_graph(args.graph)
    sizes = sorted((len(c) for c in components(g)), reverse=True)
    ncomp = len(sizes)
    record = {"command": "stats", "nodes": g.n_nodes, "edges": g.n_edges, "components": sizes}
    lines = [
        f"{g.n_nodes} nodes, {g.n_edges} edges, {ncomp} component{'s' if ncomp != 1 else ''}",
        "component sizes: " + " ".join(map(str, sizes)),
    ]
    if args.source is not None:
        s = g.node_id(args.source)
        metric = Metric.coerce(args.weighted)
        hist = distance_distribution(g, s, metric)
        total = sum(hist.values())
        mean = sum(Fraction(d) * n for d, n in hist.items()) / total
        record.update(
            source=g.labels[s],
            metric=metric.value,
            histogram=[{**_value(d, args.precision), "count": n} for d, n in hist.items()],
            mean=fraction_str(mean),
            mean_decimal=format_decimal(mean, args.precision),
        )
        lines.append(f"distances from {g.labels[s]} ({metric.value}):")
        lines += [f"  {fraction_str(d)}\t{n}" for d, n in hist.items()]
        lines.append(f"mean {fraction_str(mean)} ({format_decimal(mean, args.precision)})")
    _emit(args, record, "\n".join(lines))
    return EXIT_OK


def _cmd_ingest(args) -> int:
    pubs = load_publications_jsonl(args.publications)
    edges = expand_publications(pubs)
    with open(args.output, "w", encoding="utf-8", newline="") as fh:
        write_edge_csv(edges, fh)
    record = {"command": "ingest", "publications": len(pubs), "edges": len(edges),
              "output": args.output}
    _emit(args, record, f"{len(pubs)} publications -> {len(edges)} edges written to {args.output}")
    return EXIT_OK


_COMMANDS = {
    "dist": _cmd_dist,
    "from": _cmd_from,
    "path": _cmd_path,
    "bounds": _cmd_bounds,
    "stats": _cmd_stats,
    "ingest": _cmd_ingest,
}


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # --help, or a usage error already reported
        return exc.code if isinstance(exc.code, int) else EXIT_ERROR
    args.json = getattr(args, "json", False)
    args.precision = getattr(args, "precision", DEFAULT_PRECISION)
    if args.precision < 0:
        print("collabdist: error: --precision must be non-negative", file=sys.stderr)
        return EXIT_ERROR
    try:
        return _COMMANDS[args.command](args)
    except (CollabDistError, OSError, ValueError) as exc:
        print(f"collabdist: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
