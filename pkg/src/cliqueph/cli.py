"""``cliqueph`` command line: compute, compare, generate, experiment, plot.

Exit codes: 0 success, 1 usage error, 2 input error, 3 internal assertion.
"""
from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

import numpy as np

from . import generators as gen
from .bottleneck import DiagramMismatch, bottleneck_matching
from .cliqueness import cliqueness_map, write_weighted_csv
from .datasets import DatasetMissing
from .diagram_io import DiagramFormatError, format_value, read_diagrams, write_csv, write_json
from .experiments import SUITES
from .graph import EdgeListParseError, GraphError, load_edge_list, read_edge_list, write_edge_list
from .persistence import INF, KINDS, PersistenceDiagram
from .pipelines import AnalysisRequest, build_complex, run
from .plot import render_svg

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3

INPUT_ERRORS = (OSError, EdgeListParseError, GraphError, DiagramFormatError, DiagramMismatch,
                DatasetMissing, ValueError)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _color(text: str, code: str, stream) -> str:
    if os.environ.get("NO_COLOR") or not getattr(stream, "isatty", lambda: False)():
        return text
    return f"\033[{code}m{text}\033[0m"


def _load_graph(path: str):
    if path == "-":
        return load_edge_list(sys.stdin)
    return read_edge_list(path)


def _fmt(x, as_float=False) -> str:
    if x == INF or as_float:
        return format_value(x, True)
    s = format_value(x)
    return s if "/" not in s else f"{s} ({float(x):.6g})"


# compute ------------------------------------------------------------------

def cmd_compute(args) -> int:
    g = _load_graph(args.graph)
    req = AnalysisRequest(g, args.kind, args.dim, drop_zero=not args.keep_zero)
    diags, report = run(req)
    stem = args.out or f"{Path(args.graph).stem if args.graph != '-' else 'stdin'}_{args.kind}"
    Path(stem).parent.mkdir(parents=True, exist_ok=True)
    for d in diags:
        path = Path(f"{stem}_H{d.dimension}.{args.format}")
        with open(path, "w", encoding="utf-8") as fh:
            (write_json if args.format == "json" else write_csv)([d], fh, args.float)
        print(path)
    if args.weights_csv:
        with open(args.weights_csv, "w", encoding="utf-8") as fh:
            write_weighted_csv(cliqueness_map(g), fh, g.labels)
    if args.dump_filtration:
        with open(args.dump_filtration, "w", encoding="utf-8") as fh:
            build_complex(g, args.kind, args.dim).dump(fh)
    for line in report.lines():
        print(_color(line, "2", sys.stderr), file=sys.stderr)
    return EXIT_OK


# compare ------------------------------------------------------------------

def _by_dim(diags: list[PersistenceDiagram]) -> dict[int, PersistenceDiagram]:
    return {d.dimension: d for d in diags}


def _compare_inputs(args):
    if args.kind:
        out = []
        for path in (args.left, args.right):
            out.append(run(AnalysisRequest(_load_graph(path), args.kind, args.dim
                                           if args.dim is not None else 1, drop_zero=True))[0])
        return out
    return [read_diagrams(args.left), read_diagrams(args.right)]


def cmd_compare(args) -> int:
    left, right = (_by_dim(d) for d in _compare_inputs(args))
    dims = [args.dim] if args.dim is not None else sorted(left.keys() | right.keys())
    for p in dims:
        if p not in left or p not in right:
            raise DiagramMismatch(f"H{p} missing from {args.left if p not in left else args.right}")
        dist, matching = bottleneck_matching(left[p], right[p])
        print(f"H{p} bottleneck {_color(_fmt(dist, args.float), '1', sys.stdout)}")
        if dist == INF:
            print(f"  never-dying points: {len(left[p].infinite())} vs {len(right[p].infinite())}")
            continue
        paired = sum(1 for a, b in matching if a is not None and b is not None)
        print(f"  matched pairs: {paired}, to diagonal: {len(matching) - paired}")
        if args.show_matching:
            for a, b in matching:
                print("  " + " -> ".join("diagonal" if x is None else
                                         f"({format_value(x[0])},{format_value(x[1])})" for x in (a, b)))
    return EXIT_OK


# generate -----------------------------------------------------------------

def _emit_graph(g, out, header):
    if out in (None, "-"):
        write_edge_list(g, sys.stdout, header)
        return
    with open(out, "w", encoding="utf-8") as fh:
        write_edge_list(g, fh, header)


def cmd_generate(args) -> int:
    if args.model == "sbm":
        spec = gen.SbmSpec(tuple(args.blocks), args.p_in, args.p_out, args.seed)
        g = gen.sample_sbm(spec)
        header = f"sbm blocks={','.join(map(str, spec.block_sizes))} p_in={spec.p_in} " \
                 f"p_out={spec.p_out} seed={spec.seed}"
    elif args.model == "rgg":
        g, xy = gen.sample_circle_rgg(gen.CircleRggSpec(args.n, args.radius, args.seed))
        header = f"circle rgg n={args.n} radius={args.radius} seed={args.seed}"
        if args.coords:
            np.savetxt(args.coords, xy, delimiter=",", header="x,y", comments="")
    elif args.model == "gnp":
        g = gen.sample_gnp(args.n, args.p, args.seed)
        header = f"gnp n={args.n} p={args.p} seed={args.seed}"
    else:
        g = gen.fixture(args.name, *args.params)
        header = f"fixture {args.name} {' '.join(map(str, args.params))}".rstrip()
    _emit_graph(g, args.out, header)
    return EXIT_OK


# experiment ---------------------------------------------------------------

def cmd_experiment(args) -> int:
    suite = SUITES[args.name]
    kwargs = {"outdir": args.out or Path("results") / args.name}
    if args.seed is not None:
        kwargs["seed"] = args.seed
    result = suite(**kwargs)
    for line in result["lines"]:
        print(line)
    sys.stdout.flush()
    print(f"wrote {kwargs['outdir']}", file=sys.stderr)
    return EXIT_OK


# plot ---------------------------------------------------------------------

def cmd_plot(args) -> int:
    diags = [d for path in args.diagrams for d in read_diagrams(path)]
    if args.dim is not None:
        diags = [d for d in diags if d.dimension == args.dim]
    if len({d.direction for d in diags}) > 1:
        raise DiagramMismatch("cannot overlay ascending and descending diagrams")
    svg = render_svg(diags, args.title or "")
    out = args.out or Path(args.diagrams[0]).with_suffix(".svg")
    Path(out).write_text(svg, encoding="utf-8")
    print(out)
    return EXIT_OK


def _nonneg_int(tok):
    v = int(tok)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {tok}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cliqueph", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="persistence diagrams of an edge-list graph")
    p.add_argument("graph", help="edge-list file, or - for stdin")
    p.add_argument("--kind", choices=KINDS, default="cliqueness")
    p.add_argument("--dim", type=_nonneg_int, default=1, help="highest homology dimension")
    p.add_argument("--keep-zero", action="store_true", help="keep points with birth == death")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--float", action="store_true", help="write decimals instead of exact fractions")
    p.add_argument("--out", help="output path prefix; files are <prefix>_H<p>.<format>")
    p.add_argument("--weights-csv", help="also write the cliqueness weights here")
    p.add_argument("--dump-filtration", help="also write the ordered filtration here")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("compare", help="bottleneck distance between diagrams")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--kind", choices=KINDS, help="treat inputs as graphs and run this pipeline")
    p.add_argument("--dim", type=_nonneg_int)
    p.add_argument("--float", action="store_true")
    p.add_argument("--show-matching", action="store_true")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("generate", help="write a random or fixture graph as an edge list")
    models = p.add_subparsers(dest="model", required=True, parser_class=_Parser)
    m = models.add_parser("sbm")
    m.add_argument("--blocks", type=int, nargs="+", default=[75, 75, 75, 75])
    m.add_argument("--p-in", type=float, default=0.3)
    m.add_argument("--p-out", type=float, default=0.005)
    m = models.add_parser("rgg")
    m.add_argument("--n", type=int, default=200)
    m.add_argument("--radius", type=float, default=0.25)
    m.add_argument("--coords", help="write vertex coordinates as CSV here")
    m = models.add_parser("gnp")
    m.add_argument("--n", type=int, required=True)
    m.add_argument("--p", type=float, required=True)
    m = models.add_parser("fixture")
    m.add_argument("name", choices=sorted(gen.FIXTURES))
    m.add_argument("params", type=int, nargs="*")
    for m in models.choices.values():
        m.add_argument("--seed", type=int, default=0)
        m.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("experiment", help="run a named experiment suite")
    p.add_argument("name", choices=sorted(SUITES))
    p.add_argument("--seed", type=int)
    p.add_argument("--out", help="output directory (default results/<name>)")
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("plot", help="render diagram files as an SVG scatter")
    p.add_argument("diagrams", nargs="+")
    p.add_argument("--out")
    p.add_argument("--dim", type=_nonneg_int)
    p.add_argument("--title")
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except AssertionError as exc:
        print(f"cliqueph: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except INPUT_ERRORS as exc:
        print(f"cliqueph: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
