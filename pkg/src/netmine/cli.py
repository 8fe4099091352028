"""Command-line entry point: convert, generate, analyze, communities,
linkpred, layout, render, serve.

Exit status: 0 on success, 2 on usage errors, 1 on runtime errors; all
diagnostics are single lines on stderr.  Identical arguments, seed, and
NETMINE_WORKERS always produce byte-identical outputs.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import generators, hal
from .core import MembershipMatrix
from .errors import NetmineError
from .io import format_real, read_network_file, write_network_file
from .layout import render_svg, LayoutPositions, StyleBinding
from .registry import COMMUNITIES, GENERATORS_HELP, LAYOUTS, LINKPRED, METRICS
from .linkpred import evaluate_predictor


def _parse_overrides(pairs):
    overrides = {}
    for pair in pairs or []:
        if "=" not in pair:
            raise NetmineError(f"--param expects key=value, got {pair!r}")
        key, value = pair.split("=", 1)
        overrides[key.strip()] = value.strip()
    return overrides


def _write_lines(lines, output):
    text = "\n".join(lines) + ("\n" if lines else "")
    if output in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, encoding="utf-8", newline="\n")


def _load(args):
    directed = True if getattr(args, "directed", False) else None
    return read_network_file(args.input, getattr(args, "input_format", None), directed=directed)


def _score_lines(score):
    return [f"{u}\t{format_real(value)}" for u, value in enumerate(score.values)]


def _pair_lines(matrix, net=None, top=None, skip_links=False):
    triples = matrix.top_pairs(k=None)
    if skip_links and net is not None:
        triples = [t for t in triples if not net.has_link(t[0], t[1])]
    if top is not None:
        triples = triples[:top]
    return [f"{u}\t{v}\t{format_real(value)}" for u, v, value in triples]


def cmd_convert(args):
    net = _load(args)
    write_network_file(net, args.output, args.output_format)
    return 0


def cmd_generate(args):
    spec = {
        "erdos_renyi": lambda: generators.erdos_renyi(args.nodes, args.links, args.seed),
        "gilbert": lambda: generators.gilbert(args.nodes, args.prob, args.seed),
        "anchored": lambda: generators.anchored(args.nodes, args.links, args.seed),
        "connected_random": lambda: generators.connected_random(args.nodes, args.links, args.seed),
        "watts_strogatz": lambda: generators.watts_strogatz(
            args.nodes, args.degree, args.prob, args.seed),
        "barabasi_albert": lambda: generators.barabasi_albert(args.nodes, args.links, args.seed),
        "price": lambda: generators.price_citation(args.nodes, args.out_links, args.seed),
        "complete": lambda: generators.complete(args.nodes),
        "star": lambda: generators.star(args.nodes),
        "ring": lambda: generators.ring(args.nodes),
        "tandem": lambda: generators.tandem(args.nodes),
        "mesh": lambda: generators.mesh(args.rows, args.cols),
        "torus": lambda: generators.torus(args.rows, args.cols),
        "hypercube": lambda: generators.hypercube(args.dim),
        "binary_tree": lambda: generators.binary_tree(args.depth),
        "isolates": lambda: generators.isolates(args.nodes),
    }
    aliases = {"er": "erdos_renyi", "ws": "watts_strogatz", "ba": "barabasi_albert"}
    model = aliases.get(args.model, args.model)
    if model not in spec:
        raise NetmineError(f"unknown model {args.model!r}; models: {GENERATORS_HELP}")
    net = spec[model]()
    write_network_file(net, args.output, args.output_format)
    return 0


def cmd_analyze(args):
    algorithm = METRICS[args.metric]
    net = _load(args)
    result = algorithm.run(net, _parse_overrides(args.param))
    if algorithm.kind == "node":
        lines = _score_lines(result)
    elif algorithm.kind == "hub_authority":
        hub, authority = result
        lines = [f"{u}\t{format_real(hub.values[u])}\t{format_real(authority.values[u])}"
                 for u in range(len(hub))]
    elif algorithm.kind == "link_list":
        lines = [f"{u}\t{v}\t{format_real(result.get(u, v))}" for u, v in net.links()]
    else:  # record
        lines = [f"{key}: {'' if value is None else value}" for key, value in result.items()]
    _write_lines(lines, args.output)
    return 0


def cmd_communities(args):
    algorithm = COMMUNITIES[args.algorithm]
    net = _load(args)
    result = algorithm.run(net, _parse_overrides(args.param))
    dendrogram = None
    if isinstance(result, tuple):
        result, dendrogram = result
    if isinstance(result, MembershipMatrix):
        normalized = result.normalized()
        lines = [f"{u}\t" + ",".join(format_real(x) for x in normalized[u])
                 for u in range(len(normalized))]
    else:
        lines = [f"{u}\t{label}" for u, label in enumerate(result.labels)]
    _write_lines(lines, args.output)
    if args.dendrogram:
        if dendrogram is None:
            raise NetmineError(f"{args.algorithm!r} does not produce a dendrogram")
        _write_lines([f"{a}\t{b}\t{format_real(height)}" for a, b, height in dendrogram.merges],
                     args.dendrogram)
    return 0


def cmd_linkpred(args):
    algorithm = LINKPRED[args.method]
    net = _load(args)
    overrides = _parse_overrides(args.param)
    if args.evaluate:
        params = algorithm.parse_params(overrides)
        report = evaluate_predictor(
            net, lambda reduced: algorithm.fn(reduced, **params),
            holdout_fraction=args.holdout, seed=args.seed, k=args.top or 10)
        _write_lines([f"{key}: {value}" for key, value in report.items()], args.output)
        return 0
    result = algorithm.run(net, overrides)
    lines = _pair_lines(result, net, top=args.top, skip_links=not args.include_links)
    _write_lines(lines, args.output)
    return 0


def cmd_layout(args):
    algorithm = LAYOUTS[args.method]
    net = _load(args)
    positions = algorithm.run(net, _parse_overrides(args.param))
    lines = [f"{u}\t{format_real(x)}\t{format_real(y)}"
             for u, (x, y) in enumerate(positions.coords)]
    _write_lines(lines, args.output)
    return 0


def _read_positions(net, path):
    import numpy as np

    coords = np.zeros((net.node_count, 2))
    for line_no, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) < 3:
            raise NetmineError(f"positions line {line_no}: expected node<TAB>x<TAB>y")
        coords[int(parts[0])] = (float(parts[1]), float(parts[2]))
    return LayoutPositions(net, coords)


def _binding(channel, source, net):
    if source.startswith("metric:"):
        name = source.split(":", 1)[1]
        if name not in METRICS or METRICS[name].kind != "node":
            raise NetmineError(f"{source!r} is not a node metric")
        return StyleBinding(channel, METRICS[name].run(net))
    return StyleBinding(channel, source.split(":", 1)[1] if ":" in source else source)


def cmd_render(args):
    net = _load(args)
    if args.positions:
        positions = _read_positions(net, args.positions)
    else:
        positions = LAYOUTS[args.layout].run(net, _parse_overrides(args.param))
    styles = []
    for channel, source in (("nodeSize", args.node_size), ("nodeColor", args.node_color),
                            ("linkWidth", args.link_width), ("linkColor", args.link_color)):
        if source:
            styles.append(_binding(channel, source, net))
    svg = render_svg(net, positions, styles, width=args.width, height=args.height)
    if args.output in (None, "-"):
        sys.stdout.write(svg)
    else:
        Path(args.output).write_text(svg, encoding="utf-8", newline="\n")
    return 0


def cmd_serve(args):
    from .server import serve

    serve(port=args.port, network_dir=args.dir, network_file=args.network,
          ui_dir=args.ui_dir, async_threshold=args.async_threshold)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="netmine", description="Network analysis and mining toolkit.")
    parser.add_argument("--workers", type=int, default=None,
                        help="worker threads (default: NETMINE_WORKERS or CPU count)")
    commands = parser.add_subparsers(dest="command", required=True)

    def add_io(sub, output_default=None):
        sub.add_argument("-i", "--input", required=True, help="input network file")
        sub.add_argument("--input-format", dest="input_format",
                         help="override input format (gdf|gml|graphml|pajek|snap)")
        sub.add_argument("--directed", action="store_true",
                         help="read formats without a directedness flag as directed")
        sub.add_argument("-o", "--output", default=output_default,
                         help="output path (default: stdout)")

    sub = commands.add_parser("convert", help="read a network and write it in another format")
    add_io(sub)
    sub.add_argument("--output-format", dest="output_format",
                     help="target format (default: by output extension)")
    sub.set_defaults(fn=cmd_convert, output=None)

    sub = commands.add_parser("generate", help="create a synthetic network")
    sub.add_argument("--model", required=True, help=f"one of: {GENERATORS_HELP}")
    sub.add_argument("--nodes", type=int, default=0)
    sub.add_argument("--links", type=int, default=0)
    sub.add_argument("--prob", type=float, default=0.0)
    sub.add_argument("--degree", type=int, default=0, help="mean degree (watts_strogatz)")
    sub.add_argument("--out-links", dest="out_links", type=int, default=1,
                     help="links per new node (price)")
    sub.add_argument("--rows", type=int, default=1)
    sub.add_argument("--cols", type=int, default=1)
    sub.add_argument("--dim", type=int, default=1)
    sub.add_argument("--depth", type=int, default=1)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("-o", "--output", required=True)
    sub.add_argument("--output-format", dest="output_format")
    sub.set_defaults(fn=cmd_generate)

    sub = commands.add_parser("analyze", help="compute a structural metric")
    sub.add_argument("--metric", required=True, choices=sorted(METRICS))
    add_io(sub)
    sub.add_argument("--param", action="append", metavar="KEY=VALUE")
    sub.set_defaults(fn=cmd_analyze)

    sub = commands.add_parser("communities", help="run a community detection algorithm")
    sub.add_argument("--algorithm", required=True, choices=sorted(COMMUNITIES))
    add_io(sub)
    sub.add_argument("--param", action="append", metavar="KEY=VALUE")
    sub.add_argument("--dendrogram", help="also write the merge list here (hierarchical only)")
    sub.set_defaults(fn=cmd_communities)

    sub = commands.add_parser("linkpred", help="score node pairs / evaluate a predictor")
    sub.add_argument("--method", required=True, choices=sorted(LINKPRED))
    add_io(sub)
    sub.add_argument("--param", action="append", metavar="KEY=VALUE")
    sub.add_argument("--top", type=int, default=None, help="keep only the k best pairs")
    sub.add_argument("--include-links", action="store_true",
                     help="also score pairs that are already linked")
    sub.add_argument("--evaluate", action="store_true",
                     help="holdout evaluation instead of raw scores")
    sub.add_argument("--holdout", type=float, default=0.1)
    sub.add_argument("--seed", type=int, default=0)
    sub.set_defaults(fn=cmd_linkpred)

    sub = commands.add_parser("layout", help="compute 2-D positions")
    sub.add_argument("--method", required=True, choices=sorted(LAYOUTS))
    add_io(sub)
    sub.add_argument("--param", action="append", metavar="KEY=VALUE")
    sub.set_defaults(fn=cmd_layout)

    sub = commands.add_parser("render", help="draw the network as SVG")
    add_io(sub)
    sub.add_argument("--layout", default="fruchterman_reingold", choices=sorted(LAYOUTS))
    sub.add_argument("--param", action="append", metavar="KEY=VALUE")
    sub.add_argument("--positions", help="node<TAB>x<TAB>y file instead of computing a layout")
    sub.add_argument("--node-size", help="attr:NAME or metric:NAME")
    sub.add_argument("--node-color", help="attr:NAME or metric:NAME")
    sub.add_argument("--link-width", help="attr:NAME")
    sub.add_argument("--link-color", help="attr:NAME")
    sub.add_argument("--width", type=int, default=800)
    sub.add_argument("--height", type=int, default=800)
    sub.set_defaults(fn=cmd_render)

    sub = commands.add_parser("serve", help="serve the JSON API and web UI")
    sub.add_argument("--port", type=int, default=8750)
    sub.add_argument("--dir", default=".", help="directory for resolving network files")
    sub.add_argument("--network", help="network file to preload")
    sub.add_argument("--ui-dir", dest="ui_dir", help="static UI bundle directory")
    sub.add_argument("--async-threshold", dest="async_threshold", type=float, default=1.0,
                     help="estimated seconds above which analysis requests become jobs")
    sub.set_defaults(fn=cmd_serve)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.workers is not None:
        if args.workers < 1:
            parser.error("--workers must be >= 1")
        hal.configure(args.workers)
    try:
        return args.fn(args)
    except NetmineError as error:
        print(f"netmine: error: {error}", file=sys.stderr)
        return 1
    except OSError as error:
        print(f"netmine: error: {error}", file=sys.stderr)
        return 1
    finally:
        hal.configure(None)


if __name__ == "__main__":
    sys.exit(main())
