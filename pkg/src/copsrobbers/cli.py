"""Command-line entry point.

Exit codes: 0 success, 1 verification failure (or a trace that fails
replay), 2 usage or input error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import graph as gc
from .engine import Trace, play, replay_check
from .errors import CopsRobbersError, GraphError, InstanceTooLargeError
from .solver import STATE_CAP, cop_number, cop_win
from .strategies import make_cop, make_robber
from .transforms import clique_substitution, girth_lift, hat_construction, subdivide
from .treewidth import exact_treewidth, validate_decomposition
from .verify import CorpusSpec, check_bounds, check_strategies, check_transform_monotonicity

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


def _read(path):
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _graph(args):
    return gc.parse_graph(_read(args.input))


def _config(args):
    keys = ("command", "input", "output", "seed", "state_cap", "horizon", "threads", "format")
    out = {k: getattr(args, k, None) for k in keys}
    for extra in ("k", "cop", "robber", "checks", "max_n"):
        if hasattr(args, extra):
            out[extra] = getattr(args, extra)
    return out


def _emit_graph(args, g, comment=None):
    if args.format == "dot":
        _write(args.output, gc.to_dot(g))
    elif args.format == "json":
        _write(args.output, json.dumps({"n": g.n, "edges": [list(e) for e in g.edges]}, sort_keys=True) + "\n")
    else:
        _write(args.output, gc.render_graph(g, comment))


def cmd_gen(args):
    params = []
    for x in args.params:
        try:
            params.append(int(x))
        except ValueError:
            params.append(float(x))
    kwargs = {"seed": args.seed} if args.family == "gnp" else {}
    if args.family == "gnp" and len(params) > 2:
        raise GraphError("gnp takes n and p; use --seed for the seed")
    g = gc.generate(args.family, *params, **kwargs)
    _emit_graph(args, g, f"{args.family} {' '.join(args.params)}".strip())
    return EXIT_OK


def cmd_metrics(args):
    g = _graph(args)
    doc = dict(gc.metrics(g).as_dict(), n=g.n, m=g.m, bipartite=g.is_bipartite(), max_degree=g.max_degree())
    if args.format == "json":
        _write(args.output, json.dumps(doc, sort_keys=True) + "\n")
    else:
        _write(args.output, "".join(f"{k}: {doc[k]}\n" for k in sorted(doc)))
    return EXIT_OK


def cmd_transform(args):
    g = _graph(args)
    if args.kind == "clique":
        res = clique_substitution(g)
    elif args.kind == "subdivide":
        res = subdivide(g, args.r)
    elif args.kind == "hat":
        res = hat_construction(g)
    else:
        res = girth_lift(g, args.girth)
    if args.format == "json":
        _write(args.output, res.to_json() + "\n")
    else:
        _emit_graph(args, res.output, f"{res.kind} of a {g.n}-vertex graph")
    return EXIT_OK


def cmd_tw(args):
    g = _graph(args)
    width, dec = exact_treewidth(g)
    if not validate_decomposition(g, dec):
        raise AssertionError("exact decomposition failed validation")
    if args.format == "json":
        doc = json.loads(dec.to_json())
        doc["width"] = width
        _write(args.output, json.dumps(doc, sort_keys=True) + "\n")
    elif args.format == "dot":
        lines = ["graph T {"]
        lines += [f'  {x} [label="{x}: {" ".join(map(str, b))}"];' for x, b in enumerate(dec.bags)]
        lines += [f"  {a} -- {b};" for a, b in dec.tree.edges]
        _write(args.output, "\n".join(lines + ["}"]) + "\n")
    else:
        out = [f"treewidth {width}"] + [f"bag {x}: {' '.join(map(str, b))}" for x, b in enumerate(dec.bags)]
        out += [f"tree {a} {b}" for a, b in dec.tree.edges]
        _write(args.output, "\n".join(out) + "\n")
    return EXIT_OK


def cmd_copnum(args):
    g = _graph(args)
    if args.k is not None:
        parts = [g.induced_subgraph(p)[0] for p in g.components()]
        won = all(cop_win(h, args.k, args.state_cap) for h in parts)
        _write(args.output, f"{'cop-win' if won else 'robber-win'} with {args.k} cops\n")
        return EXIT_OK
    c = cop_number(g, args.state_cap)
    if args.format == "json":
        _write(args.output, json.dumps({"cop_number": c, "config": _config(args)}, sort_keys=True) + "\n")
    else:
        text = f"{c}\n"
        if args.verdicts:
            parts = [g.induced_subgraph(p)[0] for p in g.components()]
            for k in range(1, c + 1):
                won = all(cop_win(h, k, args.state_cap) for h in parts)
                text += f"k={k}: {'cop-win' if won else 'robber-win'}\n"
        _write(args.output, text)
    return EXIT_OK


def cmd_play(args):
    if args.replay:
        trace = Trace.from_json(_read(args.replay))
        ok = replay_check(trace)
        _write(args.output, f"replay {'ok' if ok else 'MISMATCH'}: {trace.outcome}\n")
        return EXIT_OK if ok else EXIT_FAIL
    if args.k is None:
        raise GraphError("play needs --k")
    g = _graph(args)
    cop = make_cop(args.cop, g, args.k, args.state_cap)
    board = getattr(cop, "graph", None)  # subdiv+1 plays on the subdivided graph
    if isinstance(board, gc.Graph):
        g = board
    robber = make_robber(args.robber, g, args.k, args.state_cap)
    trace = play(g, args.k, cop, robber, args.horizon, config=_config(args))
    _write(args.output, trace.to_json() + "\n")
    if args.output not in (None, "-"):
        sys.stderr.write(f"{trace.outcome}\n")
    return EXIT_OK


def cmd_verify(args):
    spec = CorpusSpec(
        seed=args.seed,
        max_n=args.max_n,
        exhaustive_max_n=min(args.exhaustive_max_n, args.max_n),
        gnp_per_cell=args.gnp_per_cell,
        state_cap=args.state_cap,
    )
    fns = {"bounds": check_bounds, "monotone": check_transform_monotonicity, "strategies": check_strategies}
    report = None
    for name in args.checks.split(","):
        if name not in fns:
            raise GraphError(f"unknown check {name!r} (known: {', '.join(fns)})")
        part = fns[name](spec, args.threads)
        report = part if report is None else report.merge(part)
    report.config = dict(report.config, run=_config(args))
    _write(args.output, report.to_json() + "\n" if args.format == "json" else report.to_text())
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_experiment(args):
    lo, _, hi = args.n.partition("..")
    ns = range(int(lo), int(hi or lo) + 1)
    rows = []
    for n in ns:
        g = subdivide(gc.complete(n), n).output
        rows.append({"n": n, "vertices": g.n, "edges": g.m, "cop_number": cop_number(g, args.state_cap)})
    if args.format == "json":
        _write(args.output, json.dumps({"rows": rows, "config": _config(args)}, sort_keys=True) + "\n")
    else:
        text = "n  vertices  edges  cop(subdivide(K_n, n))\n"
        text += "".join(f"{r['n']:<2} {r['vertices']:>8}  {r['edges']:>5}  {r['cop_number']}\n" for r in rows)
        _write(args.output, text)
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", default="-", help="graph file (edge-list format); '-' for stdin")
    common.add_argument("--output", "-o", default="-", help="output file; '-' for stdout")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--state-cap", type=int, default=STATE_CAP, help="solver state-count cap")
    common.add_argument("--horizon", type=int, default=None, help="round limit for play (default: state count + 1)")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")

    p = argparse.ArgumentParser(prog="copsrobbers", description="Cops and robber pursuit-evasion lab.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gen", parents=[common], help="generate a graph from a named family")
    s.add_argument("family", choices=sorted(gc.FAMILIES))
    s.add_argument("params", nargs="*")
    s.set_defaults(fn=cmd_gen)

    s = sub.add_parser("metrics", parents=[common], help="girth, circumference, longest induced path, components")
    s.set_defaults(fn=cmd_metrics)

    s = sub.add_parser("transform", parents=[common], help="clique substitution, subdivision, hat, girth lift")
    s.add_argument("kind", choices=("clique", "subdivide", "hat", "girth-lift"))
    s.add_argument("--r", type=int, default=1, help="internal vertices per edge for subdivide")
    s.add_argument("--girth", type=int, default=6, help="target girth for girth-lift")
    s.set_defaults(fn=cmd_transform)

    s = sub.add_parser("tw", parents=[common], help="exact treewidth and an optimal decomposition")
    s.set_defaults(fn=cmd_tw)

    s = sub.add_parser("copnum", parents=[common], help="exact cop number")
    s.add_argument("--k", type=int, default=None, help="only decide whether k cops win")
    s.add_argument("--verdicts", action="store_true", help="print the verdict for every k up to the cop number")
    s.set_defaults(fn=cmd_copnum)

    s = sub.add_parser("play", parents=[common], help="play one match and write its trace")
    s.add_argument("--k", type=int, default=None)
    s.add_argument("--cop", default="optimal", help="e.g. optimal, lead-cop:l=4, treedec, subdiv+1:r=1, thm2:H=claw")
    s.add_argument("--robber", default="optimal", help="optimal, stationary[:v=V], scripted:route=0-1-2")
    s.add_argument("--replay", default=None, help="re-validate a trace file instead of playing")
    s.set_defaults(fn=cmd_play)

    s = sub.add_parser("verify", parents=[common], help="run the falsification checks on a seeded corpus")
    s.add_argument("--checks", default="bounds,monotone,strategies")
    s.add_argument("--max-n", type=int, default=10)
    s.add_argument("--exhaustive-max-n", type=int, default=6)
    s.add_argument("--gnp-per-cell", type=int, default=2)
    s.set_defaults(fn=cmd_verify)

    s = sub.add_parser("experiment-subdivided-kn", parents=[common], help="cop numbers of subdivide(K_n, n)")
    s.add_argument("--n", default="3..5", help="single n or a range lo..hi")
    s.set_defaults(fn=cmd_experiment)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.fn(args)
    except InstanceTooLargeError as exc:
        sys.stderr.write(f"resource cap exceeded: {exc}\n")
        return EXIT_CAP
    except (CopsRobbersError, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        parser.print_usage(sys.stderr)
        return EXIT_USAGE


def main_exit():  # console-script wrapper
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    main_exit()
