"""Command-line driver.

Subcommands::

    vitaledges sweep       --graph PATH | --ba n,m,m0  --cost LIST --strategies LIST ...
    vitaledges oracle      --graph PATH | --ba n,m,m0  --cost LIST
    vitaledges betweenness --graph PATH | --ba n,m,m0
    vitaledges gen-ba      --ba n,m,m0 [--seed S] [--out PATH]

Any long option can also come from a ``key=value`` file given via
``--config``; options on the command line win.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from .bench import (
    DEFAULT_ENUMERATION_CAP,
    SweepConfig,
    brute_force_vital_edges,
    format_csv,
    format_edge_list,
    read_edge_list,
    run_sweep,
)
from .centrality import edge_betweenness
from .exceptions import ValidationError
from .netgen import BAParams, ba_network

log = logging.getLogger("vitaledges")

EXIT_VALIDATION = 2


def _int_list(text: str) -> List[int]:
    out = []
    for part in str(text).split(","):
        part = part.strip()
        if not part:
            continue
        if ":" in part:
            # start:stop:step, stop inclusive
            bits = [int(x) for x in part.split(":")]
            start, stop = bits[0], bits[1]
            step = bits[2] if len(bits) > 2 else 1
            out.extend(range(start, stop + 1, step))
        else:
            out.append(int(part))
    return out


def _str_list(text: str) -> List[str]:
    return [p.strip() for p in str(text).split(",") if p.strip()]


def _ba_spec(text: str) -> BAParams:
    parts = _int_list(text)
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("--ba expects n,m,m0")
    return BAParams(n_final=parts[0], m=parts[1], m0=parts[2])


def read_config(path) -> dict:
    """Parse ``key=value`` lines; ``#`` comments and blank lines are skipped."""
    values = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValidationError(f"{path}:{lineno}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        values[key.replace("-", "_")] = value
    return values


def _add_graph_args(p):
    src = p.add_mutually_exclusive_group()
    src.add_argument("--graph", help="edge-list file")
    src.add_argument("--ba", type=_ba_spec, help="Barabási–Albert graph n,m,m0")
    p.add_argument("--seed", type=int, default=0, help="seed for --ba")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vitaledges", description=__doc__.split("\n")[0])
    parser.add_argument("--config", help="key=value parameter file")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="R versus cost for each strategy, as CSV")
    _add_graph_args(sweep)
    sweep.add_argument("--cost", type=_int_list, default=[0], help="e.g. 0,50,100 or 0:300:50")
    sweep.add_argument("--strategies", type=_str_list, default=["ma", "beas"])
    sweep.add_argument("--seeds", type=_int_list, default=[0])
    sweep.add_argument("--generations", type=int)
    sweep.add_argument("--pop", type=int)
    sweep.add_argument("--pc", type=float)
    sweep.add_argument("--pl", type=float)
    sweep.add_argument("--mu", type=float)
    sweep.add_argument("--no-elitism", action="store_true")
    sweep.add_argument(
        "--no-timing", action="store_true", help="write walltime_ms as 0 for reproducible output"
    )
    sweep.add_argument("--out", help="CSV path (default: stdout)")

    oracle = sub.add_parser("oracle", help="exact vital edges by enumeration")
    _add_graph_args(oracle)
    oracle.add_argument("--cost", type=_int_list, default=[1])
    oracle.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP)
    oracle.add_argument("--out")

    betw = sub.add_parser("betweenness", help="edge betweenness of every edge")
    _add_graph_args(betw)
    betw.add_argument("--out")

    gen = sub.add_parser("gen-ba", help="write a Barabási–Albert graph as an edge list")
    gen.add_argument("--ba", type=_ba_spec, default=BAParams())
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out")
    return parser


def _apply_config(parser, argv):
    """Re-parse with config-file values installed as subcommand defaults."""
    args = parser.parse_args(argv)
    if not args.config:
        return args
    values = read_config(args.config)
    subparser = parser._subparsers._group_actions[0].choices[args.command]
    known = {a.dest: a for a in subparser._actions}
    defaults = {}
    for key, raw in values.items():
        if key not in known:
            raise ValidationError(f"unknown config key {key!r} for {args.command}")
        action = known[key]
        if action.const is True:
            defaults[key] = raw.lower() in ("1", "true", "yes", "on")
        elif action.type is not None:
            defaults[key] = action.type(raw)
        else:
            defaults[key] = raw
    subparser.set_defaults(**defaults)
    return parser.parse_args(argv)


def _load_graph(args):
    if args.graph:
        return read_edge_list(args.graph)
    params = args.ba or BAParams()
    return ba_network(BAParams(params.n_final, params.m, params.m0, seed=args.seed))


def _emit(text: str, out: Optional[str]):
    if out:
        try:
            Path(out).write_text(text)
        except OSError as exc:
            raise OSError(f"cannot write {out}: {exc}") from exc
    else:
        sys.stdout.write(text)


def cmd_sweep(args) -> int:
    g = _load_graph(args)
    overrides = {
        "generations": args.generations,
        "population_size": args.pop,
        "crossover_prob": args.pc,
        "local_search_prob": args.pl,
        "mu": args.mu,
    }
    overrides = {k: v for k, v in overrides.items() if v is not None}
    if args.no_elitism:
        overrides["elitism"] = False
    cfg = SweepConfig(g, args.strategies, args.cost, args.seeds, overrides)
    log.info("sweep on %r: strategies=%s costs=%s", g, args.strategies, args.cost)
    res = run_sweep(cfg)
    _emit(format_csv(res, timing=not args.no_timing), args.out)
    return 0


def cmd_oracle(args) -> int:
    g = _load_graph(args)
    lines = ["cost,R,edges"]
    for c in args.cost:
        edges, r = brute_force_vital_edges(g, c, cap=args.cap)
        lines.append(f"{c},{r:.6f},{';'.join(g.edge_labels(edges))}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_betweenness(args) -> int:
    g = _load_graph(args)
    scores = edge_betweenness(g)
    lines = ["edge,betweenness"]
    lines += [f"{lab},{s:.6f}" for lab, s in zip(g.edge_labels(range(g.m)), scores)]
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_gen_ba(args) -> int:
    p = args.ba
    g = ba_network(BAParams(p.n_final, p.m, p.m0, seed=args.seed))
    _emit(format_edge_list(g), args.out)
    return 0


COMMANDS = {
    "sweep": cmd_sweep,
    "oracle": cmd_oracle,
    "betweenness": cmd_betweenness,
    "gen-ba": cmd_gen_ba,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = _apply_config(parser, argv)
        logging.basicConfig(
            level=logging.INFO if args.verbose else logging.WARNING,
            format="%(levelname)s %(message)s",
        )
        return COMMANDS[args.command](args)
    except (ValidationError, ValueError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
