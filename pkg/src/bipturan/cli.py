"""Command-line front end.

Vertices on the command line and in JSON are written 1-based as ``x3`` or
``y1``, matching the graph file format.  Exit codes: 0 success, 1 a violation
or a falsified lemma, 2 usage error, 3 feasibility guard hit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import __version__, constructions, cycles, enumeration, witnesses
from .bigraph import (
    BipartiteGraph,
    VertexRef,
    component_masks,
    complete,
    format_graph,
    iter_bits,
    min_pair_rho,
    parse_graph,
    read_graph,
)
from .errors import (
    BipturanError,
    InvalidParams,
    LemmaFalsified,
    TooLarge,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


def vertex_token(v: VertexRef) -> str:
    return f"{v.side.lower()}{v.index + 1}"


def parse_vertex(token: str) -> VertexRef:
    side = token[:1].upper()
    if side not in ("X", "Y") or not token[1:].isdigit() or int(token[1:]) < 1:
        raise argparse.ArgumentTypeError(f"bad vertex {token!r}; use x1, y2, ...")
    return VertexRef(side, int(token[1:]) - 1)


def parse_range(text: str) -> list[int]:
    """``4``, ``4..6`` or ``4,5,7``."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}") from None


def _load(path: str) -> BipartiteGraph:
    if path == "-":
        return parse_graph(sys.stdin.read())
    return read_graph(path)


def _emit(doc: dict, fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        out.write(json.dumps(doc, indent=2) + "\n")
        return
    sep = "\t" if fmt == "tsv" else ": "
    for key, value in doc.items():
        if isinstance(value, dict):
            for sub, v in value.items():
                out.write(f"{key}.{sub}{sep}{json.dumps(v)}\n")
        else:
            out.write(f"{key}{sep}{json.dumps(value)}\n")


def _doc(command: str, parameters: dict, **rest) -> dict:
    doc = {"command": command, "parameters": parameters}
    doc.update(rest)
    doc["version"] = __version__
    return doc


def _cycle_json(C) -> list[str] | None:
    return None if C is None else [vertex_token(v) for v in C.vertices]


# -- subcommands -------------------------------------------------------------

def cmd_construct(args) -> int:
    kind, params = args.kind, args.params
    wanted = {"L": 3, "gyori": 3, "complete": 2}[kind]
    if len(params) != wanted:
        raise InvalidParams(f"construct {kind} takes {wanted} integers")
    if kind == "L":
        G = constructions.build_L(*params)
    elif kind == "gyori":
        G = constructions.build_gyori_extremal(*params)
    else:
        G = complete(*params)
    text = format_graph(G, [f"construct {kind} {' '.join(map(str, params))}"])
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w", newline="\n") as fh:
            fh.write(text)
    return EXIT_OK


def cmd_cycles(args) -> int:
    G = _load(args.file)
    params = {"file": args.file, "m": G.m, "n": G.n, "edges": G.edge_count}
    if args.length is not None:
        C = cycles.find_cycle_of_length(G, args.length)
        doc = _doc("cycles", dict(params, length=args.length),
                   found=C is not None, cycle=_cycle_json(C))
    elif args.spectrum:
        rep = cycles.even_spectrum(G)
        doc = _doc("cycles", dict(params, mode="spectrum"),
                   girth=rep.girth, circumference=rep.circumference,
                   present_lengths=sorted(rep.present_lengths))
    else:
        C = cycles.longest_cycle(G)
        doc = _doc("cycles", dict(params, mode="longest"),
                   length=0 if C is None else C.length, cycle=_cycle_json(C))
    _emit(doc, args.format)
    return EXIT_OK


def cmd_turan(args) -> int:
    m, n, two_t = args.m, args.n, args.two_t
    params = {"m": m, "n": n, "cycle_length": two_t, "jobs": args.jobs,
              "probe_outside_range": args.probe_outside_range}
    start = time.perf_counter()
    if args.probe_outside_range:
        rep = enumeration.probe_outside_range(m, n, two_t, jobs=args.jobs)
        stats = rep.pop("stats")
        doc = _doc("turan", params, **{k: v for k, v in rep.items() if k not in ("m", "n", "cycle_length")},
                   stats=stats)
    else:
        res = enumeration.turan_exact(m, n, two_t, jobs=args.jobs, override=args.override)
        body = res.to_json()
        doc = _doc("turan", params,
                   value=body["value"], formula_value=body["formula_value"],
                   in_proven_range=body["in_proven_range"], witness=body["witness"],
                   stats={"nodes": res.stats.nodes, "seconds": time.perf_counter() - start})
    _emit(doc, args.format)
    return EXIT_OK


def cmd_verify(args) -> int:
    exhaustive = not args.samples
    params = {
        "theorem_id": args.theorem_id, "m": args.m, "n": args.n, "t": args.t, "k": args.k,
        "mode": "exhaustive" if exhaustive else "random",
        "samples": args.samples, "seed": args.seed, "jobs": args.jobs,
        "shard_bits": args.shard_bits, "all_longest": args.all_longest,
    }
    start = time.perf_counter()
    found = enumeration.verify_theorem(
        args.theorem_id, args.m, args.n, args.t, args.k,
        exhaustive=exhaustive, samples=args.samples or 0, seed=args.seed,
        jobs=args.jobs, shard_bits=args.shard_bits, all_longest=args.all_longest,
        override=args.override,
    )
    if args.out_dir and found:
        os.makedirs(args.out_dir, exist_ok=True)
        for idx, v in enumerate(found):
            path = os.path.join(args.out_dir, f"{v.theorem_id}_{idx:04d}.bip")
            with open(path, "w", newline="\n") as fh:
                fh.write(v.graph_file())
    doc = _doc("verify", params,
               violations=[v.to_json() for v in found],
               stats={"violations": len(found), "seconds": time.perf_counter() - start})
    _emit(doc, args.format)
    return EXIT_FAIL if found else EXIT_OK


def _default_fan_d(G: BipartiteGraph, x: VertexRef, C) -> int:
    on_c = G.mask_of(C.vertices)
    g = G.gid(x)
    H = next(c for c in component_masks(G, G.all_mask & ~on_c) if c >> g & 1)
    return min(G.adjacency[v].bit_count() for v in iter_bits(H))


def cmd_witness(args) -> int:
    G = _load(args.file)
    a = args.anchors
    lemma = args.lemma_id
    need = {"L2.1": 1, "L2.2": 2, "L2.3": 2, "L2.6": 1, "L2.9": 2}
    if lemma not in need:
        raise InvalidParams(f"unknown lemma {lemma!r}; choose from {sorted(need)}")
    if len(a) != need[lemma]:
        raise InvalidParams(f"{lemma} takes {need[lemma]} anchor vertices")
    params = {"lemma_id": lemma, "file": args.file,
              "anchors": [vertex_token(v) for v in a], "d": args.d, "rho": args.rho}
    report: dict = {}
    if lemma == "L2.1":
        d = args.d if args.d is not None else min(r.bit_count() for r in G.rows)
        W = witnesses.maximal_path_with_terminus(G, a[0], d)
        bound = 2 * d if a[0].side == "Y" else 2 * d + 1
        report = {"order": W.order, "bound": bound, "terminus_side": W.terminus.side}
        listing = {"path": [vertex_token(v) for v in W.vertices]}
    elif lemma in ("L2.2", "L2.3"):
        fn = witnesses.detached_maximal_dpp if lemma == "L2.2" else witnesses.dpp_good_pair
        W = fn(G, a[0], a[1], args.rho)
        rho = args.rho if args.rho is not None else min_pair_rho(G)
        report = {"order": W.order, "bound": rho + 1, "detached": W.detached,
                  "maximal": W.is_maximal(G)}
        listing = {"path1": [vertex_token(v) for v in W.path1.vertices],
                   "path2": [vertex_token(v) for v in W.path2.vertices]}
    elif lemma == "L2.6":
        C = cycles.longest_cycle(G)
        if C is None:
            raise InvalidParams("graph has no cycle")
        if G.mask_of(C.vertices) >> G.gid(a[0]) & 1:
            raise InvalidParams(f"{vertex_token(a[0])} lies on the chosen longest cycle")
        d = args.d if args.d is not None else _default_fan_d(G, a[0], C)
        W = witnesses.find_fan(G, a[0], C, d)
        report = {"edges": W.edge_count, "bound": d}
        listing = {"cycle": _cycle_json(C),
                   "paths": [[vertex_token(v) for v in p.vertices] for p in W.paths]}
    else:
        W = witnesses.long_path_between(G, a[0], a[1], args.rho)
        rho = args.rho if args.rho is not None else min_pair_rho(G)
        report = {"order": W.order, "bound": rho}
        listing = {"path": [vertex_token(v) for v in W.vertices]}
    size = report.get("order", report.get("edges"))
    report["valid"] = size >= report["bound"]
    doc = _doc("witness", params, witness=listing, validation=report)
    _emit(doc, args.format)
    return EXIT_OK if report["valid"] else EXIT_FAIL


def cmd_bounds(args) -> int:
    table = constructions.known_bounds(args.m, args.n, args.t)
    doc = _doc("bounds", {"m": args.m, "n": args.n, "t": args.t}, bounds=table)
    _emit(doc, args.format)
    return EXIT_OK


# -- argument parsing ----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bipturan", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp):
        sp.add_argument("--format", choices=("json", "tsv", "human"), default="json")

    sp = sub.add_parser("construct", help="write an extremal graph in bip format")
    sp.add_argument("kind", choices=("L", "gyori", "complete"))
    sp.add_argument("params", type=int, nargs="+")
    sp.add_argument("-o", "--output", default="-")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("cycles", help="cycle report for a graph file ('-' = stdin)")
    sp.add_argument("file")
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--length", type=int)
    mode.add_argument("--spectrum", action="store_true")
    mode.add_argument("--longest", action="store_true")
    fmt(sp)
    sp.set_defaults(func=cmd_cycles)

    sp = sub.add_parser("turan", help="exact ex(m, n, C_2t)")
    sp.add_argument("m", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("two_t", type=int, metavar="2t")
    sp.add_argument("--probe-outside-range", action="store_true")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--override", action="store_true", help="ignore the m*n guard")
    fmt(sp)
    sp.set_defaults(func=cmd_turan)

    sp = sub.add_parser("verify", help="search for counterexamples to a theorem")
    sp.add_argument("theorem_id", choices=sorted(enumeration.THEOREMS))
    sp.add_argument("--m", type=parse_range, required=True)
    sp.add_argument("--n", type=parse_range, required=True)
    sp.add_argument("--t", type=parse_range)
    sp.add_argument("--k", type=parse_range)
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true", help="default")
    mode.add_argument("--samples", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--shard-bits", type=int, default=0)
    sp.add_argument("--all-longest", action="store_true")
    sp.add_argument("--out-dir")
    sp.add_argument("--override", action="store_true", help="ignore the m*n guard")
    fmt(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("witness", help="run a witness search on a graph file")
    sp.add_argument("lemma_id", choices=("L2.1", "L2.2", "L2.3", "L2.6", "L2.9"))
    sp.add_argument("file")
    sp.add_argument("anchors", type=parse_vertex, nargs="*")
    sp.add_argument("--d", type=int)
    sp.add_argument("--rho", type=int)
    fmt(sp)
    sp.set_defaults(func=cmd_witness)

    sp = sub.add_parser("bounds", help="threshold and bound table")
    sp.add_argument("m", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("t", type=int)
    fmt(sp)
    sp.set_defaults(func=cmd_bounds)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except TooLarge as exc:
        print(f"bipturan: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except LemmaFalsified as exc:
        print(f"bipturan: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (BipturanError, OSError) as exc:
        print(f"bipturan: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
