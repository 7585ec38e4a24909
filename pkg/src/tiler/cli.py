"""Command-line front-end: `tiler VERB FILE [options]`.

Exit codes: 0 success, 1 untileable, 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys

from .components import forced_components
from .equilibrium import build_equilibrium, verify_equilibrium
from .errors import TilerError, Untileable
from .flips import flip_distance, flip_path, local_flip_connected, local_flip_count
from .generation import count_tilings, enumerate_tilings, sample_uniform
from .grid import build_graph, parse_figure
from .lattice import max_tiling, min_tiling, minimal_height
from .oracle import brute_enumerate
from .render import JSON_FORMAT, dominoes_from_json, render_tiling, tiling_to_json
from .tiling import height_of_tiling, validate_tiling


def _load(path):
    with open(path, encoding="utf-8") as fh:
        figure = parse_figure(fh.read())
    graph = build_graph(figure)
    eqfn, weights = build_equilibrium(graph)
    return figure, graph, eqfn, weights


def _vertex_str(v):
    return f"({v.x},{v.y})" + (f"#{v.copy}" if v.copy else "")


def _emit_tiling(figure, tiling, as_json):
    if as_json:
        print(json.dumps(tiling_to_json(tiling)))
    else:
        print(render_tiling(figure, tiling))


def _cmd_check(args):
    figure, graph, eqfn, weights = _load(args.figure)
    tileable = True
    try:
        min_tiling(graph, weights)
    except Untileable:
        tileable = False
    info = {
        "format": JSON_FORMAT,
        "cells": len(figure),
        "holes": len(graph.holes),
        "equilibrium_ok": verify_equilibrium(graph, eqfn),
        "tileable": tileable,
    }
    if args.json:
        print(json.dumps(info))
    else:
        for key, val in info.items():
            if key != "format":
                print(f"{key}: {val}")
    return 0 if tileable else 1


def _cmd_extreme(args, which):
    figure, graph, _, weights = _load(args.figure)
    tiling = min_tiling(graph, weights) if which == "min" else max_tiling(graph, weights)
    _emit_tiling(figure, tiling, args.json)
    return 0


def _cmd_count(args):
    _, graph, _, weights = _load(args.figure)
    n = count_tilings(graph, weights)
    print(json.dumps({"format": JSON_FORMAT, "count": n}) if args.json else n)
    return 0


def _cmd_enum(args):
    figure, graph, _, weights = _load(args.figure)
    stream = enumerate_tilings(graph, weights)
    if args.limit is not None:
        stream = itertools.islice(stream, args.limit)
    if args.json:
        tilings = [tiling_to_json(t)["dominoes"] for t in stream]
        print(json.dumps({"format": JSON_FORMAT, "tilings": tilings}))
    else:
        for t in stream:
            print(render_tiling(figure, t))
            print()
    return 0


def _cmd_sample(args):
    figure, graph, _, weights = _load(args.figure)
    samples = [
        (seed, sample_uniform(graph, weights, seed))
        for seed in range(args.seed, args.seed + args.n)
    ]
    if args.json:
        out = [
            {"seed": seed, "dominoes": tiling_to_json(t)["dominoes"]}
            for seed, t in samples
        ]
        print(json.dumps({"format": JSON_FORMAT, "samples": out}))
    else:
        for _, t in samples:
            print(render_tiling(figure, t))
            print()
    return 0


def _cmd_dist(args):
    _, graph, _, weights = _load(args.figure)
    heights = []
    for path in (args.t1, args.t2):
        with open(path, encoding="utf-8") as fh:
            dominoes = dominoes_from_json(json.load(fh))
        tiling = validate_tiling(graph, dominoes)
        heights.append(height_of_tiling(graph, weights, tiling))
    h1, h2 = heights
    cg = forced_components(
        graph, weights, min_tiling(graph, weights)
    )
    dist = flip_distance(h1, h2, cg)
    local = local_flip_connected(graph, h1, h2)
    result = {"format": JSON_FORMAT, "distance": dist, "local_flip_connected": local}
    if local:
        result["local_flip_count"] = local_flip_count(graph, h1, h2)
    if args.path:
        result["path"] = [
            {"component": f.component, "direction": f.direction}
            for f in flip_path(cg, weights, h1, h2)
        ]
    if args.json:
        print(json.dumps(result))
    else:
        print(f"distance: {dist}")
        print(f"local-flip-connected: {str(local).lower()}")
        if args.path:
            for step in result["path"]:
                rep = cg.representatives[step["component"]]
                print(f"{step['direction']} {_vertex_str(rep)}")
    return 0


def _cmd_components(args):
    _, graph, _, weights = _load(args.figure)
    cg = forced_components(graph, weights, min_tiling(graph, weights))
    if args.json:
        out = {
            "format": JSON_FORMAT,
            "components": [
                {
                    "kind": cg.kinds[i],
                    "size": len(cg.components[i]),
                    "representative": list(cg.representatives[i]),
                }
                for i in range(len(cg.components))
            ],
            "edges": sorted(list(key) for key in cg.quotient_edges),
        }
        print(json.dumps(out))
    else:
        for i in range(len(cg.components)):
            rep = _vertex_str(cg.representatives[i])
            print(
                f"component {i}: kind={cg.kinds[i]} "
                f"size={len(cg.components[i])} rep={rep}"
            )
        for i, j in sorted(cg.quotient_edges):
            print(f"edge: {i} -- {j}")
    return 0


def _cmd_eq(args):
    _, graph, eqfn, _ = _load(args.figure)
    arcs = sorted((a, v) for a, v in eqfn.values.items() if v != 0)
    if args.json:
        out = {
            "format": JSON_FORMAT,
            "steps": {str(i): s for i, s in sorted(eqfn.steps.items())},
            "arcs": [
                {"from": list(a[0]), "to": list(a[1]), "value": v} for a, v in arcs
            ],
        }
        print(json.dumps(out))
    else:
        for i, s in sorted(eqfn.steps.items()):
            print(f"step[{i}] = {s}")
        for (u, v), val in arcs:
            print(f"{_vertex_str(u)}->{_vertex_str(v)}: {val}")
    return 0


def _cmd_oracle_count(args):
    figure, _, _, _ = _load(args.figure)
    print(len(brute_enumerate(figure)))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="tiler", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("figure", help="ASCII figure file ('#' and '.')")
        p.add_argument("--json", action="store_true", help="JSON output")
        return p

    add("check", help="figure diagnostics and tileability")
    add("min", help="minimal tiling")
    add("max", help="maximal tiling")
    add("count", help="number of tilings")
    p = add("enum", help="all tilings in lexicographic order")
    p.add_argument("--limit", type=int, default=None)
    p = add("sample", help="exact uniform samples")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("-n", type=int, default=1)
    p = add("dist", help="flip distance between two tilings")
    p.add_argument("t1", help="tiling JSON file")
    p.add_argument("t2", help="tiling JSON file")
    p.add_argument("--path", action="store_true", help="print a flip sequence")
    add("components", help="forced components and quotient arcs")
    add("eq", help="equilibrium step values and nonzero arcs")
    add("oracle-count", help="brute-force tiling count (debug)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "check": _cmd_check,
        "min": lambda a: _cmd_extreme(a, "min"),
        "max": lambda a: _cmd_extreme(a, "max"),
        "count": _cmd_count,
        "enum": _cmd_enum,
        "sample": _cmd_sample,
        "dist": _cmd_dist,
        "components": _cmd_components,
        "eq": _cmd_eq,
        "oracle-count": _cmd_oracle_count,
    }
    try:
        return handlers[args.verb](args)
    except Untileable:
        print("untileable", file=sys.stderr)
        return 1
    except (TilerError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
