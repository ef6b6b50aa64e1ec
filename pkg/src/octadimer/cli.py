"""Command-line front end.

Subcommands: build, enumerate, prob, moves, sample, render, selftest.
Regions travel as {"faces": [[x,y],...], "f_star": [x,y],
"v_star": [x,y]}, coverings as {"dimers": [[[x1,y1],[x2,y2]], ...]}.
Every output is JSON with sorted keys (byte-deterministic) except
render, which emits SVG.  Exit codes: 0 success, 2 validation failure,
3 enumeration infeasible, 1 selftest failure.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from . import kirchhoff, moves, oracle, render, sampler, slits, temperley
from .covering import covering_from_obj, covering_to_obj, impurities
from .lattice import (InvalidInputError, Region, build_region, edge,
                      is_diagonal_edge, strip_region, ell_region)


def _emit(obj):
    json.dump(obj, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _fail(code, kind, message):
    _emit({"error": kind, "message": message})
    raise SystemExit(code)


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, ValueError) as exc:
        _fail(2, type(exc).__name__, "%s: %s" % (path, exc))


def _load_region(path):
    obj = _load_json(path)
    try:
        region = Region.of(obj["faces"], obj["f_star"], obj["v_star"])
        return build_region(region)
    except (KeyError, TypeError) as exc:
        _fail(2, type(exc).__name__, "region file %s: %r" % (path, exc))
    except InvalidInputError as exc:
        _fail(2, type(exc).__name__, str(exc))


def _load_covering(tri, path):
    try:
        return covering_from_obj(tri.g, _load_json(path))
    except InvalidInputError as exc:
        _fail(2, type(exc).__name__, str(exc))


def _edge_key(e):
    return json.dumps([list(e[0]), list(e[1])])


def cmd_build(args):
    tri = _load_region(args.region)
    g = tri.g
    _emit({
        "faces": [list(f) for f in tri.region.faces],
        "f_star": list(tri.f_star),
        "v_star": list(tri.v_star),
        "vertices": len(g.vertices),
        "edges": len(g.edges),
        "whites": g.white_count,
        "blacks": g.black_count,
        "expected_impurities": (g.white_count - g.black_count) // 2,
        "d_star": tri.h_perp.d_star,
        "e_star1": [list(v) for v in tri.e_star1],
        "e_star2": [list(v) for v in tri.e_star2],
        "diagonal_edges": [[list(u), list(v)] for u, v in g.edges
                           if is_diagonal_edge((u, v))],
    })


def cmd_enumerate(args):
    tri = _load_region(args.region)
    try:
        ms = oracle.enumerate_coverings(tri.g, limit=args.limit)
    except oracle.TooLargeError as exc:
        _fail(3, "TooLargeError", str(exc))
    if args.histogram:
        hist = oracle.impurity_histogram(tri.g, ms)
        _emit({"count": len(ms),
               "histogram": [{"edge": [list(u), list(v)], "count": c}
                             for (u, v), c in sorted(hist.items())]})
    else:
        _emit({"count": len(ms),
               "coverings": [covering_to_obj(m) for m in ms]})


def cmd_prob(args):
    tri = _load_region(args.region)
    sys_ = kirchhoff.build_system(tri.h_perp)
    det = kirchhoff.tree_count(sys_)
    p = kirchhoff.solve_p(sys_, tri.f_star)
    total = kirchhoff.total_coverings(tri)
    edges = []
    for e in tri.g.edges:
        if not is_diagonal_edge(e):
            continue
        count = kirchhoff.coverings_with_impurity(tri, e)
        edges.append({
            "edge": [list(e[0]), list(e[1])],
            "count": str(count),
            "probability": str(Fraction(count, total)),
        })
    _emit({
        "det_A": str(det),
        "p": {_vertex_key(v): str(x) for v, x in p.items()},
        "total": str(total),
        "d_star": sys_.d_star,
        "edge_probabilities": edges,
    })


def _vertex_key(v):
    return json.dumps(list(v))


def cmd_moves(args):
    if args.action != "list":
        _fail(2, "UnknownAction", "moves supports only: list")
    tri = _load_region(args.region)
    m = (_load_covering(tri, args.covering) if args.covering
         else temperley.initial_covering(tri))
    found = moves.find_moves(m)
    _emit({
        "sites": {"squares": len(moves.unit_squares(tri.g)),
                  "t_sites": len(moves.t_sites(tri.g))},
        "count": len(found),
        "moves": [{"kind": mv.kind,
                   "removes": [[list(u), list(v)] for u, v in mv.removes],
                   "adds": [[list(u), list(v)] for u, v in mv.adds]}
                  for mv in found],
    })


def cmd_sample(args):
    tri = _load_region(args.region)
    m0 = (_load_covering(tri, args.m0) if args.m0
          else temperley.initial_covering(tri))
    cfg = sampler.ChainConfig(seed=args.seed, steps=args.steps,
                              burn_in=args.burn_in,
                              sample_every=args.every)
    report = sampler.run(m0, cfg, keep_trajectory=bool(args.frames))
    if args.frames:
        os.makedirs(args.frames, exist_ok=True)
        for i, dimers in enumerate(report.trajectory):
            m = covering_from_obj(tri.g, {"dimers": dimers})
            path = os.path.join(args.frames, "frame_%06d.svg" % i)
            with open(path, "w") as fh:
                fh.write(render.render_covering(m))
    final_obj = covering_to_obj(report.final)
    final_obj["curves"] = [[list(p) for p in c.points]
                           for c in sorted(slits.slit_curves(report.final),
                                           key=lambda c: c.points)]
    _emit({
        "config": {"seed": cfg.seed, "steps": cfg.steps,
                   "burn_in": cfg.burn_in, "sample_every": cfg.sample_every},
        "rng_algorithm": report.rng_algorithm,
        "acceptance_rate": report.acceptance_rate,
        "n_samples": report.n_samples,
        "impurity_counts": {_edge_key(e): c for e, c
                            in report.impurity_counts.items()},
        "impurity_frequencies": {_edge_key(e): f for e, f
                                 in report.impurity_frequencies().items()},
        "final_covering": final_obj,
    })


def cmd_render(args):
    tri = _load_region(args.region)
    m = (_load_covering(tri, args.covering) if args.covering
         else temperley.initial_covering(tri))
    svg = render.render_covering(m, show_slits=args.slits,
                                 show_forests=args.forests)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)


def _check(label, got, want):
    ok = got == want
    print("%s %s" % ("ok  " if ok else "FAIL", label), end="")
    if not ok:
        print("  got %r want %r" % (got, want), end="")
    print()
    return ok


def cmd_selftest(args):
    ok = True
    tri = build_region(ell_region())
    sys_ = kirchhoff.build_system(tri.h_perp)
    p = kirchhoff.solve_p(sys_, tri.f_star)
    ok &= _check("L-region det A = 56", kirchhoff.tree_count(sys_), 56)
    ok &= _check("L-region p = (1/7, 2/7, 2/7, 1)",
                 [str(p[v]) for v in sorted(p)],
                 ["1/7", "2/7", "2/7", "1"])
    ok &= _check("L-region total = 328", kirchhoff.total_coverings(tri), 328)
    e13 = edge((1, 3), (2, 4))
    ok &= _check("L-region impurity count at (1,3) edge = 16",
                 kirchhoff.coverings_with_impurity(tri, e13), 16)
    ok &= _check("L-region P(impurity at (1,3) edge) = 2/41",
                 str(kirchhoff.impurity_probability(tri, e13)), "2/41")
    ms = oracle.enumerate_coverings(tri.g)
    ok &= _check("L-region oracle count = 328", len(ms), 328)
    hist = oracle.impurity_histogram(tri.g, ms)
    ok &= _check("L-region histogram matches det*p edge-by-edge",
                 all(hist[e] == kirchhoff.coverings_with_impurity(tri, e)
                     for e in hist), True)
    ok &= _check("L-region t-classes = 56",
                 len(moves.t_classes(ms)), 56)
    dets = []
    for n in range(1, 7):
        t = build_region(strip_region(n))
        dets.append(kirchhoff.tree_count(kirchhoff.build_system(t.h_perp)))
    ok &= _check("strip n=1..6 tree counts", dets, [4, 15, 56, 209, 780, 2911])
    t2 = build_region(strip_region(2))
    ok &= _check("strip n=2 total = oracle = 50",
                 (kirchhoff.total_coverings(t2),
                  len(oracle.enumerate_coverings(t2.g))), (50, 50))
    raise SystemExit(0 if ok else 1)


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="octadimer",
        description="Dimer coverings with diagonal impurities: exact "
                    "counts, local-move dynamics, slit-curves, sampling.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="validate a region and summarize G")
    p.add_argument("region")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("enumerate", help="brute-force all coverings")
    p.add_argument("region")
    p.add_argument("--histogram", action="store_true",
                   help="per-diagonal-edge impurity counts instead of states")
    p.add_argument("--limit", type=int, default=oracle.MATCHING_VERTEX_LIMIT,
                   help="vertex-count guard for the enumerator")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("prob", help="exact counts and impurity probabilities")
    p.add_argument("region")
    p.set_defaults(func=cmd_prob)

    p = sub.add_parser("moves", help="inspect local moves of a covering")
    p.add_argument("action", choices=["list"])
    p.add_argument("region")
    p.add_argument("covering", nargs="?",
                   help="covering JSON; default is the tree-built covering")
    p.set_defaults(func=cmd_moves)

    p = sub.add_parser("sample", help="run the lazy move chain")
    p.add_argument("region")
    p.add_argument("m0", nargs="?", help="starting covering JSON")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--burn-in", type=int, default=0)
    p.add_argument("--every", type=int, default=1)
    p.add_argument("--frames", metavar="DIR",
                   help="write one SVG per thinned sample into DIR")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("render", help="draw a covering as SVG")
    p.add_argument("region")
    p.add_argument("covering", nargs="?")
    p.add_argument("--slits", action="store_true")
    p.add_argument("--forests", action="store_true")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("selftest",
                       help="re-derive the worked-example numbers")
    p.set_defaults(func=cmd_selftest)

    args = parser.parse_args(argv)
    args.func(args)
    return 0


if __name__ == "__main__":
    sys.exit(main())
