"""Command-line interface for the clique-polynomial toolkit.

Every numeric answer is printed from exact rationals; ``--format`` switches
between human text, JSON, and CSV.  Exit status is 0 iff no survey check
reported a violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import survey as survey_mod
from .cliquepoly import (
    beta,
    clique_profile,
    clique_type_polynomial,
    independence_at_minus_one,
    spectral_radius,
)
from .extremal import max_beta_graph, min_beta_graph, nordhaus_gaddum, planar_extremes
from .exactpoly import QuadSurd, RootEnclosure
from .graphs import parse_graph, to_edge_list, to_graph6
from .matching import adjoint_polynomial, matching_polynomials, t_largest
from .monoid import count_normal_forms, lie_dimensions, m_sequence
from .randomgraph import (
    beta0_constant,
    beta_random,
    beta_series,
    ladder_limit_roots,
    pc_random,
)
from .transforms import kelmans, reduce_to_threshold, steps_to_json
from .weighted import lll_check, lll_threshold


def _fraction(text: str) -> Fraction:
    return Fraction(text)


def _load_graph(args):
    return parse_graph(args.graph, args.fmt)


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, default=str, sort_keys=True))
    elif fmt == "csv":
        keys = sorted(payload)
        print(",".join(keys))
        print(",".join(str(payload[k]) for k in keys))
    else:
        for key in sorted(payload):
            print(f"{key}: {payload[key]}")


def _describe(value):
    if isinstance(value, RootEnclosure):
        return {
            "lo": str(value.lo),
            "hi": str(value.hi),
            "multiplicity": value.multiplicity,
            "approx": float(value.midpoint),
        }
    if isinstance(value, QuadSurd):
        if value.is_rational():
            return {"exact": str(value.as_fraction()), "approx": float(value)}
        return {"closed_form": f"({value.a} + {value.sgn}*sqrt({value.b}))/{value.c}",
                "approx": float(value)}
    if isinstance(value, Fraction):
        return {"exact": str(value), "approx": float(value)}
    return str(value)


def main(argv=None) -> int:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--width", type=_fraction, default=argparse.SUPPRESS,
                        help="enclosure width for root computations")
    common.add_argument("--format", choices=("text", "json", "csv"),
                        default=argparse.SUPPRESS)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS,
                        help="worker count (default: PCPOLY_THREADS or all cores)")
    parser = argparse.ArgumentParser(prog="pcpoly", description=__doc__,
                                     parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=lambda
                                **kw: argparse.ArgumentParser(parents=[common], **kw))

    def add_graph_arg(p):
        p.add_argument("graph")
        p.add_argument("--fmt", choices=("named", "graph6", "edge-list"), default="named")

    p = sub.add_parser("poly", help="clique-type polynomial of a graph")
    add_graph_arg(p)
    p.add_argument("--kind", choices=("pc", "dependence", "clique", "independence"),
                   default="pc")

    p = sub.add_parser("beta", help="growth-rate enclosure")
    add_graph_arg(p)

    p = sub.add_parser("profile", help="clique counts by size")
    add_graph_arg(p)

    p = sub.add_parser("monoid", help="normal-form counts and Lie dimensions")
    add_graph_arg(p)
    p.add_argument("--length", type=int, default=8)
    p.add_argument("--mode", choices=("auto", "direct", "automaton"), default="auto")
    p.add_argument("--lie", type=int, default=0, help="also print this many Lie dims")

    p = sub.add_parser("transform", help="Kelmans step or threshold reduction")
    add_graph_arg(p)
    p.add_argument("--kelmans", nargs=2, type=int, metavar=("U", "V"))
    p.add_argument("--reduce", action="store_true")

    p = sub.add_parser("extremal", help="extremal graphs over G(n,k)")
    p.add_argument("kind", choices=("max", "min"))
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)

    p = sub.add_parser("planar", help="planar extremes for (n,k)")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)

    p = sub.add_parser("nordhaus-gaddum", help="beta(G)+beta(co-G) and product")
    add_graph_arg(p)

    p = sub.add_parser("random", help="random-graph polynomial quantities")
    p.add_argument("what", choices=("pc", "beta", "ladder", "beta0", "series"))
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--p", type=_fraction, default=Fraction(1, 2))
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--t", type=int, default=40)

    p = sub.add_parser("lll", help="local-lemma threshold or feasibility check")
    add_graph_arg(p)
    p.add_argument("--probs", nargs="*", type=_fraction,
                   help="per-event probabilities; omit for the threshold")

    p = sub.add_parser("matching", help="matching polynomial and largest root")
    add_graph_arg(p)

    p = sub.add_parser("adjoint", help="adjoint polynomial")
    add_graph_arg(p)

    p = sub.add_parser("survey", help="exhaustive censuses")
    p.add_argument("what", choices=("nonreal", "bounds", "average", "dump"))
    p.add_argument("n", type=int)

    p = sub.add_parser("spectral", help="adjacency spectral radius")
    add_graph_arg(p)

    args = parser.parse_args(argv)
    # global flags may appear before or after the verb; fill the fallbacks here
    # (parser-level set_defaults would mutate the shared parent actions)
    if not hasattr(args, "width"):
        args.width = Fraction(1, 10**12)
    if not hasattr(args, "format"):
        args.format = "text"
    if not hasattr(args, "threads"):
        args.threads = None
    fmt = args.format
    exit_code = 0

    if args.command == "poly":
        g = _load_graph(args)
        poly = clique_type_polynomial(g, args.kind)
        _emit({"kind": args.kind, "coefficients_ascending": list(poly)}, fmt)
    elif args.command == "beta":
        g = _load_graph(args)
        _emit(_describe(beta(g, args.width)), fmt)
    elif args.command == "profile":
        g = _load_graph(args)
        prof = clique_profile(g)
        value, phi = (None, None)
        payload = {"counts": list(prof.counts), "clique_number": prof.clique_number}
        if g.n <= 20:
            value, phi = independence_at_minus_one(g)
            payload["independence_at_minus_one"] = value
            payload["decycling_number"] = phi
        _emit(payload, fmt)
    elif args.command == "monoid":
        g = _load_graph(args)
        counts = m_sequence(g, args.length)
        direct = count_normal_forms(g, length=args.length, mode=args.mode)
        payload = {"recurrence": counts, "count_at_length": direct}
        if args.lie:
            payload["lie_dims"] = list(lie_dimensions(g, args.lie).dims)
        _emit(payload, fmt)
    elif args.command == "transform":
        g = _load_graph(args)
        if args.kelmans:
            out = kelmans(g, *args.kelmans)
            _emit({"graph6": to_graph6(out), "edge_list": to_edge_list(out)}, fmt)
        elif args.reduce:
            vec, steps = reduce_to_threshold(g)
            _emit({"threshold_vector": str(vec), "steps": steps_to_json(steps)}, fmt)
        else:
            raise SystemExit("transform needs --kelmans or --reduce")
    elif args.command == "extremal":
        fn = max_beta_graph if args.kind == "max" else min_beta_graph
        res = fn(args.n, args.k)
        payload = {
            "graph6": to_graph6(res.graph),
            "beta": _describe(res.predicted_beta),
        }
        if res.conditional:
            payload["conditional"] = res.conditional
        _emit(payload, fmt)
    elif args.command == "planar":
        res = planar_extremes(args.n, args.k)
        _emit(
            {
                "lambda_minus": _describe(res.lambda_minus),
                "lambda_plus": _describe(res.lambda_plus),
                "g_minus": to_graph6(res.g_minus),
                "g_plus": to_graph6(res.g_plus),
            },
            fmt,
        )
    elif args.command == "nordhaus-gaddum":
        g = _load_graph(args)
        s, pr = nordhaus_gaddum(g, args.width)
        _emit(
            {
                "sum_lo": str(s.lo), "sum_hi": str(s.hi),
                "product_lo": str(pr.lo), "product_hi": str(pr.hi),
            },
            fmt,
        )
    elif args.command == "random":
        if args.what == "pc":
            rpc = pc_random(args.n, args.p)
            _emit({"coefficients_ascending": [str(c) for c in rpc.poly]}, fmt)
        elif args.what == "beta":
            enc, closed = beta_random(args.n, args.p, args.width)
            payload = _describe(enc)
            if closed is not None:
                payload["closed_form_lo"] = str(closed.lo)
                payload["closed_form_hi"] = str(closed.hi)
            _emit(payload, fmt)
        elif args.what == "ladder":
            _emit(_describe(ladder_limit_roots(args.r, args.p, args.t)), fmt)
        elif args.what == "beta0":
            _emit(_describe(beta0_constant(max(args.width, Fraction(1, 10**30)))), fmt)
        else:
            series = beta_series(args.r)
            _emit({"r": series.r, "coefficients": [str(c) for c in series.coeffs]}, fmt)
    elif args.command == "lll":
        g = _load_graph(args)
        if args.probs:
            res = lll_check(g, args.probs)
            if res.feasible:
                _emit({"feasible": True, "bound": str(res.bound)}, fmt)
            else:
                _emit(
                    {"feasible": False, "witness_lo": str(res.witness_lo),
                     "witness_hi": str(res.witness_hi)},
                    fmt,
                )
        else:
            enc = lll_threshold(g, args.width)
            _emit({"threshold_lo": str(enc.lo), "threshold_hi": str(enc.hi)}, fmt)
    elif args.command == "matching":
        g = _load_graph(args)
        pair = matching_polynomials(g)
        payload = {
            "mu_ascending": list(pair.mu),
            "generating": list(pair.generating),
        }
        if g.edge_count:
            payload["t_largest"] = _describe(t_largest(g, args.width))
        _emit(payload, fmt)
    elif args.command == "adjoint":
        g = _load_graph(args)
        _emit({"adjoint_ascending": list(adjoint_polynomial(g))}, fmt)
    elif args.command == "spectral":
        g = _load_graph(args)
        _emit(_describe(spectral_radius(g, args.width)), fmt)
    elif args.command == "survey":
        if args.what == "nonreal":
            row = survey_mod.survey_nonreal(args.n, args.threads)
            _emit(
                {
                    "n": row.n,
                    "graphs_total": row.graphs_total,
                    "polys_with_nonreal": row.polys_with_nonreal,
                    "roots_total": row.roots_total,
                    "roots_nonreal": row.roots_nonreal,
                },
                fmt,
            )
        elif args.what == "bounds":
            res = survey_mod.survey_bounds(args.n, args.threads)
            _emit(
                {
                    "n": res["n"],
                    "violations": res["violations"],
                    "density_envelope": [str(x) for x in res["density_envelope"]]
                    if res["density_envelope"]
                    else None,
                },
                fmt,
            )
            if res["violations"]:
                exit_code = 1
        elif args.what == "dump":
            print(survey_mod.graph_census_csv(args.n, args.width, args.threads), end="")
        else:
            lo, hi = survey_mod.average_beta(args.n, args.width, args.threads)
            _emit({"average_lo": str(lo), "average_hi": str(hi),
                   "approx": float((lo + hi) / 2)}, fmt)
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
