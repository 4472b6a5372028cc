"""Command-line front end: analyze | classify | dimension | simulate.

Reports are JSON on stdout (and ``report.json`` under ``--out``).  Exit codes:
0 ok, 2 bad input, 3 theorem hypotheses not met, 4 numerical failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import serialize as ser
from .classify import Verdict, classify_word, limit_disc_exact
from .dimension import Method, dim_theorem3, dim_theorem4, dim_upper_bound
from .dynamics import (
    ideal_limit,
    iterate_orbit,
    pointwise_convergence,
    rapid_escape_report,
    tangency_chain_check,
)
from .errors import HypothesisViolated, InputError, LimitDiscError, NumericError
from .tangency import build_tangency_graph, has_cycle, is_complete, spectral_radius

EXIT_OK, EXIT_INPUT, EXIT_HYPOTHESIS, EXIT_NUMERIC = 0, 2, 3, 4


def _error_entry(exc: Exception) -> dict:
    return {"error": type(exc).__name__, "message": str(exc)}


def cmd_analyze(args) -> dict:
    F = ser.load_generators(args.input, args.tol)
    G = build_tangency_graph(F, F.tol)
    gens = []
    for name, f, d in F:
        gens.append({"name": name, **ser.mobius_to_json(f), **ser.tangency_to_json(d)})
    return {
        "generators": gens,
        "tol": F.tol,
        "graph": ser.graph_to_json(G, spectral_radius(G)),
        "complete": is_complete(G, F),
        "has_cycle": has_cycle(G),
    }


def _need_word(args):
    if not args.word:
        raise InputError("--word is required for this command")


def cmd_classify(args) -> dict:
    _need_word(args)
    F = ser.load_generators(args.input, args.tol)
    w = ser.load_word(args.word, F)
    G = build_tangency_graph(F, F.tol)
    cls = classify_word(F, w, G)
    out = {"word": w.names(F), **ser.classification_to_json(cls)}
    if cls.verdict is Verdict.LIMIT_DISC:
        res = limit_disc_exact(F, w, G)
        out.update(
            t_inf=ser.num(res.t_inf),
            dropped=res.dropped,
            limit_disc=ser.disc_to_json(res.full_disc),
            z0=ser.point_to_json(res.full_z0),
            tail_limit_disc=ser.disc_to_json(res.disc),
            ideal_limit=ser.point_to_json(res.ideal_limit),
        )
    return out


def cmd_dimension(args) -> dict:
    F = ser.load_generators(args.input, args.tol)
    G = build_tangency_graph(F, F.tol)
    run = {"auto": dim_upper_bound, "theorem3": dim_theorem3, "theorem4": dim_theorem4}
    if args.method == "bound":
        rep = dim_upper_bound(F, G)
    else:
        rep = run[args.method](F, G)
    return {
        "value": ser.num(rep.value),
        "method": rep.method.value,
        "s_star": ser.num(rep.s_star),
        "details": rep.details,
        "gammas": [ser.num(g) for g in rep.gammas],
        "exact": rep.method is not Method.UPPER_BOUND,
    }


def _sample_points(k: int, seed: int) -> list:
    rng = np.random.default_rng(seed)
    r = 0.9 * np.sqrt(rng.random(k))
    theta = 2 * np.pi * rng.random(k)
    return list(r * np.exp(1j * theta))


def cmd_simulate(args, out_dir) -> dict:
    _need_word(args)
    F = ser.load_generators(args.input, args.tol)
    w = ser.load_word(args.word, F)
    trace = iterate_orbit(F, w, args.steps)
    radii = trace.radii
    report = {
        "word": w.names(F),
        "steps": len(trace),
        "final_disc": ser.disc_to_json(trace.discs[-1]),
        "radius_monotone": bool(np.all(np.diff(radii) <= 1e-15 * np.maximum(radii[:-1], 1.0))),
    }
    if w.period:
        cls = classify_word(F, w)
        report["verdict"] = cls.verdict.value
        if cls.verdict is Verdict.LIMIT_DISC:
            exact = limit_disc_exact(F, w).full_disc
            report["exact_limit_disc"] = ser.disc_to_json(exact)
            report["radius_error"] = ser.num(abs(exact.radius - trace.discs[-1].radius))
    try:
        esc = rapid_escape_report(trace)
        report["escape"] = {
            "is_cauchy_at_tail": esc.is_cauchy_at_tail,
            "tail_sum_estimate": ser.num(esc.tail_sum_estimate),
            "tail_increment": ser.num(esc.tail_increment),
            "height_inequality": esc.height_inequality,
        }
        lim = ideal_limit(trace)
        report["ideal_limit"] = {"q": ser.point_to_json(lim.q), "resid": ser.num(lim.resid), "converged": lim.converged}
    except InputError as exc:
        report["escape"] = _error_entry(exc)
    ok, witness = tangency_chain_check(trace.discs)
    report["tangency_chain"] = {"eventually_tangent": ok, "witness": witness}
    if args.points:
        try:
            conv = pointwise_convergence(F, w, args.steps, _sample_points(args.points, args.seed))
            report["pointwise"] = {
                "q": ser.point_to_json(conv.q),
                "q_resid": ser.num(conv.q_resid),
                "exceptional_set": [ser.point_to_json(x) for x in conv.exceptional_set],
                "points": [
                    {
                        "point": ser.point_to_json(p.point),
                        "converged": p.converged,
                        "limit": ser.point_to_json(p.limit),
                        "diameter": ser.num(p.diameter),
                        "distance_to_q": ser.num(p.distance_to_q),
                    }
                    for p in conv.per_point
                ],
            }
        except InputError as exc:
            report["pointwise"] = _error_entry(exc)
    if args.csv:
        target = out_dir if out_dir is not None else Path(".")
        path = target / "trace.csv"
        path.write_text(trace.to_csv())
        report["csv"] = str(path)
    return report


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="limitdisc", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, metavar="PATH", help="generator file (JSON)")
    common.add_argument("--tol", type=float, default=None, metavar="X", help="tangency tolerance")
    common.add_argument("--out", metavar="DIR", help="also write report.json (and trace.csv) here")
    common.add_argument("--seed", type=int, default=0, metavar="N")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("analyze", parents=[common], help="tangency data, graph and spectral radius")
    c = sub.add_parser("classify", parents=[common], help="limit-point or limit-disc verdict for a word")
    c.add_argument("--word", metavar="PATH")
    d = sub.add_parser("dimension", parents=[common], help="dimension of the limit-disc sequence set")
    d.add_argument("--method", choices=["auto", "theorem3", "theorem4", "bound"], default="auto")
    s = sub.add_parser("simulate", parents=[common], help="iterate F_n and check convergence")
    s.add_argument("--word", metavar="PATH")
    s.add_argument("--steps", type=int, default=300, metavar="N")
    s.add_argument("--csv", action="store_true", help="write the per-step trace as trace.csv")
    s.add_argument("--points", type=int, default=0, metavar="K", help="seeded interior sample points")
    return p


def run(argv=None) -> tuple:
    """Returns (exit_code, report_or_error_dict)."""
    args = build_parser().parse_args(argv)
    out_dir = Path(args.out) if args.out else None
    try:
        if out_dir is not None:
            out_dir.mkdir(parents=True, exist_ok=True)
        if args.command == "analyze":
            report = cmd_analyze(args)
        elif args.command == "classify":
            report = cmd_classify(args)
        elif args.command == "dimension":
            report = cmd_dimension(args)
        else:
            report = cmd_simulate(args, out_dir)
    except HypothesisViolated as exc:
        return EXIT_HYPOTHESIS, {**_error_entry(exc), "offenders": exc.offenders}
    except InputError as exc:
        return EXIT_INPUT, {**_error_entry(exc), "offenders": getattr(exc, "offenders", [])}
    except (NumericError, LimitDiscError) as exc:
        return EXIT_NUMERIC, _error_entry(exc)
    except OSError as exc:
        return EXIT_INPUT, _error_entry(exc)
    if out_dir is not None:
        (out_dir / "report.json").write_text(ser.dumps(report) + "\n")
    return EXIT_OK, report


def main(argv=None) -> int:
    code, report = run(argv)
    if code == EXIT_OK:
        print(ser.dumps(report))
    else:
        print(ser.dumps(report), file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
