"""Command-line interface.

Subcommands: analyze (single-state report), sweep (figure CSVs), oracle
(brute-force maximizer), verify (randomized property campaign), approx
(closed-form evaluation).  Exit codes: 0 success, 2 invalid input, 3 solver
failure, 4 oracle non-convergence, 5 property failure.  Errors are emitted
as one JSON object on stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import __version__
from .asymptotics import (
    TwoParamFamily,
    g_asymmetric_closed,
    g_interpolating,
    g_symmetric_limit,
    g_three_qubit,
    r1_largeN_estimate,
    r_asymmetric_closed,
    r_two_param,
)
from .campaign import CampaignConfig, run_campaign
from .diameter import solve
from .errors import (
    AmbiguousRoot,
    BoundaryOptimum,
    ConvergenceFailure,
    DivergedToInfinity,
    InconsistentInput,
    NoConvergedStart,
    WdiamError,
    WrongRegion,
)
from .oracle import maximize_overlap
from .overlap import nearest_product, overlap_from_diameter
from .regions import classify
from .state import bloch_report, load_state_file, make_wstate, state_from_dict
from .sweeps import FIGURE_IDS, SweepSpec, write_sweep

EXIT_INPUT = 2
EXIT_SOLVER = 3
EXIT_ORACLE = 4
EXIT_PROPERTY = 5

_SOLVER_ERRORS = (
    ConvergenceFailure,
    AmbiguousRoot,
    DivergedToInfinity,
    WrongRegion,
    InconsistentInput,
)
_ORACLE_ERRORS = (NoConvergedStart, BoundaryOptimum)


def _fail(exc: Exception, code: int) -> int:
    payload = {"error": type(exc).__name__, "message": str(exc)}
    print(json.dumps(payload), file=sys.stderr)
    return code


def _load_state(args) -> "WState":
    if getattr(args, "coeffs", None):
        raw = [float(tok) for tok in args.coeffs.split(",") if tok.strip()]
        return make_wstate(raw, renormalize=getattr(args, "renormalize", False))
    if args.input == "-":
        return state_from_dict(json.load(sys.stdin))
    return load_state_file(args.input)


def _analysis_payload(state) -> dict:
    rep = classify(state)
    sol = solve(state, rep)
    ov = overlap_from_diameter(state, sol)
    prod = nearest_product(state, sol)
    bloch = bloch_report(state)
    return {
        "coeffs": [float(c) for c in state.coeffs],
        "n_qubits": state.n_qubits,
        "renormalized": state.renormalized,
        "phases_absorbed": state.phases_absorbed,
        "r1": rep.r1,
        "r2": rep.r2,
        "region": rep.region.value,
        "boundary_flags": sorted(rep.boundary_flags),
        "r": sol.r,
        "branch": sol.branch.value,
        "residual": sol.residual,
        "iterations": sol.iterations,
        "g": ov.g,
        "g2": ov.g_squared,
        "E_g_nat": ov.e_g,
        "E_g_bits": ov.e_g / math.log(2.0),
        "b_z": [float(b) for b in bloch.b_z],
        "min_bz_index": bloch.min_bz_index,
        "thetas": [float(t) for t in prod.thetas],
    }


def _cmd_analyze(args) -> int:
    state = _load_state(args)
    print(json.dumps(_analysis_payload(state), indent=2))
    return 0


def _cmd_oracle(args) -> int:
    state = _load_state(args)
    res = maximize_overlap(state, n_starts=args.starts, seed=args.seed)
    payload = {
        "g_best": res.g_best,
        "thetas_best": [float(t) for t in res.thetas_best],
        "starts_used": res.starts_used,
        "converged": res.converged,
        "spread": res.spread,
        "sweeps": res.sweeps,
    }
    print(json.dumps(payload, indent=2))
    return 0


def _cmd_verify(args) -> int:
    tolerances = {}
    for item in args.tol or []:
        name, _, value = item.partition("=")
        if not value:
            raise WrongInput(f"--tol expects name=value, got {item!r}")
        tolerances[name] = float(value)
    cfg = CampaignConfig(
        n_samples=args.samples,
        n_range=(args.nmin, args.nmax),
        seed=args.seed,
        region_filter=args.region,
        tolerances=tolerances,
        oracle_samples=args.oracle_samples,
        oracle_starts=args.starts,
    )
    report = run_campaign(cfg)
    for prop in report.properties:
        status = "PASS" if prop.passed else "FAIL"
        worst = "" if prop.worst is None else f"  worst={prop.worst:.6g}"
        print(f"{status} {prop.name}  (n={prop.n_checked}){worst}")
    print(f"{'PASS' if report.passed else 'FAIL'} overall")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(report.to_dict(), fh, indent=2)
    return 0 if report.passed else EXIT_PROPERTY


def _cmd_sweep(args) -> int:
    if args.figure is not None:
        spec = SweepSpec(figure=args.figure, points=args.points)
    else:
        params = {}
        for item in args.param or []:
            name, _, value = item.partition("=")
            if not value:
                raise WrongInput(f"--param expects name=value, got {item!r}")
            params[name] = float(value)
        spec = SweepSpec(family=args.family, params=params, points=args.points)
    write_sweep(spec, args.out)
    return 0


def _cmd_approx(args) -> int:
    if args.formula == "g3":
        c1, c2, c3 = (float(tok) for tok in args.coeffs.split(","))
        value = g_three_qubit(c1, c2, c3)
    elif args.formula == "r-two-param":
        value = r_two_param(TwoParamFamily(args.m, args.k, args.theta))
    elif args.formula == "g-sym-limit":
        value = g_symmetric_limit(_load_state(args))
    elif args.formula == "r-asym":
        value = r_asymmetric_closed(args.c)
    elif args.formula == "g-asym":
        value = g_asymmetric_closed(args.c)
    elif args.formula == "g-interp":
        value = g_interpolating(args.bz)
    else:  # r1-largen
        value = r1_largeN_estimate(args.n)
    print(f"{value:.17g}")
    return 0


class WrongInput(WdiamError):
    """CLI argument that fails semantic validation."""


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wdiam",
        description="Geometric entanglement of N-qubit W states.",
    )
    parser.add_argument("--version", action="version", version=f"wdiam {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_state_args(p):
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--input", help="state JSON file, or - for stdin")
        group.add_argument("--coeffs", help="comma-separated amplitudes")
        p.add_argument(
            "--renormalize", action="store_true",
            help="accept --coeffs of any nonzero norm",
        )

    p = sub.add_parser("analyze", help="full single-state analysis as JSON")
    add_state_args(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("oracle", help="brute-force overlap maximization")
    add_state_args(p)
    p.add_argument("--starts", type=int, default=32)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("verify", help="randomized property campaign")
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--nmin", type=int, default=3)
    p.add_argument("--nmax", type=int, default=64)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--region", choices=["symmetric", "asymmetric", "slight"])
    p.add_argument("--oracle-samples", type=int, default=1000)
    p.add_argument("--starts", type=int, default=8, help="oracle starts per state")
    p.add_argument("--tol", action="append", metavar="NAME=VALUE")
    p.add_argument("--json", help="write the machine-readable report here")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("sweep", help="figure-reproducing CSV sweeps")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--figure", type=int, choices=FIGURE_IDS)
    group.add_argument(
        "--family",
        choices=["two-block", "three-block", "two-block-plus-one", "nineteen-qubit"],
    )
    p.add_argument("--param", action="append", metavar="NAME=VALUE")
    p.add_argument("--points", type=int, default=400)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("approx", help="evaluate one closed-form expression")
    ap = p.add_subparsers(dest="formula", required=True)
    q = ap.add_parser("g3", help="exact three-qubit overlap g")
    q.add_argument("--coeffs", required=True)
    q = ap.add_parser("r-two-param", help="two-block radical diameter r")
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--theta", type=float, required=True)
    q = ap.add_parser("g-sym-limit", help="large-N symmetric overlap g^2 (= 1/e)")
    add_state_args(q)
    q = ap.add_parser("r-asym", help="asymmetric closed-form diameter r")
    q.add_argument("--c", type=float, required=True)
    q = ap.add_parser("g-asym", help="asymmetric closed-form overlap g^2")
    q.add_argument("--c", type=float, required=True)
    q = ap.add_parser("g-interp", help="interpolating overlap g^2 from b_z")
    q.add_argument("--bz", type=float, required=True)
    q = ap.add_parser("r1-largen", help="large-N first critical value")
    q.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_approx)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _ORACLE_ERRORS as exc:
        return _fail(exc, EXIT_ORACLE)
    except _SOLVER_ERRORS as exc:
        return _fail(exc, EXIT_SOLVER)
    except WdiamError as exc:
        return _fail(exc, EXIT_INPUT)
    except (OSError, ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
        return _fail(exc, EXIT_INPUT)


if __name__ == "__main__":
    sys.exit(main())
