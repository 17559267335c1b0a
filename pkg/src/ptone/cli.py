"""Command-line front end: ``ptone {bound,solve,sweep,invert,verify}``.

Parameters come from a ``--config`` scenario file, from flags, or both
(flags win). The report goes to ``--out`` or stdout. Exit status is 0 iff
every row passes (``verify``) or every row completed (other commands).
"""

from __future__ import annotations

import argparse
import sys

from .harness import (
    JOBS_ENV,
    KINDS,
    ScenarioError,
    exit_code,
    load_scenario,
    parse_scenario,
    run_scenario,
    write_report,
)


def _floats(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(v) for v in text.replace(",", " ").split())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a list of numbers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ptone",
        description="Lower bounds and discrete upper bounds for the first "
        "Dirichlet eigenvalue of the p-Laplacian.",
    )
    parser.add_argument("command", choices=KINDS)
    parser.add_argument("--config", help="scenario file (key = value lines)")
    parser.add_argument("--out", help="report path (default: stdout)")
    parser.add_argument("--format", choices=("csv", "json"))
    parser.add_argument("--grid", type=int, help="number of grid cells m")
    parser.add_argument("--tol", type=float, help="relative tolerance on lambda")
    parser.add_argument(
        "--jobs", type=int, help=f"worker processes (default: ${JOBS_ENV} or 1)"
    )

    geo = parser.add_argument_group("scenario values (override the config file)")
    geo.add_argument("--geometry", choices=("space_form", "warped", "submersion", "comparison"))
    geo.add_argument("--n", type=int)
    geo.add_argument("--c", type=float)
    geo.add_argument("--kappa", type=float)
    geo.add_argument("--profile", help="linear, cosh, or a 't rho' table file")
    geo.add_argument("--slope", type=float)
    geo.add_argument("--amp", type=float)
    geo.add_argument("--b", type=float)
    geo.add_argument("--alpha", type=float)
    geo.add_argument("--a", type=float)
    geo.add_argument("--p", type=_floats, help="exponent list, e.g. '1.5,2,3'")
    geo.add_argument("-R", "--R", dest="R", type=_floats, help="radius/length list")
    geo.add_argument("--lambda", dest="lambdas", type=_floats, help="invert targets")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    overrides = dict(
        kind=args.command,
        out=args.out,
        format=args.format,
        grid=args.grid,
        rel_tol=args.tol,
        geometry=args.geometry,
        n=args.n,
        c=args.c,
        kappa=args.kappa,
        profile=args.profile,
        slope=args.slope,
        amp=args.amp,
        b=args.b,
        alpha=args.alpha,
        a=args.a,
        p=args.p,
        R=args.R,
        lambdas=args.lambdas,
    )
    try:
        if args.config:
            scenario = load_scenario(args.config, **overrides)
        else:
            scenario = parse_scenario("", **overrides)
    except (ScenarioError, OSError) as exc:
        print(f"ptone: invalid configuration: {exc}", file=sys.stderr)
        return 2

    rows = run_scenario(scenario, jobs=args.jobs)
    text = write_report(scenario, rows)
    if not scenario.out:
        sys.stdout.write(text)
    return exit_code(scenario, rows)


if __name__ == "__main__":
    sys.exit(main())
