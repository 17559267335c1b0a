"""Scenarios, sweeps and bound-versus-solver reports.

A scenario file is flat ``key = value`` text (``#`` comments, lists
comma-separated)::

    kind = verify
    geometry = space_form
    n = 3
    c = -1
    p = 2, 3
    R = 1, 2, 4
    grid = 2048

Rows are produced for every (p, R) pair (every (p, lambda) pair for
``invert``) and written in that order whatever order they finished in.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from pathlib import Path

import numpy as np

from . import __version__
from .bounds import (
    SubmersionData,
    hyperbolic_fundamental_tone_bound,
    space_form_ball_bound,
    submersion_bound,
    theorem1_bound,
    warped_bound,
)
from .eigensolver import SolverOptions, solve_ball, solve_warped
from .geometry import (
    CoshProfile,
    LinearProfile,
    SpaceForm,
    TestFunctionData,
    WarpedProduct,
    load_profile,
)
from .inverse import InverseQuery, radius_for_eigenvalue

__all__ = [
    "KINDS",
    "COLUMNS",
    "ScenarioError",
    "Scenario",
    "BoundCertificate",
    "parse_scenario",
    "load_scenario",
    "run_scenario",
    "sweep",
    "exit_code",
    "to_csv",
    "to_json",
    "write_report",
]

KINDS = ("bound", "solve", "sweep", "invert", "verify")
GEOMETRIES = ("space_form", "warped", "submersion", "comparison")
COLUMNS = (
    "kind", "n", "c_or_kappa", "p", "R", "m", "lower_bound", "lambda_hat",
    "margin", "pass", "iterations", "converged", "status",
)
PASS_SLACK = 1e-9
JOBS_ENV = "PTONE_JOBS"


class ScenarioError(ValueError):
    """Invalid scenario configuration; raised before any computation."""


@dataclass(frozen=True)
class Scenario:
    kind: str
    geometry: str = "space_form"
    n: int | None = None
    c: float = 0.0
    # warped products: profile is "linear", "cosh" or a table path
    profile: str = "linear"
    kappa: float | None = None
    slope: float | None = None
    amp: float = 0.0
    t0: float = 0.0
    # submersions / bare comparison-function constants
    b: float | None = None
    alpha: float = 0.0
    a: float = 1.0
    p: tuple[float, ...] = ()
    R: tuple[float, ...] = ()
    lambdas: tuple[float, ...] = ()
    grid: int = 2048
    rel_tol: float = 1e-8
    max_iters: int = 50_000
    tol_R: float = 1e-3
    out: str | None = None
    format: str = "csv"

    def solver_options(self) -> SolverOptions:
        return SolverOptions(rel_tol=self.rel_tol, max_iters=self.max_iters)

    def space_form(self) -> SpaceForm:
        return SpaceForm(self.n, self.c)

    def warped_product(self) -> WarpedProduct:
        if self.profile == "linear":
            slope = self.kappa if self.slope is None else self.slope
            return WarpedProduct(self.n, LinearProfile(slope), self.kappa)
        if self.profile == "cosh":
            return WarpedProduct(self.n, CoshProfile(self.slope, self.amp), self.kappa)
        return WarpedProduct(self.n, load_profile(self.profile), self.kappa)

    def validate(self) -> "Scenario":
        """Check every precondition that can be checked without solving."""
        err = ScenarioError
        if self.kind not in KINDS:
            raise err(f"kind must be one of {KINDS}, got {self.kind!r}")
        if self.geometry not in GEOMETRIES:
            raise err(f"geometry must be one of {GEOMETRIES}, got {self.geometry!r}")
        if self.format not in ("csv", "json"):
            raise err("format must be csv or json")
        if not self.p:
            raise err("the p list is empty")
        if any(not (p > 1 and math.isfinite(p)) for p in self.p):
            raise err("every p must be a finite number > 1")
        if self.grid < 16:
            raise err("grid must have at least 16 cells")
        try:
            self.solver_options()
        except ValueError as exc:
            raise err(str(exc)) from None

        solving = self.kind in ("solve", "sweep", "verify")
        if self.kind == "invert":
            if self.geometry != "space_form":
                raise err("invert is only defined for space forms")
            if not self.lambdas:
                raise err("invert needs a nonempty lambda list")
            if self.c > 0:
                raise err("invert needs c <= 0")
            if self.tol_R <= 0:
                raise err("tol_R must be > 0")
        elif solving or (self.geometry in ("space_form", "warped") and self.kind == "bound"):
            needs_r = solving or (self.geometry == "space_form" and self.c >= 0)
            if needs_r and not self.R:
                raise err("the R list is empty")
            if any(not r > 0 for r in self.R):
                raise err("every R must be > 0")

        if self.geometry in ("space_form", "warped"):
            if self.n is None or int(self.n) != self.n or self.n < 2:
                raise err("n must be an integer >= 2")
        if self.geometry == "space_form":
            if not math.isfinite(self.c):
                raise err("c must be finite")
            if self.c > 0 and self.kind != "invert":
                limit = math.pi / (2 * math.sqrt(self.c))
                if self.kind == "solve":
                    limit *= 2
                if any(r >= limit for r in self.R):
                    raise err(f"with c > 0 every R must be below {limit:.6g}")
            if any(math.isinf(r) for r in self.R) and (self.c >= 0 or solving):
                raise err("R = inf is only allowed for bounds with c < 0")
        elif self.geometry == "warped":
            if self.kind == "invert":
                raise err("invert is not defined for warped products")
            try:
                geom = self.warped_product()
            except (ValueError, OSError, TypeError) as exc:
                raise err(f"bad warped profile: {exc}") from None
            if geom.kappa <= 0 and self.kind in ("bound", "verify", "sweep"):
                raise err("the warped bound needs kappa > 0")
            if solving and any(math.isinf(r) for r in self.R):
                raise err("slab lengths must be finite")
        else:
            if solving:
                raise err(f"{self.geometry} geometry supports only the bound kind")
            if self.b is None:
                raise err("b is required")
            try:
                if self.geometry == "submersion":
                    SubmersionData(self.b, self.alpha)
                else:
                    TestFunctionData(self.a, self.b)
            except ValueError as exc:
                raise err(str(exc)) from None
        return self


_LIST_KEYS = {"p": "p", "R": "R", "r": "R", "lambda": "lambdas", "lambdas": "lambdas"}
_INT_KEYS = {"n", "grid", "max_iters"}
_FLOAT_KEYS = {"c", "kappa", "slope", "amp", "t0", "b", "alpha", "a", "rel_tol", "tol_R"}
_STR_KEYS = {"kind", "geometry", "profile", "out", "format"}


def _number(text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise ScenarioError(f"not a number: {text!r}") from None


def parse_scenario(text: str, base_dir=None, **overrides) -> Scenario:
    """Build a validated :class:`Scenario` from ``key = value`` text.

    Keyword overrides (e.g. from command-line flags) win over file values;
    ``None`` overrides are ignored. A relative profile table path is looked
    up under ``base_dir`` first when one is given.
    """
    values: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ScenarioError(f"line {lineno}: expected 'key = value'")
        key, val = (s.strip() for s in line.split("=", 1))
        values[key] = val
    fields = {}
    for key, val in values.items():
        if key in _LIST_KEYS:
            items = [v for v in val.replace(",", " ").split() if v]
            fields[_LIST_KEYS[key]] = tuple(_number(v) for v in items)
        elif key in _INT_KEYS:
            num = _number(val)
            if num != int(num):
                raise ScenarioError(f"{key} must be an integer")
            fields[key] = int(num)
        elif key in _FLOAT_KEYS:
            fields[key] = _number(val)
        elif key in _STR_KEYS:
            fields[key] = val
        else:
            raise ScenarioError(f"unknown key {key!r}")
    for key, val in overrides.items():
        if val is not None:
            fields[key] = val
    if "kind" not in fields:
        raise ScenarioError("kind is required")
    prof = fields.get("profile")
    if base_dir is not None and prof not in (None, "linear", "cosh"):
        candidate = Path(base_dir) / prof
        if not Path(prof).is_absolute() and candidate.exists():
            fields["profile"] = str(candidate.resolve())
    return Scenario(**fields).validate()


def load_scenario(path, **overrides) -> Scenario:
    """Read a scenario file; profile tables resolve relative to it."""
    path = Path(path)
    return parse_scenario(path.read_text(), base_dir=path.parent, **overrides)


# --- rows ------------------------------------------------------------------


@dataclass
class BoundCertificate:
    """One report row: a lower bound, an upper bound, and their margin."""

    kind: str
    n: int | None
    c_or_kappa: float | None
    p: float
    R: float | None
    m: int | None = None
    lower_bound: float | None = None
    lambda_hat: float | None = None
    margin: float | None = None
    passed: bool | None = None
    iterations: int | None = None
    converged: bool | None = None
    status: str = "ok"
    extra: dict = field(default_factory=dict)

    def certify(self):
        if self.lower_bound is not None and self.lambda_hat is not None:
            self.margin = self.lambda_hat - self.lower_bound
            self.passed = bool(self.margin >= -PASS_SLACK)

    def values(self) -> dict:
        d = {k: getattr(self, k) for k in COLUMNS if k != "pass"}
        d["pass"] = self.passed
        return d


def _lower_bound(s: Scenario, p: float, R: float | None) -> float:
    if s.geometry == "space_form":
        geom = s.space_form()
        if R is None or math.isinf(R):
            return hyperbolic_fundamental_tone_bound(geom.n, geom.kappa, p)
        return space_form_ball_bound(geom, p, R)
    if s.geometry == "warped":
        return warped_bound(s.warped_product(), p)
    if s.geometry == "submersion":
        return submersion_bound(SubmersionData(s.b, s.alpha), p)
    return theorem1_bound(TestFunctionData(s.a, s.b), p)


def _header(s: Scenario, p: float, R: float | None) -> BoundCertificate:
    if s.geometry == "space_form":
        n, ck = s.n, s.c
    elif s.geometry == "warped":
        n, ck = s.n, s.warped_product().kappa
    else:
        n, ck = None, None
    return BoundCertificate(kind=s.kind, n=n, c_or_kappa=ck, p=p, R=R)


def _run_row(s: Scenario, p: float, x: float | None) -> BoundCertificate:
    row = _header(s, p, None if s.kind == "invert" else x)
    try:
        if s.kind == "bound":
            row.lower_bound = _lower_bound(s, p, x)
            return row
        opts = s.solver_options()
        if s.kind == "invert":
            q = InverseQuery(s.space_form(), p, x, tol_R=s.tol_R, grid_m=s.grid, opts=opts)
            R = radius_for_eigenvalue(q)
            res = solve_ball(q.geom, p, R, s.grid, opts)
            row.R = R
            row.lower_bound = q.floor
            row.extra["lambda_target"] = x
        elif s.geometry == "space_form":
            res = solve_ball(s.space_form(), p, x, s.grid, opts)
            if s.kind != "solve":
                row.lower_bound = _lower_bound(s, p, x)
        else:
            res = solve_warped(s.warped_product(), p, x, s.t0, s.grid, opts)
            if s.kind != "solve":
                row.lower_bound = _lower_bound(s, p, x)
        row.m = res.grid_m
        row.lambda_hat = res.lambda_hat
        row.iterations = res.iterations
        row.converged = res.converged
        row.extra["epsilon_final"] = res.epsilon_final
        if not res.converged:
            row.status = "not-converged"
        row.certify()
    except Exception as exc:  # recorded per row, the run goes on
        row.status = f"error: {type(exc).__name__}: {exc}"
    return row


def _cases(s: Scenario) -> list[tuple[float, float | None]]:
    second = s.lambdas if s.kind == "invert" else s.R
    if not second:
        second = (None,)
    return sorted(
        ((p, x) for p in s.p for x in second),
        key=lambda c: (c[0], -math.inf if c[1] is None else c[1]),
    )


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


def run_scenario(s: Scenario, jobs: int | None = None) -> list[BoundCertificate]:
    """Evaluate every row of ``s``, optionally in ``jobs`` worker processes."""
    s.validate()
    cases = _cases(s)
    jobs = default_jobs() if jobs is None else max(1, int(jobs))
    if jobs == 1 or len(cases) == 1:
        return [_run_row(s, p, x) for p, x in cases]
    with ProcessPoolExecutor(max_workers=min(jobs, len(cases))) as pool:
        futures = [pool.submit(_run_row, s, p, x) for p, x in cases]
        return [f.result() for f in futures]


def sweep(s: Scenario, jobs: int | None = None) -> list[BoundCertificate]:
    """Certificates for the full (p, R) product of ``s``."""
    if not s.p or not s.R:
        raise ScenarioError("sweep needs nonempty p and R lists")
    return run_scenario(replace(s, kind="sweep"), jobs)


def exit_code(s: Scenario, rows: list[BoundCertificate]) -> int:
    if s.kind == "verify":
        return 0 if all(r.passed is True for r in rows) else 1
    return 0 if all(not r.status.startswith("error") for r in rows) else 1


# --- serialization ---------------------------------------------------------


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def to_csv(rows: list[BoundCertificate]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for r in rows:
        vals = r.values()
        writer.writerow([_fmt(vals[c]) for c in COLUMNS])
    return buf.getvalue()


def to_json(s: Scenario, rows: list[BoundCertificate]) -> str:
    payload = {
        "package": "ptone",
        "version": __version__,
        "numpy": np.__version__,
        "scenario": asdict(s),
        "solver_options": asdict(s.solver_options()),
        "rows": [{**r.values(), **r.extra} for r in rows],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def write_report(s: Scenario, rows: list[BoundCertificate], out=None, fmt=None) -> str:
    """Serialize ``rows``; write to ``out`` (or ``s.out``) when given."""
    fmt = fmt or s.format
    text = to_json(s, rows) if fmt == "json" else to_csv(rows)
    target = out or s.out
    if target:
        Path(target).write_text(text)
    return text
