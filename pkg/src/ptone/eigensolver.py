"""Discrete Rayleigh-quotient minimization for radial p-Laplacian problems.

A radial (or one-dimensional) problem on ``[0, L]`` with density ``w`` has
first eigenvalue

    lambda = inf  int |u'|^p w dr / int |u|^p w dr

over admissible u. We minimize this quotient over continuous piecewise
linear functions on a grid, so the discrete minimum is an upper bound for
the continuous one and shrinks monotonically under nested refinement.

Two quadratures are available:

``"gauss"`` (default)
    The weight is integrated with Gauss-Legendre points inside every cell,
    on both sides of the quotient. This is the quotient of an actual
    piecewise-linear function up to quadrature rounding.
``"lumped"``
    Midpoint weight per cell for the gradient term and half-cell nodal
    masses for the ``|u|^p`` term. Cheaper, but for p = 2 it converges
    from below, so it gives no upper bound.

The optimizer is projected, preconditioned gradient descent with Armijo
backtracking: a descent step, nodal absolute value, then renormalization to
unit weighted p-norm. The preconditioner is the (regularized) Hessian of the
gradient term, which turns the p = 2 case into inverse iteration.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field, replace
from typing import Callable

import numpy as np
from scipy.linalg import solveh_banded

from .geometry import (
    DomainError,
    SpaceForm,
    WarpedProduct,
    log_ball_volume_weight,
)

__all__ = [
    "BALL",
    "SLAB",
    "RadialProblem",
    "Grid",
    "SolverOptions",
    "EigenResult",
    "rayleigh_quotient",
    "quotient_gradient",
    "minimize",
    "solve_ball",
    "solve_slab",
    "solve_warped",
    "solve_with_refinement",
]

BALL = "ball"  # natural condition at r = 0, Dirichlet at r = L
SLAB = "slab"  # Dirichlet at both ends

# (points, largest per-cell log-variation of the weight they integrate to
# roughly 1e-12 relative against |u|^p factors)
_GAUSS_ORDERS = ((4, 0.5), (8, 2.0), (16, 8.0), (32, 24.0))
# cells whose weight is below this fraction of the peak are treated as empty
# and their nodes pinned to 0; the eigenfunction grows like w^(-1/p) there and
# would otherwise overflow
_DEAD = 1e-150


@dataclass(frozen=True)
class RadialProblem:
    """One-dimensional weighted p-Rayleigh quotient on ``[0, length]``.

    ``weight`` must be a vectorized callable returning positive values on
    ``(0, length)``; it may vanish at 0 for ball problems. Its overall scale
    is irrelevant.
    """

    p: float
    length: float
    weight: Callable[[np.ndarray], np.ndarray] | None = None
    boundary: str = SLAB
    quadrature: str = "gauss"

    def __post_init__(self):
        if not (self.p > 1 and math.isfinite(self.p)):
            raise ValueError(f"p must be a finite number > 1, got {self.p!r}")
        if not (self.length > 0 and math.isfinite(self.length)):
            raise ValueError(f"length must be positive and finite, got {self.length!r}")
        if self.boundary not in (BALL, SLAB):
            raise ValueError(f"boundary must be {BALL!r} or {SLAB!r}")
        if self.quadrature not in ("gauss", "lumped"):
            raise ValueError("quadrature must be 'gauss' or 'lumped'")

    def density(self, r: np.ndarray) -> np.ndarray:
        if self.weight is None:
            return np.ones_like(r)
        return np.asarray(self.weight(r), dtype=float)


@dataclass(frozen=True, eq=False)
class Grid:
    """Nodes ``0 = r_0 < r_1 < ... < r_m = L``."""

    nodes: np.ndarray

    def __post_init__(self):
        nodes = np.array(self.nodes, dtype=float)
        if nodes.ndim != 1 or nodes.size < 3:
            raise ValueError("a grid needs at least two cells")
        if np.any(np.diff(nodes) <= 0):
            raise ValueError("grid nodes must be strictly increasing")
        nodes.setflags(write=False)
        object.__setattr__(self, "nodes", nodes)

    @classmethod
    def uniform(cls, m: int, length: float) -> "Grid":
        return cls(np.linspace(0.0, length, int(m) + 1))

    @property
    def m(self) -> int:
        return self.nodes.size - 1

    def refine(self) -> "Grid":
        """Bisect every cell."""
        mid = 0.5 * (self.nodes[:-1] + self.nodes[1:])
        out = np.empty(2 * self.m + 1)
        out[0::2] = self.nodes
        out[1::2] = mid
        return Grid(out)


@dataclass(frozen=True)
class SolverOptions:
    rel_tol: float = 1e-8
    max_iters: int = 50_000
    epsilon_schedule: tuple[float, ...] = tuple(10.0 ** -k for k in range(2, 11))
    backtrack: float = 0.5
    armijo: float = 1e-4

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.max_iters > 0):
            raise ValueError("rel_tol and max_iters must be positive")
        eps = tuple(float(e) for e in self.epsilon_schedule)
        if not eps or any(e <= 0 for e in eps):
            raise ValueError("epsilon schedule must be a nonempty list of positive values")
        if any(b >= a for a, b in zip(eps, eps[1:])):
            raise ValueError("epsilon schedule must be strictly decreasing")
        if not (0 < self.backtrack < 1 and 0 < self.armijo < 1):
            raise ValueError("backtrack and armijo constants must lie in (0, 1)")
        object.__setattr__(self, "epsilon_schedule", eps)


@dataclass(frozen=True, eq=False)
class EigenResult:
    """Outcome of a discrete minimization.

    ``lambda_hat`` is the unregularized discrete quotient of ``eigenfunction``,
    given as nonnegative nodal values on ``nodes``. The eigenfunction has
    unit p-norm for the weight rescaled to peak value 1 on the grid.
    ``history`` holds the (regularized) quotient after every accepted step.
    """

    lambda_hat: float
    eigenfunction: np.ndarray
    nodes: np.ndarray
    iterations: int
    converged: bool
    grid_m: int
    epsilon_final: float
    history: np.ndarray = field(repr=False)


# --- discretization --------------------------------------------------------


class _Discrete:
    """Quadrature data of a (problem, grid) pair."""

    def __init__(self, problem: RadialProblem, grid: Grid):
        if not math.isclose(grid.nodes[-1], problem.length, rel_tol=1e-12):
            raise ValueError("grid does not span [0, problem.length]")
        self.p = float(problem.p)
        self.m = grid.m
        r = grid.nodes
        h = np.diff(r)
        self.h = h
        if problem.quadrature == "gauss":
            order = _gauss_order(problem.density(r), skip_origin=problem.boundary == BALL)
            xg, wg = np.polynomial.legendre.leggauss(order)
            xi = 0.5 * (xg + 1.0)
            pts = r[:-1, None] + h[:, None] * xi[None, :]
            wq = problem.density(pts) * (0.5 * wg)[None, :] * h[:, None]
            scale = _weight_scale(wq)
            self.xi = xi
            self.wq = wq / scale
            self.cell = self.wq.sum(axis=1)
            self.mass = None
        else:
            mid = 0.5 * (r[:-1] + r[1:])
            cell = problem.density(mid) * h
            wn = problem.density(r)
            half = np.zeros_like(r)
            half[:-1] += 0.5 * h
            half[1:] += 0.5 * h
            mass = wn * half
            scale = _weight_scale(np.concatenate([cell, mass]))
            self.cell = cell / scale
            self.mass = mass / scale
        if np.any(self.cell < 0) or not np.any(self.cell > 0):
            raise ValueError("weight must be nonnegative and positive somewhere")
        free = np.ones(r.size, dtype=bool)
        free[-1] = False
        if problem.boundary == SLAB:
            free[0] = False
        self.free = free
        # nodes seeing only cells whose weight underflowed to 0 carry no
        # information; the minimizer pins them, which only shrinks the subspace
        live = np.zeros(r.size, dtype=bool)
        alive = self.cell > _DEAD * self.cell.max()
        live[:-1] |= alive
        live[1:] |= alive
        self.solve = free & live

    def check(self, u) -> np.ndarray:
        u = np.asarray(u, dtype=float)
        if u.shape != (self.m + 1,):
            raise ValueError(f"expected {self.m + 1} nodal values, got shape {u.shape}")
        if np.any(u[~self.free] != 0):
            raise ValueError("Dirichlet nodes must be pinned to 0")
        if not np.any(u[self.free] != 0):
            raise ValueError("u vanishes identically on the free nodes")
        return u

    # gradient term
    def numerator(self, u, eps=0.0):
        s = np.diff(u) / self.h
        return float(np.sum(self.cell * (s * s + eps * eps) ** (0.5 * self.p)))

    def numerator_grad(self, u, eps=0.0):
        p = self.p
        s = np.diff(u) / self.h
        a = s * s + eps * eps
        if p == 2.0:
            phi1 = 2.0 * s
        else:
            with np.errstate(divide="ignore", invalid="ignore"):
                phi1 = np.where(a > 0, p * a ** (0.5 * p - 1.0) * s, 0.0)
        g = self.cell * phi1 / self.h
        out = np.zeros(self.m + 1)
        out[:-1] -= g
        out[1:] += g
        return out

    # |u|^p term
    def denominator(self, u):
        p = self.p
        if self.mass is not None:
            return float(np.sum(self.mass * np.abs(u) ** p))
        v = u[:-1, None] * (1.0 - self.xi) + u[1:, None] * self.xi
        return float(np.sum(self.wq * np.abs(v) ** p))

    def denominator_grad(self, u):
        p = self.p
        if self.mass is not None:
            return self.mass * p * np.sign(u) * np.abs(u) ** (p - 1.0)
        v = u[:-1, None] * (1.0 - self.xi) + u[1:, None] * self.xi
        g = self.wq * p * np.sign(v) * np.abs(v) ** (p - 1.0)
        out = np.zeros(self.m + 1)
        out[:-1] += g @ (1.0 - self.xi)
        out[1:] += g @ self.xi
        return out

    def quotient(self, u, eps=0.0):
        return self.numerator(u, eps) / self.denominator(u)

    def gradient(self, u, eps=0.0):
        d = self.denominator(u)
        q = self.numerator(u, eps) / d
        g = (self.numerator_grad(u, eps) - q * self.denominator_grad(u)) / d
        g[~self.free] = 0.0
        return g

    def normalize(self, u):
        return u / self.denominator(u) ** (1.0 / self.p)

    def preconditioner(self, u, eps):
        """Upper band form of the regularized Hessian of the gradient term."""
        p = self.p
        s = np.diff(u) / self.h
        if p == 2.0:
            phi2 = np.full_like(s, 2.0)
        else:
            # floor keeps cells with vanishing slope coupled when p > 2
            floor2 = eps * eps
            if p > 2:
                floor2 += (1e-2 * np.max(np.abs(s))) ** 2
            a = s * s + floor2
            phi2 = p * a ** (0.5 * p - 2.0) * ((p - 1.0) * s * s + floor2)
        k = self.cell * phi2 / self.h**2
        diag = np.zeros(self.m + 1)
        diag[:-1] += k
        diag[1:] += k
        off = -k
        idx = np.flatnonzero(self.solve)
        ab = np.zeros((2, idx.size))
        ab[1] = diag[idx]
        ab[0, 1:] = np.where(np.diff(idx) == 1, off[idx[:-1]], 0.0)
        return ab


def _gauss_order(node_weights: np.ndarray, skip_origin: bool = False) -> int:
    """Gauss points per cell needed for the weight's largest per-cell log-jump."""
    w = np.asarray(node_weights, dtype=float)
    if skip_origin:
        # a ball weight vanishes like r^(n-1) at the centre; that is polynomial
        w = w[1:]
    top = np.max(w)
    if not (top > 0 and math.isfinite(top)):
        return _GAUSS_ORDERS[0][0]
    with np.errstate(divide="ignore"):
        logw = np.maximum(np.log(w / top), math.log(_DEAD))
    beta = float(np.max(np.abs(np.diff(logw)))) if logw.size > 1 else 0.0
    for points, limit in _GAUSS_ORDERS:
        if beta <= limit:
            return points
    warnings.warn(
        f"the weight changes by a factor e^{beta:.3g} across one cell; "
        "refine the grid, quadrature is unreliable",
        RuntimeWarning,
        stacklevel=4,
    )
    return _GAUSS_ORDERS[-1][0]


def _solve_banded(ab: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    if ab.shape[1] == 1:
        return rhs / ab[1]
    return solveh_banded(ab, rhs, check_finite=False)


def _weight_scale(values: np.ndarray) -> float:
    top = float(np.max(values))
    if not (top > 0 and math.isfinite(top)):
        raise ValueError("weight must be finite and positive somewhere on the grid")
    return top


def rayleigh_quotient(problem: RadialProblem, grid: Grid, u, eps: float = 0.0) -> float:
    """Discrete quotient ``sum w|u'|^p / sum w|u|^p`` of nodal values ``u``.

    With ``eps > 0`` the gradient term uses ``(u'^2 + eps^2)^(p/2)``.
    """
    disc = _Discrete(problem, grid)
    return disc.quotient(disc.check(u), eps)


def quotient_gradient(problem: RadialProblem, grid: Grid, u, eps: float = 0.0) -> np.ndarray:
    """Gradient of :func:`rayleigh_quotient` with respect to nodal values.

    Entries at Dirichlet nodes are zero. For p < 2 pass ``eps > 0``; the
    unregularized gradient is only defined where no slope vanishes.
    """
    disc = _Discrete(problem, grid)
    return disc.gradient(disc.check(u), eps)


def _initial_guess(problem: RadialProblem, grid: Grid) -> np.ndarray:
    r = grid.nodes
    L = problem.length
    if problem.boundary == BALL:
        return L - r
    return np.minimum(r, L - r)


def minimize(
    problem: RadialProblem,
    grid: Grid,
    opts: SolverOptions | None = None,
    u0=None,
) -> EigenResult:
    """Minimize the discrete quotient; the result is an upper bound for lambda_1.

    Starts from the distance to the Dirichlet boundary unless ``u0`` is
    given. For p < 2 the gradient term is regularized and the regularization
    is driven to zero along ``opts.epsilon_schedule``. Exhausting
    ``opts.max_iters`` returns a result with ``converged=False``.
    """
    opts = opts or SolverOptions()
    disc = _Discrete(problem, grid)
    u = _initial_guess(problem, grid) if u0 is None else np.abs(np.asarray(u0, dtype=float))
    u = disc.check(u)
    start = disc.normalize(u)
    free = disc.solve
    u = np.where(free, u, 0.0)
    if not np.any(u):
        raise ValueError("initial guess vanishes on every node with positive weight")
    u = disc.normalize(u)
    schedule = opts.epsilon_schedule if problem.p < 2 else (0.0,)

    history = []
    iters = 0
    converged = False
    eps = schedule[0]
    for eps in schedule:
        q = disc.quotient(u, eps)
        converged = False
        while iters < opts.max_iters:
            g = disc.gradient(u, eps)
            ab = disc.preconditioner(u, eps)
            d = np.zeros_like(u)
            d[free] = -_solve_banded(ab, g[free])
            slope = float(g @ d)
            if not slope < 0:
                converged = True
                break
            alpha = 1.0
            while True:
                trial = u + alpha * d
                qt = disc.quotient(trial, eps) if np.any(trial[free] != 0) else math.inf
                if qt <= q + opts.armijo * alpha * slope:
                    break
                alpha *= opts.backtrack
                if alpha < 1e-16:
                    trial = None
                    break
            iters += 1
            if trial is None:
                # no representable decrease left along the descent direction
                converged = True
                break
            cand = disc.normalize(np.abs(trial))
            q_new = disc.quotient(cand, eps)
            if not math.isfinite(q_new):
                break  # leaves converged False and keeps the last finite iterate
            u = cand
            history.append(q_new)
            done = abs(q - q_new) <= opts.rel_tol * abs(q_new)
            q = q_new
            if done:
                converged = True
                break
        if not converged:
            break

    lam = disc.quotient(u)
    if u0 is not None:
        lam_start = disc.quotient(start)
        if lam_start < lam:
            u, lam = start, lam_start
    return EigenResult(
        lambda_hat=float(lam),
        eigenfunction=u,
        nodes=grid.nodes,
        iterations=iters,
        converged=converged,
        grid_m=grid.m,
        epsilon_final=float(eps),
        history=np.asarray(history),
    )


def _ball_problem(geom: SpaceForm, p: float, R: float, quadrature: str = "gauss") -> RadialProblem:
    if not R > 0:
        raise ValueError(f"R must be > 0, got {R!r}")
    if geom.c > 0 and R >= geom.cut_radius:
        raise DomainError(f"R must be below the cut radius {geom.cut_radius:.6g}")
    lw = log_ball_volume_weight(geom, np.linspace(0.0, R, 257)[1:])
    shift = float(np.max(lw))

    def weight(r):
        return np.exp(log_ball_volume_weight(geom, r) - shift)

    return RadialProblem(p=p, length=R, weight=weight, boundary=BALL, quadrature=quadrature)


def solve_ball(
    geom: SpaceForm,
    p: float,
    R: float,
    grid_m: int = 2048,
    opts: SolverOptions | None = None,
    u0=None,
) -> EigenResult:
    """Upper bound for lambda_{1,p} of the geodesic ball B_R in ``geom``."""
    problem = _ball_problem(geom, p, R)
    return minimize(problem, Grid.uniform(grid_m, R), opts, u0=u0)


def solve_slab(
    p: float,
    length: float,
    weight: Callable[[np.ndarray], np.ndarray] | None = None,
    grid_m: int = 2048,
    opts: SolverOptions | None = None,
) -> EigenResult:
    """Dirichlet problem on ``[0, length]`` with density ``weight`` (default 1)."""
    problem = RadialProblem(p=p, length=length, weight=weight, boundary=SLAB)
    return minimize(problem, Grid.uniform(grid_m, length), opts)


def solve_warped(
    geom: WarpedProduct,
    p: float,
    length: float,
    t0: float = 0.0,
    grid_m: int = 2048,
    opts: SolverOptions | None = None,
) -> EigenResult:
    """Slab ``[t0, t0 + length] x N`` of a warped product, u depending on t only.

    For compact N this is an upper bound for the first eigenvalue of the
    slab, hence for the fundamental tone of the whole warped product.
    """
    lo, hi = geom.rho.domain
    if t0 < lo or t0 + length > hi:
        raise DomainError(f"slab [{t0}, {t0 + length}] leaves the profile domain [{lo}, {hi}]")
    k = geom.n - 1
    ts = t0 + np.linspace(0.0, length, 257)
    shift = float(np.max(k * np.asarray(geom.rho(ts))))

    def weight(t):
        return np.exp(k * np.asarray(geom.rho(t0 + t)) - shift)

    return solve_slab(p, length, weight, grid_m, opts)


def solve_with_refinement(
    problem: RadialProblem,
    grid: Grid,
    opts: SolverOptions | None = None,
    max_m: int | None = None,
) -> list[EigenResult]:
    """Solve on ``grid`` and its bisections up to ``max_m`` cells.

    Every level is warm-started from the previous eigenfunction, which the
    finer grid represents exactly, so the minima are nonincreasing.
    """
    max_m = grid.m if max_m is None else int(max_m)
    ratio = max_m / grid.m
    if ratio < 1 or ratio != 2 ** round(math.log2(ratio)):
        raise ValueError("max_m must be a power-of-two multiple of the starting m")
    results = [minimize(problem, grid, opts)]
    while grid.m < max_m:
        fine = grid.refine()
        u0 = np.interp(fine.nodes, grid.nodes, results[-1].eigenfunction)
        grid = fine
        results.append(minimize(problem, grid, opts, u0=u0))
    return results


def with_options(opts: SolverOptions | None, **changes) -> SolverOptions:
    """Copy of ``opts`` (or the defaults) with some fields replaced."""
    return replace(opts or SolverOptions(), **changes)


