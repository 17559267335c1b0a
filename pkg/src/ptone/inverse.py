"""Radius of the geodesic ball with a prescribed first eigenvalue.

For c <= 0 the map L(R) = lambda_{1,p}(B_R) is continuous and strictly
decreasing, running from +inf down to the asymptotic floor
((n-1) sqrt(-c) / p)^p. Every target above the floor is hit by exactly one
radius, which we find by bisection on the computed L(R).

The computed L(R) overestimates the true one, so the returned radius is
biased slightly upward; refining the grid shrinks the bias.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import hyperbolic_fundamental_tone_bound, space_form_ball_bound
from .eigensolver import SolverOptions, solve_ball
from .geometry import DomainError, SpaceForm

__all__ = ["InverseQuery", "eigenvalue_of_radius", "radius_for_eigenvalue"]

R_MIN, R_MAX = 1e-6, 1e6


@dataclass(frozen=True)
class InverseQuery:
    geom: SpaceForm
    p: float
    lambda_target: float
    tol_R: float = 1e-3
    grid_m: int = 2048
    opts: SolverOptions | None = None

    def __post_init__(self):
        if self.geom.c > 0:
            raise DomainError("the inverse problem needs c <= 0 (no cut locus)")
        if not self.p > 1:
            raise ValueError(f"p must be > 1, got {self.p!r}")
        if not self.tol_R > 0:
            raise ValueError("tol_R must be > 0")
        floor = self.floor
        if not self.lambda_target > floor:
            raise DomainError(
                f"lambda={self.lambda_target} does not exceed the asymptotic value "
                f"{floor}; no ball has this eigenvalue"
            )

    @property
    def floor(self) -> float:
        """Infimum of L over all radii."""
        if self.geom.c == 0:
            return 0.0
        return hyperbolic_fundamental_tone_bound(self.geom.n, self.geom.kappa, self.p)


def eigenvalue_of_radius(q: InverseQuery, R: float) -> float:
    """Computed L(R) at the query's grid size and solver options.

    Raises RuntimeError when the value falls below the closed-form lower
    bound for B_R, which only happens when the grid cannot resolve the
    volume density (very large hyperbolic radii on coarse grids).
    """
    lam = solve_ball(q.geom, q.p, R, q.grid_m, q.opts).lambda_hat
    if lam < space_form_ball_bound(q.geom, q.p, R):
        raise RuntimeError(
            f"L({R:g}) = {lam:g} is below the lower bound; grid m={q.grid_m} "
            "is too coarse for this radius"
        )
    return lam


def radius_for_eigenvalue(q: InverseQuery) -> float:
    """R with L(R) = q.lambda_target, to within q.tol_R in R."""
    lam = q.lambda_target

    def L(R):
        return eigenvalue_of_radius(q, R)

    R = 1.0
    if L(R) > lam:
        lo = R
        hi = 2.0 * R
        while L(hi) > lam:
            lo, hi = hi, 2.0 * hi
            if hi > R_MAX:
                raise RuntimeError(f"no bracket for lambda={lam} below R={R_MAX:g}")
    else:
        hi = R
        lo = 0.5 * R
        while L(lo) <= lam:
            lo, hi = 0.5 * lo, lo
            if lo < R_MIN:
                raise RuntimeError(f"no bracket for lambda={lam} above R={R_MIN:g}")
    # invariant: L(lo) > lam >= L(hi)
    while hi - lo > q.tol_R:
        mid = 0.5 * (lo + hi)
        if L(mid) > lam:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)

