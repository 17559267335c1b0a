"""Closed-form lower bounds for the first Dirichlet eigenvalue of Delta_p.

Every bound here is an instance of one estimate: if a domain carries a
function f with ``|grad f| <= a`` and ``Delta_p f >= b`` then

    lambda_{1,p} >= b^p / (p^p a^(p(p-1))).

The geometric bounds plug in the distance function of a space form, the
Busemann-type coordinate of a warped product, or its lift through a
Riemannian submersion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geometry import (
    DomainError,
    SpaceForm,
    TestFunctionData,
    WarpedProduct,
    distance_p_laplacian,
)

__all__ = [
    "SubmersionData",
    "theorem1_bound",
    "space_form_ball_bound",
    "hyperbolic_fundamental_tone_bound",
    "warped_bound",
    "submersion_bound",
]


def _check_p(p: float) -> float:
    p = float(p)
    if not (p > 1 and math.isfinite(p)):
        raise ValueError(f"exponent p must be a finite number > 1, got {p!r}")
    return p


@dataclass(frozen=True)
class SubmersionData:
    """Base Laplacian floor ``b`` and fiber mean-curvature bound ``alpha``."""

    b: float
    alpha: float = 0.0

    def __post_init__(self):
        if not self.b > 0:
            raise ValueError(f"b must be > 0, got {self.b!r}")
        if self.alpha < 0:
            raise ValueError(f"alpha must be >= 0, got {self.alpha!r}")
        if self.alpha >= self.b:
            raise ValueError(
                f"alpha={self.alpha} >= b={self.b}: the lifted estimate is vacuous"
            )


def theorem1_bound(data: TestFunctionData, p: float) -> float:
    """b^p / (p^p a^(p(p-1))) for the comparison constants in ``data``."""
    p = _check_p(p)
    # (b / (p a^(p-1)))^p keeps the intermediate values near unit scale
    return (data.b / (p * data.a ** (p - 1.0))) ** p


def space_form_ball_bound(geom: SpaceForm, p: float, R: float) -> float:
    """Lower bound for any domain inside a geodesic ball of radius R in M^n(c).

    Uses the distance function to the centre, so the hyperbolic branch is
    ``((n-1) k coth(k R) / p)^p`` with ``k = sqrt(-c)``. On the sphere the
    ball must satisfy ``sqrt(c) R < pi/2`` so the cotangent stays positive.
    """
    p = _check_p(p)
    if not R > 0:
        raise ValueError(f"R must be > 0, got {R!r}")
    if geom.c > 0 and math.sqrt(geom.c) * R >= math.pi / 2:
        raise DomainError(
            f"sqrt(c) R = {math.sqrt(geom.c) * R:.6g} >= pi/2: no positive bound"
        )
    b = distance_p_laplacian(geom, R)
    return theorem1_bound(TestFunctionData(a=1.0, b=b), p)


def hyperbolic_fundamental_tone_bound(n: int, kappa: float, p: float) -> float:
    """((n-1) kappa / p)^p, the bound under sectional curvature <= -kappa^2.

    This is the R -> infinity limit of :func:`space_form_ball_bound` with
    c = -kappa^2.
    """
    p = _check_p(p)
    if int(n) != n or n < 2:
        raise ValueError(f"n must be an integer >= 2, got {n!r}")
    if not kappa > 0:
        raise ValueError(f"kappa must be > 0, got {kappa!r}")
    return ((n - 1) * kappa / p) ** p


def warped_bound(geom: WarpedProduct, p: float) -> float:
    """((n-1) kappa / p)^p for dt^2 + exp(2 rho) g_0 with rho' >= kappa."""
    p = _check_p(p)
    if not geom.kappa > 0:
        raise ValueError("the warped estimate needs kappa > 0")
    return theorem1_bound(TestFunctionData(a=1.0, b=(geom.n - 1) * geom.kappa), p)


def submersion_bound(data: SubmersionData, p: float) -> float:
    """((b - alpha) / p)^p for the total space of a Riemannian submersion.

    The lifted coordinate still has unit gradient and its Laplacian drops by
    at most ``alpha``, so this is :func:`theorem1_bound` with
    ``a = 1, b -> b - alpha``.
    """
    p = _check_p(p)
    return theorem1_bound(TestFunctionData(a=1.0, b=data.b - data.alpha), p)
