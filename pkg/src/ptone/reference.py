"""Independent oracles for first Dirichlet eigenvalues.

None of these share code with the discrete minimizer:

* Bessel zeros from the ascending power series (Euclidean balls, p = 2),
* the half-period pi_p of the p-sine (constant-weight intervals, any p),
* the closed form 1 + pi^2/R^2 on geodesic balls of H^3,
* an ODE shooting method for radial p = 2 problems in any space form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.integrate import solve_ivp

from .geometry import SpaceForm

__all__ = [
    "OracleValue",
    "bessel_first_zero",
    "pi_p",
    "slab_eigenvalue",
    "h3_ball_eigenvalue",
    "shoot_value",
    "shoot_radial",
    "shooting_eigenvalue",
    "ball_eigenvalue_oracle",
]


@dataclass(frozen=True)
class OracleValue:
    value: float
    method: str
    certified_digits: int


def _bessel_series(nu: float, x: float) -> float:
    """J_nu(x) / (x/2)^nu from its ascending series."""
    z = -0.25 * x * x
    term = 1.0 / math.gamma(nu + 1.0)
    total = term
    k = 0
    while True:
        k += 1
        term *= z / (k * (k + nu))
        total += term
        if k > x and abs(term) < 1e-18 * max(1.0, abs(total)):
            return total


def bessel_first_zero(nu: float) -> float:
    """First positive zero j_{nu,1} of the Bessel function J_nu, 0 <= nu <= 5.

    Scans the power series for its first sign change and bisects it down to
    floating-point resolution.
    """
    if not 0 <= nu <= 5:
        raise ValueError(f"order must lie in [0, 5], got {nu!r}")
    step = 0.05
    a = step
    while _bessel_series(nu, a + step) > 0:
        a += step
    b = a + step
    for _ in range(200):
        mid = 0.5 * (a + b)
        if mid in (a, b):
            break
        if _bessel_series(nu, mid) > 0:
            a = mid
        else:
            b = mid
    return 0.5 * (a + b)


def pi_p(p: float) -> float:
    """Half-period 2 pi / (p sin(pi/p)) of the p-sine function."""
    if not p > 1:
        raise ValueError(f"p must be > 1, got {p!r}")
    return 2.0 * math.pi / (p * math.sin(math.pi / p))


def slab_eigenvalue(p: float, length: float) -> float:
    """First Dirichlet eigenvalue (p-1)(pi_p/L)^p of the 1-d p-Laplacian."""
    return (p - 1.0) * (pi_p(p) / length) ** p


def h3_ball_eigenvalue(R: float) -> float:
    """First Dirichlet eigenvalue of the Laplacian on a geodesic R-ball of H^3.

    The eigenfunction is sin(pi r/R) / sinh(r).
    """
    if not R > 0:
        raise ValueError(f"R must be > 0, got {R!r}")
    return 1.0 + (math.pi / R) ** 2


# --- shooting --------------------------------------------------------------


def _rhs(geom: SpaceForm, lam: float):
    m, c = geom.n - 1, geom.c

    if c < 0:
        k = math.sqrt(-c)

        def drift(r):
            return m * k / math.tanh(k * r)
    elif c > 0:
        k = math.sqrt(c)

        def drift(r):
            return m * k / math.tan(k * r)
    else:

        def drift(r):
            return m / r

    def f(r, y):
        return [y[1], -drift(r) * y[1] - lam * y[0]]

    return f


def _series_start(geom: SpaceForm, lam: float, r0: float) -> list[float]:
    # u = 1 + a2 r^2 + a4 r^4 solves the equation through order r^2, using
    # (n-1) f'/f = (n-1)/r - (n-1) c r/3 + O(r^3)
    n, c = geom.n, geom.c
    a2 = -lam / (2.0 * n)
    a4 = a2 * (2.0 * (n - 1) * c / 3.0 - lam) / (4.0 * (n + 2))
    return [1.0 + a2 * r0**2 + a4 * r0**4, 2.0 * a2 * r0 + 4.0 * a4 * r0**3]


def _integrate(geom: SpaceForm, R: float, lam: float, stop_at_zero: bool):
    if not lam > 0:
        raise ValueError("lambda must be > 0")
    if not R > 0 or R >= geom.cut_radius:
        raise ValueError(f"R must lie in (0, {geom.cut_radius})")
    r0 = min(1e-3 * R, 1e-3 / math.sqrt(lam))
    events = None
    if stop_at_zero:

        def crossing(r, y):
            return y[0]

        crossing.terminal = True
        crossing.direction = -1
        events = crossing
    sol = solve_ivp(
        _rhs(geom, lam),
        (r0, R),
        _series_start(geom, lam, r0),
        method="DOP853",
        rtol=1e-12,
        atol=1e-14,
        events=events,
    )
    if sol.status == -1:
        raise RuntimeError(f"shooting integration failed: {sol.message}")
    return sol


def shoot_value(geom: SpaceForm, R: float, lam: float) -> float:
    """u(R) for the radial p = 2 solution with u(0) = 1, u'(0) = 0."""
    return float(_integrate(geom, R, lam, stop_at_zero=False).y[0, -1])


def shoot_radial(geom: SpaceForm, R: float, lam: float) -> int:
    """Sign of u(R) (+1, -1 or 0) for the radial shooting problem."""
    v = shoot_value(geom, R, lam)
    return (v > 0) - (v < 0)


def _has_zero(geom: SpaceForm, R: float, lam: float) -> bool:
    sol = _integrate(geom, R, lam, stop_at_zero=True)
    return sol.status == 1 or sol.y[0, -1] <= 0


def shooting_eigenvalue(geom: SpaceForm, R: float, rel_tol: float = 1e-13) -> float:
    """First Dirichlet eigenvalue (p = 2) of the ball B_R by bisection.

    The first zero of the shot solution moves inward as lambda grows, so the
    eigenvalue is the smallest lambda whose solution vanishes in (0, R].
    """
    lo, hi = 0.0, 1.0
    while not _has_zero(geom, R, hi):
        lo, hi = hi, 2.0 * hi
        if hi > 1e12:
            raise RuntimeError("could not bracket the first eigenvalue")
    while hi - lo > rel_tol * hi:
        mid = 0.5 * (lo + hi)
        if _has_zero(geom, R, mid):
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def ball_eigenvalue_oracle(geom: SpaceForm, R: float) -> OracleValue:
    """Best available p = 2 reference value for the ball B_R in ``geom``."""
    if geom.c == 0 and geom.n <= 12:
        j = bessel_first_zero(geom.n / 2.0 - 1.0)
        return OracleValue((j / R) ** 2, "bessel-series", 12)
    if geom.c < 0 and geom.n == 3:
        k = math.sqrt(-geom.c)
        # rescale the unit-curvature formula: lambda(B_R; -k^2) = k^2 lambda(B_{kR}; -1)
        return OracleValue(k * k * h3_ball_eigenvalue(k * R), "h3-closed-form", 14)
    return OracleValue(shooting_eigenvalue(geom, R), "radial-shooting", 9)
