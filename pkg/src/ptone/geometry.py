"""Model geometries and their radial quantities.

Space forms M^n(c) are described in polar coordinates by the metric
``dr^2 + f_c(r)^2 dw^2`` where ``dw^2`` is the round metric on S^{n-1};
warped products ``R x N`` carry ``dt^2 + exp(2 rho(t)) g_0``. Everything a
radial or one-dimensional reduction needs (volume densities and the
p-Laplacian of the distance function) lives here.

All functions accept scalars or numpy arrays for the radial argument.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

__all__ = [
    "DomainError",
    "SpaceForm",
    "TestFunctionData",
    "LinearProfile",
    "CoshProfile",
    "SampledProfile",
    "WarpedProduct",
    "load_profile",
    "metric_coefficient",
    "metric_coefficient_derivative",
    "distance_p_laplacian",
    "ball_volume_weight",
    "log_ball_volume_weight",
    "warped_volume_weight",
]


class DomainError(ValueError):
    """Raised when an argument lies outside the domain of a formula."""


@dataclass(frozen=True)
class SpaceForm:
    """Simply connected space form of dimension ``n`` and curvature ``c``.

    The sign of ``c`` selects the branch: hyperbolic (c < 0), Euclidean
    (exactly 0) or spherical (c > 0). No snapping of tiny curvatures to zero
    is done.
    """

    n: int
    c: float = 0.0

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 2:
            raise ValueError(f"dimension must be an integer >= 2, got {self.n!r}")
        if not math.isfinite(self.c):
            raise ValueError(f"curvature must be finite, got {self.c!r}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "c", float(self.c))

    @property
    def kappa(self) -> float:
        """sqrt(|c|); the curvature scale of the hyperbolic or spherical branch."""
        return math.sqrt(abs(self.c))

    @property
    def cut_radius(self) -> float:
        """Distance to the cut locus of a point (inf unless c > 0)."""
        return math.pi / math.sqrt(self.c) if self.c > 0 else math.inf


@dataclass(frozen=True)
class TestFunctionData:
    """Constants of a comparison function f with |grad f| <= a and Delta_p f >= b."""

    __test__ = False  # keep pytest from collecting this as a test class

    a: float
    b: float

    def __post_init__(self):
        if not (self.a > 0 and self.b > 0):
            raise ValueError(f"need a > 0 and b > 0, got a={self.a!r}, b={self.b!r}")


def _check_radius(geom: SpaceForm, r, *, allow_zero: bool = True) -> np.ndarray:
    r = np.asarray(r, dtype=float)
    if np.any(~np.isfinite(r)):
        raise DomainError("radius must be finite")
    if allow_zero:
        if np.any(r < 0):
            raise DomainError("radius must be >= 0")
    elif np.any(r <= 0):
        raise DomainError("the distance function is singular at r = 0")
    if geom.c > 0 and np.any(r >= geom.cut_radius):
        raise DomainError(
            f"r must stay inside the cut locus pi/sqrt(c) = {geom.cut_radius:.6g}"
        )
    return r


def _out(x: np.ndarray):
    return float(x) if np.ndim(x) == 0 else x


def metric_coefficient(geom: SpaceForm, r):
    """Polar metric coefficient f_c(r).

    ``sinh(k r)/k`` for c = -k^2, ``r`` for c = 0 and ``sin(k r)/k`` for
    c = k^2. Raises :class:`DomainError` for negative r or r past the cut
    locus of the sphere.
    """
    r = _check_radius(geom, r)
    c = geom.c
    if c < 0:
        k = math.sqrt(-c)
        return _out(np.sinh(k * r) / k)
    if c > 0:
        k = math.sqrt(c)
        return _out(np.sin(k * r) / k)
    return _out(r.copy())


def metric_coefficient_derivative(geom: SpaceForm, r):
    """Derivative f_c'(r): cosh(k r), 1 or cos(k r)."""
    r = _check_radius(geom, r)
    c = geom.c
    if c < 0:
        return _out(np.cosh(math.sqrt(-c) * r))
    if c > 0:
        return _out(np.cos(math.sqrt(c) * r))
    return _out(np.ones_like(r))


def distance_p_laplacian(geom: SpaceForm, r):
    """p-Laplacian of the distance to a point, (n-1) f_c'(r) / f_c(r).

    Since the distance function has unit gradient this does not depend on p.
    """
    r = _check_radius(geom, r, allow_zero=False)
    c, m = geom.c, geom.n - 1
    if c < 0:
        k = math.sqrt(-c)
        return _out(m * k / np.tanh(k * r))
    if c > 0:
        k = math.sqrt(c)
        return _out(m * k / np.tan(k * r))
    return _out(m / r)


def ball_volume_weight(geom: SpaceForm, r):
    """Radial density f_c(r)^(n-1) of the volume form of a geodesic ball."""
    return _out(np.asarray(metric_coefficient(geom, r)) ** (geom.n - 1))


def log_ball_volume_weight(geom: SpaceForm, r):
    """Natural log of :func:`ball_volume_weight`, stable for large hyperbolic radii.

    Returns -inf at r = 0.
    """
    r = _check_radius(geom, r)
    c = geom.c
    with np.errstate(divide="ignore"):
        if c < 0:
            k = math.sqrt(-c)
            x = k * r
            # log sinh(x) = x + log1p(-exp(-2x)) - log 2
            logf = x + np.log1p(-np.exp(-2.0 * x)) - math.log(2.0) - math.log(k)
        elif c > 0:
            k = math.sqrt(c)
            logf = np.log(np.sin(k * r)) - math.log(k)
        else:
            logf = np.log(r)
    return _out((geom.n - 1) * logf)


# --- warped products -------------------------------------------------------


@dataclass(frozen=True)
class LinearProfile:
    """Warping function rho(t) = slope * t."""

    slope: float

    @property
    def derivative_floor(self) -> float:
        return self.slope

    @property
    def domain(self) -> tuple[float, float]:
        return (-math.inf, math.inf)

    def __call__(self, t):
        return _out(self.slope * np.asarray(t, dtype=float))


@dataclass(frozen=True)
class CoshProfile:
    """Warping function rho(t) = slope * t + amp * log(cosh(t)).

    Its derivative ``slope + amp * tanh(t)`` is bounded below by
    ``slope - amp`` for amp >= 0.
    """

    slope: float
    amp: float

    def __post_init__(self):
        if self.amp < 0:
            raise ValueError("amp must be >= 0")

    @property
    def derivative_floor(self) -> float:
        return self.slope - self.amp

    @property
    def domain(self) -> tuple[float, float]:
        return (-math.inf, math.inf)

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        a = np.abs(t)
        logcosh = a + np.log1p(np.exp(-2.0 * a)) - math.log(2.0)
        return _out(self.slope * t + self.amp * logcosh)


@dataclass(frozen=True, eq=False)
class SampledProfile:
    """Tabulated warping function, interpolated piecewise-linearly.

    ``t`` must be strictly increasing. The derivative floor is the smallest
    difference quotient of the table.
    """

    t: np.ndarray
    rho: np.ndarray

    def __post_init__(self):
        t = np.array(self.t, dtype=float)
        rho = np.array(self.rho, dtype=float)
        if t.ndim != 1 or t.shape != rho.shape or t.size < 2:
            raise ValueError("need matching 1-d arrays with at least two samples")
        if not (np.all(np.isfinite(t)) and np.all(np.isfinite(rho))):
            raise ValueError("profile samples must be finite")
        if np.any(np.diff(t) <= 0):
            raise ValueError("profile t values must be strictly increasing")
        t.setflags(write=False)
        rho.setflags(write=False)
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "rho", rho)

    @property
    def derivative_floor(self) -> float:
        return float(np.min(np.diff(self.rho) / np.diff(self.t)))

    @property
    def domain(self) -> tuple[float, float]:
        return (float(self.t[0]), float(self.t[-1]))

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        lo, hi = self.domain
        if np.any((t < lo) | (t > hi)):
            raise DomainError(f"t outside sampled range [{lo}, {hi}]")
        return _out(np.interp(t, self.t, self.rho))


def load_profile(path) -> SampledProfile:
    """Read a two-column ``t rho`` whitespace table; ``#`` starts a comment."""
    data = np.loadtxt(Path(path), comments="#", ndmin=2)
    if data.shape[1] != 2:
        raise ValueError(f"{path}: expected two columns 't rho', got {data.shape[1]}")
    return SampledProfile(data[:, 0], data[:, 1])


@dataclass(frozen=True)
class WarpedProduct:
    """R x N^{n-1} with metric dt^2 + exp(2 rho(t)) g_0.

    ``kappa`` is a certified lower bound for rho'. It defaults to the
    profile's own derivative floor, and construction fails if a larger value
    is claimed than the profile supports.
    """

    n: int
    rho: LinearProfile | CoshProfile | SampledProfile
    kappa: float | None = field(default=None)

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 2:
            raise ValueError(f"dimension must be an integer >= 2, got {self.n!r}")
        floor = self.rho.derivative_floor
        kappa = floor if self.kappa is None else float(self.kappa)
        if kappa < 0:
            raise ValueError("kappa must be >= 0")
        if kappa > floor * (1 + 1e-12) + 1e-15:
            raise ValueError(
                f"kappa={kappa} exceeds the profile's derivative floor {floor}"
            )
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "kappa", kappa)


def warped_volume_weight(geom: WarpedProduct, t):
    """Density exp((n-1) rho(t)) of the volume form along the R factor."""
    return _out(np.exp((geom.n - 1) * np.asarray(geom.rho(t))))
