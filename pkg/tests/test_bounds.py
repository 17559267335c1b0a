import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import taylor_cosh, taylor_sinh
from ptone.bounds import (
    SubmersionData,
    hyperbolic_fundamental_tone_bound,
    space_form_ball_bound,
    submersion_bound,
    theorem1_bound,
    warped_bound,
)
from ptone.geometry import (
    CoshProfile,
    DomainError,
    LinearProfile,
    SpaceForm,
    TestFunctionData,
    WarpedProduct,
    distance_p_laplacian,
)

COTH1 = taylor_cosh(1.0) / taylor_sinh(1.0)


@pytest.mark.parametrize(
    "a, b, p, expected",
    [(1.0, 2.0, 2.0, 1.0), (2.0, 4.0, 3.0, 1.0 / 27.0), (2.0, 2.0, 2.0, 0.25)],
)
def test_theorem1_examples(a, b, p, expected):
    assert theorem1_bound(TestFunctionData(a, b), p) == pytest.approx(expected, rel=1e-14)


@pytest.mark.parametrize("p", [1.0, 0.5, -2.0, math.inf, math.nan])
def test_theorem1_rejects_bad_exponent(p):
    with pytest.raises(ValueError):
        theorem1_bound(TestFunctionData(1.0, 1.0), p)


def test_theorem1_scaling_invariance_random():
    rng = np.random.default_rng(20240601)
    for _ in range(1000):
        a = rng.uniform(0.1, 10.0)
        b = rng.uniform(0.1, 10.0)
        p = rng.uniform(1.05, 6.0)
        s = rng.uniform(0.1, 10.0)
        base = theorem1_bound(TestFunctionData(a, b), p)
        scaled = theorem1_bound(TestFunctionData(s * a, s ** (p - 1) * b), p)
        assert scaled == pytest.approx(base, rel=1e-12)


@settings(max_examples=200, deadline=None)
@given(
    a=st.floats(0.05, 20.0),
    b=st.floats(0.05, 20.0),
    p=st.floats(1.01, 8.0),
)
def test_theorem1_formula_positive(a, b, p):
    val = theorem1_bound(TestFunctionData(a, b), p)
    assert val > 0
    assert val == pytest.approx(b**p / (p**p * a ** (p * (p - 1))), rel=1e-9)


@pytest.mark.parametrize(
    "n, c, p, R, expected",
    [
        (3, 0.0, 2.0, 1.0, 1.0),
        (2, 1.0, 2.0, math.pi / 4, 0.25),
        (3, -1.0, 2.0, 1.0, COTH1**2),  # 1.724061
    ],
)
def test_space_form_ball_examples(n, c, p, R, expected):
    assert space_form_ball_bound(SpaceForm(n, c), p, R) == pytest.approx(expected, rel=1e-12)


def test_space_form_ball_frozen():
    assert space_form_ball_bound(SpaceForm(3, -1.0), 2.0, 1.0) == pytest.approx(1.724061, abs=1e-6)


def test_space_form_ball_positive_curvature_limit():
    g = SpaceForm(3, 1.0)
    with pytest.raises(DomainError):
        space_form_ball_bound(g, 2.0, math.pi / 2)
    with pytest.raises(DomainError):
        space_form_ball_bound(g, 2.0, 2.0)
    assert space_form_ball_bound(g, 2.0, 1.5) > 0


def test_space_form_ball_rejects_bad_radius():
    with pytest.raises(ValueError):
        space_form_ball_bound(SpaceForm(3, 0.0), 2.0, 0.0)


def test_space_form_hyperbolic_uses_scaled_coth():
    # c = -4: the bound involves coth(2R), not coth(R)
    R, p = 0.7, 2.5
    val = space_form_ball_bound(SpaceForm(3, -4.0), p, R)
    assert val == pytest.approx((2 * 2.0 / math.tanh(2.0 * R) / p) ** p, rel=1e-14)


@pytest.mark.parametrize("c", [-2.0, -1.0, -0.3, 0.0, 0.5, 1.0])
@pytest.mark.parametrize("p", [1.5, 2.0, 3.7])
@pytest.mark.parametrize("n", [2, 3, 5])
def test_factorization_through_theorem1(n, c, p):
    g = SpaceForm(n, c)
    for R in (0.2, 0.6, 1.2):
        b = distance_p_laplacian(g, R)
        assert space_form_ball_bound(g, p, R) == pytest.approx(
            theorem1_bound(TestFunctionData(1.0, b), p), rel=1e-12
        )


@pytest.mark.parametrize("c", [-1.0, 0.0, -3.0])
def test_ball_bound_decreasing_in_radius(c):
    g = SpaceForm(4, c)
    # beyond sqrt(-c) R ~ 18 coth is 1 to double precision
    top = 20.0 if c == 0 else 12.0 / math.sqrt(-c)
    vals = [space_form_ball_bound(g, 2.5, R) for R in np.linspace(0.05, top, 400)]
    assert np.all(np.diff(vals) < 0)


@pytest.mark.parametrize("c", [-1.0, -0.25, -4.0])
@pytest.mark.parametrize("p", [1.5, 2.0, 3.0])
def test_ball_bound_hyperbolic_limit(c, p):
    k = math.sqrt(-c)
    far = space_form_ball_bound(SpaceForm(3, c), p, 50.0 / k)
    assert far == pytest.approx(hyperbolic_fundamental_tone_bound(3, k, p), abs=1e-9)


@pytest.mark.parametrize("p", [1.5, 2.0, 4.0])
def test_curvature_continuity(p):
    R = 0.8
    flat = space_form_ball_bound(SpaceForm(3, 0.0), p, R)
    for c in (1e-8, -1e-8):
        assert abs(space_form_ball_bound(SpaceForm(3, c), p, R) - flat) < 1e-6


@pytest.mark.parametrize(
    "n, kappa, p, expected",
    [(3, 1.0, 2.0, 1.0), (2, 1.0, 2.0, 0.25), (4, 2.0, 3.0, 8.0)],
)
def test_hyperbolic_examples(n, kappa, p, expected):
    assert hyperbolic_fundamental_tone_bound(n, kappa, p) == pytest.approx(expected, rel=1e-14)


def test_hyperbolic_rejects_invalid():
    with pytest.raises(ValueError):
        hyperbolic_fundamental_tone_bound(1, 1.0, 2.0)
    with pytest.raises(ValueError):
        hyperbolic_fundamental_tone_bound(3, 0.0, 2.0)
    with pytest.raises(ValueError):
        hyperbolic_fundamental_tone_bound(3, 1.0, 1.0)


@pytest.mark.parametrize("n", [2, 3, 7])
@pytest.mark.parametrize("kappa", [0.5, 1.0, 2.0])
def test_p2_reduces_to_quarter_square(n, kappa):
    assert hyperbolic_fundamental_tone_bound(n, kappa, 2.0) == pytest.approx((n - 1) ** 2 * kappa**2 / 4)
    R = 1.3
    assert space_form_ball_bound(SpaceForm(n, 0.0), 2.0, R) == pytest.approx(((n - 1) / (2 * R)) ** 2)
    assert warped_bound(WarpedProduct(n, LinearProfile(kappa)), 2.0) == pytest.approx(
        ((n - 1) * kappa / 2) ** 2
    )


@pytest.mark.parametrize(
    "n, kappa, p, expected",
    [(3, 2.0, 2.0, 4.0), (3, 1.0, 2.0, 1.0), (2, 3.0, 3.0, 1.0)],
)
def test_warped_examples(n, kappa, p, expected):
    assert warped_bound(WarpedProduct(n, LinearProfile(kappa)), p) == pytest.approx(expected, rel=1e-14)


def test_warped_uses_certified_floor():
    geom = WarpedProduct(3, CoshProfile(2.0, 1.0))
    assert warped_bound(geom, 2.0) == pytest.approx(1.0)


def test_warped_rejects_zero_kappa():
    with pytest.raises(ValueError):
        warped_bound(WarpedProduct(3, LinearProfile(0.0)), 2.0)


@pytest.mark.parametrize(
    "b, alpha, p, expected",
    [(2.0, 0.5, 2.0, 0.5625), (2.0, 0.0, 2.0, 1.0), (3.0, 1.0, 3.0, 8.0 / 27.0)],
)
def test_submersion_examples(b, alpha, p, expected):
    assert submersion_bound(SubmersionData(b, alpha), p) == pytest.approx(expected, rel=1e-14)


@pytest.mark.parametrize("b", [0.3, 2.0, 5.0])
@pytest.mark.parametrize("p", [1.2, 2.0, 4.5])
def test_submersion_without_fibre_curvature_is_theorem1(b, p):
    assert submersion_bound(SubmersionData(b, 0.0), p) == pytest.approx(
        theorem1_bound(TestFunctionData(1.0, b), p), rel=1e-14
    )


def test_submersion_rejects_degenerate():
    with pytest.raises(ValueError):
        SubmersionData(1.0, 1.0)
    with pytest.raises(ValueError):
        SubmersionData(1.0, -0.1)
    with pytest.raises(ValueError):
        SubmersionData(0.0, 0.0)


def test_submersion_decreases_with_alpha():
    vals = [submersion_bound(SubmersionData(2.0, a), 2.5) for a in np.linspace(0, 1.9, 20)]
    assert np.all(np.diff(vals) < 0)
