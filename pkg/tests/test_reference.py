import math

import pytest
from scipy.optimize import brentq
from scipy.special import jn_zeros, jv

from ptone.geometry import SpaceForm
from ptone.reference import (
    OracleValue,
    ball_eigenvalue_oracle,
    bessel_first_zero,
    h3_ball_eigenvalue,
    pi_p,
    shoot_radial,
    shoot_value,
    shooting_eigenvalue,
    slab_eigenvalue,
)


def scipy_first_zero(nu):
    # J_nu is positive on (0, j_{nu,1}) and j_{nu,1} < nu + 4.5 for nu <= 5
    return brentq(lambda x: jv(nu, x), max(nu, 0.5), nu + 4.5, xtol=1e-15)


def test_bessel_half_order_is_pi():
    assert bessel_first_zero(0.5) == pytest.approx(math.pi, abs=1e-9)


@pytest.mark.parametrize("nu, expected", [(0, 2.404826), (1, 3.831706)])
def test_bessel_examples(nu, expected):
    assert bessel_first_zero(nu) == pytest.approx(expected, abs=1e-6)
    assert bessel_first_zero(nu) == pytest.approx(jn_zeros(nu, 1)[0], abs=1e-9)


@pytest.mark.parametrize("nu", [0.0, 0.25, 0.5, 1.0, 1.5, 2.0, 3.3, 4.0, 5.0])
def test_bessel_against_scipy(nu):
    assert bessel_first_zero(nu) == pytest.approx(scipy_first_zero(nu), abs=1e-9)


@pytest.mark.parametrize("nu", [-0.1, 5.5])
def test_bessel_range(nu):
    with pytest.raises(ValueError):
        bessel_first_zero(nu)


@pytest.mark.parametrize("p, expected", [(2.0, math.pi), (3.0, 2.418400), (1.5, 4.836799)])
def test_pi_p_examples(p, expected):
    assert pi_p(p) == pytest.approx(expected, abs=1e-6)


@pytest.mark.parametrize("p", [1.01, 1.5, 2.0, 2.7, 4.0, 10.0])
def test_pi_p_identity(p):
    assert pi_p(p) * p * math.sin(math.pi / p) == pytest.approx(2 * math.pi, rel=1e-12)


def test_pi_p_rejects():
    with pytest.raises(ValueError):
        pi_p(1.0)


def test_slab_eigenvalue_p3():
    assert slab_eigenvalue(3.0, 2.0) == pytest.approx(3.5361, abs=1e-4)


@pytest.mark.parametrize("R, expected", [(math.pi, 2.0), (math.pi / 2, 5.0), (1000.0, 1.0000099)])
def test_h3_examples(R, expected):
    assert h3_ball_eigenvalue(R) == pytest.approx(expected, abs=1e-7)


def test_h3_rejects_nonpositive():
    with pytest.raises(ValueError):
        h3_ball_eigenvalue(0.0)


def test_shoot_at_euclidean_root():
    assert abs(shoot_value(SpaceForm(3, 0.0), 1.0, math.pi**2)) < 1e-6


def test_shoot_below_first_root():
    assert shoot_radial(SpaceForm(3, 0.0), 1.0, 5.0) == 1


def test_shoot_above_first_root():
    assert shoot_radial(SpaceForm(3, 0.0), 1.0, 12.0) == -1


def test_shoot_at_hyperbolic_root():
    assert abs(shoot_value(SpaceForm(3, -1.0), 2.0, 1 + math.pi**2 / 4)) < 1e-6


def test_shoot_rejects_bad_input():
    with pytest.raises(ValueError):
        shoot_value(SpaceForm(3, 0.0), 1.0, -1.0)
    with pytest.raises(ValueError):
        shoot_value(SpaceForm(3, 1.0), 4.0, 1.0)


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("R", [1.0, 2.0])
def test_shooting_reproduces_bessel(n, R):
    j = bessel_first_zero(n / 2 - 1)
    assert shooting_eigenvalue(SpaceForm(n, 0.0), R) == pytest.approx((j / R) ** 2, rel=1e-6)


@pytest.mark.parametrize("R", [1.0, 2.0, 4.0])
def test_h3_formula_matches_shooting(R):
    assert h3_ball_eigenvalue(R) == pytest.approx(shooting_eigenvalue(SpaceForm(3, -1.0), R), rel=1e-6)


@pytest.mark.parametrize("R", [0.5, 1.0, 2.0])
def test_s3_closed_form_matches_shooting(R):
    # on S^3 the radial eigenfunction is sin(pi r/R)/sin(r), eigenvalue pi^2/R^2 - 1
    assert shooting_eigenvalue(SpaceForm(3, 1.0), R) == pytest.approx((math.pi / R) ** 2 - 1, rel=1e-6)


def test_oracle_dispatch():
    flat = ball_eigenvalue_oracle(SpaceForm(2, 0.0), 1.0)
    assert isinstance(flat, OracleValue)
    assert flat.method == "bessel-series"
    assert flat.value == pytest.approx(5.7832, abs=1e-4)
    h3 = ball_eigenvalue_oracle(SpaceForm(3, -4.0), 1.0)
    assert h3.method == "h3-closed-form"
    assert h3.value == pytest.approx(shooting_eigenvalue(SpaceForm(3, -4.0), 1.0), rel=1e-6)
    other = ball_eigenvalue_oracle(SpaceForm(4, -1.0), 1.0)
    assert other.method == "radial-shooting"
    for o in (flat, h3, other):
        assert o.certified_digits >= 6
