import math

import pytest

from ptone.eigensolver import solve_ball
from ptone.geometry import DomainError, SpaceForm
from ptone.inverse import InverseQuery, eigenvalue_of_radius, radius_for_eigenvalue
from ptone.reference import bessel_first_zero

H3 = SpaceForm(3, -1.0)


@pytest.mark.parametrize(
    "geom, lam, expected, tol",
    [
        (H3, 5.0, math.pi / 2, 1e-2),  # 1 + pi^2/R^2 = 5
        (H3, 2.0, math.pi, 2e-2),  # 1 + pi^2/R^2 = 2
        (SpaceForm(2, 0.0), 5.783186, 1.0, 1e-2),  # (j01/R)^2
    ],
)
def test_inverse_examples(geom, lam, expected, tol):
    assert radius_for_eigenvalue(InverseQuery(geom, 2.0, lam)) == pytest.approx(expected, abs=tol)


def test_bessel_radius_oracle():
    j = bessel_first_zero(0.0)
    assert (j / 1.0) ** 2 == pytest.approx(5.783186, abs=1e-6)


@pytest.mark.parametrize("p, lam", [(2.0, 5.0), (3.0, 4.0), (1.5, 3.0)])
def test_round_trip(p, lam):
    q = InverseQuery(H3, p, lam)
    R = radius_for_eigenvalue(q)
    assert abs(solve_ball(H3, p, R).lambda_hat - lam) / lam < 0.02


def test_small_radius_bracket_contracts():
    q = InverseQuery(SpaceForm(3, 0.0), 2.0, 400.0)  # R = pi/20
    assert radius_for_eigenvalue(q) == pytest.approx(math.pi / 20, abs=2e-3)


def test_answer_monotone_in_target():
    radii = [radius_for_eigenvalue(InverseQuery(H3, 2.5, lam)) for lam in (1.2, 2.0, 4.0, 9.0)]
    assert all(a > b for a, b in zip(radii, radii[1:]))


def test_euclidean_scaling_law():
    g = SpaceForm(3, 0.0)
    products = [radius_for_eigenvalue(InverseQuery(g, 2.0, lam, tol_R=1e-4)) * math.sqrt(lam) for lam in (2.0, 5.0, 20.0)]
    assert (max(products) - min(products)) / min(products) < 0.01
    assert products[0] == pytest.approx(math.pi, rel=5e-3)


def test_eigenvalue_of_radius_uses_query_grid():
    q = InverseQuery(H3, 2.0, 5.0, grid_m=256)
    assert eigenvalue_of_radius(q, 2.0) == solve_ball(H3, 2.0, 2.0, 256).lambda_hat


@pytest.mark.parametrize("lam", [1.0, 0.5])
def test_rejects_target_at_or_below_floor(lam):
    with pytest.raises(DomainError):
        InverseQuery(H3, 2.0, lam)


def test_rejects_positive_curvature_and_bad_values():
    with pytest.raises(DomainError):
        InverseQuery(SpaceForm(3, 1.0), 2.0, 10.0)
    with pytest.raises(DomainError):
        InverseQuery(SpaceForm(3, 0.0), 2.0, 0.0)
    with pytest.raises(ValueError):
        InverseQuery(H3, 1.0, 5.0)
    with pytest.raises(ValueError):
        InverseQuery(H3, 2.0, 5.0, tol_R=0.0)


def test_floor_values():
    assert InverseQuery(H3, 2.0, 5.0).floor == pytest.approx(1.0)
    assert InverseQuery(SpaceForm(4, -4.0), 3.0, 50.0).floor == pytest.approx(8.0)
    assert InverseQuery(SpaceForm(4, 0.0), 3.0, 50.0).floor == 0.0


@pytest.mark.filterwarnings("ignore::RuntimeWarning")
def test_bracket_failure_near_floor():
    # the discrete L(R) stays above a target this close to the floor within R <= 1e6
    q = InverseQuery(H3, 2.0, 1.0 + 1e-14, grid_m=64)
    with pytest.raises(RuntimeError):
        radius_for_eigenvalue(q)
