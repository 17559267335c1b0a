import math

import pytest


def taylor_exp(x, terms=60):
    """exp(x) summed term by term; independent of libm."""
    total, term = 1.0, 1.0
    for k in range(1, terms):
        term *= x / k
        total += term
    return total


def taylor_sinh(x, terms=40):
    total, term = x, x
    for k in range(1, terms):
        term *= x * x / ((2 * k) * (2 * k + 1))
        total += term
    return total


def taylor_cosh(x, terms=40):
    total, term = 1.0, 1.0
    for k in range(1, terms):
        term *= x * x / ((2 * k - 1) * (2 * k))
        total += term
    return total


def taylor_sin(x, terms=40):
    total, term = x, x
    for k in range(1, terms):
        term *= -x * x / ((2 * k) * (2 * k + 1))
        total += term
    return total


@pytest.fixture
def series():
    return dict(exp=taylor_exp, sinh=taylor_sinh, cosh=taylor_cosh, sin=taylor_sin)


PI = math.pi
