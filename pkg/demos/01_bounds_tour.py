"""
Closed-form lower bounds
========================

Every bound in ``ptone.bounds`` comes from one comparison function: if
``|grad f| <= a`` and ``Delta_p f >= b`` on a domain, the first Dirichlet
eigenvalue of the p-Laplacian there is at least ``b^p / (p^p a^(p(p-1)))``.
"""

import math

from ptone import SpaceForm, TestFunctionData, theorem1_bound
from ptone.bounds import (
    SubmersionData,
    hyperbolic_fundamental_tone_bound,
    space_form_ball_bound,
    submersion_bound,
)

# The raw estimate is invariant under f -> s f, since a scales like s and
# b like s^(p-1).
p = 3.0
print(theorem1_bound(TestFunctionData(a=1.0, b=2.0), p))
print(theorem1_bound(TestFunctionData(a=5.0, b=2.0 * 5.0 ** (p - 1)), p))

###############################################################################
# Geodesic balls in H^3. The distance function has unit gradient and
# Laplacian at least 2 coth(R) on B_R, so the bound decreases towards
# ((n-1)/p)^p as the ball grows.
h3 = SpaceForm(3, -1.0)
for R in (0.5, 1, 2, 4, 8, 16):
    print(f"R={R:<4} p=2: {space_form_ball_bound(h3, 2, R):.8f}")
print("limit:", hyperbolic_fundamental_tone_bound(3, 1.0, 2.0))

###############################################################################
# On the sphere the same argument works only while cot(R) > 0, i.e. for
# balls inside a hemisphere.
s3 = SpaceForm(3, 1.0)
for R in (0.5, 1.0, 1.5, 1.57):
    print(f"S^3, R={R}: {space_form_ball_bound(s3, 2, R):.3e}")
try:
    space_form_ball_bound(s3, 2, math.pi / 2)
except ValueError as exc:
    print("rejected:", exc)

###############################################################################
# A submersion with base floor b = 2 and fibres of mean curvature at most
# 0.5 keeps a bound of ((b - alpha)/p)^p.
for p in (1.5, 2, 3):
    print(p, submersion_bound(SubmersionData(b=2.0, alpha=0.5), p))
