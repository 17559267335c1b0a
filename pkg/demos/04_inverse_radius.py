"""
Which ball has a given eigenvalue?
==================================

In a space form with c <= 0, lambda_{1,p}(B_R) falls strictly from +inf
towards ((n-1) sqrt(-c) / p)^p as R grows, so each target above that floor
fixes a unique radius.
"""

import math

from ptone import SpaceForm
from ptone.inverse import InverseQuery, radius_for_eigenvalue

h3 = SpaceForm(3, -1.0)
for lam in (50.0, 5.0, 2.0, 1.2):
    R = radius_for_eigenvalue(InverseQuery(h3, 2.0, lam, tol_R=1e-4))
    print(f"lambda={lam:<5}: R={R:.5f}   exact pi/sqrt(lambda-1) = {math.pi / math.sqrt(lam - 1):.5f}")

###############################################################################
# Targets at or below the floor have no answer.
try:
    InverseQuery(h3, 2.0, 1.0)
except ValueError as exc:
    print(exc)

###############################################################################
# The same works for other exponents and flat space, where the floor is 0.
for p in (1.5, 3.0):
    q = InverseQuery(SpaceForm(2, 0.0), p, 10.0)
    print(f"disc, p={p}: R={radius_for_eigenvalue(q):.4f}")
