"""
Slabs in a warped product
=========================

On ``[t0, t0+L] x N`` with metric ``dt^2 + exp(2 rho(t)) g_0`` the radial
problem has weight ``exp((n-1) rho)``. When ``rho' >= kappa > 0`` the
coordinate t is a comparison function and every such slab has
lambda_{1,p} >= ((n-1) kappa / p)^p.
"""

import math

import numpy as np

from ptone import WarpedProduct, solve_warped, warped_bound
from ptone.geometry import CoshProfile, LinearProfile, SampledProfile

# For rho = kappa t and p = 2 the substitution u = exp(-(n-1) kappa t / 2) v
# gives ((n-1) kappa / 2)^2 + (pi/L)^2 exactly.
geom = WarpedProduct(3, LinearProfile(1.0))
print("bound:", warped_bound(geom, 2.0))
for L in (1, 2, 4, 8):
    lam = solve_warped(geom, 2.0, L).lambda_hat
    print(f"L={L}: {lam:.6f}   exact {1 + (math.pi / L) ** 2:.6f}")

###############################################################################
# rho = t + 0.5 log cosh t has rho' = 1 + 0.5 tanh t, between 0.5 and 1.5
# on the whole line, so the profile reports kappa = 0.5.
geom = WarpedProduct(3, CoshProfile(1.0, 0.5))
print(geom.kappa, [round(solve_warped(geom, 2.0, L).lambda_hat, 4) for L in (1, 4, 16)])

###############################################################################
# Tabulated profiles work too; kappa defaults to the smallest slope between
# samples.
t = np.linspace(0, 6, 61)
geom = WarpedProduct(4, SampledProfile(t, t + 0.3 * np.sin(t)))
print(f"kappa={geom.kappa:.4f}")
for p in (1.5, 2.0, 3.0):
    lam = solve_warped(geom, p, 4.0, t0=1.0).lambda_hat
    print(f"p={p}: bound {warped_bound(geom, p):.4f} <= {lam:.4f}")
