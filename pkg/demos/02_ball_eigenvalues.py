"""
Discrete eigenvalues of geodesic balls
======================================

``solve_ball`` minimizes the Rayleigh quotient over piecewise-linear radial
functions. The minimum is an upper bound for the true eigenvalue; for p = 2
we can compare it against exact values.
"""

import math
import time

from ptone import SpaceForm, solve_ball
from ptone.reference import ball_eigenvalue_oracle

cases = [
    (SpaceForm(3, 0.0), 1.0),   # unit ball in R^3: pi^2
    (SpaceForm(2, 0.0), 1.0),   # unit disc: j_{0,1}^2
    (SpaceForm(3, -1.0), 2.0),  # H^3: 1 + pi^2/R^2
    (SpaceForm(4, -1.0), 1.5),  # H^4: no closed form, shooting
    (SpaceForm(3, 1.0), 1.0),   # S^3: pi^2/R^2 - 1
]

for geom, R in cases:
    t = time.perf_counter()
    res = solve_ball(geom, 2.0, R, grid_m=2048)
    dt = time.perf_counter() - t
    ref = ball_eigenvalue_oracle(geom, R)
    print(f"n={geom.n} c={geom.c:+.0f} R={R}: {res.lambda_hat:.8f}  "
          f"oracle {ref.value:.8f} ({ref.method})  "
          f"rel err {(res.lambda_hat - ref.value) / ref.value:.1e}  {dt * 1e3:.0f} ms")

###############################################################################
# The eigenfunction comes back sampled on the grid, nonnegative and
# decreasing. In H^3 it is sin(pi r / R) / sinh r up to scale.
res = solve_ball(SpaceForm(3, -1.0), 2.0, 2.0, grid_m=256)
u = res.eigenfunction / res.eigenfunction[0]
r = res.nodes
for i in range(0, 257, 32):
    exact = 1.0 if r[i] == 0 else math.sin(math.pi * r[i] / 2) / math.sinh(r[i]) / (math.pi / 2)
    print(f"r={r[i]:.3f}  u={u[i]:.6f}  exact={exact:.6f}")
