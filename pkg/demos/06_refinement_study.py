"""
Grid refinement
===============

Nested grids give nested function spaces, so the discrete minimum can only
go down under refinement. For smooth eigenfunctions the error falls like
h^2.
"""

import math

from ptone.eigensolver import Grid, RadialProblem, SLAB, solve_with_refinement, _ball_problem
from ptone.geometry import SpaceForm

prob = RadialProblem(2.0, 1.0, boundary=SLAB)
results = solve_with_refinement(prob, Grid.uniform(16, 1.0), max_m=2048)
prev = None
for res in results:
    err = res.lambda_hat - math.pi**2
    order = "" if prev is None else f"  order {math.log2(prev / err):.3f}"
    print(f"m={res.grid_m:<5} lambda={res.lambda_hat:.10f}  err={err:.3e}{order}")
    prev = err

###############################################################################
# The same holds for a weighted ball problem and p != 2, with each level
# warm-started from the one before.
prob = _ball_problem(SpaceForm(3, -1.0), 3.0, 2.0)
for res in solve_with_refinement(prob, Grid.uniform(32, 2.0), max_m=1024):
    print(f"m={res.grid_m:<5} lambda={res.lambda_hat:.10f}  iterations={res.iterations}")
