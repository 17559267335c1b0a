"""
Sweeping the exponent
=====================

For p != 2 there is no exact value on a ball, but the closed-form bound
below and the discrete minimum above must bracket the truth. The harness
produces the same certificate rows as ``ptone verify``.
"""

from ptone.harness import parse_scenario, run_scenario, to_csv

text = """
kind = verify
n = 3
c = -1
p = 1.25, 1.5, 2, 3, 4, 6
R = 1, 4
grid = 1024
"""
rows = run_scenario(parse_scenario(text))
print(to_csv(rows))

###############################################################################
# The ratio of the two sides shows where the bound is informative: it is
# loose on small balls and nearly sharp on large ones for p = 2.
for r in rows:
    print(f"p={r.p:<5g} R={r.R:<3g} bound/lambda = {r.lower_bound / r.lambda_hat:.3f}")

###############################################################################
# On an interval with constant weight the exact value for every p is known
# through the p-sine, so the solver itself can be checked for p != 2.
from ptone.eigensolver import solve_slab
from ptone.reference import slab_eigenvalue

for p in (1.5, 2.0, 3.0, 5.0):
    lam = solve_slab(p, 2.0).lambda_hat
    print(f"p={p}: {lam:.6f}  exact {slab_eigenvalue(p, 2.0):.6f}")
