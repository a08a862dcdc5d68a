"""
How well does the approximate momentum satisfy the algebra?
===========================================================

The first-order representation of P obeys the deformed commutator only
up to higher-order terms.  We measure the residual on Gaussians and run
the Heisenberg check.
"""

import numpy as np

from tanhgup import Grid, GridState, TanhAlgebra, commutator_residual, verify_heisenberg

grid = Grid(15, 3001)
psi = GridState.gaussian(grid, 1.0)

# %%
# Residual against the deformation strength
# -----------------------------------------
prev = None
for b in (0.02, 0.01, 0.005, 0.0025):
    r = commutator_residual(1, b, b, grid, psi)
    note = f"  ratio {r / prev:.3f}" if prev else ""
    print(f"beta = delta = {b:<7g} residual = {r:.4e}{note}")
    prev = r
# The ratios sit below 1/4: at these strengths the beta P^2 term adds a
# cubic piece that dominates the quadratic one.

# %%
# Heisenberg inequality for a family of Gaussians
# -----------------------------------------------
alg = TanhAlgebra(1, 0.01, 0.01)
for sigma in np.arange(0.5, 2.01, 0.25):
    rep = verify_heisenberg(GridState.gaussian(grid, sigma), alg, grid)
    print(
        f"sigma={sigma:4.2f}  dtanh={rep.dtanh:.4f}  dP={rep.dP:10.4g}  "
        f"lhs-rhs={rep.dtanh * rep.dP - rep.rhs_half_mean:+.3e}  window={rep.in_momentum_window}"
    )
# Wide states reach the region where cosh^2 x is large and the first-order
# representation is no longer meaningful.
