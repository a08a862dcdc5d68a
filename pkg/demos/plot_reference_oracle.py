"""
Finite-difference reference spectrum
====================================

An independent check on the analytic levels ``-(5 - n)^2``: a 3-point
discretization diagonalized with a tridiagonal eigensolver.  Halving the
spacing should cut the error by four.
"""

import numpy as np

from tanhgup import Grid, solve_reference

exact = -np.array([(5 - n) ** 2 for n in range(5)], dtype=float)
prev = None
for points in (2001, 4001, 8001):
    grid = Grid(20, points)
    levels = np.array([e for e, _ in solve_reference(1, 5, grid)]) - 25
    err = np.max(np.abs(levels - exact))
    note = f"  ratio {prev / err:.3f}" if prev else ""
    print(f"h = {grid.spacing:.4f}  max error = {err:.3e}{note}")
    prev = err

# %%
# Parity of the states
# --------------------
for n, (_e, state) in enumerate(solve_reference(1, 5, Grid(20, 4001))):
    mirror = state.values[::-1]
    print(n, "even" if np.allclose(state.values, mirror, atol=1e-8) else "odd")
