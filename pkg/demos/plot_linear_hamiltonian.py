"""
First-order Hamiltonian on the grid
===================================

Expectation values of the linearized Hamiltonian in the undeformed
eigenstates reproduce the first-order energies.  The top level behaves
differently: its cosh^2-weighted integrals are sensitive to the box.
"""

from tanhgup import Grid, hlin_expectation_check, nmax_divergence_sweep

rows = hlin_expectation_check(1, 5, 1e-3, 1e-3, Grid(12, 2401))
for r in rows:
    flag = "n_max" if r.is_n_max else ("ok" if r.within else "off")
    print(f"n={r.n}  <H^lin>={r.expectation:.6f}  first order={r.first_order:.6f}  {flag}")

# %%
# Growing the box at n = n_max
# ----------------------------
# For V0 = 30 the top level has eta = 1 and the expectation itself settles,
# while the weighted kinetic piece keeps growing.
sw = nmax_divergence_sweep(1, 5, 1e-3, 1e-3)
print("L:", sw.half_widths)
print("expectation:", [f"{e:.4f}" for e in sw.expectations])
print("int cosh^2 |psi'|^2:", [f"{k:.1f}" for k in sw.weighted_kinetic])

# %%
# A well whose depth is not a triangular number (eta0 = 4.6) shows the
# growth in the expectation value too.
sw = nmax_divergence_sweep(1, 4.6, 1e-3, 1e-3)
print("eta0 = 4.6 expectation:", [f"{e:.4g}" for e in sw.expectations])
