"""
Deformed Poschl-Teller spectrum from shape invariance
=====================================================

The well ``-V0 / cosh^2 x`` with ``V0 = 30`` has five bound levels.  The
deformation shifts them all upwards; the chain of ladder parameters
stops once eta would turn negative.
"""

from tanhgup import build_chain, linear_spectrum, match_initial_params, spectrum
from tanhgup.cli import figure_table

# %%
# Matching the initial parameters
# -------------------------------
xi0, eta0 = match_initial_params(30, 0.01, 0.01)
print(f"xi0 = {xi0:.6f}, eta0 = {eta0:.6f}")

# %%
# The ladder
# ----------
chain = build_chain(xi0, eta0, 0.01, 0.01)
for s in chain.steps:
    print(f"n={s.n}  xi={s.xi:.6f}  eta={s.eta:.6f}  eps={s.eps:.6f}")
print("n_max =", chain.n_max)

# %%
# Exact levels against the first-order formula
# --------------------------------------------
res = spectrum(30, 0.01, 0.01)
lin = linear_spectrum(res.xi0, res.eta0, 0.01, 0.01, res.n_max)
und = spectrum(30, 0, 0)
print(" n   undeformed      exact   first-order(chain frame)")
for lv, u, e1 in zip(res.levels, und.levels, lin):
    print(f"{lv.n:2d} {u.e_physical:11.5f} {lv.e_physical:10.5f} {e1 - res.constant_shift:10.5f}")

# The level diagram as CSV (run ``tanhgup figure -o out`` for the file and
# a matplotlib script).
print(figure_table(30, 0.01, 0.01).to_csv())
