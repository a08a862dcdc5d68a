"""
Uncertainty windows of deformed algebras
========================================

For ``[tanh aX, P] = i(a sech^2 aX + beta P^2 + delta)`` the Robertson
inequality, combined with ``Delta tanh <= 1``, confines the momentum
spread to a window and forces a minimal coordinate spread.  Here we
tabulate both and see where the window closes.
"""

import warnings

import numpy as np

from tanhgup import (
    DegenerateAlgebraWarning,
    QuarticAlgebra,
    TanhAlgebra,
    check_consistency,
    kempf_minimal_length,
    quartic_window,
    tanh_sharp_momentum_window,
    tanh_window,
)

# %%
# The default parameters
# ----------------------
alg = TanhAlgebra(alpha=1.0, beta=0.01, delta=0.01)
w = tanh_window(alg)
print(f"dP in [{w.dp_min:g}, {w.dp_max:g}],  <P^2> in [{w.p2_min:g}, {w.p2_max:g}]")
print(f"Delta tanh >= {w.dtanh_min:g},  Delta X >= {w.dx_min:g}")

# The quadratic inequality beta t^2 - 2t + delta <= 0 gives a slightly
# narrower window, which exists only while beta*delta <= 1.
print("sharp window:", tanh_sharp_momentum_window(alg))

# %%
# Closing the window
# ------------------
# The product beta*delta controls everything.  At 4 the two ends meet.
# (exactly 4 is consistent but degenerate, and warns)
with warnings.catch_warnings():
    warnings.simplefilter("ignore", DegenerateAlgebraWarning)
    for prod in (0.5, 1.0, 2.0, 3.5, 4.0, 4.5):
        a = TanhAlgebra(1.0, 1.0, prod)
        rep = check_consistency(a)
        w = tanh_window(a) if rep.consistent else None
        width = w.dp_max - w.dp_min if w else np.nan
        print(f"beta*delta = {prod:3.1f}  consistent = {rep.consistent!s:5}  width = {width:.3f}")

# %%
# Quartic variant and the Kempf minimal length
# --------------------------------------------
q = quartic_window(QuarticAlgebra(alpha=1.0, beta=1.0))
print(f"quartic: <P^2> <= {q.p2_max:g}, dP^2 >= {q.dp2_min:.4f}, dX^2 >= {q.dx2_min:g}")
print("Kempf minimal length at beta = 0.01:", kempf_minimal_length(0.01))
