"""Uncertainty windows, shape-invariant spectra and grid cross-checks for the
tanh-deformed Heisenberg algebra."""

__version__ = "0.1.0"

from .bounds import (
    ConsistencyReport,
    DegenerateAlgebraWarning,
    QuarticAlgebra,
    TanhAlgebra,
    UncertaintyWindow,
    check_consistency,
    kempf_minimal_length,
    quartic_window,
    tanh_sharp_momentum_window,
    tanh_window,
)
from .chain import (
    LadderChain,
    SpectrumResult,
    build_chain,
    compute_n_max,
    eta_closed_form,
    ladder_step,
    linear_spectrum,
    match_initial_params,
    partner_coeffs,
    spectrum,
)
from .errors import ChainTerminated, ConvergenceFailure, InconsistentAlgebra, NoRealWindow
from .grid import Grid, GridOperator, GridState

from .oracle import (
    build_hlin,
    commutator_residual,
    deformed_momentum_operator,
    hlin_expectation_check,
    nmax_divergence_sweep,
    solve_reference,
    verify_heisenberg,
)
