"""Finite-difference cross-checks of the exact and first-order results.

The reference problem is the undeformed Poschl-Teller operator

    H_ref = xi0^2 p^2 - (eta0^2 + xi0 eta0) / cosh^2 x + eta0^2,

diagonalized on a grid.  Its eigenstates feed first-order expectation
values of the linearized Hamiltonian H^lin, which are compared with the
closed-form first-order energies.  The approximate momentum

    P = p + beta ({cosh^2 ax, 4 a^2 p + p^3} / (6 a) - p) + delta {cosh^2 ax, p} / (2 a)

is checked against the algebra through the residual of its commutator.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sps
from scipy.linalg import LinAlgError, eigh_tridiagonal

from .bounds import TanhAlgebra
from .chain import compute_n_max, linear_level
from .errors import ConvergenceFailure
from .grid import (
    Grid,
    GridOperator,
    GridState,
    central_difference,
    diagonal,
    hermitian_to_real,
    momentum_primitives,
)

__all__ = [
    "GridResolutionWarning",
    "ExpectationRow",
    "DivergenceSweep",
    "HeisenbergReport",
    "reference_potential",
    "solve_reference",
    "build_reference",
    "build_hlin",
    "hlin_expectation_check",
    "nmax_divergence_sweep",
    "deformed_momentum_operator",
    "commutator_residual",
    "verify_heisenberg",
]

# cosh^2(25) ~ 1.3e21; beyond this products with cosh^2 lose all precision
MAX_HALF_WIDTH = 25.0
MAX_SPACING = 0.02


class GridResolutionWarning(UserWarning):
    pass


def _anti(a, b):
    return a @ b + b @ a


def _check_grid(grid: Grid) -> None:
    if grid.half_width > MAX_HALF_WIDTH:
        raise ValueError(f"half_width {grid.half_width} > {MAX_HALF_WIDTH}: cosh^2 overflows")
    if grid.spacing > MAX_SPACING:
        warnings.warn(
            f"grid spacing {grid.spacing:.4g} > {MAX_SPACING}; the well is under-resolved",
            GridResolutionWarning,
            stacklevel=3,
        )


def reference_potential(xi0: float, eta0: float, grid: Grid) -> np.ndarray:
    return -(eta0**2 + xi0 * eta0) / np.cosh(grid.x) ** 2 + eta0**2


def _fix_sign(v: np.ndarray) -> np.ndarray:
    # first sample above 1e-3 of the peak is made positive
    i = int(np.argmax(np.abs(v) > 1e-3 * np.abs(v).max()))
    return -v if v[i] < 0 else v


def solve_reference(xi0: float, eta0: float, grid: Grid) -> list[tuple[float, GridState]]:
    """Bound eigenpairs (eigenvalue < eta0^2) of the 3-point H_ref.

    Uses LAPACK bisection (stebz) plus inverse iteration (stein) on the
    tridiagonal matrix.  Eigenvalues ascend and are in the H_0^- frame, so
    the ground state sits near 0; subtract eta0^2 for the physical
    ``p^2 - V0 / cosh^2 x`` spectrum.  States are trapezoid-normalized.
    """
    _check_grid(grid)
    h = grid.spacing
    main = 2.0 * xi0**2 / h**2 + reference_potential(xi0, eta0, grid)
    off = np.full(grid.points - 1, -(xi0**2) / h**2)
    try:
        w, v = eigh_tridiagonal(
            main, off, select="v", select_range=(-np.inf, eta0**2), lapack_driver="stebz"
        )
    except LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc
    order = np.argsort(w)
    pairs = []
    for k in order:
        state = GridState(grid, _fix_sign(v[:, k])).normalized()
        pairs.append((float(w[k]), state))
    return pairs


def build_reference(xi0: float, eta0: float, grid: Grid) -> GridOperator:
    """H_ref as a sparse symmetric operator (same matrix :func:`solve_reference` diagonalizes)."""
    return build_hlin(xi0, eta0, 0.0, 0.0, grid)


def build_hlin(xi0: float, eta0: float, beta: float, delta: float, grid: Grid) -> GridOperator:
    """First-order Hamiltonian H^lin assembled from p, p^2, p^3 and diagonal factors.

        H^lin = xi0^2 p^2 - (eta0^2 + xi0 eta0) sech^2 x + eta0^2
                + delta (xi0^2 {p, {p, cosh^2 x} / 2} - xi0 eta0)
                + beta (xi0^2 {p, {cosh^2 x, 4 p + p^3} / 6} - (2 xi0^2 + xi0 eta0) p^2)
    """
    _check_grid(grid)
    p, p2, p3 = momentum_primitives(grid)
    c = diagonal(np.cosh(grid.x) ** 2)
    one = sps.identity(grid.points, format="csr")
    h = xi0**2 * p2 + diagonal(reference_potential(xi0, eta0, grid))
    if delta:
        h = h + delta * (xi0**2 * _anti(p, 0.5 * _anti(p, c)) - xi0 * eta0 * one)
    if beta:
        h = h + beta * (
            xi0**2 * _anti(p, _anti(c, 4.0 * p + p3) / 6.0) - (2.0 * xi0**2 + xi0 * eta0) * p2
        )
    return hermitian_to_real(h, odd=False)


@dataclass(frozen=True)
class ExpectationRow:
    n: int
    expectation: float
    first_order: float
    abs_diff: float
    tolerance: float
    is_n_max: bool

    @property
    def within(self) -> bool:
        return self.abs_diff <= self.tolerance


def _row_tolerance(e: float) -> float:
    return max(1e-3, 1e-2 * abs(e))


def hlin_expectation_check(
    xi0: float, eta0: float, beta: float, delta: float, grid: Grid
) -> list[ExpectationRow]:
    """<psi_n|H^lin|psi_n> for every reference bound state vs the first-order energy.

    Tolerance per row is max(1e-3, 1e-2 |E_n|).  The n = n_max row is
    marked; its agreement is not expected.
    """
    hlin = build_hlin(xi0, eta0, beta, delta, grid)
    n_max = compute_n_max(xi0, eta0, 0.0)
    rows = []
    for n, (_w, state) in enumerate(solve_reference(xi0, eta0, grid)):
        e = hlin.expectation(state)
        ref = linear_level(n, xi0, eta0, beta, delta)
        rows.append(ExpectationRow(n, e, ref, abs(e - ref), _row_tolerance(ref), n == n_max))
    return rows


def _relative_spread(values) -> float:
    v = np.asarray(values, dtype=float)
    return float((v.max() - v.min()) / np.abs(v).max())


@dataclass(frozen=True)
class DivergenceSweep:
    """Behaviour of the n-th level integrals as the box half-width grows.

    ``expectations`` holds <psi_n|H^lin|psi_n>; ``weighted_kinetic`` holds
    the integral of cosh^2 x |psi_n'|^2, one of the pieces of the
    cosh^2-dressed kinetic terms.
    """

    n: int
    half_widths: tuple[float, ...]
    expectations: tuple[float, ...]
    weighted_kinetic: tuple[float, ...]

    @property
    def expectation_increasing(self) -> bool:
        return bool(np.all(np.diff(self.expectations) > 0))

    @property
    def expectation_spread(self) -> float:
        return _relative_spread(self.expectations)

    @property
    def kinetic_increasing(self) -> bool:
        return bool(np.all(np.diff(self.weighted_kinetic) > 0))

    @property
    def kinetic_spread(self) -> float:
        return _relative_spread(self.weighted_kinetic)

    @property
    def diverges(self) -> bool:
        return self.kinetic_increasing and self.kinetic_spread > 0.1


def nmax_divergence_sweep(
    xi0: float,
    eta0: float,
    beta: float,
    delta: float,
    half_widths=(10.0, 15.0, 20.0),
    spacing: float = 0.01,
    n: int | None = None,
) -> DivergenceSweep:
    """Recompute level ``n`` (default n_max) on boxes of growing half-width at fixed spacing."""
    if n is None:
        n = compute_n_max(xi0, eta0, 0.0)
    expectations, kinetic = [], []
    for half in half_widths:
        grid = Grid.from_spacing(half, spacing)
        pairs = solve_reference(xi0, eta0, grid)
        if n >= len(pairs):
            raise ValueError(f"level {n} is not bound on half-width {half}")
        state = pairs[n][1]
        expectations.append(build_hlin(xi0, eta0, beta, delta, grid).expectation(state))
        dpsi = central_difference(grid) @ state.values
        kinetic.append(float(grid.integrate(np.cosh(grid.x) ** 2 * dpsi**2)))
    return DivergenceSweep(n, tuple(half_widths), tuple(expectations), tuple(kinetic))


def deformed_momentum_operator(alpha: float, beta: float, delta: float, grid: Grid) -> GridOperator:
    """First-order representation of P acting on the grid (phase -1j, antisymmetric matrix)."""
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    p, _p2, p3 = momentum_primitives(grid)
    c = diagonal(np.cosh(alpha * grid.x) ** 2)
    op = p
    if beta:
        op = op + beta * (_anti(c, 4.0 * alpha**2 * p + p3) / (6.0 * alpha) - p)
    if delta:
        op = op + delta / (2.0 * alpha) * _anti(c, p)
    return hermitian_to_real(op, odd=True)


def commutator_residual(
    alpha: float, beta: float, delta: float, grid: Grid, state: GridState
) -> float:
    """|| ([tanh ax, P] - i (a sech^2 ax + beta P^2 + delta)) psi || / ||psi||."""
    pm = deformed_momentum_operator(alpha, beta, delta, grid)
    psi = state.values
    t = np.tanh(alpha * grid.x)
    s = alpha / np.cosh(alpha * grid.x) ** 2
    p_psi = pm.apply(psi)
    r = t * p_psi - pm.apply(t * psi) - 1j * (s * psi + beta * pm.apply(p_psi) + delta * psi)
    return float(np.sqrt(grid.integrate(np.abs(r) ** 2)) / state.norm)


@dataclass(frozen=True)
class HeisenbergReport:
    dtanh: float
    dP: float
    p2: float
    mean_c: float
    rhs_half_mean: float
    satisfied: bool
    dtanh_bounded: bool
    in_momentum_window: bool


def verify_heisenberg(state: GridState, algebra: TanhAlgebra, grid: Grid) -> HeisenbergReport:
    """Check d tanh(aX) dP >= <C>/2 with C = a sech^2 aX + beta P^2 + delta on ``state``."""
    a, b, d = algebra.alpha, algebra.beta, algebra.delta
    state = state.normalized()
    t = np.tanh(a * grid.x)
    dtanh = float(np.sqrt(max(state.mean(t**2) - state.mean(t) ** 2, 0.0)))
    pm = deformed_momentum_operator(a, b, d, grid)
    p_psi = pm.apply(state.values)
    mean_p = state.inner(p_psi).real
    p2 = float(grid.integrate(np.abs(p_psi) ** 2))
    dp = float(np.sqrt(max(p2 - mean_p**2, 0.0)))
    mean_c = a * state.mean(1.0 / np.cosh(a * grid.x) ** 2) + b * p2 + d
    rhs = 0.5 * mean_c
    return HeisenbergReport(
        dtanh=dtanh,
        dP=dp,
        p2=p2,
        mean_c=mean_c,
        rhs_half_mean=rhs,
        satisfied=dtanh * dp >= rhs,
        dtanh_bounded=dtanh <= 1.0 + 1e-12,
        in_momentum_window=d / 2.0 <= dp <= 2.0 / b,
    )
