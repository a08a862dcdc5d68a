"""Uniform 1-D grids, sampled states and banded finite-difference operators.

Boundary convention: homogeneous Dirichlet at the ghost nodes just outside
the grid ends, so every operator is a square matrix of order N acting on
the full node vector.  Momentum is p = -i D with D the antisymmetric
central difference; p^2 is the 3-point Laplacian.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np
import scipy.sparse as sps

__all__ = [
    "Grid",
    "GridState",
    "GridOperator",
    "central_difference",
    "laplacian",
    "diagonal",
    "momentum_primitives",
    "hermitian_to_real",
]


@dataclass(frozen=True)
class Grid:
    """Nodes x_i = -L + i h, i = 0..N-1, with h = 2L / (N - 1).

    N must be odd so that x = 0 is a node.
    """

    half_width: float
    points: int

    def __post_init__(self):
        if not self.half_width > 0:
            raise ValueError(f"half_width must be positive, got {self.half_width}")
        if self.points < 3 or self.points % 2 == 0:
            raise ValueError(f"points must be an odd integer >= 3, got {self.points}")

    @classmethod
    def from_spacing(cls, half_width: float, spacing: float) -> "Grid":
        n = int(round(2.0 * half_width / spacing))
        if n % 2:
            n += 1
        return cls(half_width, n + 1)

    @property
    def spacing(self) -> float:
        return 2.0 * self.half_width / (self.points - 1)

    h = spacing

    @cached_property
    def x(self) -> np.ndarray:
        return np.linspace(-self.half_width, self.half_width, self.points)

    def integrate(self, values) -> float | complex:
        return np.trapezoid(values, self.x)


@dataclass(frozen=True, eq=False)
class GridState:
    """Wavefunction samples on a grid."""

    grid: Grid
    values: np.ndarray

    def __post_init__(self):
        if np.shape(self.values) != (self.grid.points,):
            raise ValueError(
                f"values must have shape ({self.grid.points},), got {np.shape(self.values)}"
            )

    @classmethod
    def gaussian(cls, grid: Grid, sigma: float = 1.0, x0: float = 0.0, k0: float = 0.0):
        """Normalized exp(-(x - x0)^2 / (2 sigma^2) + i k0 x).

        ``sigma`` is the amplitude width; <p^2> = 1 / (2 sigma^2) for k0 = 0.
        """
        x = grid.x
        psi = np.exp(-((x - x0) ** 2) / (2.0 * sigma**2))
        if k0:
            psi = psi * np.exp(1j * k0 * x)
        return cls(grid, psi).normalized()

    @property
    def norm(self) -> float:
        return float(np.sqrt(self.grid.integrate(np.abs(self.values) ** 2)))

    def normalized(self) -> "GridState":
        return GridState(self.grid, self.values / self.norm)

    def inner(self, other: np.ndarray) -> complex:
        """Trapezoid <self | other> for a raw vector ``other``."""
        return complex(self.grid.integrate(np.conj(self.values) * other))

    def mean(self, diag_values: np.ndarray) -> float:
        """<f(x)> for a multiplication operator given by its node values."""
        return float(self.grid.integrate(np.abs(self.values) ** 2 * diag_values).real)


@dataclass(frozen=True, eq=False)
class GridOperator:
    """Sparse operator ``phase * matrix`` with a real banded ``matrix``.

    Hamiltonians carry ``phase = 1`` and a symmetric matrix; momentum-like
    operators carry ``phase = -1j`` and an antisymmetric matrix.
    """

    matrix: sps.csr_matrix
    phase: complex = 1.0

    @property
    def order(self) -> int:
        return self.matrix.shape[0]

    @property
    def bandwidth(self) -> int:
        coo = self.matrix.tocoo()
        if coo.nnz == 0:
            return 0
        return int(np.max(np.abs(coo.row - coo.col)))

    def apply(self, values: np.ndarray) -> np.ndarray:
        out = self.matrix @ values
        return out if self.phase == 1.0 else self.phase * out

    __matmul__ = apply

    def asymmetry(self) -> float:
        """max |M - M^T| / max |M| for symmetric operators, max |M + M^T| / max |M| otherwise."""
        m = self.matrix
        sign = 1.0 if self.phase == 1.0 else -1.0
        scale = abs(m).max()
        if scale == 0:
            return 0.0
        return float(abs(m - sign * m.T).max() / scale)

    def expectation(self, state: GridState) -> float:
        """Real part of the trapezoid expectation <psi|O|psi>."""
        return state.inner(self.apply(state.values)).real


def central_difference(grid: Grid) -> sps.csr_matrix:
    """Antisymmetric D with (D f)_i = (f_{i+1} - f_{i-1}) / (2h)."""
    n, h = grid.points, grid.spacing
    off = np.full(n - 1, 1.0 / (2.0 * h))
    return sps.diags([-off, off], [-1, 1], format="csr")


def laplacian(grid: Grid) -> sps.csr_matrix:
    """The 3-point -d^2/dx^2, i.e. p^2."""
    n, h = grid.points, grid.spacing
    main = np.full(n, 2.0 / h**2)
    off = np.full(n - 1, -1.0 / h**2)
    return sps.diags([off, main, off], [-1, 0, 1], format="csr")


def diagonal(values: np.ndarray) -> sps.csr_matrix:
    return sps.diags(np.asarray(values), 0, format="csr")


def momentum_primitives(grid: Grid):
    """Complex sparse p, p^2 and p^3.

    p^3 is the symmetrized product (p p^2 + p^2 p) / 2, which keeps it
    Hermitian under the Dirichlet truncation.
    """
    p = (-1j * central_difference(grid)).tocsr()
    p2 = laplacian(grid).astype(complex)
    p3 = (0.5 * (p @ p2 + p2 @ p)).tocsr()
    return p, p2, p3


def hermitian_to_real(m: sps.spmatrix, *, odd: bool, tol: float = 1e-10) -> GridOperator:
    """Convert a Hermitian complex matrix to the real-form :class:`GridOperator`.

    Even operators must be real symmetric; odd ones must be i times a real
    antisymmetric matrix.  Residual imaginary parts and asymmetry above
    ``tol`` (relative to max |entry|) raise; what is left is removed by
    (M +- M^T) / 2.
    """
    m = sps.csr_matrix(m)
    if odd:
        m = (1j * m).tocsr()
    scale = abs(m).max() or 1.0
    imag = abs(m.imag).max() if m.nnz else 0.0
    if imag > tol * scale:
        raise ValueError(f"operator is not of the expected real form: imag/scale = {imag / scale:.3g}")
    r = sps.csr_matrix(m.real)
    sign = -1.0 if odd else 1.0
    asym = abs(r - sign * r.T).max() / scale if r.nnz else 0.0
    if asym > tol:
        raise ValueError(f"assembled operator asymmetry {asym:.3g} exceeds {tol:g}")
    r = (0.5 * (r + sign * r.T)).tocsr()
    r.eliminate_zeros()
    return GridOperator(r, -1j if odd else 1.0)
