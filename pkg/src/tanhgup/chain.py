"""Shape-invariance ladder for the deformed Poschl-Teller Hamiltonian.

With A_n = i xi_n P + eta_n tanh X (alpha fixed to 1) the partner
Hamiltonians are

    H_n^- = (xi_n^2 - xi_n eta_n beta) P^2 - (eta_n^2 + xi_n eta_n) / cosh^2 X
            + eta_n^2 - xi_n eta_n delta
    H_n^+ = (xi_n^2 + xi_n eta_n beta) P^2 - (eta_n^2 - xi_n eta_n) / cosh^2 X
            + eta_n^2 + xi_n eta_n delta

and the chain H_{n-1}^+ = H_n^- + eps_n fixes (xi_n, eta_n, eps_n) by a
rotation of (xi, eta) through the angle theta = arctan(sqrt(beta)).
Everything here is scalar arithmetic on Python floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal

from .errors import ChainTerminated, InconsistentAlgebra

__all__ = [
    "ChainParams",
    "ChainStep",
    "LadderChain",
    "Level",
    "SpectrumResult",
    "PartnerCoeffs",
    "match_initial_params",
    "ladder_step",
    "eta_closed_form",
    "compute_n_max",
    "build_chain",
    "spectrum",
    "linear_spectrum",
    "linear_level",
    "partner_coeffs",
]

# relative gap below which the arctan ratio is treated as an exact integer
_TIE_TOL = 1e-12
# closed-form vs recursion agreement asserted while building a chain
_CLOSED_FORM_RTOL = 1e-10


@dataclass(frozen=True)
class ChainParams:
    xi: float
    eta: float
    n: int = 0


@dataclass(frozen=True)
class ChainStep:
    n: int
    xi: float
    eta: float
    eps: float


@dataclass(frozen=True)
class LadderChain:
    xi0: float
    eta0: float
    beta: float
    delta: float
    theta: float
    n_max: int
    steps: tuple[ChainStep, ...]

    @property
    def etas(self) -> list[float]:
        return [s.eta for s in self.steps]

    @property
    def eps(self) -> list[float]:
        return [s.eps for s in self.steps]


@dataclass(frozen=True)
class Level:
    n: int
    e_chain: float
    e_physical: float


@dataclass(frozen=True)
class SpectrumResult:
    v0: float
    beta: float
    delta: float
    xi0: float
    eta0: float
    constant_shift: float
    n_max: int
    levels: tuple[Level, ...] = field(default_factory=tuple)

    @property
    def e_chain(self) -> list[float]:
        return [lv.e_chain for lv in self.levels]

    @property
    def e_physical(self) -> list[float]:
        return [lv.e_physical for lv in self.levels]


@dataclass(frozen=True)
class PartnerCoeffs:
    """H = kinetic * P^2 - depth / cosh^2 X + constant."""

    kinetic: float
    depth: float
    constant: float


def _check_deformation(beta: float, delta: float) -> None:
    if beta < 0 or delta < 0:
        raise ValueError(f"beta and delta must be nonnegative, got {beta}, {delta}")
    if beta * delta > 4.0:
        raise InconsistentAlgebra(f"beta*delta = {beta * delta:g} > 4")


def match_initial_params(v0: float, beta: float, delta: float) -> tuple[float, float]:
    """(xi0, eta0) for which H_0^- equals P^2 - v0/cosh^2 X up to a constant.

    Imposes xi0^2 - xi0 eta0 beta = 1 and eta0^2 + xi0 eta0 = v0.  With
    t = xi0 eta0 this is (1 + beta) t^2 + (1 - beta v0) t - v0 = 0, whose
    positive root lies in (0, v0).
    """
    if not v0 > 0:
        raise ValueError(f"v0 must be positive, got {v0}")
    _check_deformation(beta, delta)
    a = 1.0 + beta
    b = 1.0 - beta * v0
    disc = math.sqrt(b * b + 4.0 * a * v0)
    # positive root, written to avoid cancellation for either sign of b
    t = (-b + disc) / (2.0 * a) if b <= 0 else 2.0 * v0 / (b + disc)
    eta0 = math.sqrt(v0 - t)
    return t / eta0, eta0


def ladder_step(p: ChainParams, beta: float, delta: float) -> tuple[ChainParams, float]:
    """One step of the chain: returns (xi_{n+1}, eta_{n+1}) and eps_{n+1}."""
    if not p.eta > 0:
        raise ChainTerminated(f"eta_{p.n} = {p.eta:g} <= 0; chain ends at n = {p.n}")
    return _step_unchecked(p, beta, delta)


def eta_closed_form(n: int, xi0: float, eta0: float, beta: float) -> float:
    """eta_n = eta0 cos(n theta) - xi0 sin(n theta) / sqrt(beta), tan(theta) = sqrt(beta).

    The beta -> 0 limit eta0 - n xi0 is used for beta == 0.
    """
    if beta == 0:
        return eta0 - n * xi0
    sb = math.sqrt(beta)
    theta = math.atan(sb)
    return eta0 * math.cos(n * theta) - xi0 * math.sin(n * theta) / sb


def _strict_floor(r: float) -> int:
    # greatest integer strictly less than r
    return math.ceil(r) - 1


def compute_n_max(xi0: float, eta0: float, beta: float) -> int:
    """Largest n with eta_n > 0.

    Computed as the greatest integer strictly below
    arctan(eta0 sqrt(beta) / xi0) / theta (eta0 / xi0 when beta == 0).  When
    that ratio is within 1e-12 of an integer m the sign of eta_m from the
    recursion decides.
    """
    if not (xi0 > 0 and eta0 > 0):
        raise ValueError(f"xi0 and eta0 must be positive, got {xi0}, {eta0}")
    if beta == 0:
        ratio = eta0 / xi0
    else:
        sb = math.sqrt(beta)
        ratio = math.atan(eta0 * sb / xi0) / math.atan(sb)
    m = round(ratio)
    if m >= 1 and abs(ratio - m) <= _TIE_TOL * max(1.0, ratio):
        p = ChainParams(xi0, eta0)
        while p.n < m:
            q, _eps = _step_unchecked(p, beta, 0.0)
            if q.eta <= 0:
                break
            p = q
        return p.n
    return _strict_floor(ratio)


def build_chain(
    xi0: float, eta0: float, beta: float, delta: float, *, continue_past_n_max: int = 0
) -> LadderChain:
    """Iterate the ladder from (xi0, eta0) through n_max.

    Each recursed eta_n is checked against the closed form.  The
    ``continue_past_n_max`` debug option appends that many formal steps
    beyond n_max; these are never physical levels.
    """
    n_max = compute_n_max(xi0, eta0, beta)
    theta = math.atan(math.sqrt(beta))
    p = ChainParams(xi0, eta0)
    steps = [ChainStep(0, xi0, eta0, 0.0)]
    for _ in range(n_max + continue_past_n_max):
        p, eps = _step_unchecked(p, beta, delta)
        steps.append(ChainStep(p.n, p.xi, p.eta, eps))
    for s in steps:
        closed = eta_closed_form(s.n, xi0, eta0, beta)
        scale = max(1.0, abs(s.eta))
        if abs(closed - s.eta) > _CLOSED_FORM_RTOL * scale:
            raise AssertionError(
                f"recursion eta_{s.n} = {s.eta!r} disagrees with closed form {closed!r}"
            )
    return LadderChain(xi0, eta0, beta, delta, theta, n_max, tuple(steps))


def _step_unchecked(p: ChainParams, beta: float, delta: float) -> tuple[ChainParams, float]:
    r = math.sqrt(1.0 + beta)
    xi = (p.xi + beta * p.eta) / r
    eta = (p.eta - p.xi) / r
    return ChainParams(xi, eta, p.n + 1), (p.eta**2 - eta**2) * (1.0 + delta)


def spectrum(v0: float, beta: float, delta: float) -> SpectrumResult:
    """Bound spectrum of P^2 - v0 / cosh^2 X in the deformed algebra.

    e_chain is the eigenvalue of H_0^-; e_physical subtracts the constant
    eta0^2 - xi0 eta0 delta carried by H_0^-.
    """
    xi0, eta0 = match_initial_params(v0, beta, delta)
    chain = build_chain(xi0, eta0, beta, delta)
    shift = eta0**2 - xi0 * eta0 * delta
    levels = []
    for s in chain.steps:
        e = (eta0**2 - s.eta**2) * (1.0 + delta)
        levels.append(Level(s.n, e, e - shift))
    return SpectrumResult(
        v0, beta, delta, xi0, eta0, shift, chain.n_max, tuple(levels)
    )


def linear_level(n: int, xi0: float, eta0: float, beta: float, delta: float) -> float:
    """First-order (in beta, delta) expansion of the chain eigenvalue E_n."""
    u = eta0 - xi0 * n
    return (1.0 + delta) * (eta0**2 - u**2) - beta / 3.0 * u * (
        xi0 * n**3 - 3.0 * eta0 * n**2 + 2.0 * xi0 * n
    )


def linear_spectrum(
    xi0: float, eta0: float, beta: float, delta: float, n_max: int
) -> list[float]:
    """First-order energies for n = 0..n_max, same (xi0, eta0) as the exact chain."""
    return [linear_level(n, xi0, eta0, beta, delta) for n in range(n_max + 1)]


def partner_coeffs(
    p: ChainParams, beta: float, delta: float, which: Literal["minus", "plus"] = "minus"
) -> PartnerCoeffs:
    xi, eta = p.xi, p.eta
    if which == "minus":
        return PartnerCoeffs(xi**2 - xi * eta * beta, eta**2 + xi * eta, eta**2 - xi * eta * delta)
    if which == "plus":
        return PartnerCoeffs(xi**2 + xi * eta * beta, eta**2 - xi * eta, eta**2 + xi * eta * delta)
    raise ValueError(f"which must be 'minus' or 'plus', got {which!r}")
