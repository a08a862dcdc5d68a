"""Closed-form uncertainty windows for the tanh, quartic and Kempf algebras.

Units throughout: hbar = 1, m = 1/2.

The tanh algebra is

    [tanh(alpha X), P] = i (alpha / cosh^2(alpha X) + beta P^2 + delta)

and the quartic one is [X, P] = i (1 + alpha X^4 + beta P^2).  Applying the
Robertson inequality dA dB >= |<[A, B]>| / 2 together with
d tanh(alpha X) <= 1 yields the windows implemented below.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Literal

from .errors import InconsistentAlgebra, NoRealWindow

__all__ = [
    "TanhAlgebra",
    "QuarticAlgebra",
    "UncertaintyWindow",
    "ConsistencyReport",
    "DegenerateAlgebraWarning",
    "check_consistency",
    "tanh_window",
    "tanh_sharp_momentum_window",
    "quartic_window",
    "kempf_minimal_length",
    "kempf_dx_bound",
]

Criterion = Literal["relaxed", "sharp"]


class DegenerateAlgebraWarning(UserWarning):
    """Parameters sit exactly on the consistency boundary; windows collapse to a point."""


@dataclass(frozen=True)
class TanhAlgebra:
    """Parameters of the tanh-deformed algebra.

    ``delta = 0`` is accepted: it is the minimal-length family without a
    lower momentum bound.  Parameters with ``beta * delta > 4`` can be
    constructed so they can be inspected by :func:`check_consistency`, but
    every window function rejects them.
    """

    alpha: float = 1.0
    beta: float = 0.01
    delta: float = 0.01

    def __post_init__(self):
        if not (self.alpha > 0 and math.isfinite(self.alpha)):
            raise ValueError(f"alpha must be positive and finite, got {self.alpha}")
        if not (self.beta > 0 and math.isfinite(self.beta)):
            raise ValueError(f"beta must be positive and finite, got {self.beta}")
        if not (self.delta >= 0 and math.isfinite(self.delta)):
            raise ValueError(f"delta must be nonnegative and finite, got {self.delta}")

    @property
    def product(self) -> float:
        return self.beta * self.delta

    @property
    def consistent(self) -> bool:
        return self.product <= 4.0


@dataclass(frozen=True)
class QuarticAlgebra:
    """Parameters of [X, P] = i (1 + alpha X^4 + beta P^2)."""

    alpha: float = 1.0
    beta: float = 1.0

    def __post_init__(self):
        if not (self.alpha > 0 and math.isfinite(self.alpha)):
            raise ValueError(f"alpha must be positive and finite, got {self.alpha}")
        if not (self.beta > 0 and math.isfinite(self.beta)):
            raise ValueError(f"beta must be positive and finite, got {self.beta}")

    @property
    def product(self) -> float:
        return self.alpha * self.beta**2

    @property
    def consistent(self) -> bool:
        return self.product <= 4.0


@dataclass(frozen=True)
class UncertaintyWindow:
    """Bounds implied by an algebra.

    Fields that do not apply to the source algebra are ``None``: the tanh
    algebra fills ``dp_min .. dx_min``, the quartic one fills ``p2_max``,
    ``dp2_min``, ``x2_max`` and ``dx2_min``.
    """

    algebra: str
    dp_min: float | None = None
    dp_max: float | None = None
    p2_min: float | None = None
    p2_max: float | None = None
    dtanh_min: float | None = None
    dx_min: float | None = None
    dp2_min: float | None = None
    x2_max: float | None = None
    dx2_min: float | None = None

    def as_dict(self) -> dict:
        return {k: v for k, v in self.__dict__.items() if v is not None}


@dataclass(frozen=True)
class ConsistencyReport:
    consistent: bool
    margin: float
    criterion: Criterion
    degenerate: bool = False


def check_consistency(
    algebra: TanhAlgebra | QuarticAlgebra, criterion: Criterion = "relaxed"
) -> ConsistencyReport:
    """Report whether any state can satisfy the algebra's uncertainty relation.

    The ``"relaxed"`` criterion is beta*delta <= 4 (tanh) or alpha*beta^2 <= 4
    (quartic).  The ``"sharp"`` criterion, tanh only, is beta*delta <= 1:
    the exact condition for beta t^2 - 2 t + delta <= 0 to have a real
    solution t = dP.  A margin of exactly zero counts as consistent and
    emits :class:`DegenerateAlgebraWarning`.  Never raises for valid
    algebra records.
    """
    if criterion not in ("relaxed", "sharp"):
        raise ValueError(f"unknown criterion {criterion!r}")
    if criterion == "sharp":
        if not isinstance(algebra, TanhAlgebra):
            raise ValueError("the sharp criterion is defined for the tanh algebra only")
        margin = 1.0 - algebra.product
    else:
        margin = 4.0 - algebra.product
    degenerate = margin == 0.0
    if degenerate:
        warnings.warn(
            f"{type(algebra).__name__} parameters lie on the consistency boundary; "
            "the uncertainty window degenerates to a point",
            DegenerateAlgebraWarning,
            stacklevel=2,
        )
    return ConsistencyReport(margin >= 0.0, margin, criterion, degenerate)


def tanh_window(algebra: TanhAlgebra) -> UncertaintyWindow:
    """Momentum and coordinate windows of the tanh algebra.

    Returns delta/2 <= dP <= 2/beta, delta^2/4 <= <P^2> <= 4/beta^2 and
    d tanh(alpha X) >= sqrt(beta delta), dX >= sqrt(beta delta)/alpha.
    """
    if not algebra.consistent:
        raise InconsistentAlgebra(
            f"beta*delta = {algebra.product:g} > 4: no state satisfies the tanh algebra"
        )
    a, b, d = algebra.alpha, algebra.beta, algebra.delta
    root = math.sqrt(b * d)
    return UncertaintyWindow(
        algebra="tanh",
        dp_min=d / 2.0,
        dp_max=2.0 / b,
        p2_min=d * d / 4.0,
        p2_max=4.0 / (b * b),
        dtanh_min=root,
        dx_min=root / a,
    )


def tanh_sharp_momentum_window(algebra: TanhAlgebra) -> tuple[float, float]:
    """Exact solution set of beta t^2 - 2 t + delta <= 0 for t = dP.

    Always nested inside ``(delta/2, 2/beta)``.  The lower root is evaluated
    as delta / (1 + s) to avoid cancellation when beta*delta is small.
    """
    b, d = algebra.beta, algebra.delta
    disc = 1.0 - b * d
    if disc < 0.0:
        raise NoRealWindow(f"beta*delta = {b * d:g} > 1: quadratic has no real roots")
    s = math.sqrt(disc)
    return d / (1.0 + s), (1.0 + s) / b


def quartic_window(algebra: QuarticAlgebra) -> UncertaintyWindow:
    """Bounds of the quartic algebra on <P^2>, (dP)^2, <X^2> and (dX)^2."""
    if not algebra.consistent:
        raise InconsistentAlgebra(
            f"alpha*beta^2 = {algebra.product:g} > 4: no state satisfies the quartic algebra"
        )
    a, b = algebra.alpha, algebra.beta
    return UncertaintyWindow(
        algebra="quartic",
        p2_max=16.0 / (a * b**3),
        dp2_min=4.0 / 9.0 * math.sqrt(3.0 * a),
        x2_max=4.0 / (a * b),
        dx2_min=b,
    )


def kempf_minimal_length(beta: float) -> float:
    """Minimal position uncertainty sqrt(beta) of [X, P] = i (1 + beta P^2)."""
    if not beta > 0:
        raise ValueError(f"beta must be positive, got {beta}")
    return math.sqrt(beta)


def kempf_dx_bound(dp, beta: float):
    """Right-hand side (1/dP + beta dP) / 2 of the Kempf position bound."""
    if not beta > 0:
        raise ValueError(f"beta must be positive, got {beta}")
    return 0.5 * (1.0 / dp + beta * dp)
