"""
Counter-Terrorism Policy Games for CoopGamePy

Two countries each choose Preempt, Status Quo or Deter. Preemption gives a
public benefit B to both at a private cost c to the preemptor; deterrence
gives the deterrer a private benefit b and imposes a public cost C on both.

Besides the game constructors this module carries the closed-form solutions
of the normalized family (B = C, c = alpha*B, b = beta*C) that the generic
solvers are checked against.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Tuple

import numpy as np

from ..config import PARAM_TOL, STRATEGY_LABELS
from ..coop.solutions import Bimatrix
from ..exceptions import ConstraintError, DomainError
from ..geom.feasible_set import PayoffPoint, Segment

BASIC_A = ((2.0, -2.0, -6.0),
           (4.0, 0.0, -4.0),
           (6.0, 2.0, -2.0))
BASIC_B = ((2.0, 4.0, 6.0),
           (-2.0, 0.0, 2.0),
           (-6.0, -4.0, -2.0))


def _require(holds: bool, rule: str):
    if not holds:
        raise ConstraintError(f"{rule} violated")


@dataclass(frozen=True)
class GeneralParams:
    """Preemption benefit/cost (B, c) and deterrence benefit/cost (b, C)."""

    B: float
    c: float
    b: float
    C: float

    def __post_init__(self):
        for name in ("B", "c", "b", "C"):
            value = float(getattr(self, name))
            _require(np.isfinite(value), f"finite {name}")
            object.__setattr__(self, name, value)
        _require(self.B > PARAM_TOL, "B > 0")
        _require(self.C > PARAM_TOL, "C > 0")
        _require(self.c - self.B > PARAM_TOL, "B < c")
        _require(2 * self.B - self.c > PARAM_TOL, "c < 2B")
        _require(self.b - self.C > PARAM_TOL, "C < b")
        _require(2 * self.C - self.b > PARAM_TOL, "b < 2C")


@dataclass(frozen=True)
class NormalizedParams:
    """Normalized family: B = C = 1, c = alpha, b = beta."""

    alpha: float
    beta: float

    def __post_init__(self):
        for name in ("alpha", "beta"):
            value = float(getattr(self, name))
            _require(np.isfinite(value), f"finite {name}")
            _require(value - 1.0 > PARAM_TOL, f"1 < {name}")
            _require(2.0 - value > PARAM_TOL, f"{name} < 2")
            object.__setattr__(self, name, value)


class CaseTag(str, Enum):
    ALPHA_LESS = "alpha_less"
    ALPHA_GREATER = "alpha_greater"
    EQUAL = "equal"


@dataclass(frozen=True)
class ClosedFormPrediction:
    tu_phi: PayoffPoint
    ntu_point: PayoffPoint
    lambda_point: PayoffPoint
    disagreement: PayoffPoint
    sigma: float
    delta: float
    lambda_star: float
    case_tag: CaseTag
    nash_product: float
    side_payment: float


@dataclass(frozen=True)
class FrontierSegment:
    """Labelled Pareto segment with its line v = slope * u + intercept."""

    label: str
    segment: Segment
    slope: float
    intercept: float


def basic_game() -> Bimatrix:
    """
    The symmetric game with public benefit 4, private cost 6, private
    benefit 6 and public cost 4.
    """
    return Bimatrix(A=np.array(BASIC_A), B=np.array(BASIC_B),
                    row_labels=STRATEGY_LABELS, col_labels=STRATEGY_LABELS)


def general_game(p: GeneralParams) -> Bimatrix:
    """Four-parameter game, transcribed cell by cell."""
    B, c, b, C = p.B, p.c, p.b, p.C
    a = np.array([
        [2 * B - c, B - c, B - c - C],
        [B, 0.0, -C],
        [B + b - C, b - C, b - 2 * C],
    ])
    v = np.array([
        [2 * B - c, B, B + b - C],
        [B - c, 0.0, b - C],
        [B - c - C, -C, b - 2 * C],
    ])
    return Bimatrix(A=a, B=v, row_labels=STRATEGY_LABELS, col_labels=STRATEGY_LABELS)


def normalized_game(p: NormalizedParams) -> Bimatrix:
    """Two-parameter game (U, V) = general_game(1, alpha, beta, 1)."""
    return general_game(GeneralParams(B=1.0, c=p.alpha, b=p.beta, C=1.0))


def case_tag(p: NormalizedParams) -> CaseTag:
    if abs(p.alpha - p.beta) <= PARAM_TOL:
        return CaseTag.EQUAL
    return CaseTag.ALPHA_LESS if p.alpha < p.beta else CaseTag.ALPHA_GREATER


def closed_form(p: NormalizedParams) -> ClosedFormPrediction:
    """
    Closed-form solutions of the normalized game.

    All three cooperative methods agree on (2 - alpha, 2 - alpha), i.e. both
    countries preempt and no side payment is needed.
    """
    coop = PayoffPoint(2.0 - p.alpha, 2.0 - p.alpha)
    threat = PayoffPoint(-(2.0 - p.beta), -(2.0 - p.beta))
    return ClosedFormPrediction(
        tu_phi=coop,
        ntu_point=coop,
        lambda_point=coop,
        disagreement=threat,
        sigma=2.0 * (2.0 - p.alpha),
        delta=0.0,
        lambda_star=1.0,
        case_tag=case_tag(p),
        nash_product=(4.0 - p.alpha - p.beta) ** 2,
        side_payment=0.0,
    )


def _labelled(label: str, a: Tuple[float, float], b: Tuple[float, float],
              slope: float, intercept: float) -> FrontierSegment:
    return FrontierSegment(label, Segment(PayoffPoint(*a), PayoffPoint(*b)), slope, intercept)


def frontier_segments(p: NormalizedParams) -> Tuple[FrontierSegment, ...]:
    """
    Pareto frontier of the normalized game as labelled line segments.

    When alpha <= beta the frontier is P1 from (-alpha, beta) to the
    cooperative point and P2 on to (beta, -alpha). When alpha > beta the
    points (-(alpha-1), 1) and (1, -(alpha-1)) become vertices and the
    frontier has four pieces.
    """
    alpha, beta = p.alpha, p.beta
    coop = (2 - alpha, 2 - alpha)
    s = alpha + beta - 2

    if case_tag(p) is not CaseTag.ALPHA_GREATER:
        return (
            _labelled("P1", (-alpha, beta), coop, -s / 2, (2 - alpha) * (alpha + beta) / 2),
            _labelled("P2", coop, (beta, -alpha), -2 / s, (2 - alpha) * (alpha + beta) / s),
        )

    outer = alpha + beta - alpha * beta
    return (
        _labelled("outer-left", (-alpha, beta), (-(alpha - 1), 1.0), -(beta - 1), outer),
        _labelled("Q1", (-(alpha - 1), 1.0), coop, -(alpha - 1), alpha * (2 - alpha)),
        _labelled("Q2", coop, (1.0, -(alpha - 1)), -1 / (alpha - 1), alpha * (2 - alpha) / (alpha - 1)),
        _labelled("outer-right", (1.0, -(alpha - 1)), (beta, -alpha), -1 / (beta - 1), outer / (beta - 1)),
    )


def product_vertex(p: NormalizedParams) -> float:
    """
    Unconstrained maximizer of the Nash product along the line of P1.

    It always lies to the right of 2 - alpha, by (4-alpha-beta)^2 / (2(alpha+beta-2)).
    """
    alpha, beta = p.alpha, p.beta
    return (-alpha ** 2 + beta ** 2 - 4 * beta + 8) / (2 * (alpha + beta - 2))


def side_condition(p: NormalizedParams) -> bool:
    """alpha > beta / (3 - alpha), used when ranking the cells of lambda*U + V."""
    return p.alpha > p.beta / (3 - p.alpha)


def sigma_range(p: NormalizedParams) -> Tuple[float, float]:
    """Interval of lambda on which sigma(lambda) = (lambda + 1)(2 - alpha)."""
    return (p.alpha + max(p.alpha, p.beta)) / 2 - 1, 1.0


def delta_closed_form(p: NormalizedParams, lam: float) -> float:
    """Value of lambda*U - V; its (Deter, Deter) cell is a saddle for every lambda > 0."""
    _positive(lam)
    return (1 - lam) * (2 - p.beta)


def lambda_path(p: NormalizedParams, lam: float) -> PayoffPoint:
    """phi(lambda) of the normalized game for lambda in ``sigma_range(p)``."""
    _positive(lam)
    half_gap = (p.beta - p.alpha) / 2
    surplus = 4 - p.alpha - p.beta
    return PayoffPoint(half_gap + surplus / (2 * lam), half_gap + surplus * lam / 2)


def basic_sigma_of_lambda(lam: float) -> float:
    """Piecewise sigma(lambda) of the basic game."""
    _positive(lam)
    if lam <= 0.5:
        return -6 * lam + 6
    if lam <= 2:
        return 2 * lam + 2
    return 6 * lam - 6


def basic_lambda_path(lam: float) -> PayoffPoint:
    """Piecewise phi(lambda) of the basic game; only lambda = 1 hits the frontier."""
    _positive(lam)
    if lam <= 0.5:
        return PayoffPoint(-4 + 4 / lam, -2 * lam + 2)
    if lam <= 2:
        return PayoffPoint(2 / lam, 2 * lam)
    return PayoffPoint(2 - 2 / lam, 4 * lam - 4)


def _positive(lam: float):
    if not lam > 0:
        raise DomainError(f"lambda must be positive, got {lam!r}")
