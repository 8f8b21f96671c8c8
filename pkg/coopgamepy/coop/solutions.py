"""
Cooperative Solutions of Bimatrix Games for CoopGamePy

The non-cooperative pure-equilibrium baseline and three cooperative
solutions of a two-player bimatrix game:

* TU solution: split the best joint payoff sigma, shifted by the value delta
  of the threat game A - B.
* NTU Nash bargaining solution: maximize (u - u*)(v - v*) over the Pareto
  frontier of the feasible set.
* NTU lambda-transfer solution: rescale player 1's utility by lambda until
  the TU split of (lambda A, B) lands on the Pareto frontier.
"""

import logging
from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from ..config import (
    DEFAULT_LAMBDA_BRACKET,
    DEFAULT_LAMBDA_TOL,
    LAMBDA_PROBES,
    MAX_BISECTION_STEPS,
    MEMBERSHIP_TOL,
    PROB_TOL,
)
from ..exceptions import ConvergenceError, DomainError, InputError
from ..geom.feasible_set import (
    FeasibleSet,
    PayoffPoint,
    Segment,
    contains,
    feasible_set,
    frontier_distance,
    support,
)
from ..matgame.zero_sum import MatrixLike, MixedStrategy, as_matrix, solve

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Bimatrix:
    """
    Two-player finite game: ``A`` holds player 1's payoffs, ``B`` player 2's.

    Rows are player 1's strategies, columns player 2's.
    """

    A: np.ndarray
    B: np.ndarray
    row_labels: Optional[Tuple[str, ...]] = None
    col_labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        a = as_matrix(self.A).copy()
        b = as_matrix(self.B).copy()
        if a.shape != b.shape:
            raise InputError(f"Payoff matrices differ in shape: A is {a.shape}, B is {b.shape}")
        a.setflags(write=False)
        b.setflags(write=False)
        object.__setattr__(self, "A", a)
        object.__setattr__(self, "B", b)

        for name, labels, size in (("row_labels", self.row_labels, a.shape[0]),
                                   ("col_labels", self.col_labels, a.shape[1])):
            if labels is None:
                continue
            labels = tuple(str(x) for x in labels)
            if len(labels) != size:
                raise InputError(f"{name} has {len(labels)} entries, expected {size}")
            object.__setattr__(self, name, labels)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.A.shape

    @property
    def rows(self) -> int:
        return self.A.shape[0]

    @property
    def cols(self) -> int:
        return self.A.shape[1]

    def payoff_pairs(self) -> List[PayoffPoint]:
        """Payoff pair of every pure-strategy profile, row-major."""
        return [PayoffPoint(float(u), float(v)) for u, v in zip(self.A.ravel(), self.B.ravel())]

    def swap_players(self) -> "Bimatrix":
        """Same game with the roles of the two players exchanged."""
        return Bimatrix(A=self.B.T, B=self.A.T,
                        row_labels=self.col_labels, col_labels=self.row_labels)

    def __eq__(self, other):
        if not isinstance(other, Bimatrix):
            return NotImplemented
        return (np.array_equal(self.A, other.A) and np.array_equal(self.B, other.B)
                and self.row_labels == other.row_labels and self.col_labels == other.col_labels)

    __hash__ = None


class PureEquilibrium(NamedTuple):
    row: int
    col: int
    payoff: PayoffPoint


@dataclass(frozen=True)
class TuSolution:
    """
    Transferable-utility solution.

    ``side_payment`` is what player 1 hands to player 2 after both play
    ``coop_cell``; a negative amount flows the other way.
    """

    sigma: float
    delta: float
    row_threat: MixedStrategy
    col_threat: MixedStrategy
    disagreement: PayoffPoint
    phi: PayoffPoint
    coop_cell: Tuple[int, int]
    side_payment: float


@dataclass(frozen=True)
class NtuSolution:
    """Nash bargaining solution; ``degenerate`` flags the max-min fallback."""

    point: PayoffPoint
    threat: PayoffPoint
    nash_product: float
    degenerate: bool


@dataclass(frozen=True)
class LambdaSolution:
    """lambda-transfer solution; ``iterations`` counts every gap evaluation, probes included."""

    lambda_star: float
    point: PayoffPoint
    sigma_of_lambda: float
    delta_of_lambda: float
    iterations: int
    multiple_roots: bool = False


def pure_nash(g: Bimatrix, tol: float = PROB_TOL) -> List[PureEquilibrium]:
    """
    All pure-strategy Nash equilibria, in row-major order.

    A cell is an equilibrium when A is maximal in its column and B is maximal
    in its row.
    """
    row_best = g.A >= g.A.max(axis=0, keepdims=True) - tol
    col_best = g.B >= g.B.max(axis=1, keepdims=True) - tol
    return [
        PureEquilibrium(int(i), int(j), PayoffPoint(float(g.A[i, j]), float(g.B[i, j])))
        for i, j in np.argwhere(row_best & col_best)
    ]


def tu_solution(g: Bimatrix) -> TuSolution:
    """
    TU solution: phi = ((sigma + delta) / 2, (sigma - delta) / 2).

    sigma is the largest cell sum A + B, delta the value of the threat game
    A - B, whose optimal strategies are the threat strategies.
    """
    sums = g.A + g.B
    flat = int(np.argmax(sums))
    coop_cell = (flat // g.cols, flat % g.cols)
    sigma = float(sums[coop_cell])

    threat_game = solve(g.A - g.B)
    p = threat_game.row_strategy.as_array()
    q = threat_game.col_strategy.as_array()
    disagreement = PayoffPoint(float(p @ g.A @ q), float(p @ g.B @ q))
    delta = threat_game.value

    phi = PayoffPoint((sigma + delta) / 2.0, (sigma - delta) / 2.0)
    return TuSolution(
        sigma=sigma,
        delta=delta,
        row_threat=threat_game.row_strategy,
        col_threat=threat_game.col_strategy,
        disagreement=disagreement,
        phi=phi,
        coop_cell=coop_cell,
        side_payment=float(g.A[coop_cell]) - phi.u,
    )


def _best_product_on(seg: Segment, threat: PayoffPoint) -> Tuple[float, PayoffPoint]:
    """Maximize (u - u*)(v(u) - v*) along one frontier segment."""
    u_star, v_star = threat
    if seg.is_degenerate:
        return (seg.a.u - u_star) * (seg.a.v - v_star), seg.a

    # (u - u*)(m u + k) with k = c - v*: a quadratic in u opening downwards
    m = seg.slope
    k = seg.intercept - v_star
    candidates = [seg.a.u, seg.b.u]
    if m < 0:
        u_hat = (m * u_star - k) / (2.0 * m)
        candidates.append(min(max(u_hat, seg.a.u), seg.b.u))

    best = None
    for u in candidates:
        point = PayoffPoint(u, seg.v_at(u))
        product = (point.u - u_star) * (point.v - v_star)
        if best is None or product > best[0]:
            best = (product, point)
    return best


def _best_margin_on(seg: Segment, threat: PayoffPoint) -> List[PayoffPoint]:
    """Candidates maximizing min(u - u*, v - v*) along one frontier segment."""
    if seg.is_degenerate:
        return [seg.a]
    u_star, v_star = threat
    m = seg.slope
    # u - u* = v(u) - v* where the increasing and decreasing gains cross
    u_cross = (seg.intercept - v_star + u_star) / (1.0 - m)
    u_cross = min(max(u_cross, seg.a.u), seg.b.u)
    return [seg.a, seg.b, PayoffPoint(u_cross, seg.v_at(u_cross))]


def nash_bargaining(s: FeasibleSet, threat: Sequence[float]) -> NtuSolution:
    """
    Nash bargaining solution on a feasible set.

    Args:
        s: Feasible set with its Pareto frontier
        threat: Threat point (u*, v*), must lie in ``s``

    Returns:
        NtuSolution; when no feasible point beats the threat point for both
        players the point maximizing min(u - u*, v - v*) is returned with
        ``degenerate=True``

    Raises:
        DomainError: If the threat point lies outside the feasible set
    """
    threat = PayoffPoint(float(threat[0]), float(threat[1]))
    if not contains(s, threat, MEMBERSHIP_TOL):
        raise DomainError(f"Threat point {tuple(threat)} lies outside the feasible set")

    margins = [p for seg in s.frontier for p in _best_margin_on(seg, threat)]

    def margin(p):
        return min(p.u - threat.u, p.v - threat.v)

    best_margin = max(margin(p) for p in margins)
    if best_margin <= PROB_TOL:
        ties = [p for p in margins if margin(p) >= best_margin - PROB_TOL]
        point = max(ties, key=lambda p: p.u + p.v)
        logger.warning("No feasible point improves on threat %s for both players; "
                       "using max-min fallback %s", tuple(threat), tuple(point))
        return NtuSolution(point=point, threat=threat,
                           nash_product=(point.u - threat.u) * (point.v - threat.v),
                           degenerate=True)

    product, point = max((_best_product_on(seg, threat) for seg in s.frontier),
                         key=lambda item: item[0])
    return NtuSolution(point=point, threat=threat, nash_product=product, degenerate=False)


def ntu_nash(g: Bimatrix, threat: Optional[Sequence[float]] = None) -> NtuSolution:
    """
    NTU solution of a game by the Nash bargaining model.

    Args:
        g: Bimatrix game; its feasible set is the hull of the pure outcomes
        threat: Threat point; defaults to the TU disagreement point

    Returns:
        NtuSolution
    """
    if threat is None:
        threat = tu_solution(g).disagreement
    return nash_bargaining(feasible_set(g.payoff_pairs()), threat)


def _check_lambda(lam: float):
    if not lam > 0:
        raise DomainError(f"lambda must be positive, got {lam!r}")


def sigma_of_lambda(g: Bimatrix, lam: float) -> float:
    """Largest cell of lam * A + B."""
    _check_lambda(lam)
    return float(np.max(lam * g.A + g.B))


def delta_of_lambda(g: Bimatrix, lam: float) -> float:
    """Value of the zero-sum game lam * A - B."""
    _check_lambda(lam)
    return solve(lam * g.A - g.B).value


def phi_of_lambda(g: Bimatrix, lam: float) -> PayoffPoint:
    """TU split of (lam * A, B) expressed in the original utilities."""
    sigma = sigma_of_lambda(g, lam)
    delta = delta_of_lambda(g, lam)
    return PayoffPoint((sigma + delta) / (2.0 * lam), (sigma - delta) / 2.0)


def lambda_transfer(g: Bimatrix,
                    bracket: Tuple[float, float] = DEFAULT_LAMBDA_BRACKET,
                    tol: float = DEFAULT_LAMBDA_TOL) -> LambdaSolution:
    """
    NTU solution by the lambda-transfer approach.

    phi(lambda) always lies on the support line lambda*u + v = sigma(lambda)
    of the feasible set, so it is on the Pareto frontier exactly when its u
    coordinate falls inside the support face. The signed overshoot
    gap(lambda) = u - clamp(u, face) is scanned on log-spaced probes and the
    first sign change (or zero) is refined by bisection until the bracket is
    narrower than ``tol`` and its upper end is itself a root.

    Args:
        g: Bimatrix game
        bracket: Search interval (lo, hi) with 0 < lo < hi
        tol: Width of the final lambda interval

    Returns:
        LambdaSolution for the smallest root found; ``multiple_roots`` is set
        when the probes show more than one root or a whole interval of roots

    Raises:
        DomainError: On an invalid bracket or tolerance
        ConvergenceError: If no probe shows a sign change or a root
    """
    lo, hi = (float(x) for x in bracket)
    if not (0 < lo < hi) or not np.isfinite(hi):
        raise DomainError(f"lambda bracket must satisfy 0 < lo < hi, got ({lo!r}, {hi!r})")
    if not tol > 0:
        raise DomainError(f"tolerance must be positive, got {tol!r}")

    s = feasible_set(g.payoff_pairs())

    def gap(lam: float) -> float:
        u = phi_of_lambda(g, lam).u
        _, face = support(s, lam)
        overshoot = u - min(max(u, face.a.u), face.b.u)
        return 0.0 if abs(overshoot) <= PROB_TOL * max(1.0, abs(u)) else overshoot

    probes = np.geomspace(lo, hi, LAMBDA_PROBES)
    gaps = [gap(lam) for lam in probes]
    iterations = len(probes)

    events = _root_events(gaps)
    if not events:
        table = list(zip(probes.tolist(), gaps))
        raise ConvergenceError(
            f"phi(lambda) never reaches the Pareto frontier on [{lo:g}, {hi:g}]; "
            f"probe (lambda, gap) values: {table}",
            probes=table,
        )

    first, last = events[0]
    if gaps[first] == 0.0 and first == 0:
        root = float(probes[0])
    elif gaps[first] == 0.0:
        root, steps = _bisect(gap, float(probes[first - 1]), float(probes[first]),
                              gaps[first - 1], 0.0, tol)
        iterations += steps
    else:
        root, steps = _bisect(gap, float(probes[first]), float(probes[last]),
                              gaps[first], gaps[last], tol)
        iterations += steps

    multiple_roots = bool(len(events) > 1 or (gaps[first] == 0.0 and last > first))
    if multiple_roots:
        logger.warning("gap(lambda) has %s on [%g, %g]; returning the smallest root %.12g",
                       "several roots" if len(events) > 1 else "an interval of roots",
                       lo, hi, root)

    point = phi_of_lambda(g, root)
    distance = frontier_distance(s, point)
    if distance > 1e-6:
        logger.warning("lambda-transfer point %s is %.3g away from the frontier", tuple(point), distance)
    logger.debug("lambda* = %.17g after %d gap evaluations", root, iterations)

    return LambdaSolution(
        lambda_star=root,
        point=point,
        sigma_of_lambda=sigma_of_lambda(g, root),
        delta_of_lambda=delta_of_lambda(g, root),
        iterations=iterations,
        multiple_roots=multiple_roots,
    )


def _root_events(gaps: Sequence[float]) -> List[Tuple[int, int]]:
    """
    Probe index ranges that hold a root, in order.

    A run of zero gaps is one event (first, last zero index); a sign change
    between neighbouring nonzero gaps is one event (left, right index).
    """
    events = []
    k = 0
    while k < len(gaps):
        if gaps[k] == 0.0:
            start = k
            while k + 1 < len(gaps) and gaps[k + 1] == 0.0:
                k += 1
            events.append((start, k))
        elif k + 1 < len(gaps) and gaps[k + 1] != 0.0 and np.sign(gaps[k + 1]) != np.sign(gaps[k]):
            events.append((k, k + 1))
        k += 1
    return events


def _bisect(f, lo: float, hi: float, f_lo: float, f_hi: float, tol: float) -> Tuple[float, int]:
    """
    Shrink [lo, hi] around the leftmost sign change or zero of ``f``.

    Stops once the bracket is narrower than ``tol`` and ``f(hi)`` is zero, or
    when the bracket cannot be split any further in floating point.
    """
    sign_lo = np.sign(f_lo)
    hi_is_root = f_hi == 0.0
    steps = 0
    while hi - lo > tol or not hi_is_root:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if steps >= MAX_BISECTION_STEPS:
            raise ConvergenceError(f"Bisection stopped after {steps} steps with bracket [{lo!r}, {hi!r}]")
        value = f(mid)
        steps += 1
        if value != 0.0 and np.sign(value) == sign_lo:
            lo = mid
        else:
            hi = mid
            hi_is_root = value == 0.0
    return (hi if hi_is_root else 0.5 * (lo + hi)), steps
