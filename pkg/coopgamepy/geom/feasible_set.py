"""
Payoff-Plane Geometry for CoopGamePy

Builds the NTU feasible set of a game (the convex hull of its pure-outcome
payoff pairs), extracts the Pareto optimal part of its boundary and answers
membership, distance and support-line queries.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, NamedTuple, Sequence, Tuple

import numpy as np
from shapely.geometry import LineString, Point, Polygon

from ..config import CROSS_TOL, FACE_TOL, VALUE_TOL
from ..exceptions import DomainError, InputError

logger = logging.getLogger(__name__)


class PayoffPoint(NamedTuple):
    """Payoff pair (u, v) for player 1 and player 2."""

    u: float
    v: float


@dataclass(frozen=True)
class Segment:
    """Boundary piece from ``a`` to ``b`` with ``a.u <= b.u``."""

    a: PayoffPoint
    b: PayoffPoint

    @property
    def is_degenerate(self) -> bool:
        return self.a == self.b

    @property
    def slope(self) -> float:
        if self.b.u == self.a.u:
            raise DomainError(f"Segment {self.a}-{self.b} has no finite slope")
        return (self.b.v - self.a.v) / (self.b.u - self.a.u)

    @property
    def intercept(self) -> float:
        return self.a.v - self.slope * self.a.u

    def v_at(self, u: float) -> float:
        """Height of the segment's line at ``u``, interpolated from the endpoints."""
        if self.is_degenerate:
            return self.a.v
        t = (u - self.a.u) / (self.b.u - self.a.u)
        return self.a.v + t * (self.b.v - self.a.v)


@dataclass(frozen=True)
class FeasibleSet:
    """
    Convex hull of a payoff cloud plus its Pareto frontier.

    ``hull`` lists the vertices counter-clockwise (a single point or a pair
    of points when the hull is degenerate). ``frontier`` runs from the vertex
    with the largest v to the vertex with the largest u.
    """

    hull: Tuple[PayoffPoint, ...]
    frontier: Tuple[Segment, ...]

    @cached_property
    def vertices(self) -> np.ndarray:
        return np.array(self.hull, dtype=float)

    @cached_property
    def geometry(self):
        """The hull as a shapely Point, LineString or Polygon."""
        if len(self.hull) == 1:
            return Point(self.hull[0])
        if len(self.hull) == 2:
            return LineString(self.hull)
        return Polygon(self.hull)

    @property
    def frontier_points(self) -> List[PayoffPoint]:
        """Frontier chain as a list of vertices."""
        points = [self.frontier[0].a]
        for seg in self.frontier:
            if seg.b != points[-1]:
                points.append(seg.b)
        return points

    @cached_property
    def frontier_geometry(self):
        points = self.frontier_points
        if len(points) == 1:
            return Point(points[0])
        return LineString(points)


def dominates(p: Sequence[float], q: Sequence[float]) -> bool:
    """True if ``p`` is at least as good as ``q`` for both players and better for one."""
    return p[0] >= q[0] and p[1] >= q[1] and (p[0] > q[0] or p[1] > q[1])


def _cross(o: PayoffPoint, a: PayoffPoint, b: PayoffPoint) -> float:
    return (a.u - o.u) * (b.v - o.v) - (a.v - o.v) * (b.u - o.u)


def _validate_points(points: Iterable[Sequence[float]]) -> List[PayoffPoint]:
    try:
        pts = [PayoffPoint(float(p[0]), float(p[1])) for p in points]
    except (TypeError, ValueError, IndexError) as e:
        raise InputError(f"Points must be (u, v) pairs of numbers: {e}") from e
    if not pts:
        raise InputError("A feasible set needs at least one payoff point")
    if not all(np.isfinite(p.u) and np.isfinite(p.v) for p in pts):
        raise InputError("Payoff points must have finite coordinates")
    return pts


def _monotone_chain(points: List[PayoffPoint]) -> List[PayoffPoint]:
    """Convex hull, counter-clockwise, collinear points dropped."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    lower: List[PayoffPoint] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= CROSS_TOL:
            lower.pop()
        lower.append(p)

    upper: List[PayoffPoint] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= CROSS_TOL:
            upper.pop()
        upper.append(p)

    # collinear input collapses to the extreme pair
    return lower[:-1] + upper[:-1]


def _pareto_chain(hull: List[PayoffPoint]) -> List[PayoffPoint]:
    """Walk counter-clockwise from the best-u vertex to the best-v vertex."""
    n = len(hull)
    i_u = max(range(n), key=lambda k: (hull[k].u, hull[k].v))
    i_v = max(range(n), key=lambda k: (hull[k].v, hull[k].u))
    chain = [hull[i_u]]
    k = i_u
    while k != i_v:
        k = (k + 1) % n
        chain.append(hull[k])
    chain.reverse()
    return chain


def feasible_set(points: Iterable[Sequence[float]]) -> FeasibleSet:
    """
    Build the feasible set spanned by a cloud of payoff pairs.

    Args:
        points: Iterable of (u, v) pairs, at least one

    Returns:
        FeasibleSet with the counter-clockwise hull and the Pareto frontier
    """
    pts = _validate_points(points)
    hull = _monotone_chain(pts)
    chain = _pareto_chain(hull)

    if len(chain) == 1:
        frontier = (Segment(chain[0], chain[0]),)
    else:
        frontier = tuple(Segment(a, b) for a, b in zip(chain, chain[1:]))

    logger.debug("Feasible set: %d points, %d hull vertices, %d frontier segments",
                 len(pts), len(hull), len(frontier))
    return FeasibleSet(hull=tuple(hull), frontier=frontier)


def contains(s: FeasibleSet, p: Sequence[float], tol: float = VALUE_TOL) -> bool:
    """True if ``p`` is inside the hull or within ``tol`` of its boundary."""
    return s.geometry.distance(Point(float(p[0]), float(p[1]))) <= tol


def frontier_distance(s: FeasibleSet, p: Sequence[float]) -> float:
    """Euclidean distance from ``p`` to the Pareto frontier chain."""
    return float(s.frontier_geometry.distance(Point(float(p[0]), float(p[1]))))


def support(s: FeasibleSet, lam: float) -> Tuple[float, Segment]:
    """
    Support function of the hull in direction (lam, 1).

    Args:
        s: Feasible set
        lam: Weight on player 1's payoff, must be positive

    Returns:
        (max of lam*u + v over the hull, face where the maximum is attained);
        the face is a degenerate segment when it is a single vertex
    """
    if not lam > 0:
        raise DomainError(f"Support direction needs lambda > 0, got {lam!r}")

    values = lam * s.vertices[:, 0] + s.vertices[:, 1]
    best = float(values.max())
    on_face = np.flatnonzero(values >= best - FACE_TOL * max(1.0, float(np.abs(values).max())))
    face = sorted(s.hull[i] for i in on_face)
    return best, Segment(face[0], face[-1])
