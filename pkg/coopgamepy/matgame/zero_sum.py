"""
Zero-Sum Matrix Games for CoopGamePy

Value and optimal strategies of finite two-person zero-sum games. A saddle
point is used when one exists; otherwise the game is solved as a linear
program with a small dense simplex method.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from ..config import MAX_PIVOTS, PIVOT_TOL, PROB_CLAMP_TOL, PROB_TOL, SADDLE_TOL
from ..exceptions import ConvergenceError, InputError

logger = logging.getLogger(__name__)

MatrixLike = Union[np.ndarray, Sequence[Sequence[float]]]


def as_matrix(m: MatrixLike) -> np.ndarray:
    """
    Validate a payoff matrix and return it as a 2-D float array.

    Args:
        m: Nested sequence or array of finite numbers

    Returns:
        Float array of shape (rows, cols), rows and cols both positive

    Raises:
        InputError: If the input is ragged, empty, not 2-D or not finite
    """
    try:
        arr = np.asarray(m, dtype=float)
    except (TypeError, ValueError) as e:
        raise InputError(f"Matrix entries must be numbers: {e}") from e

    if arr.ndim != 2:
        raise InputError(f"Matrix must be 2-dimensional, got {arr.ndim} dimension(s)")
    if arr.shape[0] == 0 or arr.shape[1] == 0:
        raise InputError("Matrix must have at least one row and one column")
    if not np.all(np.isfinite(arr)):
        raise InputError("Matrix entries must be finite")
    return arr


@dataclass(frozen=True)
class MixedStrategy:
    """Probability vector over one player's pure strategies."""

    probs: Tuple[float, ...]

    def __post_init__(self):
        probs = tuple(float(x) for x in self.probs)
        if not probs:
            raise InputError("A mixed strategy needs at least one pure strategy")
        if any(x < 0.0 or x > 1.0 for x in probs):
            raise InputError(f"Probabilities must lie in [0, 1]: {probs}")
        if abs(sum(probs) - 1.0) > PROB_TOL:
            raise InputError(f"Probabilities must sum to 1, got {sum(probs)!r}")
        object.__setattr__(self, "probs", probs)

    @classmethod
    def from_weights(cls, weights: Sequence[float]) -> "MixedStrategy":
        """
        Normalize non-negative weights into a strategy.

        Entries slightly below zero (numerical noise down to -PROB_CLAMP_TOL
        after scaling) are clamped; anything more negative is a solver defect.
        """
        w = np.asarray(weights, dtype=float)
        total = w.sum()
        if total <= 0.0 or not np.isfinite(total):
            raise ConvergenceError(f"Cannot normalize strategy weights {w.tolist()}")
        w = w / total
        if np.any(w < -PROB_CLAMP_TOL):
            raise ConvergenceError(f"Negative probability in solver output: {w.tolist()}")
        w = np.clip(w, 0.0, 1.0)
        w = w / w.sum()
        return cls(tuple(w.tolist()))

    @classmethod
    def pure(cls, size: int, index: int) -> "MixedStrategy":
        """Strategy putting all weight on one pure strategy."""
        probs = [0.0] * size
        probs[index] = 1.0
        return cls(tuple(probs))

    def as_array(self) -> np.ndarray:
        return np.array(self.probs)

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, x in enumerate(self.probs) if x > 0.0)

    def __len__(self) -> int:
        return len(self.probs)


@dataclass(frozen=True)
class GameValue:
    """Solution of a zero-sum game from the row player's point of view."""

    value: float
    row_strategy: MixedStrategy
    col_strategy: MixedStrategy
    via_saddle: bool


def saddle_point(m: MatrixLike) -> Optional[Tuple[int, int, float]]:
    """
    Find a pure saddle point: an entry that is both a row minimum and a
    column maximum.

    Args:
        m: Payoff matrix for the row (maximizing) player

    Returns:
        (row, col, value) of the lexicographically smallest saddle cell, or
        None if the game has no saddle point
    """
    arr = as_matrix(m)
    row_min = arr.min(axis=1, keepdims=True)
    col_max = arr.max(axis=0, keepdims=True)
    mask = (arr <= row_min + SADDLE_TOL) & (arr >= col_max - SADDLE_TOL)
    hits = np.argwhere(mask)
    if hits.size == 0:
        return None
    i, j = hits[0]
    return int(i), int(j), float(arr[i, j])


def value_bounds(m: MatrixLike) -> Tuple[float, float]:
    """
    Pure-strategy maximin and minimax of a matrix game.

    The game value always lies between the two.
    """
    arr = as_matrix(m)
    maximin = float(arr.min(axis=1).max())
    minimax = float(arr.max(axis=0).min())
    return maximin, minimax


def certificate(m: MatrixLike, result: GameValue) -> Tuple[float, float]:
    """
    Payoff guarantees of the strategies in a solution.

    Returns:
        (min over columns of p'M e_j, max over rows of e_i'M q); for an
        optimal pair both equal the value
    """
    arr = as_matrix(m)
    p = result.row_strategy.as_array()
    q = result.col_strategy.as_array()
    return float((p @ arr).min()), float((arr @ q).max())


def solve(m: MatrixLike) -> GameValue:
    """
    Solve a zero-sum matrix game.

    Args:
        m: Payoff matrix for the row (maximizing) player

    Returns:
        GameValue with the value and one optimal strategy per player
    """
    arr = as_matrix(m)
    rows, cols = arr.shape

    saddle = saddle_point(arr)
    if saddle is not None:
        i, j, value = saddle
        return GameValue(
            value=value,
            row_strategy=MixedStrategy.pure(rows, i),
            col_strategy=MixedStrategy.pure(cols, j),
            via_saddle=True,
        )

    result = _solve_by_simplex(arr)
    if logger.isEnabledFor(logging.DEBUG):
        low, high = certificate(arr, result)
        logger.debug("LP solution of %dx%d game: value=%.12g gap=%.3g",
                     rows, cols, result.value, high - low)
    return result


def _solve_by_simplex(arr: np.ndarray) -> GameValue:
    """
    Scale the matrix into [-1, 1], shift it positive and solve
    max 1'y s.t. My <= 1, y >= 0.

    The column player's strategy is y / sum(y); the row player's is read from
    the optimal dual prices of the slack columns. PIVOT_TOL is relative to the
    scaled tableau, whose entries lie in [1, 3].
    """
    rows, cols = arr.shape
    scale = float(np.abs(arr).max()) or 1.0
    scaled = arr / scale
    shift = 1.0 - float(scaled.min())
    shifted = scaled + shift

    tableau = np.zeros((rows + 1, cols + rows + 1))
    tableau[:rows, :cols] = shifted
    tableau[:rows, cols:cols + rows] = np.eye(rows)
    tableau[:rows, -1] = 1.0
    tableau[-1, :cols] = -1.0
    basis = list(range(cols, cols + rows))

    pivots = 0
    while True:
        # Bland's rule: smallest improving column, ties on the ratio test by
        # smallest basic variable
        improving = np.flatnonzero(tableau[-1, :-1] < -PIVOT_TOL)
        if improving.size == 0:
            break
        if pivots >= MAX_PIVOTS:
            raise ConvergenceError(f"Simplex exceeded {MAX_PIVOTS} pivots on a {rows}x{cols} game")
        entering = int(improving[0])

        column = tableau[:rows, entering]
        candidates = np.flatnonzero(column > PIVOT_TOL)
        if candidates.size == 0:
            # shifted entries are >= 1, so the LP is bounded
            raise ConvergenceError("Simplex found an unbounded direction in a bounded game")
        leaving = min(candidates, key=lambda r: (tableau[r, -1] / column[r], basis[r]))

        tableau[leaving] /= tableau[leaving, entering]
        factors = tableau[:, entering].copy()
        factors[leaving] = 0.0
        tableau -= np.outer(factors, tableau[leaving])
        basis[leaving] = entering
        pivots += 1

    total = tableau[-1, -1]
    if total <= 0.0:
        raise ConvergenceError(f"Simplex ended with non-positive objective {total!r}")

    y = np.zeros(cols)
    for r, var in enumerate(basis):
        if var < cols:
            y[var] = tableau[r, -1]
    x = tableau[-1, cols:cols + rows]

    logger.debug("Simplex finished after %d pivots", pivots)
    return GameValue(
        value=scale * (1.0 / total - shift),
        row_strategy=MixedStrategy.from_weights(x),
        col_strategy=MixedStrategy.from_weights(y),
        via_saddle=False,
    )
