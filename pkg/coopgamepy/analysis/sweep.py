"""
Parameter Sweeps for CoopGamePy

Runs the numeric solvers over a grid of the normalized counter-terrorism
family and compares every result with the closed-form prediction.
"""

import logging
from multiprocessing import Pool
from typing import Any, Dict, Tuple

import numpy as np
import pandas as pd

from ..config import PARAM_TOL
from ..coop.solutions import lambda_transfer, ntu_nash, tu_solution
from ..exceptions import ConstraintError, InputError
from ..models.counter_terrorism import NormalizedParams, closed_form, normalized_game

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = [
    'alpha',
    'beta',
    'case_tag',
    'solution_u',
    'solution_v',
    'disagreement_u',
    'lambda_star',
    'max_deviation',
]


def pipeline_record(p: NormalizedParams) -> Dict[str, Any]:
    """
    Solve one normalized game numerically and measure the distance to its
    closed form.

    Args:
        p: Normalized parameters

    Returns:
        Dictionary with one value per entry of SWEEP_COLUMNS; ``max_deviation``
        is the largest absolute difference over the TU, NTU and
        lambda-transfer points, the disagreement point, sigma, delta and
        lambda*
    """
    g = normalized_game(p)
    expected = closed_form(p)

    tu = tu_solution(g)
    ntu = ntu_nash(g)
    lam = lambda_transfer(g)

    pairs = [
        (tu.phi, expected.tu_phi),
        (ntu.point, expected.ntu_point),
        (lam.point, expected.lambda_point),
        (tu.disagreement, expected.disagreement),
        ((tu.sigma, tu.delta), (expected.sigma, expected.delta)),
        ((lam.lambda_star,), (expected.lambda_star,)),
    ]
    deviation = max(
        float(np.max(np.abs(np.subtract(got, want)))) for got, want in pairs
    )

    return {
        'alpha': p.alpha,
        'beta': p.beta,
        'case_tag': expected.case_tag.value,
        'solution_u': ntu.point.u,
        'solution_v': ntu.point.v,
        'disagreement_u': tu.disagreement.u,
        'lambda_star': lam.lambda_star,
        'max_deviation': deviation,
    }


def _record_at(grid_point: Tuple[float, float]) -> Dict[str, Any]:
    alpha, beta = grid_point
    return pipeline_record(NormalizedParams(alpha=alpha, beta=beta))


def _check_range(name: str, bounds: Tuple[float, float]) -> Tuple[float, float]:
    lo, hi = (float(x) for x in bounds)
    if not (lo - 1.0 > PARAM_TOL and 2.0 - hi > PARAM_TOL):
        raise ConstraintError(f"1 < {name} < 2 violated by range [{lo:g}, {hi:g}]")
    if lo > hi:
        raise ConstraintError(f"{name} range [{lo:g}, {hi:g}] has lo > hi")
    return lo, hi


def sweep_normalized(alpha_range: Tuple[float, float], beta_range: Tuple[float, float],
                     steps: int, workers: int = 1) -> pd.DataFrame:
    """
    Evaluate ``pipeline_record`` on a steps x steps grid.

    Args:
        alpha_range: (lo, hi) inside (1, 2)
        beta_range: (lo, hi) inside (1, 2)
        steps: Grid points per axis; a single step uses the lower bounds
        workers: Number of worker processes (1 runs in-process)

    Returns:
        DataFrame with SWEEP_COLUMNS, alpha-major in grid order
    """
    a_lo, a_hi = _check_range('alpha', alpha_range)
    b_lo, b_hi = _check_range('beta', beta_range)
    if isinstance(steps, bool) or not isinstance(steps, (int, np.integer)) or steps < 1:
        raise InputError(f"steps must be a positive integer, got {steps!r}")
    if workers < 1:
        raise InputError(f"workers must be a positive integer, got {workers!r}")

    grid = [(float(a), float(b))
            for a in np.linspace(a_lo, a_hi, steps)
            for b in np.linspace(b_lo, b_hi, steps)]
    logger.info("Sweeping %d grid points with %d worker(s)", len(grid), workers)

    if workers == 1:
        rows = [_record_at(point) for point in grid]
    else:
        # map keeps results in grid order
        with Pool(workers) as pool:
            rows = pool.map(_record_at, grid)

    df = pd.DataFrame(rows, columns=SWEEP_COLUMNS)
    logger.info("Largest deviation from closed form: %.3g", df['max_deviation'].max())
    return df
