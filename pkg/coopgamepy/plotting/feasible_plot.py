"""
Feasible-Set Figures for CoopGamePy

Draws the NTU feasible set of a game in the payoff plane together with its
Pareto frontier, the threat point, the three cooperative solutions and the
Nash-product level curve through the bargaining solution, and saves it as SVG.
"""

import logging
from pathlib import Path
from typing import IO, Optional, Sequence, Union

import matplotlib.pyplot as plt
import numpy as np

from ..coop.solutions import Bimatrix, lambda_transfer, ntu_nash, tu_solution
from ..exceptions import ConvergenceError
from ..geom.feasible_set import feasible_set

logger = logging.getLogger(__name__)

SVG_RC = {
    'svg.fonttype': 'none',
    'svg.hashsalt': 'coopgamepy',
}


def _fmt(x: float) -> str:
    return f"{round(float(x), 9) + 0.0:.6g}"


def plot_feasible_set(g: Bimatrix, output: Union[str, Path, IO],
                      threat: Optional[Sequence[float]] = None,
                      title: Optional[str] = None,
                      figsize=(7, 7)) -> Union[str, Path, IO]:
    """
    Save an SVG picture of a game's feasible set and cooperative solutions.

    Args:
        g: Bimatrix game
        output: File path or writable binary file object
        threat: Threat point for the bargaining solution (defaults to the
            TU disagreement point)
        title: Figure title
        figsize: Figure size in inches

    Returns:
        ``output``
    """
    s = feasible_set(g.payoff_pairs())
    tu = tu_solution(g)
    ntu = ntu_nash(g, threat)
    try:
        lam = lambda_transfer(g)
    except ConvergenceError as e:
        logger.warning("Lambda-transfer solution left out of the plot: %s", e)
        lam = None

    points = [*s.hull, tu.phi, ntu.point, ntu.threat]
    if lam is not None:
        points.append(lam.point)
    xy = np.array(points, dtype=float)
    lo = xy.min(axis=0)
    hi = xy.max(axis=0)
    pad = 0.1 * max(float(np.max(hi - lo)), 1.0)
    lo, hi = lo - pad, hi + pad

    with plt.rc_context(SVG_RC):
        fig, ax = plt.subplots(figsize=figsize)

        hull = s.vertices
        if len(hull) >= 3:
            patch, = ax.fill(hull[:, 0], hull[:, 1], color='#9ecae1', alpha=0.5,
                             edgecolor='#6baed6', label='Feasible set')
        else:
            patch, = ax.plot(hull[:, 0], hull[:, 1], color='#6baed6', marker='o',
                             linewidth=3, label='Feasible set')
        patch.set_gid('feasible-set')

        chain = np.array(s.frontier_points, dtype=float)
        frontier, = ax.plot(chain[:, 0], chain[:, 1], color='#08519c', linewidth=2.5,
                            marker='o', label='Pareto frontier')
        frontier.set_gid('frontier')
        for u, v in chain:
            ax.annotate(f"({_fmt(u)}, {_fmt(v)})", (u, v), textcoords='offset points',
                        xytext=(6, 6), fontsize=9)

        if ntu.nash_product > 0:
            c = ntu.nash_product
            u_star, v_star = ntu.threat
            u_start = u_star + c / (hi[1] - v_star)
            u = np.linspace(max(u_start, lo[0]), hi[0], 200)
            v = v_star + c / (u - u_star)
            keep = (v >= lo[1]) & (v <= hi[1])
            curve, = ax.plot(u[keep], v[keep], color='#756bb1', linestyle='--',
                             label=f"c={_fmt(c)}")
            curve.set_gid('nash-level-curve')

        markers = [
            ('threat-point', ntu.threat, 'Threat point', 'x', '#636363'),
            ('tu-solution', tu.phi, 'TU solution', 's', '#e6550d'),
            ('ntu-solution', ntu.point, 'NTU solution', 'D', '#31a354'),
        ]
        if lam is not None:
            markers.append(('lambda-solution', lam.point, f"lambda* = {_fmt(lam.lambda_star)}",
                            '^', '#d62728'))
        for gid, (u, v), label, marker, color in markers:
            dot = ax.scatter([u], [v], marker=marker, color=color, s=60, zorder=3, label=label)
            dot.set_gid(gid)

        ax.set_xlim(lo[0], hi[0])
        ax.set_ylim(lo[1], hi[1])
        ax.axhline(0, color='#bdbdbd', linewidth=0.8, zorder=0)
        ax.axvline(0, color='#bdbdbd', linewidth=0.8, zorder=0)
        ax.set_xlabel("Player 1's payoff")
        ax.set_ylabel("Player 2's payoff")
        ax.set_title(title or 'NTU feasible set', fontsize=12, fontweight='bold')
        ax.legend(loc='lower left', fontsize=8)
        ax.grid(True, alpha=0.3)

        fig.savefig(output, format='svg', metadata={'Date': None})
        plt.close(fig)

    logger.info("Feasible-set plot written to %s", output)
    return output
