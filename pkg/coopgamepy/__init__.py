"""
CoopGamePy - Cooperative Solutions of Two-Player Bimatrix Games

Solves finite two-player games by the TU threat-game method, the NTU Nash
bargaining model and the NTU lambda-transfer approach, and ships the
counter-terrorism policy games used to check them against closed forms.
"""

__version__ = "0.1.0"
__author__ = "CoopGamePy Development Team"

from .matgame.zero_sum import MixedStrategy, GameValue, solve, saddle_point, value_bounds
from .geom.feasible_set import PayoffPoint, Segment, FeasibleSet, feasible_set, contains, support
from .coop.solutions import (
    Bimatrix,
    TuSolution,
    NtuSolution,
    LambdaSolution,
    pure_nash,
    tu_solution,
    ntu_nash,
    lambda_transfer,
)
from .models.counter_terrorism import (
    GeneralParams,
    NormalizedParams,
    basic_game,
    general_game,
    normalized_game,
    closed_form,
    frontier_segments,
)
from .export.game_io import GameSpec, load_game_spec, build_solve_report
from .analysis.sweep import sweep_normalized
from .plotting.feasible_plot import plot_feasible_set
from .exceptions import CoopGameError, InputError, ConstraintError, DomainError, ConvergenceError

__all__ = [
    'MixedStrategy',
    'GameValue',
    'solve',
    'saddle_point',
    'value_bounds',
    'PayoffPoint',
    'Segment',
    'FeasibleSet',
    'feasible_set',
    'contains',
    'support',
    'Bimatrix',
    'TuSolution',
    'NtuSolution',
    'LambdaSolution',
    'pure_nash',
    'tu_solution',
    'ntu_nash',
    'lambda_transfer',
    'GeneralParams',
    'NormalizedParams',
    'basic_game',
    'general_game',
    'normalized_game',
    'closed_form',
    'frontier_segments',
    'GameSpec',
    'load_game_spec',
    'build_solve_report',
    'sweep_normalized',
    'plot_feasible_set',
    'CoopGameError',
    'InputError',
    'ConstraintError',
    'DomainError',
    'ConvergenceError',
]
