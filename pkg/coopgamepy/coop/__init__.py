from .solutions import (
    Bimatrix,
    LambdaSolution,
    NtuSolution,
    PureEquilibrium,
    TuSolution,
    delta_of_lambda,
    lambda_transfer,
    nash_bargaining,
    ntu_nash,
    phi_of_lambda,
    pure_nash,
    sigma_of_lambda,
    tu_solution,
)

__all__ = ['Bimatrix', 'LambdaSolution', 'NtuSolution', 'PureEquilibrium', 'TuSolution',
           'delta_of_lambda', 'lambda_transfer', 'nash_bargaining', 'ntu_nash', 'phi_of_lambda',
           'pure_nash', 'sigma_of_lambda', 'tu_solution']
