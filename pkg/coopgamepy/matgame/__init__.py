from .zero_sum import (
    GameValue,
    MixedStrategy,
    as_matrix,
    certificate,
    saddle_point,
    solve,
    value_bounds,
)

__all__ = ['GameValue', 'MixedStrategy', 'as_matrix', 'certificate', 'saddle_point', 'solve', 'value_bounds']
