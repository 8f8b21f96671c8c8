from .counter_terrorism import (
    CaseTag,
    ClosedFormPrediction,
    FrontierSegment,
    GeneralParams,
    NormalizedParams,
    basic_game,
    basic_lambda_path,
    basic_sigma_of_lambda,
    case_tag,
    closed_form,
    delta_closed_form,
    frontier_segments,
    general_game,
    lambda_path,
    normalized_game,
    product_vertex,
    side_condition,
    sigma_range,
)

__all__ = ['CaseTag', 'ClosedFormPrediction', 'FrontierSegment', 'GeneralParams', 'NormalizedParams',
           'basic_game', 'basic_lambda_path', 'basic_sigma_of_lambda', 'case_tag', 'closed_form',
           'delta_closed_form', 'frontier_segments', 'general_game', 'lambda_path', 'normalized_game',
           'product_vertex', 'side_condition', 'sigma_range']
