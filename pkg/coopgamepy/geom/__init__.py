from .feasible_set import (
    FeasibleSet,
    PayoffPoint,
    Segment,
    contains,
    dominates,
    feasible_set,
    frontier_distance,
    support,
)

__all__ = ['FeasibleSet', 'PayoffPoint', 'Segment', 'contains', 'dominates', 'feasible_set',
           'frontier_distance', 'support']
