"""
Tests for the counter-terrorism policy games
"""

import numpy as np
import pytest

from coopgamepy.coop.solutions import delta_of_lambda, lambda_transfer, ntu_nash, phi_of_lambda, tu_solution
from coopgamepy.exceptions import ConstraintError, DomainError
from coopgamepy.geom.feasible_set import feasible_set
from coopgamepy.models.counter_terrorism import (
    CaseTag,
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


class TestConstructors:
    """Test cases for the game constructors"""

    def test_basic_is_general_instance(self):
        """Test the basic game is the general game at B=4, c=6, b=6, C=4"""
        assert general_game(GeneralParams(B=4, c=6, b=6, C=4)) == basic_game()

    def test_labels(self, basic):
        """Test strategies carry policy names"""
        assert basic.row_labels == ('Preempt', 'Status Quo', 'Deter')
        assert basic.col_labels == basic.row_labels

    def test_normalized_matrix(self):
        """Test the normalized game at alpha = beta = 1.5"""
        g = normalized_game(NormalizedParams(alpha=1.5, beta=1.5))
        np.testing.assert_allclose(g.A, [[0.5, -0.5, -1.5],
                                         [1.0, 0.0, -1.0],
                                         [1.5, 0.5, -0.5]])
        np.testing.assert_allclose(g.B, g.A.T)

    @pytest.mark.parametrize('params, rule', [
        (dict(B=4, c=9, b=6, C=4), 'c < 2B'),
        (dict(B=4, c=3, b=6, C=4), 'B < c'),
        (dict(B=4, c=6, b=3, C=4), 'C < b'),
        (dict(B=4, c=6, b=9, C=4), 'b < 2C'),
        (dict(B=-1, c=6, b=6, C=4), 'B > 0'),
    ])
    def test_general_constraints(self, params, rule):
        """Test every defining inequality is named when violated"""
        with pytest.raises(ConstraintError, match=rule):
            GeneralParams(**params)

    @pytest.mark.parametrize('alpha, beta', [(2.0, 1.5), (1.0, 1.5), (1.5, 2.0), (1.5, 0.5)])
    def test_normalized_constraints(self, alpha, beta):
        """Test alpha and beta must lie strictly inside (1, 2)"""
        with pytest.raises(ConstraintError):
            NormalizedParams(alpha=alpha, beta=beta)


class TestClosedForm:
    """Test cases for the closed-form solutions"""

    @pytest.mark.parametrize('alpha, beta', [(1.3, 1.7), (1.7, 1.3), (1.5, 1.5), (1.01, 1.99)])
    def test_agrees_with_solvers(self, alpha, beta):
        """Test the closed form against the generic pipeline"""
        p = NormalizedParams(alpha=alpha, beta=beta)
        g = normalized_game(p)
        expected = closed_form(p)

        tu = tu_solution(g)
        assert tu.phi == pytest.approx(tuple(expected.tu_phi), abs=1e-9)
        assert tu.disagreement == pytest.approx(tuple(expected.disagreement), abs=1e-9)
        assert tu.sigma == pytest.approx(expected.sigma, abs=1e-9)
        assert tu.delta == pytest.approx(expected.delta, abs=1e-9)

        ntu = ntu_nash(g)
        assert ntu.point == pytest.approx(tuple(expected.ntu_point), abs=1e-9)
        assert ntu.nash_product == pytest.approx(expected.nash_product, abs=1e-9)

        lam = lambda_transfer(g)
        assert lam.lambda_star == pytest.approx(expected.lambda_star, abs=1e-6)
        assert lam.point == pytest.approx(tuple(expected.lambda_point), abs=1e-6)

    def test_nash_product_value(self):
        """Test the product at alpha=1.7, beta=1.3 equals (4 - alpha - beta)^2"""
        p = NormalizedParams(alpha=1.7, beta=1.3)
        assert closed_form(p).nash_product == pytest.approx(1.0)
        assert ntu_nash(normalized_game(p)).nash_product == pytest.approx(1.0, abs=1e-9)

    def test_no_side_payment(self):
        """Test the cooperative cell needs no transfer"""
        p = NormalizedParams(alpha=1.4, beta=1.6)
        assert closed_form(p).side_payment == 0.0
        assert tu_solution(normalized_game(p)).side_payment == pytest.approx(0.0, abs=1e-9)

    def test_case_tags(self):
        """Test the three regimes"""
        assert case_tag(NormalizedParams(1.3, 1.7)) is CaseTag.ALPHA_LESS
        assert case_tag(NormalizedParams(1.7, 1.3)) is CaseTag.ALPHA_GREATER
        assert case_tag(NormalizedParams(1.5, 1.5)) is CaseTag.EQUAL


class TestFrontierSegments:
    """Test cases for the labelled frontier"""

    def _chain(self, segments):
        points = [segments[0].segment.a] + [s.segment.b for s in segments]
        return [tuple(pytest.approx(x) for x in p) for p in points]

    @pytest.mark.parametrize('alpha, beta', [(1.3, 1.7), (1.5, 1.5), (1.8, 1.2), (1.6, 1.4)])
    def test_matches_computed_frontier(self, alpha, beta):
        """Test the labelled pieces coincide with the hull's frontier"""
        p = NormalizedParams(alpha=alpha, beta=beta)
        segments = frontier_segments(p)
        computed = feasible_set(normalized_game(p).payoff_pairs()).frontier_points
        assert [tuple(x) for x in computed] == self._chain(segments)

    def test_labels_by_case(self):
        """Test two pieces when alpha <= beta and four otherwise"""
        assert [s.label for s in frontier_segments(NormalizedParams(1.3, 1.7))] == ['P1', 'P2']
        assert [s.label for s in frontier_segments(NormalizedParams(1.5, 1.5))] == ['P1', 'P2']
        assert [s.label for s in frontier_segments(NormalizedParams(1.8, 1.2))] == \
            ['outer-left', 'Q1', 'Q2', 'outer-right']

    @pytest.mark.parametrize('alpha, beta', [(1.3, 1.7), (1.8, 1.2)])
    def test_line_equations(self, alpha, beta):
        """Test each stated line passes through its segment's endpoints"""
        for piece in frontier_segments(NormalizedParams(alpha=alpha, beta=beta)):
            for end in (piece.segment.a, piece.segment.b):
                assert piece.slope * end.u + piece.intercept == pytest.approx(end.v)
            assert piece.slope == pytest.approx(piece.segment.slope)


class TestLambdaFormulas:
    """Test cases for the lambda-path formulas"""

    @pytest.mark.parametrize('lam', [0.1, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 10.0])
    def test_basic_path(self, basic, lam):
        """Test the piecewise phi(lambda) of the basic game"""
        assert basic_sigma_of_lambda(lam) == pytest.approx(float(np.max(lam * basic.A + basic.B)))
        assert phi_of_lambda(basic, lam) == pytest.approx(tuple(basic_lambda_path(lam)), abs=1e-9)

    def test_basic_path_needs_positive_lambda(self):
        """Test lambda <= 0 is outside the domain"""
        with pytest.raises(DomainError):
            basic_lambda_path(0.0)
        with pytest.raises(DomainError):
            basic_sigma_of_lambda(-1.0)

    @pytest.mark.parametrize('alpha, beta', [(1.3, 1.7), (1.7, 1.3), (1.5, 1.5)])
    def test_normalized_path(self, alpha, beta):
        """Test phi(lambda) on the interval where sigma is linear"""
        p = NormalizedParams(alpha=alpha, beta=beta)
        g = normalized_game(p)
        lo, hi = sigma_range(p)
        for lam in np.linspace(max(lo, 0.05), hi, 5):
            assert phi_of_lambda(g, lam) == pytest.approx(tuple(lambda_path(p, lam)), abs=1e-9)

    @pytest.mark.parametrize('lam', [0.2, 0.5, 1.0, 2.0, 5.0])
    def test_delta_closed_form(self, lam):
        """Test the (Deter, Deter) saddle of lambda*U - V"""
        p = NormalizedParams(alpha=1.35, beta=1.65)
        assert delta_of_lambda(normalized_game(p), lam) == pytest.approx(delta_closed_form(p, lam), abs=1e-9)

    def test_product_vertex_right_of_cooperative_point(self):
        """Test the unconstrained maximizer lies beyond 2 - alpha"""
        p = NormalizedParams(alpha=1.3, beta=1.7)
        gap = (4 - p.alpha - p.beta) ** 2 / (2 * (p.alpha + p.beta - 2))
        assert product_vertex(p) - (2 - p.alpha) == pytest.approx(gap)

    def test_side_condition(self):
        """Test the cell-ordering inequality"""
        assert side_condition(NormalizedParams(alpha=1.8, beta=1.2))
        assert not side_condition(NormalizedParams(alpha=1.05, beta=1.95))
