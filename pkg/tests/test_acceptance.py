"""
End-to-end checks of the solvers on the counter-terrorism games and on
large randomized batches
"""

import io
import json
import time

import numpy as np
import pytest

from coopgamepy.cli import main
from coopgamepy.coop.solutions import (
    Bimatrix,
    delta_of_lambda,
    lambda_transfer,
    ntu_nash,
    pure_nash,
    sigma_of_lambda,
    tu_solution,
)
from coopgamepy.analysis.sweep import sweep_normalized
from coopgamepy.geom.feasible_set import feasible_set
from coopgamepy.matgame.zero_sum import certificate, solve, value_bounds
from coopgamepy.models.counter_terrorism import NormalizedParams, normalized_game


class TestBasicGame:
    """The 3x3 game with B=4, c=6, b=6, C=4"""

    def test_noncooperative_baseline(self, basic):
        """Test the single pure equilibrium (Deter, Deter) at (-2, -2)"""
        eqs = pure_nash(basic)
        assert [(e.row, e.col, tuple(e.payoff)) for e in eqs] == [(2, 2, (-2.0, -2.0))]

    def test_three_methods_agree(self, basic):
        """Test TU, NTU bargaining and lambda transfer all give (2, 2)"""
        tu = tu_solution(basic)
        assert (tu.sigma, tu.side_payment) == pytest.approx((4.0, 0.0), abs=1e-9)
        assert tu.disagreement == pytest.approx((-2.0, -2.0), abs=1e-9)

        ntu = ntu_nash(basic)
        assert ntu.point == pytest.approx((2.0, 2.0), abs=1e-9)
        assert ntu.nash_product == pytest.approx(16.0, abs=1e-9)

        lam = lambda_transfer(basic)
        assert lam.lambda_star == pytest.approx(1.0, abs=1e-6)
        assert lam.point == pytest.approx((2.0, 2.0), abs=1e-6)

    @pytest.mark.parametrize('lam, sigma', [(0.25, 4.5), (0.5, 3.0), (1.0, 4.0), (2.0, 6.0), (3.0, 12.0)])
    def test_sigma_and_delta(self, basic, lam, sigma):
        """Test sigma(lambda) and delta(lambda) = 2 - 2 lambda at the sample points"""
        assert sigma_of_lambda(basic, lam) == pytest.approx(sigma, abs=1e-9)
        assert delta_of_lambda(basic, lam) == pytest.approx(2.0 - 2.0 * lam, abs=1e-9)


class TestNormalizedFamily:
    """The two-parameter family checked against its closed form"""

    def test_fifty_by_fifty_grid(self):
        """Test every grid point agrees with the closed form within 1e-6 in under 30 s"""
        start = time.perf_counter()
        df = sweep_normalized((1.01, 1.99), (1.01, 1.99), 50)
        elapsed = time.perf_counter() - start

        assert len(df) == 2500
        assert df['max_deviation'].max() <= 1e-6
        assert np.allclose(df['solution_u'], 2 - df['alpha'], atol=1e-6)
        assert np.allclose(df['disagreement_u'], -(2 - df['beta']), atol=1e-6)
        assert np.allclose(df['lambda_star'], 1.0, atol=1e-6)
        assert elapsed <= 30.0

    def test_delta_saddle_for_every_lambda(self, rng):
        """Test delta(lambda) = (1 - lambda)(2 - beta) on random parameters"""
        for alpha, beta in rng.uniform(1.01, 1.99, size=(20, 2)):
            g = normalized_game(NormalizedParams(alpha=alpha, beta=beta))
            for lam in (0.2, 0.5, 1.0, 2.0, 5.0):
                assert delta_of_lambda(g, lam) == pytest.approx((1 - lam) * (2 - beta), abs=1e-9)

    def test_sigma_on_its_range(self, rng):
        """Test sigma(lambda) = (lambda + 1)(2 - alpha) where the cooperative cell is best"""
        for alpha, beta in rng.uniform(1.01, 1.99, size=(20, 2)):
            g = normalized_game(NormalizedParams(alpha=alpha, beta=beta))
            lo = (alpha + max(alpha, beta)) / 2 - 1
            for lam in np.linspace(lo, 1.0, 5):
                assert sigma_of_lambda(g, lam) == pytest.approx((lam + 1) * (2 - alpha), abs=1e-9)


class TestRandomBatches:
    """Large randomized batches"""

    def test_thousand_matrix_games(self, rng):
        """Test duality gap, value bounds and fairness of skew-symmetric games"""
        for _ in range(1000):
            rows, cols = rng.integers(1, 7, size=2)
            m = rng.uniform(-10, 10, size=(rows, cols))
            result = solve(m)
            low, high = certificate(m, result)
            assert high - low <= 1e-8
            maximin, minimax = value_bounds(m)
            assert maximin - 1e-9 <= result.value <= minimax + 1e-9

            n = rng.integers(1, 7)
            k = rng.uniform(-10, 10, size=(n, n))
            assert solve(k - k.T).value == pytest.approx(0.0, abs=1e-9)

    def test_bargaining_against_brute_force(self, rng, sample_frontier):
        """Test the segment-wise maximum against a 100,000-point frontier scan"""
        checked = 0
        while checked < 100:
            rows, cols = rng.integers(2, 5, size=2)
            g = Bimatrix(A=rng.uniform(-10, 10, size=(rows, cols)),
                         B=rng.uniform(-10, 10, size=(rows, cols)))
            ntu = ntu_nash(g)
            if ntu.degenerate:
                continue
            samples = sample_frontier(feasible_set(g.payoff_pairs()), 100_000)
            products = (samples[:, 0] - ntu.threat.u) * (samples[:, 1] - ntu.threat.v)
            assert products.max() <= ntu.nash_product + 1e-9
            assert products.max() >= ntu.nash_product - 1e-4
            checked += 1


class TestCommandLine:
    """The model | solve | plot pipeline"""

    def test_model_solve_plot(self, capsys, monkeypatch, tmp_path):
        """Test the serialized basic game reproduces every basic-game result"""
        assert main(['model', 'basic']) == 0
        game_text = capsys.readouterr().out

        reports = []
        for _ in range(2):
            monkeypatch.setattr('sys.stdin', io.StringIO(game_text))
            assert main(['solve', '-', '--method', 'all']) == 0
            reports.append(capsys.readouterr().out)
        assert reports[0] == reports[1]

        results = json.loads(reports[0])['results']
        assert results['nash'] == [{'row': 2, 'col': 2, 'payoff': [-2.0, -2.0]}]
        assert results['tu']['phi'] == [2.0, 2.0]
        assert results['tu']['side_payment'] == 0.0
        assert results['ntu-nash']['nash_product'] == 16.0
        assert results['ntu-lambda']['point'] == pytest.approx([2.0, 2.0], abs=1e-6)

        game = tmp_path / 'basic.json'
        game.write_text(game_text, encoding='utf-8')
        svg = tmp_path / 'basic.svg'
        assert main(['plot', str(game), '-o', str(svg)]) == 0
        assert '<g id="frontier">' in svg.read_text(encoding='utf-8')
