#!/usr/bin/env python3
"""
Demo script solving the counter-terrorism games and comparing every solver
with its closed form
"""

import sys
from pathlib import Path

import coopgamepy as cgp
from coopgamepy.models.counter_terrorism import frontier_segments


def demo_basic_game():
    print("\n✓ Basic game (B=4, c=6, b=6, C=4)...")
    g = cgp.basic_game()
    for eq in cgp.pure_nash(g):
        print(f"  - Pure equilibrium: ({g.row_labels[eq.row]}, {g.col_labels[eq.col]}) "
              f"at ({eq.payoff.u:.6g}, {eq.payoff.v:.6g})")

    tu = cgp.tu_solution(g)
    print(f"  - TU: sigma={tu.sigma:.6g}, delta={tu.delta:.6g}, "
          f"phi=({tu.phi.u:.6g}, {tu.phi.v:.6g}), side payment={tu.side_payment:.6g}")

    ntu = cgp.ntu_nash(g)
    print(f"  - NTU Nash: ({ntu.point.u:.6g}, {ntu.point.v:.6g}), product={ntu.nash_product:.6g}")

    lam = cgp.lambda_transfer(g)
    print(f"  - Lambda transfer: lambda*={lam.lambda_star:.6g} "
          f"after {lam.iterations} gap evaluations")
    return g


def demo_normalized_game(alpha, beta):
    print(f"\n✓ Normalized game (alpha={alpha}, beta={beta})...")
    p = cgp.NormalizedParams(alpha=alpha, beta=beta)
    g = cgp.normalized_game(p)
    predicted = cgp.closed_form(p)
    print(f"  - Case: {predicted.case_tag.value}")
    for piece in frontier_segments(p):
        print(f"    {piece.label}: v = {piece.slope:.6g} u + {piece.intercept:.6g}")

    ntu = cgp.ntu_nash(g)
    error = max(abs(ntu.point.u - predicted.ntu_point.u), abs(ntu.point.v - predicted.ntu_point.v))
    print(f"  - Solved ({ntu.point.u:.6g}, {ntu.point.v:.6g}) vs closed form "
          f"({predicted.ntu_point.u:.6g}, {predicted.ntu_point.v:.6g}), error {error:.2e}")


def demo_sweep():
    print("\n✓ Sweeping a 10 x 10 grid of the normalized family...")
    df = cgp.sweep_normalized((1.05, 1.95), (1.05, 1.95), 10)
    print(f"  - {len(df)} games, largest deviation from closed form {df['max_deviation'].max():.2e}")
    print(df.groupby('case_tag').size().to_string())


def main(out_dir="."):
    print("🤝 CoopGamePy Demo")
    print("=" * 50)

    g = demo_basic_game()
    demo_normalized_game(1.3, 1.7)
    demo_normalized_game(1.7, 1.3)
    demo_sweep()

    svg = Path(out_dir) / "basic_game.svg"
    cgp.plot_feasible_set(g, svg, title="Basic counter-terrorism game")
    print(f"\n✓ Feasible set saved to {svg}")


if __name__ == "__main__":
    main(*sys.argv[1:2])
