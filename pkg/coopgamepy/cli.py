"""
Command-Line Interface for CoopGamePy

    coopgame solve <file|-> [--method M] [--threat u,v] [--lambda-bracket lo,hi] [--tol x]
    coopgame model basic|general|normalized [--B --c --b --C | --alpha --beta] [-o file]
    coopgame sweep --alpha lo:hi --beta lo:hi --steps n [--workers k]
    coopgame plot <file|-> -o out.svg

Exit status: 0 success, 2 bad input, 3 parameter or domain violation,
4 solver non-convergence.
"""

import argparse
import logging
import sys
from typing import List, Optional, Tuple

from . import __version__
from .config import DEFAULT_LAMBDA_BRACKET, DEFAULT_LAMBDA_TOL
from .exceptions import CoopGameError, InputError
from .analysis.sweep import sweep_normalized
from .export.game_io import (
    METHODS,
    GameSpec,
    build_solve_report,
    dump_game_spec,
    dump_report,
    load_game_spec,
)
from .models.counter_terrorism import (
    GeneralParams,
    NormalizedParams,
    basic_game,
    general_game,
    normalized_game,
)
from .plotting.feasible_plot import plot_feasible_set

logger = logging.getLogger(__name__)


def _pair(sep: str):
    def parse(text: str) -> Tuple[float, float]:
        parts = text.split(sep)
        if len(parts) != 2:
            raise argparse.ArgumentTypeError(f"expected two numbers separated by '{sep}', got {text!r}")
        try:
            return float(parts[0]), float(parts[1])
        except ValueError:
            raise argparse.ArgumentTypeError(f"not a pair of numbers: {text!r}")
    return parse


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='coopgame',
        description='Cooperative solutions of two-player bimatrix games',
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='log progress (-v) or solver internals (-vv) to stderr')
    commands = parser.add_subparsers(dest='command', required=True)

    solve = commands.add_parser('solve', help='solve a game file and print a JSON report')
    solve.add_argument('file', help="game file, or '-' for standard input")
    solve.add_argument('--method', choices=METHODS, default='all')
    solve.add_argument('--threat', type=_pair(','), metavar='U,V',
                       help='threat point for the NTU bargaining solution')
    solve.add_argument('--lambda-bracket', type=_pair(','), metavar='LO,HI',
                       default=DEFAULT_LAMBDA_BRACKET)
    solve.add_argument('--tol', type=float, default=DEFAULT_LAMBDA_TOL)

    model = commands.add_parser('model', help='write a counter-terrorism game file')
    model.add_argument('kind', choices=['basic', 'general', 'normalized'])
    for name in ('B', 'c', 'b', 'C', 'alpha', 'beta'):
        model.add_argument(f'--{name}', dest=name, type=float)
    model.add_argument('-o', '--output', help='output file (default: standard output)')

    sweep = commands.add_parser('sweep', help='check the normalized family against its closed form')
    sweep.add_argument('--alpha', type=_pair(':'), required=True, metavar='LO:HI')
    sweep.add_argument('--beta', type=_pair(':'), required=True, metavar='LO:HI')
    sweep.add_argument('--steps', type=int, required=True)
    sweep.add_argument('--workers', type=int, default=1)

    plot = commands.add_parser('plot', help='draw the feasible set of a game as SVG')
    plot.add_argument('file', help="game file, or '-' for standard input")
    plot.add_argument('-o', '--output', required=True)

    return parser


def cmd_solve(args) -> int:
    spec = load_game_spec(args.file)
    report = build_solve_report(spec, method=args.method, threat=args.threat,
                                bracket=args.lambda_bracket, tol=args.tol)
    sys.stdout.write(dump_report(report))
    return 0


def _require_params(args, names: List[str], kind: str) -> List[float]:
    missing = [f'--{n}' for n in names if getattr(args, n) is None]
    if missing:
        raise InputError(f"model {kind} needs {' '.join(missing)}")
    return [getattr(args, n) for n in names]


def cmd_model(args) -> int:
    if args.kind == 'basic':
        g, name = basic_game(), 'basic'
    elif args.kind == 'general':
        B, c, b, C = _require_params(args, ['B', 'c', 'b', 'C'], 'general')
        g = general_game(GeneralParams(B=B, c=c, b=b, C=C))
        name = f'general(B={B:g}, c={c:g}, b={b:g}, C={C:g})'
    else:
        alpha, beta = _require_params(args, ['alpha', 'beta'], 'normalized')
        g = normalized_game(NormalizedParams(alpha=alpha, beta=beta))
        name = f'normalized(alpha={alpha:g}, beta={beta:g})'

    text = dump_game_spec(GameSpec.from_bimatrix(g, name))
    if args.output:
        with open(args.output, 'w', encoding='utf-8') as f:
            f.write(text)
        logger.info("Game file written to %s", args.output)
    else:
        sys.stdout.write(text)
    return 0


def cmd_sweep(args) -> int:
    df = sweep_normalized(args.alpha, args.beta, args.steps, workers=args.workers)
    df.to_csv(sys.stdout, index=False, float_format='%.12g')
    return 0


def cmd_plot(args) -> int:
    spec = load_game_spec(args.file)
    plot_feasible_set(spec.to_bimatrix(), args.output, threat=spec.threat, title=spec.name)
    return 0


COMMANDS = {
    'solve': cmd_solve,
    'model': cmd_model,
    'sweep': cmd_sweep,
    'plot': cmd_plot,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')

    try:
        return COMMANDS[args.command](args)
    except CoopGameError as e:
        print(f"Error: {e}", file=sys.stderr)
        return e.exit_code
    except OSError as e:
        print(f"Error: {e}", file=sys.stderr)
        return InputError.exit_code


if __name__ == '__main__':
    sys.exit(main())
