from .game_io import GameSpec, build_solve_report, dump_game_spec, dump_report, load_game_spec, load_report

__all__ = ['GameSpec', 'build_solve_report', 'dump_game_spec', 'dump_report', 'load_game_spec', 'load_report']
