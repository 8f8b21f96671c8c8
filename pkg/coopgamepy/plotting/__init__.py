from .feasible_plot import plot_feasible_set

__all__ = ['plot_feasible_set']
