"""Exact Hilbert depth of squarefree edge-ideal modules for graph families."""
from .alpha import (AlphaVector, Ideal, Quotient, Relative, alpha_bruteforce, alpha_cycle_closed,
                    alpha_cycle_mod_path, alpha_double_star_ideal, alpha_double_star_ideal_exact,
                    alpha_path_closed, alpha_star_ideal, alpha_tree_dp)
from .engines import available_engines, compute_alpha
from .exactmath import binom, binom_row, gbinom
from .graphs import (Custom, Cycle, DoubleBroom, DoubleStar, GeneralizedStar, Graph, Path, Star, build, is_forest,
                     load_graph)
from .hilbert import (BetaRow, HdepthResult, alpha_from_beta, beta_row, beta_row_descend, beta_table, hdepth,
                      hdepth_relative_cycle_shortcut)

__version__ = "0.1.0"

__all__ = [
    "AlphaVector",
    "BetaRow",
    "Custom",
    "Cycle",
    "DoubleBroom",
    "DoubleStar",
    "GeneralizedStar",
    "Graph",
    "HdepthResult",
    "Ideal",
    "Path",
    "Quotient",
    "Relative",
    "Star",
    "alpha_bruteforce",
    "alpha_cycle_closed",
    "alpha_cycle_mod_path",
    "alpha_double_star_ideal",
    "alpha_double_star_ideal_exact",
    "alpha_from_beta",
    "alpha_path_closed",
    "alpha_star_ideal",
    "alpha_tree_dp",
    "available_engines",
    "beta_row",
    "beta_row_descend",
    "beta_table",
    "binom",
    "binom_row",
    "build",
    "compute_alpha",
    "gbinom",
    "hdepth",
    "hdepth_relative_cycle_shortcut",
    "is_forest",
    "load_graph",
]
