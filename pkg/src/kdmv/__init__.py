"""Exact computation of k-distance mutual-visibility colorings and relatives.

The package keeps graphs as immutable per-vertex bitmasks, solves chi_mu_k,
mu_k, theta, chi_imu2 and the domination numbers exactly by deterministic
branch and bound, re-derives the closed-form colorings of the standard
families as verified certificates, and ships a corpus harness that checks the
underlying theorems on exhaustively generated small graphs.
"""

from .coloring import Coloring, SolveResult
from .errors import (
    BudgetExceeded,
    ConditionError,
    ConnectivityError,
    DistanceError,
    DomainError,
    KdmvError,
    ParseError,
    SizeError,
    SpecError,
    VerificationError,
)
from .graph import (
    INF,
    MAX_N,
    CenterInfo,
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    blocks,
    complement,
    exact_distance_graph,
    girth,
    is_block_graph,
    is_convex,
    metrics,
    product,
)
from .graph6 import parse_edge_list, parse_graph6, to_edge_list, to_graph6
from .families import from_spec, generate
from .visibility import (
    VisibilityOracle,
    classify_q_n_diam2_set,
    geodesic_avoiding_exists,
    is_kdmv_set,
    is_mv_set,
    max_kdmv,
)
from .chromatic import (
    chi_i_mu2_exact,
    chi_mu_k_exact,
    clique_cover_theta,
    greedy_kdmv_upper,
    proper_chromatic,
    verify_kdmv_coloring,
)
from .domination import (
    efficient_open_dominating_set,
    gamma_exact,
    gamma_k_exact,
    gamma_t_exact,
    neighborhood_i2dmv_partition,
    rho2_exact,
    total_dom_partition,
)
from .checks import CheckSpec, Report, counterexample_search, run_suite

__version__ = "0.1.0"
