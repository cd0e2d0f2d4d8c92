"""Exact fixed-parameter solvers for Connected Vertex Cover.

Decision, real-weighted and counting variants, all running within a
2^k * poly(n) envelope, plus brute-force oracles and combinatorial verifiers
used to validate them.
"""

from .approx import approx_cvc
from .backend import HAVE_C_KERNEL, default_backend
from .compression import (
    CompressionInstance,
    CompressionResult,
    SplitResult,
    WorkLedger,
    build_steiner_subinstance,
    count_solutions,
    solve_weighted,
    validate_split,
)
from .errors import InputFormatError, ResourceLimitError
from .graph import (
    ContractionMap,
    Graph,
    RootedTree,
    connected_components,
    contract,
    dfs_tree,
    induced_subgraph,
    is_connected_subset,
    is_vertex_cover,
    peel_order,
    peel_order_with_suffix,
)
from .oracle import (
    PhiPrimeCode,
    brute_force,
    check_component_bound,
    cover_component_pairs,
    enumerate_connected_graphs,
    phi_prime_encode,
)
from .solver import (
    CvcSolution,
    SolveDiagnostics,
    count_cvc,
    find_cvc,
    preprocess,
    solve_wcvc,
)
from .steiner import (
    SteinerCountTable,
    SteinerInstance,
    SteinerTable,
    UNREACHABLE,
    build_count_table,
    build_min_weight_table,
    count_at_most,
    solve_min_cardinality,
    solve_min_weight,
)

__version__ = "0.1.0"
