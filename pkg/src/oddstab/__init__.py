"""Structure of dense graphs without a fixed odd cycle: suspension decompositions,
strong cores, and exact bipartization distances."""

__version__ = "0.1.0"

from .bipartization import (
    SolverResult, edge_bipartization, edge_bipartization_bruteforce, is_edge_bipartizer,
    is_transversal, maxcut_exact, oct_bruteforce, oct_exact,
)
from .core import (
    CoreCertificate, CoreFailure, CorePreconditionError, Extension, NeighborhoodViolation,
    check_common_neighborhood_bound, find_extension, grow_strong_core, verify_core,
)
from .decomposition import (
    DiagnosticFailure, Suspension, SuspensionDecomposition, Verdict, balance_ok,
    certifies_free_of_odd_cycle, decompose, derived_bounds, equality_case,
    theorem_preconditions, threshold_edges, verify_decomposition,
)
from .families import (
    FamilySpec, make_blowup_c5, make_complete, make_complete_bipartite, make_cycle,
    make_planted, make_random, make_tstar, make_turan, tstar_gamma2, turan_edges,
)
from .formats import (
    GraphParseError, from_edge_list, from_graph6, parse_graph, read_graph, to_edge_list,
    to_graph6, write_graph,
)
from .graph import (
    BipartitenessWitness, BlockCutTree, Graph, InducedSubgraph, biconnected_components,
    is_bipartite, min_degree_peel,
)
from .harness import CheckRecord, VerificationReport, run_suite
from .parity import (
    OddCycleWitness, ParityPathFinder, ParityReachability, PathWitness,
    bounded_parity_simple_path, has_cycle_of_length, parity_bfs, shortest_odd_cycle,
)
