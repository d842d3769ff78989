"""Desk-scale constructions of vector distance graphs and brute-force checks on them."""

from .cliques import (
    BoundInapplicableError,
    chi_lower_bound,
    clique_exceeding,
    clique_number,
    count_cliques,
    enumerate_cliques,
    independence_number,
    independent_set_exceeding,
    johnson_bound,
    max_clique,
    max_independent_set,
    turan_min_edges,
)
from .cycles import (
    CycleWitness,
    check_cycle_witness,
    even_cycle_witness,
    intersection_step_violations,
    odd_girth,
    shortest_odd_cycle,
)
from .deletion import DeletionReport, deletion_simulation, internal_edge_count
from .fprank import (
    FpMatrix,
    binomial_basis_coefficients,
    forbidden_residue_polynomial,
    fp_rank_check,
    random_maximal_independent_set,
    reduced_polynomial_value,
)
from .graphs import (
    BitGraph,
    GraphTooLargeError,
    VectorGraph,
    build_graph,
    enumerate_compositions,
    read_edge_list,
    write_edge_list,
)
