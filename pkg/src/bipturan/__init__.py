"""Exact computations for even cycles in bipartite graphs.

Extremal constructions, exact bipartite Turan numbers ex(m, n, C_2t) at small
sizes, witness search for the structural path and fan lemmas, and exhaustive
or seeded random counterexample sweeps.
"""

__version__ = "0.1.0"

from .bigraph import (
    BipartiteGraph,
    BlockDecomposition,
    VertexRef,
    block_decomposition,
    complete,
    components,
    e_between,
    from_edge_list,
    is_2connected,
    is_connected,
    is_good_pair,
    parse_graph,
    format_graph,
    read_graph,
    remove_vertices,
    rho,
    write_graph,
    xv,
    yv,
)
from .constructions import (
    ExtremalParamsGyori,
    ExtremalParamsL,
    build_gyori_extremal,
    build_L,
    edge_count_L,
    known_bounds,
    varrho,
)
from .cycles import (
    CycleWitness,
    SpectrumReport,
    circumference,
    cycle_through_X,
    even_spectrum,
    find_cycle_of_length,
    is_bipancyclic,
    is_hamilton_biconnected,
    is_hamiltonian,
    is_weakly_bipancyclic,
    is_weakly_bipancyclic_from4,
    longest_cycle,
)
from .enumeration import (
    TuranResult,
    Violation,
    enumerate_graphs,
    probe_outside_range,
    turan_exact,
    verify_theorem,
)
from .witnesses import (
    DppWitness,
    FanWitness,
    PathWitness,
    detached_maximal_dpp,
    dpp_good_pair,
    extend_to_maximal,
    find_fan,
    is_maximal_path,
    long_path_between,
    maximal_path_with_terminus,
)
