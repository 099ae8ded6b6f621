"""Exact combinatorics of Borel subalgebras of gl(m|n).

Borels with the standard even part are partitions in the m x n
rectangle; odd reflections are single-box moves, assembling into an
edge-colored Young lattice.  The package builds that lattice, contracts
it at a weight, classifies walks, tracks per-Borel Weyl vectors and
Verma character numerators, and ships exhaustive desk-scale
verification sweeps for the structural laws relating all of these.
"""

from .weights import (
    OddRoot,
    Rank,
    TupleWeight,
    Weight,
    atypicality,
    ber,
    bilinear_form,
    is_antidominant,
    is_dominant,
    is_integral,
    is_regular,
    parse_weight,
    rho,
    rho_one_distinguished,
    rho_zero,
    tuple_decode,
    tuple_encode,
)
from .borels import (
    Box,
    EpsDeltaSequence,
    Partition,
    SignedOddRoot,
    all_partitions,
    box_to_root,
    monotone_walk,
    odd_positive_roots,
    odd_reflection,
    partition_to_sequence,
    rho_b,
    root_to_box,
    sequence_to_partition,
    simple_odd_roots,
    transport_simple,
    transport_verma,
)
from .lattice import (
    ColoredGraph,
    ContractionColorError,
    RainbowConflictError,
    Walk,
    bridges,
    build_lattice,
    contract_at_weight,
    contract_colors,
    distances,
    geodesically_maximal,
    graph_from_json,
    is_path_graph,
    is_rainbow,
    is_shortest,
    mutually_unique_maximal_pairs,
    rainbow_endpoint_map,
    to_dot,
    to_json,
)
from .characters import LaurentPoly, characters_equal_iff, monomial, verma_numerator
from .analysis import (
    SweepConfig,
    VerificationReport,
    WeightDiagram,
    defect_sweep,
    diagram_condition,
    is_totally_disconnected,
    is_typical,
    run_all,
    weight_diagram,
)

__version__ = "0.1.0"
