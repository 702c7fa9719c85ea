"""rigidcensus: graph rigidity, congruence canonical forms, and exact
distance-set censuses for finite point configurations.

Exact rational arithmetic end to end in every counting and rank path; a
compiled kernel accelerates the tuple enumerations when available (see
rigidcensus.kernels.backend_name).
"""

from .census import (
    CensusReport,
    EnergyReport,
    PinReport,
    TreeProjection,
    distance_energy,
    graph_distance_census,
    pinned_distance_set,
    rich_pins_greedy,
    tree_projection_bound,
)
from .congruence import (
    CanonicalForm,
    CongruenceCensusReport,
    ExactCongruenceKey,
    apply_isometry,
    canonical_form,
    congruence_census,
    congruent_exact,
    exact_congruence_key,
    moving_frame_coords,
    pin_to_origin,
)
from .errors import BudgetExceededError, ParseError
from .geometry import (
    ConfigTuple,
    Point,
    PointSet,
    is_nonsingular,
    lattice_point_set,
    load_config_tuple,
    load_point_set,
    parse_config_tuple,
    parse_point_set,
    random_point_set,
    squared_distance,
)
from .graphs import (
    FLEXIBLE,
    MINIMALLY_RIGID,
    RIGID_WITH_REDUNDANCY,
    Graph,
    complete_graph,
    is_connected,
    laman_check,
    load_graph,
    parse_graph,
    pebble_game_2_3,
    spanning_tree,
)
from .kernels import DEFAULT_TUPLE_BUDGET, backend_name, compiled_available
from .rigidity import (
    INF_RIGID,
    MINIMALLY_INF_RIGID,
    DistanceVector,
    RigidityMatrix,
    RigidityReport,
    classify_generic,
    distance_map,
    exact_rank,
    generic_rank,
    generic_rank_failure_bound,
    is_edge_set_independent,
    is_regular_tuple,
    motion_dims,
    rigidity_matrix,
)

__version__ = "0.1.0"
