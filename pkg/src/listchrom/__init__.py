"""Multi-fold list colouring engine for 3-choice-critical graph families."""

from .errors import (
    CapExceeded,
    DomainMismatch,
    EvenPath,
    Infeasible,
    InvalidParams,
    InvalidSpec,
    ListChromError,
    NotFound,
    UnsupportedFamily,
    WidthViolation,
)
from .graphs import (
    Classification,
    FamilySpec,
    Graph,
    classify,
    classify_graph,
    core,
    even_cycle,
    graph_from_edges,
    odd_cycle,
    realize,
    spec_from_json,
    spec_to_json,
    theta,
    two_cycles_joined,
    two_cycles_shared,
)
from .inequality import (
    ParamTuple,
    binom_plus,
    check_convolution_identities,
    check_half_bound,
    check_monotonicity,
    count_blocking_selections,
)
from .lists import (
    FoldColouring,
    ListAssignment,
    adversarial_sweep,
    assignment,
    random_assignment,
    validate,
)
from .oracle import (
    BadSetReport,
    brute_force_colour,
    enumerate_bad_sets,
    exhaustive_choosable,
    find_uncolourable_assignment,
)
from .paths import (
    PathInstance,
    PathProfile,
    colour_path,
    damage,
    damage_closed_form,
    decide_colourable,
    path_instance,
    profile,
    profile_lower_bound,
    subtract,
)
from .colourer import (
    CoupleProfile,
    CoupleTable,
    Decomposition,
    SimplePair,
    classify_couples,
    colour_family,
    colour_two_cycle_family,
    decompose,
    find_simple_pair,
    merge_reduce,
)

__version__ = "0.1.0"
