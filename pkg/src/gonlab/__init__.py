"""gonlab: exact chip-firing games and graph gonality."""

from .certificates import (
    Bramble,
    Scramble,
    TreeCutDecomposition,
    bramble_order,
    egg_cut_number,
    hitting_number,
    scramble_order,
    treecut_width,
    uniform_scramble,
    validate_bramble,
    verify_outdegree_bounds,
)
from .dhar import (
    BurnOutcome,
    RankResult,
    burn,
    dollar_game_winnable,
    q_reduce,
    q_reduce_trace,
    rank,
    verify_riemann_roch,
)
from .divisors import (
    Divisor,
    FiringScript,
    apply_script,
    canonical_divisor,
    find_spread_representative,
    is_equivalent,
    linear_system,
    unit_divisor,
    zero_divisor,
)
from .gonality import (
    BoundsReport,
    GonalityResult,
    SearchBudget,
    SearchBudgetExceeded,
    bounds_report,
    enumerate_winning_divisors,
    gonality,
    higher_gonality,
    upper_bound_independence,
    upper_bound_product,
)
from .graphs import (
    Multigraph,
    cartesian_product,
    complete,
    complete_multipartite,
    cube,
    cycle,
    dodecahedron,
    hypercube,
    icosahedron,
    is_isomorphic_small,
    octahedron,
    path,
    tetrahedron,
)
from .parking import (
    is_parking_function,
    parking_functions,
    unwinnable_placements,
    verify_bijection,
    verify_coordinate_bound,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
