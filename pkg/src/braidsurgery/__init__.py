"""Exact-arithmetic toolkit for braid closures and surgery presentations.

The pipeline: parse a braid word, check the crossing hypotheses,
rewrite rational surgeries on the closure into integral diagrams,
decorate the diagrams with Legendrian data, enumerate the decorations,
and compute the distinguishing invariants (counts, |H1|, signature,
c1^2, theta) plus the block model of the limiting end.
"""

from .braid import (
    BraidError,
    BraidWord,
    ComponentPartition,
    CrossingStats,
    HypothesisReport,
    ReductionBudgetExceeded,
    check_hypothesis,
    compose,
    crossing_stats,
    dehornoy_floor_at_least,
    delta_squared_times,
    example_braid,
    format_braid,
    garside,
    handle_reduce,
    inverse,
    is_sigma_negative,
    is_sigma_positive,
    is_trivial,
    parse_braid,
    permutation,
    power,
    square_knot_recipe,
)
from .cfrac import (
    CFracError,
    NegContFrac,
    SlopeVector,
    convergents,
    eval_cfrac,
    neg_cfrac,
    phi,
    phi_vector,
)
from .legendrian import (
    HypothesisError,
    LegendrianComponent,
    LegendrianError,
    ThetaReport,
    WeinsteinDiagram,
    c1_pairing,
    contactomorphism_lower_bound,
    enumerate_weinstein,
    front_stats,
    isotopy_class_count,
    legendrian_unknot,
    link_front_stats,
    stabilize_to,
    theta,
    unknot_menu,
    validate_weinstein,
)
from .limits import (
    BlockDecomposition,
    CoeffStream,
    LimitsError,
    SignTuple,
    block_decomposition,
    end_slope,
    gluing_matrix,
    properly_isotopic,
    shuffle_class_count,
    shuffle_normal_form,
    sign_of,
    sign_tuple_from_dict,
    sign_tuple_to_dict,
    stabilization_to_slices,
    truncation_consistency,
)
from .surgery import (
    INF,
    HomologyReport,
    SingularityError,
    SurgeryComponent,
    SurgeryDiagram,
    SurgeryError,
    axis_surgery,
    expand_general,
    h1_invariants,
    h1_order,
    h1_presentation_matrix,
    homology,
    linking_matrix,
    lspace_family_diagram,
    rational_surgery,
    rolfsen_twist,
    slam_dunk_expand,
    slam_dunk_meridian,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
