from .cones import (
    OrderingCone,
    algebraic_kernel,
    g_zero,
    image_cone,
    is_regular,
    kernel_image,
    minkowski_cone,
    natural_cone,
    regularize,
)
from .exceptions import (
    CandidateModeError,
    EmptyGraphError,
    InfeasibleProblemError,
    IrregularConeError,
    MembershipError,
    SetOptimizationError,
)
from .mapping import (
    PolyMapping,
    coordinate_names,
    domain,
    in_domain,
    in_kernel,
    in_recession_domain,
    recession_mapping,
    value,
)
from .problem import (
    Problem,
    augment_with_cone,
    from_vlp,
    is_bounded,
    is_feasible,
    require_feasible,
    upper_image,
    upper_image_homog,
)
from .relaxation import vectorial_relaxation
