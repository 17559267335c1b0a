"""Bounds for the first Dirichlet eigenvalue of the p-Laplacian on model geometries.

Lower bounds come in closed form from a comparison function with bounded
gradient and p-Laplacian bounded below (:mod:`ptone.bounds`); upper bounds
come from minimizing a discrete Rayleigh quotient on the radial reduction
(:mod:`ptone.eigensolver`).
"""

__version__ = "0.1.0"

from .bounds import (  # noqa: E402
    SubmersionData,
    hyperbolic_fundamental_tone_bound,
    space_form_ball_bound,
    submersion_bound,
    theorem1_bound,
    warped_bound,
)
from .eigensolver import (  # noqa: E402
    EigenResult,
    Grid,
    RadialProblem,
    SolverOptions,
    minimize,
    rayleigh_quotient,
    quotient_gradient,
    solve_ball,
    solve_slab,
    solve_warped,
    solve_with_refinement,
)
from .geometry import (  # noqa: E402
    CoshProfile,
    DomainError,
    LinearProfile,
    SampledProfile,
    SpaceForm,
    TestFunctionData,
    WarpedProduct,
    ball_volume_weight,
    distance_p_laplacian,
    load_profile,
    metric_coefficient,
    warped_volume_weight,
)
from .inverse import InverseQuery, radius_for_eigenvalue  # noqa: E402
