"""Special-function toolkit around Legendre's third singular modulus.

Elliptic integrals by AGM and Carlson forms, Jacobi elliptic functions,
gamma/beta closed forms, the lemniscate three-body choreography, the
cubic-lattice return probability, and a verification harness that checks
every identity numerically.
"""

from .choreography import (
    BodyState,
    ChoreographyConfig,
    ChoreographyScan,
    Vec2,
    body_state,
    center_of_mass_residual,
    choreography_scan,
    export_trajectories,
    lemniscate_position,
    lemniscate_velocity,
    max_residual_norm,
    three_body_positions,
)
from .elliptic import (
    Modulus,
    amplitude_add,
    bisection_amplitude,
    bowman_integral,
    carlson_rf,
    complete_E,
    complete_K,
    incomplete_F,
    legendre_R,
    ratio_Kprime_over_K,
    series_f,
    singular_modulus,
    trisection_amplitude,
)
from .errors import ConfigurationError, DivergenceError, DomainError, RangeError
from .gammafn import beta, gamma, log_gamma
from .jacobi import JacobiTriple, invert_sn, jacobi_sncndn
from .quadrature import QuadratureSpec
from .ramanujan import (
    EllipseSpec,
    K_sin15_gamma_form,
    PendulumSpec,
    pendulum_period,
    perimeter_quadrature,
    ramanujan_perimeter_gamma,
)
from .randomwalk import (
    WalkEstimate,
    lattice_integrand,
    mc_return_probability,
    polya_return_probability,
    watson_W,
    watson_W_plus,
)
from .verify import (
    IdentityCheck,
    VerificationReport,
    render_report,
    run_verification,
)

__version__ = "0.1.0"

__all__ = [
    "BodyState", "ChoreographyConfig", "ChoreographyScan", "Vec2",
    "body_state", "center_of_mass_residual",
    "choreography_scan", "export_trajectories", "lemniscate_position",
    "lemniscate_velocity", "max_residual_norm", "three_body_positions",
    "Modulus", "amplitude_add", "bisection_amplitude", "bowman_integral",
    "carlson_rf", "complete_E", "complete_K", "incomplete_F", "legendre_R",
    "ratio_Kprime_over_K", "series_f", "singular_modulus", "trisection_amplitude",
    "ConfigurationError", "DivergenceError", "DomainError", "RangeError",
    "beta", "gamma", "log_gamma",
    "JacobiTriple", "invert_sn", "jacobi_sncndn",
    "QuadratureSpec",
    "EllipseSpec", "K_sin15_gamma_form", "PendulumSpec", "pendulum_period",
    "perimeter_quadrature", "ramanujan_perimeter_gamma",
    "WalkEstimate", "lattice_integrand", "mc_return_probability",
    "polya_return_probability", "watson_W", "watson_W_plus",
    "IdentityCheck", "VerificationReport", "render_report", "run_verification",
]
