"""wignerlab: phase-space quantum mechanics for 1-D wavepackets.

Wigner quasiprobability transforms, exact affine Liouville flows for the
quadratic Hamiltonians (free, constant force, harmonic), and quantitative
analysis of wavepacket spreading, probability backflow, and long-time
dispersion.
"""

from .analysis import (
    HalfPlaneQuery,
    WidthReport,
    asymptotic_profile,
    extremum_time,
    gaussian_tangent_point,
    gaussian_width,
    half_iqr,
    half_plane_prob,
    hg_energy_ratio,
    l1_distance,
    locate_extremum,
    monotonicity_verdict,
    prob_right_of,
    shear_angle,
    square_wave_evolved_marginal,
    width_law_hg,
)
from .catalog import (
    CATALOG_NAMES,
    HG_OMEGA,
    SINC_B,
    SQUARE_WAVE_A,
    flow_states,
    mid_jump_grid,
    standard_states,
    stationarity_grid,
)
from .errors import (
    DomainError,
    GridError,
    MonotoneCaseError,
    NegativityError,
    NormalizationError,
    ShapeError,
    SymplecticError,
    TailMassError,
    WeightError,
    WignerlabError,
)
from .flows import (
    AffineFlow,
    ConstantForce,
    Free,
    Harmonic,
    QuadraticHamiltonian,
    apply_flow,
    compose,
    evolve_free_exact,
    evolve_free_padded,
    flow_for,
    identity_flow,
)
from .fourier import fourier_conjugate_grid
from .grids import Field2D, Grid1D, PhysContext, integrate, integrate_2d, interp_bilinear, make_grid
from .states import (
    GaussianParams,
    Wavefunction,
    gaussian_wavefunction,
    hermite_gauss,
    mix,
    sinc_wave,
    square_wave,
    state_from_target_profile,
)
from .wigner import (
    Density1D,
    MomentumWavefunction,
    WignerField,
    gaussian_wigner,
    marginal_p,
    marginal_q,
    momentum_representation,
    purity,
    shape_f,
    square_wave_p_marginal,
    square_wave_wigner,
    wigner_momentum_grid,
    wigner_transform,
)

__version__ = "0.1.0"

from .verify import CheckResult, SUITE_NAMES, report, run_suite  # noqa: E402
