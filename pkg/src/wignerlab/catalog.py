"""Reference states on tuned grids, shared by the verification suite.

Two grid families per state:

* a "standard" grid sized so the discrete Wigner marginal identities hold
  to 1e-6 (the square wave needs a very fine spacing because its momentum
  tail decays like 1/p^2 and aliases back into the band);
* a "flow" grid sized for the free-evolution cross-check, where the
  evolved support must stay inside the box at the largest test time.

``grid_n`` scales every node count, so coarser, faster variants of the
whole catalog stay internally consistent.
"""

from __future__ import annotations

import numpy as np

from .grids import Grid1D, PhysContext
from .states import (
    GaussianParams,
    Wavefunction,
    gaussian_wavefunction,
    hermite_gauss,
    sinc_wave,
    square_wave,
)

#: names of the five reference states, in canonical order
CATALOG_NAMES = ("gaussian", "moving-gaussian", "hermite-2", "square-wave", "sinc")

SQUARE_WAVE_A = 1.3
SINC_B = 2.0
HG_OMEGA = 1.0

#: sinc-state box half-width: a zero of sinc(b q / 2 hbar) for b = 2,
#: hbar = 1, so the trapezoid edge weights multiply exact zeros
SINC_SPAN = 20.0 * np.pi


def mid_jump_grid(a: float, jumps: int, margin: int) -> Grid1D:
    """Symmetric grid with a node at 0 whose spacing a / (2 jumps + 1)
    puts the density jumps at +-a/2 exactly halfway between nodes.

    Mid-cell jump placement keeps trapezoid quadrature of the
    discontinuous density second-order; margin counts extra cells past
    the jump on each side.
    """
    dq = a / (2 * jumps + 1)
    half = jumps + margin
    return Grid1D(-half * dq, half * dq, 2 * half + 1)


def standard_states(ctx: PhysContext = PhysContext(), grid_n: int = 512) -> dict[str, Wavefunction]:
    """The five reference states on their marginal-identity grids."""
    gauss_grid = Grid1D(-25.0, 25.0, grid_n + 1)
    return {
        "gaussian": gaussian_wavefunction(GaussianParams(0.0, 0.0, 1.0), gauss_grid, ctx),
        "moving-gaussian": gaussian_wavefunction(GaussianParams(-1.0, 1.0, 1.0), gauss_grid, ctx),
        "hermite-2": hermite_gauss(2, HG_OMEGA, Grid1D(-20.0, 20.0, 2 * grid_n + 1), ctx),
        "square-wave": square_wave(
            SQUARE_WAVE_A, mid_jump_grid(SQUARE_WAVE_A, grid_n - 1, grid_n // 2), ctx
        ),
        "sinc": sinc_wave(SINC_B, Grid1D(-SINC_SPAN, SINC_SPAN, grid_n + 1), ctx, tail_tol=0.01),
    }


def flow_states(ctx: PhysContext = PhysContext(), grid_n: int = 512) -> dict[str, Wavefunction]:
    """The five reference states on grids sized for free-flow checks.

    The square wave trades spacing for span: its Wigner interference
    fringes ride at momenta up to pi hbar / (2 dq), and after a shear by
    t the evolved support reaches p t, so the box must be wide while the
    spacing stays fine enough for bilinear pullback of the fringes.
    """
    jumps = max(2, grid_n // 20)
    states = dict(standard_states(ctx, grid_n))
    states["square-wave"] = square_wave(
        SQUARE_WAVE_A, mid_jump_grid(SQUARE_WAVE_A, jumps, 2 * grid_n - jumps), ctx
    )
    states["hermite-2"] = hermite_gauss(2, HG_OMEGA, Grid1D(-20.0, 20.0, 2 * grid_n + 1), ctx)
    states["sinc"] = sinc_wave(SINC_B, Grid1D(-SINC_SPAN, SINC_SPAN, 2 * grid_n + 1), ctx, tail_tol=0.01)
    return states


def stationarity_grid(n_max: int = 3, grid_n: int = 512, ctx: PhysContext = PhysContext()) -> Grid1D:
    """Square phase-space grid for harmonic-rotation invariance checks.

    Covers 1.6x the widest classical turning window of hermite_gauss(n)
    for n up to n_max; using the same grid for q and p makes the quarter
    and half rotations land exactly on grid nodes.
    """
    m, om = ctx.mass, HG_OMEGA
    span = np.sqrt((2 * n_max + 1) * ctx.hbar / (m * om)) + 4 * np.sqrt(ctx.hbar / (2 * m * om))
    return Grid1D(-1.6 * span, 1.6 * span, (3 * grid_n) // 2 + 1)
