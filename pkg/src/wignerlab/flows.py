"""Exact affine Liouville flows for the three quadratic Hamiltonians.

For quadratic H the Wigner function is advected like a classical
phase-space density: W_t = W_0 o (flow_t)^{-1}.  Flows are stored as the
forward map z -> A z + b; the pullback uses the closed-form 2x2 inverse.

``evolve_free_exact`` is the independent wavefunction-side oracle: it
multiplies the momentum representation by the free propagator phase and
transforms back, never touching phase space.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SymplecticError
from .fourier import fourier_conjugate_grid, to_momentum, to_position
from .grids import Field2D, interp_bilinear, Grid1D
from .states import Wavefunction
from .wigner import WignerField


@dataclass(frozen=True)
class Free:
    """H = p^2 / 2m."""

    m: float = 1.0

    def __post_init__(self):
        if not self.m > 0:
            raise ValueError(f"mass must be positive, got {self.m}")


@dataclass(frozen=True)
class ConstantForce:
    """H = p^2 / 2m - F q."""

    m: float = 1.0
    force: float = 1.0

    def __post_init__(self):
        if not self.m > 0:
            raise ValueError(f"mass must be positive, got {self.m}")


@dataclass(frozen=True)
class Harmonic:
    """H = p^2 / 2m + m omega^2 q^2 / 2."""

    m: float = 1.0
    omega: float = 1.0

    def __post_init__(self):
        if not self.m > 0:
            raise ValueError(f"mass must be positive, got {self.m}")
        if not self.omega > 0:
            raise ValueError(f"omega must be positive, got {self.omega}")


QuadraticHamiltonian = Free | ConstantForce | Harmonic

_DET_TOL = 1e-9


@dataclass(frozen=True)
class AffineFlow:
    """Area-preserving affine map of phase space: z -> matrix @ z + shift."""

    matrix: np.ndarray
    shift: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=float).reshape(2, 2)
        s = np.asarray(self.shift, dtype=float).reshape(2)
        det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
        if abs(det - 1.0) > _DET_TOL:
            raise SymplecticError(f"map must preserve area, got det = {det!r}")
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "shift", s)

    def apply(self, q, p):
        m, s = self.matrix, self.shift
        return m[0, 0] * q + m[0, 1] * p + s[0], m[1, 0] * q + m[1, 1] * p + s[1]

    def inverse(self) -> "AffineFlow":
        a, b, c, d = self.matrix.ravel()
        det = a * d - b * c
        inv = np.array([[d, -b], [-c, a]]) / det
        return AffineFlow(inv, -inv @ self.shift)


def identity_flow() -> AffineFlow:
    return AffineFlow(np.eye(2), np.zeros(2))


def flow_for(hamiltonian: QuadraticHamiltonian, t: float) -> AffineFlow:
    """Forward-time classical flow of Hamilton's equations after time t.

    The constant-force flow keeps the kinetic shear term t/m in the
    matrix: the characteristics are q(t) = q + pt/m + F t^2 / 2m,
    p(t) = p + F t, which reduce to the free shear at F = 0.
    """
    if isinstance(hamiltonian, Free):
        return AffineFlow(np.array([[1.0, t / hamiltonian.m], [0.0, 1.0]]), np.zeros(2))
    if isinstance(hamiltonian, ConstantForce):
        m, f = hamiltonian.m, hamiltonian.force
        return AffineFlow(
            np.array([[1.0, t / m], [0.0, 1.0]]),
            np.array([f * t**2 / (2 * m), f * t]),
        )
    if isinstance(hamiltonian, Harmonic):
        m, om = hamiltonian.m, hamiltonian.omega
        c, s = np.cos(om * t), np.sin(om * t)
        return AffineFlow(np.array([[c, s / (m * om)], [-m * om * s, c]]), np.zeros(2))
    raise TypeError(f"unknown Hamiltonian {hamiltonian!r}")


def compose(f: AffineFlow, g: AffineFlow) -> AffineFlow:
    """(f o g)(z) = f(g(z))."""
    return AffineFlow(f.matrix @ g.matrix, f.matrix @ g.shift + f.shift)


def apply_flow(w: WignerField, flow: AffineFlow) -> WignerField:
    """Advect a Wigner field: W_new(z) = W_old(flow^{-1}(z)).

    Pullback points outside the source grid read 0.  Evaluation is
    blocked over q-rows to bound temporary memory.
    """
    det = float(np.linalg.det(flow.matrix))
    if abs(det - 1.0) > _DET_TOL:
        raise SymplecticError(f"flow must preserve area, got det = {det!r}")
    inv = flow.inverse()
    q = w.qgrid.points()
    p = w.pgrid.points()
    out = np.empty((w.qgrid.n, w.pgrid.n))
    step = max(1, 2**22 // w.pgrid.n)
    for lo in range(0, w.qgrid.n, step):
        qq = q[lo:lo + step, None]
        src_q, src_p = inv.apply(qq, p[None, :])
        out[lo:lo + step] = interp_bilinear(w.field, src_q, src_p)
    return WignerField(Field2D(w.qgrid, w.pgrid, out), w.ctx)


def evolve_free_padded(psi: Wavefunction, t: float) -> Wavefunction:
    """Free evolution on a zero-padded copy of psi's grid, cropped back.

    The plain FFT oracle lives on a periodic domain, so momentum
    components faster than (half-width)/t wrap around and land back on
    the grid as spurious interference.  Padding widens the domain until
    even the fastest representable component, p_max = pi hbar / dq,
    cannot cross it within time t.
    """
    grid, ctx = psi.grid, psi.ctx
    dq = grid.spacing
    p_max = np.pi * ctx.hbar / dq
    extra = int(np.ceil(1.2 * p_max * abs(t) / (ctx.mass * dq)))
    if extra == 0:
        return evolve_free_exact(psi, t, fourier_conjugate_grid(grid, ctx))
    wide = Grid1D(grid.min - extra * dq, grid.max + extra * dq, grid.n + 2 * extra)
    amps = np.zeros(wide.n, dtype=complex)
    amps[extra:extra + grid.n] = psi.amps
    evolved = evolve_free_exact(
        Wavefunction(wide, amps, ctx), t, fourier_conjugate_grid(wide, ctx)
    )
    return Wavefunction(grid, evolved.amps[extra:extra + grid.n], ctx)


def evolve_free_exact(psi: Wavefunction, t: float, pgrid: Grid1D) -> Wavefunction:
    """Exact free-particle Schroedinger evolution via momentum space.

    Multiplies the momentum representation by exp(-i p^2 t / 2 m hbar)
    and transforms back to psi's own grid.  On the Fourier-conjugate
    momentum grid the round trip is exactly unitary.
    """
    ctx = psi.ctx
    amps_p = to_momentum(psi.amps, psi.grid, pgrid, ctx)
    amps_p = amps_p * np.exp(-1j * pgrid.points() ** 2 * t / (2 * ctx.mass * ctx.hbar))
    amps = to_position(amps_p, pgrid, psi.grid, ctx)
    return Wavefunction(psi.grid, amps, ctx)
