import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from wignerlab import (
    Density1D,
    GaussianParams,
    Grid1D,
    NegativityError,
    gaussian_wavefunction,
    gaussian_wigner,
    hermite_gauss,
    marginal_p,
    marginal_q,
    mid_jump_grid,
    momentum_representation,
    purity,
    shape_f,
    square_wave,
    square_wave_p_marginal,
    square_wave_wigner,
    wigner_momentum_grid,
    wigner_transform,
)


def test_momentum_grid_covers_one_kernel_period(ctx, gauss_grid):
    pg = wigner_momentum_grid(gauss_grid, ctx)
    assert pg.n == 2 * gauss_grid.n + 1
    assert_allclose(pg.max, np.pi * ctx.hbar / (2 * gauss_grid.spacing))
    dy = 2 * gauss_grid.spacing / ctx.hbar
    assert_allclose(pg.spacing * dy * (pg.n - 1), 2 * np.pi)


def test_gaussian_transform_matches_closed_form(ctx, gauss_grid):
    params = GaussianParams(0.0, 0.0, 1.0)
    psi = gaussian_wavefunction(params, gauss_grid, ctx)
    pg = wigner_momentum_grid(gauss_grid, ctx)
    w = wigner_transform(psi, pg)
    ref = gaussian_wigner(params, ctx)(
        gauss_grid.points()[:, None], pg.points()[None, :]
    )
    assert np.max(np.abs(w.values - ref)) < 1e-10
    assert_allclose(np.max(w.values), 1 / np.pi, atol=1e-10)


def test_moving_gaussian_mean(ctx, gauss_grid):
    """First moments of the transform sit at (q0, p0)."""
    params = GaussianParams(-1.0, 1.0, 1.0)
    psi = gaussian_wavefunction(params, gauss_grid, ctx)
    pg = wigner_momentum_grid(gauss_grid, ctx)
    w = wigner_transform(psi, pg)
    q = gauss_grid.points()
    p = pg.points()
    mean_q = np.trapezoid(np.trapezoid(w.values, dx=pg.spacing, axis=1) * q, dx=gauss_grid.spacing)
    mean_p = np.trapezoid(np.trapezoid(w.values, dx=gauss_grid.spacing, axis=0) * p, dx=pg.spacing)
    assert_allclose(mean_q, params.q0, atol=1e-9)
    assert_allclose(mean_p, params.p0, atol=1e-9)


def test_square_wave_transform_matches_closed_form(ctx):
    a = 1.3
    g = mid_jump_grid(a, 511, 256)
    psi = square_wave(a, g, ctx)
    w = wigner_transform(psi, wigner_momentum_grid(g, ctx))
    ref = square_wave_wigner(a, ctx)(g.points()[:, None], w.pgrid.points()[None, :])
    assert np.max(np.abs(w.values - ref)) < 1e-3
    # quasiprobability: genuinely negative regions
    assert w.values.min() < -0.01


def test_square_wave_wigner_zero_outside_support(ctx):
    ev = square_wave_wigner(1.3, ctx)
    assert ev(0.7, 1.0) == 0.0
    assert ev(-0.66, 0.0) == 0.0
    assert ev(0.0, 0.0) > 0.0


def test_marginals_match_densities(ctx, gauss_grid):
    psi = gaussian_wavefunction(GaussianParams(-1.0, 1.0, 1.0), gauss_grid, ctx)
    pg = wigner_momentum_grid(gauss_grid, ctx)
    w = wigner_transform(psi, pg)
    assert np.max(np.abs(marginal_q(w).values - psi.density())) < 1e-12
    tilde = momentum_representation(psi, pg).density()
    assert np.max(np.abs(marginal_p(w).values - tilde)) < 1e-12


def test_marginal_negativity_guard(ctx, gauss_grid):
    from dataclasses import replace

    from wignerlab import Field2D

    psi = gaussian_wavefunction(GaussianParams(0.0, 0.0, 1.0), gauss_grid, ctx)
    w = wigner_transform(psi, wigner_momentum_grid(gauss_grid, ctx))
    # push the field down so the tail marginal goes clearly negative
    bad = replace(w, field=Field2D(w.qgrid, w.pgrid, w.values - 1e-3))
    with pytest.raises(NegativityError):
        marginal_q(bad)
    # the clamp threshold can be raised to accept the same field
    assert marginal_q(bad, clamp_tol=1.0).values.min() == 0.0


def test_square_wave_p_marginal_limit(ctx):
    a = 1.3
    assert_allclose(square_wave_p_marginal(a, 0.0, ctx), a / (2 * np.pi))
    p = np.linspace(-10, 10, 201)
    vals = square_wave_p_marginal(a, p, ctx)
    assert_allclose(vals, (a / ctx.hbar) * shape_f(a * p / ctx.hbar), rtol=1e-12)


@given(t=st.floats(-80, 80))
@settings(max_examples=60, deadline=None)
def test_shape_f_nonnegative_and_even(t):
    assert shape_f(t) >= 0.0
    assert_allclose(shape_f(-t), shape_f(t), rtol=1e-12)


def test_shape_f_peak_and_normalization():
    assert_allclose(shape_f(0.0), 1 / (2 * np.pi))
    t = np.linspace(-3000, 3000, 2_000_001)
    assert_allclose(np.trapezoid(shape_f(t), t), 1.0, atol=1e-3)


def test_purity_pure_and_flow_invariance(ctx, gauss_grid):
    psi = gaussian_wavefunction(GaussianParams(0.0, 0.0, 1.0), gauss_grid, ctx)
    w = wigner_transform(psi, wigner_momentum_grid(gauss_grid, ctx))
    assert_allclose(purity(w), 1.0, atol=1e-9)


def test_purity_hermite(ctx):
    g = Grid1D(-15.0, 15.0, 513)
    psi = hermite_gauss(3, 1.0, g, ctx)
    w = wigner_transform(psi, wigner_momentum_grid(g, ctx))
    assert_allclose(purity(w), 1.0, atol=1e-6)


def test_density_cdf_and_quantile():
    g = Grid1D(0.0, 1.0, 101)
    rho = Density1D(g, np.full(101, 1.0))
    assert_allclose(rho.total(), 1.0)
    assert_allclose(rho.cdf()[-1], 1.0)
    assert_allclose(rho.quantile(0.5), 0.5, atol=1e-12)
    assert_allclose(rho.quantile(0.75), 0.75, atol=1e-12)


def test_transform_on_arbitrary_pgrid_matches_closed_form(ctx):
    # the direct kernel path, exercised by a non-canonical momentum grid
    params = GaussianParams(0.0, 0.0, 1.0)
    g = Grid1D(-12.0, 12.0, 257)
    psi = gaussian_wavefunction(params, g, ctx)
    pg = Grid1D(-3.0, 3.0, 101)
    w = wigner_transform(psi, pg)
    ref = gaussian_wigner(params, ctx)(g.points()[:, None], pg.points()[None, :])
    assert np.max(np.abs(w.values - ref)) < 1e-8
