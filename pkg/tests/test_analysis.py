import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from wignerlab import (
    Density1D,
    DomainError,
    GaussianParams,
    Grid1D,
    HalfPlaneQuery,
    MonotoneCaseError,
    NormalizationError,
    ShapeError,
    asymptotic_profile,
    extremum_time,
    gaussian_tangent_point,
    gaussian_wavefunction,
    gaussian_width,
    half_iqr,
    half_plane_prob,
    hg_energy_ratio,
    l1_distance,
    locate_extremum,
    mix,
    monotonicity_verdict,
    prob_right_of,
    shape_f,
    shear_angle,
    square_wave_evolved_marginal,
    width_law_hg,
    wigner_momentum_grid,
    wigner_transform,
)


def _gauss_w(ctx, params=GaussianParams(-1.0, 1.0, 1.0), n=513):
    g = Grid1D(-25.0, 25.0, n)
    psi = gaussian_wavefunction(params, g, ctx)
    return wigner_transform(psi, wigner_momentum_grid(g, ctx))


def test_shear_angle_values():
    assert_allclose(shear_angle(0.0, 1.0), np.pi / 2)
    assert shear_angle(1.0, 1.0) > np.pi / 2
    assert shear_angle(-1.0, 1.0) < np.pi / 2
    assert_allclose(shear_angle(1.0, 1.0) + shear_angle(-1.0, 1.0), np.pi)


def test_half_plane_vertical_split_of_centered_gaussian(ctx):
    w = _gauss_w(ctx, GaussianParams(0.0, 0.0, 1.0))
    assert_allclose(half_plane_prob(w, HalfPlaneQuery(0.0, np.pi / 2)), 0.5, atol=1e-9)


def test_half_plane_antisymmetry(ctx):
    w = _gauss_w(ctx)
    total = w.total()
    for theta in np.linspace(0, np.pi, 16, endpoint=False):
        s = half_plane_prob(w, HalfPlaneQuery(0.4, theta)) + half_plane_prob(
            w, HalfPlaneQuery(0.4, theta + np.pi)
        )
        assert_allclose(s, total, atol=1e-9)


def test_extremum_time_formula(ctx):
    params = GaussianParams(-1.0, 1.0, 1.0)
    # -m p0 sigma_q^2 / ((q1 - q0) sigma_p^2) with sigma_p = 1/2
    assert_allclose(extremum_time(params, 0.0, 1.0, ctx), -4.0)
    with pytest.raises(MonotoneCaseError):
        extremum_time(params, params.q0, 1.0, ctx)


def test_prob_right_extremum_location(ctx):
    w = _gauss_w(ctx)
    t_found = locate_extremum(lambda t: prob_right_of(w, 0.0, t, 1.0), -10.0, 2.0)
    assert abs(t_found - (-4.0)) < 0.05


def test_prob_right_nonmonotonic_curve(ctx):
    w = _gauss_w(ctx)
    vals = [prob_right_of(w, 0.0, t, 1.0) for t in np.linspace(-10, 10, 64)]
    assert monotonicity_verdict(vals) == "non-monotonic"


def test_mixed_state_f_theta_nonmonotonic(ctx):
    g = Grid1D(-25.0, 25.0, 513)
    pg = wigner_momentum_grid(g, ctx)
    wa = wigner_transform(gaussian_wavefunction(GaussianParams(-3.0, 0.0, 1.0), g, ctx), pg)
    wb = wigner_transform(gaussian_wavefunction(GaussianParams(3.0, 1.0, 1.0), g, ctx), pg)
    wm = mix([wa, wb], [0.5, 0.5])
    vals = [half_plane_prob(wm, HalfPlaneQuery(0.5, th)) for th in np.linspace(0, np.pi, 32)]
    assert monotonicity_verdict(vals) == "non-monotonic"


def test_gaussian_tangent_point_geometry(ctx):
    params = GaussianParams(0.0, 0.0, 1.0)
    tq, tp = gaussian_tangent_point(params, 1.0, 0.0, ctx)
    assert_allclose((tq, tp), (1.0, 0.0))
    # the tangent point stays on the one-sigma ellipse for all t
    for t in (0.5, 2.0, 7.0):
        tq, tp = gaussian_tangent_point(params, 1.0, t, ctx)
        sp = params.sigma_p(ctx)
        assert_allclose((tq / params.sigma_q) ** 2 + (tp / sp) ** 2, 1.0, rtol=1e-12)


def test_gaussian_width_endpoint(ctx):
    params = GaussianParams(0.0, 0.0, 1.0)
    assert_allclose(gaussian_width(params, 1.0, 0.0, ctx), 1.0)
    assert_allclose(gaussian_width(params, 1.0, 2.0, ctx), np.sqrt(2.0))
    # algebraic identity: sigma_q sqrt(1 + (sigma_p t / sigma_q m)^2)
    sp = params.sigma_p(ctx)
    for t in (0.3, 1.7):
        expected = params.sigma_q * np.hypot(1.0, sp * t / (params.sigma_q * 1.0))
        assert_allclose(gaussian_width(params, 1.0, t, ctx), expected, rtol=1e-12)


def test_half_iqr_of_standard_normal():
    from scipy.stats import norm

    g = Grid1D(-8.0, 8.0, 4001)
    vals = norm.pdf(g.points())
    rho = Density1D(g, vals / np.trapezoid(vals, dx=g.spacing))
    assert_allclose(half_iqr(rho), norm.ppf(0.75), atol=1e-4)
    with pytest.raises(NormalizationError):
        half_iqr(Density1D(g, vals * 3))


def test_width_law_hg_values():
    assert_allclose(width_law_hg(2.0, 1.0, 0.0), 2.0)
    assert_allclose(width_law_hg(1.0, 2.0, 1.0), np.sqrt(5.0))
    with pytest.raises(ValueError):
        width_law_hg(-1.0, 1.0, 0.0)


def test_hg_energy_ratio(ctx):
    for n in (0, 2):
        assert abs(hg_energy_ratio(n, 1.0, 1.0, ctx) - 1.0) < 0.01


def test_asymptotic_profile_rescaling():
    g = Grid1D(-2.0, 2.0, 201)
    vals = np.exp(-g.points() ** 2)
    rho = Density1D(g, vals / np.trapezoid(vals, dx=g.spacing))
    prof = asymptotic_profile(rho, m=1.0, t=4.0)
    assert_allclose(prof.grid.max, 8.0)
    assert_allclose(prof.total(), rho.total(), rtol=1e-12)
    with pytest.raises(DomainError):
        asymptotic_profile(rho, 1.0, 0.0)


@given(st.lists(st.floats(0.001, 5.0), min_size=3, max_size=30))
@settings(max_examples=50, deadline=None)
def test_monotonicity_verdict_on_cumulative_sums(steps):
    xs = np.cumsum(steps)  # strictly increasing by construction
    assert monotonicity_verdict(xs) == "increasing"
    assert monotonicity_verdict(xs[::-1]) == "decreasing"


def test_monotonicity_verdict_guards():
    with pytest.raises(ShapeError):
        monotonicity_verdict([1.0, 2.0])
    assert monotonicity_verdict([0.0, 1.0, 0.5]) == "non-monotonic"


def test_square_wave_evolved_marginal_normalized(ctx):
    a, t = 1.3, 5.0
    # the evolved density has a 1/q^2 far tail; the window must be wide
    # for the on-grid mass to approach 1
    span = 600 * t / a
    rho = square_wave_evolved_marginal(a, t, Grid1D(-span, span, 4001), ctx)
    assert_allclose(rho.total(), 1.0, atol=2e-3)
    with pytest.raises(DomainError):
        square_wave_evolved_marginal(a, 0.0, Grid1D(-5, 5, 101), ctx)


def test_evolved_marginal_approaches_universal_shape(ctx):
    a, m = 1.3, 1.0
    t = 40.0
    span = 60 * t / a
    g = Grid1D(-span, span, 4001)
    rho = square_wave_evolved_marginal(a, t, g, ctx)
    profile = Density1D(g, (a * m / t) * shape_f(a * m * g.points() / t))
    assert l1_distance(rho, profile) < 1e-4


def test_l1_distance_requires_shared_grid():
    g = Grid1D(0.0, 1.0, 11)
    rho = Density1D(g, np.ones(11))
    other = Density1D(Grid1D(0.0, 2.0, 11), np.ones(11))
    with pytest.raises(ShapeError):
        l1_distance(rho, other)
    assert l1_distance(rho, rho) == 0.0
