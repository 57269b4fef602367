"""Twelve end-to-end acceptance checks.

Each test prints one PASS/FAIL line (run pytest with -s to see them all;
a FAIL line always surfaces through the assertion message).  Expected
values come from closed forms or from independent oracles, never from
the code under test.
"""

import numpy as np
import pytest

from wignerlab import (
    Density1D,
    Free,
    GaussianParams,
    Grid1D,
    HalfPlaneQuery,
    Harmonic,
    PhysContext,
    Wavefunction,
    apply_flow,
    evolve_free_exact,
    evolve_free_padded,
    extremum_time,
    flow_for,
    flow_states,
    fourier_conjugate_grid,
    gaussian_wavefunction,
    gaussian_width,
    gaussian_wigner,
    half_iqr,
    half_plane_prob,
    hermite_gauss,
    hg_energy_ratio,
    integrate,
    l1_distance,
    locate_extremum,
    marginal_p,
    marginal_q,
    mix,
    momentum_representation,
    monotonicity_verdict,
    prob_right_of,
    shape_f,
    sinc_wave,
    square_wave,
    square_wave_evolved_marginal,
    square_wave_wigner,
    standard_states,
    state_from_target_profile,
    stationarity_grid,
    wigner_momentum_grid,
    wigner_transform,
)
from wignerlab.catalog import SQUARE_WAVE_A, mid_jump_grid

CTX = PhysContext()
M = 1.0


def _report(criterion: int, ok: bool, detail: str):
    print(f"[criterion {criterion:02d}] {'PASS' if ok else 'FAIL'}: {detail}")
    assert ok, f"criterion {criterion}: {detail}"


@pytest.fixture(scope="module")
def catalog():
    return standard_states(CTX, 512)


def test_criterion_1_gaussian_transform_oracle(catalog):
    psi = catalog["gaussian"]
    pg = wigner_momentum_grid(psi.grid, CTX)
    w = wigner_transform(psi, pg)
    ref = gaussian_wigner(GaussianParams(0.0, 0.0, 1.0), CTX)(
        psi.grid.points()[:, None], pg.points()[None, :]
    )
    linf = float(np.max(np.abs(w.values - ref)))
    peak_err = abs(float(np.max(w.values)) - 1 / np.pi)
    _report(
        1,
        linf < 1e-6 and peak_err < 1e-6,
        f"Gaussian field Linf={linf:.2e} (tol 1e-6), peak err={peak_err:.2e} (tol 1e-6)",
    )


def test_criterion_2_square_wave_oracle(catalog):
    psi = catalog["square-wave"]
    pg = wigner_momentum_grid(psi.grid, CTX)
    w = wigner_transform(psi, pg)
    ref = square_wave_wigner(SQUARE_WAVE_A, CTX)(
        psi.grid.points()[:, None], pg.points()[None, :]
    )
    linf = float(np.max(np.abs(w.values - ref)))
    outside = np.abs(psi.grid.points()) > SQUARE_WAVE_A / 2
    out_max = float(np.max(np.abs(w.values[outside])))
    _report(
        2,
        linf < 1e-3 and out_max == 0.0,
        f"square-wave field Linf={linf:.2e} (tol 1e-3), outside-support max={out_max:.1e}",
    )


def test_criterion_3_marginal_identities(catalog):
    worst_q = worst_p = 0.0
    for name, psi in catalog.items():
        pg = wigner_momentum_grid(psi.grid, CTX)
        w = wigner_transform(psi, pg)
        dq = float(np.max(np.abs(marginal_q(w, clamp_tol=1e-6).values - psi.density())))
        tilde = momentum_representation(psi, pg).density()
        dp = float(np.max(np.abs(marginal_p(w, clamp_tol=1e-6).values - tilde)))
        worst_q = max(worst_q, dq)
        worst_p = max(worst_p, dp)
    _report(
        3,
        worst_q < 1e-6 and worst_p < 1e-6,
        f"5 states: worst q-marginal err={worst_q:.2e}, worst p-marginal err={worst_p:.2e} (tol 1e-6)",
    )


def test_criterion_4_free_flow_equivalence():
    worst = 0.0
    for name, psi in flow_states(CTX, 512).items():
        w0 = wigner_transform(psi, wigner_momentum_grid(psi.grid, CTX))
        for t in (0.5, 1.0, 2.0, 5.0):
            wt = apply_flow(w0, flow_for(Free(M), t))
            rho_ps = np.trapezoid(wt.values, dx=wt.pgrid.spacing, axis=1)
            rho_sch = evolve_free_padded(psi, t).density()
            worst = max(worst, float(np.max(np.abs(rho_ps - rho_sch))))
    _report(
        4,
        worst < 1e-3,
        f"phase-space vs Schroedinger marginal, 5 states x 4 times: Linf={worst:.2e} (tol 1e-3)",
    )


def test_criterion_5_spreading_law():
    params = GaussianParams(0.0, 0.0, 1.0)
    g = Grid1D(-40.0, 40.0, 1025)
    psi = gaussian_wavefunction(params, g, CTX)
    fg = fourier_conjugate_grid(g, CTX)
    q = g.points()
    worst = 0.0
    for t in np.linspace(-4.0, 4.0, 81):
        rho = evolve_free_exact(psi, t, fg).density()
        mean = integrate(q * rho, g)
        std = np.sqrt(integrate((q - mean) ** 2 * rho, g))
        law = gaussian_width(params, M, t, CTX)
        worst = max(worst, abs(std - law) / law)
    _report(5, worst < 1e-3, f"81 t-samples: max rel width err={worst:.2e} (tol 1e-3)")


def test_criterion_6_hermite_gauss_width_law():
    omega = 1.0
    g = Grid1D(-30.0, 30.0, 1025)
    psi = hermite_gauss(2, omega, g, CTX)
    fg = fourier_conjugate_grid(g, CTX)
    w0 = wigner_transform(psi, wigner_momentum_grid(g, CTX))
    width0 = half_iqr(marginal_q(w0))
    worst = 0.0
    for t in (0.0, 1.0, 2.0, 4.0):
        rho = evolve_free_exact(psi, t, fg).density()
        measured = half_iqr(Density1D(g, rho))
        law = width0 * np.hypot(1.0, omega * t)
        worst = max(worst, abs(measured - law) / law)
    ratio = hg_energy_ratio(2, omega, M, CTX)
    ratio_err = abs(ratio - M * omega) / (M * omega)
    _report(
        6,
        worst < 1e-2 and ratio_err < 0.01,
        f"n=2 width law rel err={worst:.2e} (tol 1e-2), energy ratio err={ratio_err:.2e} (tol 1e-2)",
    )


def test_criterion_7_negative_probability_flow():
    params = GaussianParams(-1.0, 1.0, 1.0)  # sigma_p = 0.5 follows from sigma_q = 1
    g = Grid1D(-25.0, 25.0, 513)
    w = wigner_transform(
        gaussian_wavefunction(params, g, CTX), wigner_momentum_grid(g, CTX)
    )
    t_star = extremum_time(params, 0.0, M, CTX)
    t_found = locate_extremum(lambda t: prob_right_of(w, 0.0, t, M), -10.0, 2.0)
    before = monotonicity_verdict(
        [prob_right_of(w, 0.0, t, M) for t in np.linspace(-10.0, t_star, 64)]
    )
    after = monotonicity_verdict(
        [prob_right_of(w, 0.0, t, M) for t in np.linspace(t_star, 10.0, 64)]
    )
    ok = abs(t_found + 4.0) < 0.05 and t_star == -4.0
    ok = ok and before == "decreasing" and after == "increasing"
    _report(
        7,
        ok,
        f"argmin at t={t_found:.4f} (expect -4 +- 0.05), curve {before} then {after}",
    )


def test_criterion_8_half_plane_antisymmetry(catalog):
    g = Grid1D(-25.0, 25.0, 513)
    pg = wigner_momentum_grid(g, CTX)
    wa = wigner_transform(gaussian_wavefunction(GaussianParams(-3.0, 0.0, 1.0), g, CTX), pg)
    wb = wigner_transform(gaussian_wavefunction(GaussianParams(3.0, 1.0, 1.0), g, CTX), pg)
    fields = {
        "gaussian": wigner_transform(
            catalog["gaussian"], wigner_momentum_grid(catalog["gaussian"].grid, CTX)
        ),
        "square-wave": wigner_transform(
            catalog["square-wave"], wigner_momentum_grid(catalog["square-wave"].grid, CTX)
        ),
        "mixed": mix([wa, wb], [0.5, 0.5]),
    }
    worst = 0.0
    for name, w in fields.items():
        for theta in np.linspace(0.0, np.pi, 16, endpoint=False):
            s = half_plane_prob(w, HalfPlaneQuery(0.3, theta)) + half_plane_prob(
                w, HalfPlaneQuery(0.3, theta + np.pi)
            )
            worst = max(worst, abs(s - 1.0))
    verdicts = []
    for w in fields.values():
        vals = [prob_right_of(w, 0.3, t, M) for t in np.linspace(-10.0, 10.0, 64)]
        verdicts.append(monotonicity_verdict(vals, tol=1e-12))
    all_nonmono = all(v == "non-monotonic" for v in verdicts)
    _report(
        8,
        worst < 1e-6 and all_nonmono,
        f"f(th)+f(th+pi) err={worst:.2e} (tol 1e-6), off-center verdicts {verdicts}",
    )


def test_criterion_9_asymptotic_dispersion():
    a = SQUARE_WAVE_A
    l1s = []
    for t in (5.0, 10.0, 20.0, 40.0):
        span = 60.0 * t / a
        g = Grid1D(-span, span, 4001)
        rho = square_wave_evolved_marginal(a, t, g, CTX)
        profile = Density1D(g, (a * M / t) * shape_f(a * M * g.points() / t))
        l1s.append(l1_distance(rho, profile))
    decreasing = all(l1s[i + 1] < l1s[i] for i in range(3))

    b = 32.0
    span = 4096 * 2 * np.pi / b
    g = Grid1D(-span, span, 2**14)
    psi = sinc_wave(b, g, CTX)
    fg = fourier_conjugate_grid(g, CTX)
    q = g.points()
    sinc_l1 = {}
    for t in (10.0, 40.0):
        dens = evolve_free_exact(psi, t, fg).density()
        square_profile = np.where(np.abs(q) <= b * t / (2 * M), M / (b * t), 0.0)
        sinc_l1[t] = float(np.trapezoid(np.abs(dens - square_profile), dx=g.spacing))
    ok = decreasing and l1s[-1] < 0.02 and sinc_l1[40.0] < 0.05 and sinc_l1[40.0] < sinc_l1[10.0]
    _report(
        9,
        ok,
        f"square-wave L1 over t=5..40: {['%.1e' % v for v in l1s]} (tol 0.02 at 40), "
        f"sinc->square L1(40)={sinc_l1[40.0]:.3f} (tol 0.05)",
    )


def test_criterion_10_harmonic_stationarity():
    omega = 1.0
    g = stationarity_grid(3, 512, CTX)
    worst = 0.0
    for n in range(4):
        psi = hermite_gauss(n, omega, g, CTX)
        w = wigner_transform(psi, g)
        for wt_angle in (np.pi / 4, np.pi / 2, np.pi):
            w2 = apply_flow(w, flow_for(Harmonic(M, omega), wt_angle / omega))
            worst = max(worst, float(np.max(np.abs(w2.values - w.values))))
    _report(10, worst < 1e-3, f"n<=3, wt in {{pi/4, pi/2, pi}}: Linf={worst:.2e} (tol 1e-3)")


def test_criterion_11_target_profile_construction():
    from scipy.stats import norm

    pgrid = Grid1D(-6.0, 6.0, 1025)
    p = pgrid.points()
    vals = 0.5 * norm.pdf(p, -2.0, 0.5) + 0.5 * norm.pdf(p, 2.0, 0.5)
    vals = vals / np.trapezoid(vals, dx=pgrid.spacing)
    rho = Density1D(pgrid, vals)
    qgrid = Grid1D(-250.0, 250.0, 2**13)
    psi = state_from_target_profile(rho, None, qgrid, CTX)
    t = 40.0
    dens = evolve_free_exact(psi, t, fourier_conjugate_grid(qgrid, CTX)).density()
    rescaled = (M / t) * np.interp(qgrid.points() * M / t, p, vals, left=0.0, right=0.0)
    l1 = float(np.trapezoid(np.abs(dens - rescaled), dx=qgrid.spacing))
    _report(11, l1 < 0.05, f"bimodal target, t=40: L1={l1:.2e} (tol 0.05)")


def test_criterion_12_figure5_determinism(tmp_path):
    from wignerlab.cli import main

    out_a, out_b = tmp_path / "a", tmp_path / "b"
    code_a = main(["figure", "5", "--grid-n", "128", "--out", str(out_a)])
    code_b = main(["figure", "5", "--grid-n", "128", "--out", str(out_b)])
    same = all(
        (out_a / f).read_bytes() == (out_b / f).read_bytes()
        for f in ("wigner.csv", "p_marginal.csv")
    )
    _report(
        12,
        code_a == 0 and code_b == 0 and same,
        "two `figure 5` runs produced byte-identical CSV" if same else "CSV outputs differ",
    )
