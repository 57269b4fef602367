"""Command-line interface: figure data sets, verification suites, sweeps.

All outputs are deterministic: floats are written with 17 significant
digits, column order is fixed, and manifests carry no timestamps, so two
runs with the same configuration produce byte-identical files.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .analysis import (
    HalfPlaneQuery,
    gaussian_width,
    half_iqr,
    half_plane_prob,
    prob_right_of,
    width_law_hg,
)
from .catalog import SQUARE_WAVE_A, HG_OMEGA, mid_jump_grid
from .errors import WignerlabError
from .flows import Free, apply_flow, evolve_free_exact, flow_for
from .fourier import fourier_conjugate_grid
from .grids import Grid1D, PhysContext, integrate
from .states import GaussianParams, gaussian_wavefunction, hermite_gauss, square_wave
from .verify import SUITE_NAMES, report, run_suite
from .wigner import (
    Density1D,
    marginal_q,
    square_wave_p_marginal,
    wigner_momentum_grid,
    wigner_transform,
)

OUTPUT_ENV_VAR = "WIGNERLAB_OUT"
DEFAULT_OUTPUT_DIR = "wignerlab-out"
FIGURE_IDS = (1, 2, 3, 4, 5, 6)


@dataclass(frozen=True)
class RunConfig:
    """Validated run parameters shared by every subcommand."""

    grid_n: int = 512
    q_span: float = 25.0
    hbar: float = 1.0
    mass: float = 1.0
    output_dir: Path = Path(DEFAULT_OUTPUT_DIR)
    emit_png: bool = False

    def __post_init__(self):
        n = self.grid_n
        if n < 128 or n & (n - 1) != 0:
            raise ValueError(f"grid_n must be a power of two >= 128, got {n}")
        if not self.q_span > 0:
            raise ValueError(f"q_span must be positive, got {self.q_span}")
        if not self.hbar > 0 or not self.mass > 0:
            raise ValueError("hbar and mass must be positive")

    def ctx(self) -> PhysContext:
        return PhysContext(hbar=self.hbar, mass=self.mass)


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def write_csv(path: Path, header: list[str], rows) -> None:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_fmt(x) for x in row))
    path.write_text("\n".join(lines) + "\n")


def write_manifest(config: RunConfig, outdir: Path, extra: dict, files: list[str]) -> None:
    manifest = {
        "version": __version__,
        "hbar": config.hbar,
        "mass": config.mass,
        "grid_n": config.grid_n,
        "q_span": config.q_span,
        "files": sorted(files),
    }
    manifest.update(extra)
    path = outdir / "manifest.json"
    path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")


def _save_png(outdir: Path, name: str, draw) -> str:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 4.5))
    draw(ax)
    fig.tight_layout()
    path = outdir / name
    fig.savefig(path, dpi=110)
    plt.close(fig)
    return name


def _field_csv(path: Path, w) -> None:
    """Wigner field as CSV: first row p values, first column q values."""
    header = ["q\\p"] + [_fmt(p) for p in w.pgrid.points()]
    lines = [",".join(header)]
    q = w.qgrid.points()
    for i in range(w.qgrid.n):
        lines.append(",".join([_fmt(q[i])] + [_fmt(v) for v in w.values[i]]))
    path.write_text("\n".join(lines) + "\n")


def cmd_figure(fig_id: int, config: RunConfig) -> int:
    ctx = config.ctx()
    outdir = config.output_dir
    outdir.mkdir(parents=True, exist_ok=True)
    files: list[str] = []
    extra: dict = {"figure": fig_id}

    if fig_id == 1:
        # moving Gaussian sheared by the free flow: position density frames
        params = GaussianParams(-1.0, 1.0, 1.0)
        grid = Grid1D(-config.q_span, config.q_span, config.grid_n + 1)
        psi = gaussian_wavefunction(params, grid, ctx)
        fg = fourier_conjugate_grid(grid, ctx)
        times = np.linspace(0.0, 4.0, 9)
        rows = []
        q = grid.points()
        densities = []
        for t in times:
            rho = evolve_free_exact(psi, t, fg).density()
            densities.append(rho)
            rows.extend((t, q[i], rho[i]) for i in range(grid.n))
        write_csv(outdir / "q_marginal.csv", ["t", "q", "rho"], rows)
        files.append("q_marginal.csv")
        if config.emit_png:
            frames = []
            for k, t in enumerate(times):
                name = f"frame_{k:03d}.png"

                def draw(ax, t=t, rho=densities[k]):
                    ax.plot(q, rho)
                    ax.set_xlabel("q")
                    ax.set_ylabel("density")
                    ax.set_title(f"t = {t:g}")

                files.append(_save_png(outdir, name, draw))
                frames.append({"t": float(t), "file": name})
            (outdir / "frames.json").write_text(
                json.dumps({"frames": frames}, indent=2, sort_keys=True) + "\n"
            )
            files.append("frames.json")

    elif fig_id == 2:
        # probability right of q1 = 0 versus time for the backflow scenario
        params = GaussianParams(-1.0, 1.0, 1.0)
        grid = Grid1D(-config.q_span, config.q_span, config.grid_n + 1)
        w = wigner_transform(
            gaussian_wavefunction(params, grid, ctx), wigner_momentum_grid(grid, ctx)
        )
        from scipy.stats import norm as _norm

        times = np.linspace(-10.0, 2.0, 121)
        rows = []
        for t in times:
            measured = prob_right_of(w, 0.0, t, ctx.mass)
            analytic = float(
                _norm.sf(0.0, loc=params.q0 + params.p0 * t / ctx.mass,
                         scale=gaussian_width(params, ctx.mass, t, ctx))
            )
            rows.append((t, measured, analytic))
        write_csv(outdir / "prob_right.csv", ["t", "measured", "analytic"], rows)
        files.append("prob_right.csv")
        if config.emit_png:
            def draw(ax):
                ts = [r[0] for r in rows]
                ax.plot(ts, [r[1] for r in rows], label="measured")
                ax.plot(ts, [r[2] for r in rows], "--", label="analytic")
                ax.set_xlabel("t")
                ax.set_ylabel("Pr(q > 0)")
                ax.legend()

            files.append(_save_png(outdir, "prob_right.png", draw))

    elif fig_id == 3:
        # Gaussian spreading: analytic width law vs measured stddev
        params = GaussianParams(0.0, 0.0, 1.0)
        grid = Grid1D(-config.q_span, config.q_span, config.grid_n + 1)
        psi = gaussian_wavefunction(params, grid, ctx)
        fg = fourier_conjugate_grid(grid, ctx)
        q = grid.points()
        rows = []
        for t in np.linspace(0.0, 4.0, 81):
            rho = evolve_free_exact(psi, t, fg).density()
            mean = integrate(q * rho, grid)
            std = float(np.sqrt(integrate((q - mean) ** 2 * rho, grid)))
            rows.append((t, gaussian_width(params, ctx.mass, t, ctx), std))
        write_csv(outdir / "width.csv", ["t", "analytic", "measured"], rows)
        files.append("width.csv")
        if config.emit_png:
            def draw(ax):
                ts = [r[0] for r in rows]
                ax.plot(ts, [r[1] for r in rows], label="analytic")
                ax.plot(ts, [r[2] for r in rows], "x", label="measured")
                ax.set_xlabel("t")
                ax.set_ylabel("width")
                ax.legend()

            files.append(_save_png(outdir, "width.png", draw))

    elif fig_id == 4:
        # half-plane probability as the integration line rotates
        params = GaussianParams(-1.0, 1.0, 1.0)
        grid = Grid1D(-config.q_span, config.q_span, config.grid_n + 1)
        w = wigner_transform(
            gaussian_wavefunction(params, grid, ctx), wigner_momentum_grid(grid, ctx)
        )
        rows = []
        for theta in np.linspace(0.0, np.pi, 64, endpoint=False):
            f = half_plane_prob(w, HalfPlaneQuery(0.0, theta))
            f_pi = half_plane_prob(w, HalfPlaneQuery(0.0, theta + np.pi))
            rows.append((theta, f, f + f_pi))
        write_csv(outdir / "halfplane.csv", ["theta", "f", "antisum"], rows)
        files.append("halfplane.csv")
        if config.emit_png:
            def draw(ax):
                ax.plot([r[0] for r in rows], [r[1] for r in rows])
                ax.set_xlabel("theta")
                ax.set_ylabel("f(theta)")

            files.append(_save_png(outdir, "halfplane.png", draw))

    elif fig_id == 5:
        # square-wave Wigner field and its momentum marginal
        a = SQUARE_WAVE_A
        qgrid = mid_jump_grid(a, config.grid_n // 2, config.grid_n // 8)
        psi = square_wave(a, qgrid, ctx)
        pgrid = Grid1D(-15.0, 15.0, config.grid_n + 1)
        w = wigner_transform(psi, pgrid)
        _field_csv(outdir / "wigner.csv", w)
        files.append("wigner.csv")
        p = pgrid.points()
        rho_p = np.trapezoid(w.values, dx=qgrid.spacing, axis=0)
        closed = square_wave_p_marginal(a, p, ctx)
        write_csv(
            outdir / "p_marginal.csv",
            ["p", "rho_p", "closed_form"],
            zip(p, rho_p, closed),
        )
        files.append("p_marginal.csv")
        if config.emit_png:
            def draw(ax):
                im = ax.pcolormesh(p, qgrid.points(), w.values, shading="auto")
                ax.figure.colorbar(im, ax=ax)
                ax.set_xlabel("p")
                ax.set_ylabel("q")

            files.append(_save_png(outdir, "wigner.png", draw))

    elif fig_id == 6:
        # freely spreading n = 2 eigenstate: width vs the closed-form law
        grid = Grid1D(-config.q_span, config.q_span, config.grid_n + 1)
        psi = hermite_gauss(2, HG_OMEGA, grid, ctx)
        fg = fourier_conjugate_grid(grid, ctx)
        w0 = wigner_transform(psi, wigner_momentum_grid(grid, ctx))
        width0 = half_iqr(marginal_q(w0))
        rows = []
        densities = []
        times = np.linspace(0.0, 4.0, 9)
        for t in times:
            rho = evolve_free_exact(psi, t, fg).density()
            densities.append(rho)
            measured = half_iqr(Density1D(grid, rho))
            rows.append((t, width_law_hg(width0, HG_OMEGA, t), measured))
        write_csv(outdir / "hg_width.csv", ["t", "law", "measured"], rows)
        files.append("hg_width.csv")
        if config.emit_png:
            q = grid.points()
            frames = []
            for k, t in enumerate(times):
                name = f"frame_{k:03d}.png"

                def draw(ax, t=t, rho=densities[k]):
                    ax.plot(q, rho)
                    ax.set_xlabel("q")
                    ax.set_ylabel("density")
                    ax.set_title(f"t = {t:g}")

                files.append(_save_png(outdir, name, draw))
                frames.append({"t": float(t), "file": name})
            (outdir / "frames.json").write_text(
                json.dumps({"frames": frames}, indent=2, sort_keys=True) + "\n"
            )
            files.append("frames.json")

    write_manifest(config, outdir, extra, files)
    return 0


def cmd_verify(suite: str, config: RunConfig) -> int:
    results = run_suite(suite, config.ctx(), config.grid_n)
    rep = report(results)
    config.output_dir.mkdir(parents=True, exist_ok=True)
    out = config.output_dir / f"verify_{suite}.json"
    out.write_text(json.dumps(rep, indent=2, sort_keys=True) + "\n")
    for rec in rep["checks"]:
        status = "PASS" if rec["pass"] else "FAIL"
        print(f"{status} {rec['check']}: actual={rec['actual']} "
              f"expected={rec['expected']} tol={rec['tolerance']}")
    print(f"{rep['passed']} passed, {rep['failed']} failed -> {out}")
    return 0 if rep["ok"] else 1


def cmd_sweep(quantity: str, params: dict, t_range: tuple, config: RunConfig) -> int:
    ctx = config.ctx()
    t_lo, t_hi, steps = t_range
    times = np.linspace(t_lo, t_hi, steps)
    outdir = config.output_dir
    outdir.mkdir(parents=True, exist_ok=True)
    gp = GaussianParams(
        q0=params.get("q0", 0.0), p0=params.get("p0", 0.0),
        sigma_q=params.get("sigma_q", 1.0),
    )
    grid = Grid1D(-config.q_span, config.q_span, config.grid_n + 1)
    psi = gaussian_wavefunction(gp, grid, ctx)
    rows = []
    if quantity == "width":
        fg = fourier_conjugate_grid(grid, ctx)
        q = grid.points()
        for t in times:
            rho = evolve_free_exact(psi, t, fg).density()
            mean = integrate(q * rho, grid)
            std = float(np.sqrt(integrate((q - mean) ** 2 * rho, grid)))
            rows.append((t, gaussian_width(gp, ctx.mass, t, ctx), std))
        name = "width.csv"
    else:
        from scipy.stats import norm as _norm

        q1 = params.get("q1", 0.0)
        w = wigner_transform(psi, wigner_momentum_grid(grid, ctx))
        for t in times:
            measured = prob_right_of(w, q1, t, ctx.mass)
            analytic = float(
                _norm.sf(q1, loc=gp.q0 + gp.p0 * t / ctx.mass,
                         scale=gaussian_width(gp, ctx.mass, t, ctx))
            )
            rows.append((t, analytic, measured))
        name = "prob_right.csv"
    write_csv(outdir / name, ["t", "analytic", "measured"], rows)
    write_manifest(config, outdir, {"sweep": quantity, "params": params}, [name])
    return 0


def _parse_params(pairs: list[str], parser: argparse.ArgumentParser) -> dict:
    out = {}
    for pair in pairs:
        if "=" not in pair:
            parser.error(f"malformed --param {pair!r}; expected key=value")
        key, _, value = pair.partition("=")
        try:
            out[key] = float(value)
        except ValueError:
            parser.error(f"malformed --param {pair!r}; value must be numeric")
    return out


def build_parser() -> argparse.ArgumentParser:
    # shared flags accept either position: before or after the subcommand.
    # SUPPRESS keeps an unset subcommand-level flag from clobbering one
    # given at the top level; defaults are filled in by main().
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--grid-n", type=int,
                        help="grid cells per axis (power of two >= 128, default 512)")
    common.add_argument("--q-span", type=float,
                        help="half-width of the position box (default 25)")
    common.add_argument("--hbar", type=float, help="default 1")
    common.add_argument("--mass", type=float, help="default 1")
    common.add_argument("--out", type=str,
                        help=f"output directory (default ${OUTPUT_ENV_VAR} "
                             f"or ./{DEFAULT_OUTPUT_DIR})")
    common.add_argument("--png", action="store_true", help="also render PNG output")

    parser = argparse.ArgumentParser(
        prog="wignerlab",
        description="Phase-space toolkit: figure data, verification suites, sweeps.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_fig = sub.add_parser("figure", help="write one figure's data set", parents=[common])
    p_fig.add_argument("id", type=int)

    p_ver = sub.add_parser("verify", help="run a verification suite", parents=[common])
    p_ver.add_argument("suite", type=str)

    p_sw = sub.add_parser("sweep", help="tabulate a quantity over time", parents=[common])
    p_sw.add_argument("quantity", type=str)
    p_sw.add_argument("--param", action="append", default=[], metavar="KEY=VALUE")
    p_sw.add_argument("--t-min", type=float, default=0.0)
    p_sw.add_argument("--t-max", type=float, default=4.0)
    p_sw.add_argument("--steps", type=int, default=81)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    out = getattr(args, "out", None) or os.environ.get(OUTPUT_ENV_VAR) or DEFAULT_OUTPUT_DIR
    try:
        config = RunConfig(
            grid_n=getattr(args, "grid_n", 512),
            q_span=getattr(args, "q_span", 25.0),
            hbar=getattr(args, "hbar", 1.0),
            mass=getattr(args, "mass", 1.0),
            output_dir=Path(out),
            emit_png=getattr(args, "png", False),
        )
    except ValueError as exc:
        parser.error(str(exc))

    try:
        if args.command == "figure":
            if args.id not in FIGURE_IDS:
                parser.error(f"unknown figure id {args.id}; choose from {FIGURE_IDS}")
            return cmd_figure(args.id, config)
        if args.command == "verify":
            if args.suite not in SUITE_NAMES:
                parser.error(f"unknown suite {args.suite!r}; choose from {SUITE_NAMES}")
            return cmd_verify(args.suite, config)
        if args.command == "sweep":
            if args.quantity not in ("width", "prob_right"):
                parser.error(f"unknown quantity {args.quantity!r}")
            if args.steps < 2:
                parser.error("--steps must be at least 2")
            params = _parse_params(args.param, parser)
            return cmd_sweep(args.quantity, params,
                             (args.t_min, args.t_max, args.steps), config)
    except WignerlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 1
    return 2


if __name__ == "__main__":
    sys.exit(main())
