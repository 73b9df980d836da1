"""Command-line front end.

Subcommands: spectrum, eval, verify, current, semiclassical,
groundstate-check, report.  The first six emit machine-readable data only
(JSON or CSV, deterministic formatting, 12 significant digits); report is
the one rendering path, writing figures next to the delimited output.

Exit codes: 0 success / all checks passed, 1 computational or check
failure, 2 usage or configuration error.

Options resolve in three layers: command-line flags override an optional
config file (flat ``key = value`` lines, keys named like the long flags
without the leading dashes), which overrides built-in defaults.  All
numeric output is in atomic units unless ``--si`` is given.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path

import numpy as np

from .solver import (
    ExtensionParams,
    GridSpec,
    SolverError,
    boundary_defect,
    deep_scan,
    eigenfunction,
    solve_spectrum,
)
from .special import RangeLimitError, SeriesError
from .states import (
    ATOMIC,
    PhysicalScales,
    WavefunctionSample,
    energy,
    half_line_solution,
    phi,
    psi,
)
from . import verify as vf

__all__ = ["main"]


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# config file, option resolution, output formatting


def _load_config(path: str) -> dict:
    cfg = {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read config file {path}: {exc}") from exc
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key = value, got {raw!r}")
        key, _, value = line.partition("=")
        cfg[key.strip()] = value.strip()
    return cfg


def _opt(args, cfg: dict, name: str, default, cast=str):
    """Flag if given, else config-file value, else the built-in default."""
    flag = getattr(args, name.replace("-", "_"), None)
    if flag is not None:
        return flag
    if name in cfg:
        raw = cfg[name]
        if cast is bool:
            return raw.lower() in ("1", "true", "yes", "on")
        try:
            return cast(raw)
        except (TypeError, ValueError) as exc:
            raise UsageError(f"bad config value for {name}: {raw!r}") from exc
    return default


def _fmt(x) -> str:
    # the + 0.0 folds IEEE negative zero into plain 0
    return f"{float(x) + 0.0:.12g}"


def _round12(obj):
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (float, np.floating)):
        return float(f"{float(obj) + 0.0:.12g}")
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, dict):
        return {k: _round12(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [_round12(v) for v in obj]
    return obj


def _emit(text: str, path) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _json_text(obj) -> str:
    return json.dumps(_round12(obj), indent=2) + "\n"


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def _report_rows(report: vf.VerificationReport):
    for c in report.checks:
        yield [c.name, _fmt(c.measured), _fmt(c.tolerance), str(c.passed).lower(), c.detail]


def _scales_for(args, cfg) -> PhysicalScales:
    return PhysicalScales.si() if _opt(args, cfg, "si", False, bool) else ATOMIC


def _hartree(scales: PhysicalScales) -> float:
    return scales.hbar**2 / (scales.mass * scales.bohr_radius**2)


# ---------------------------------------------------------------------------
# spectrum


def _numeric_setup(args, cfg, count: int):
    if _opt(args, cfg, "dirichlet", False, bool):
        params = ExtensionParams.dirichlet()
        zeros = -(-count // 2)
    else:
        params = ExtensionParams.rotation(_opt(args, cfg, "theta", 0.0, float))
        zeros = count
    eps = _opt(args, cfg, "epsilon", 1e-4, float)
    grid = GridSpec(
        halfwidth_L=_opt(args, cfg, "halfwidth", 80.0 * max(zeros, 1), float),
        epsilon=eps,
        step=_opt(args, cfg, "step", eps / 4.0, float),
    )
    return params, grid


def cmd_spectrum(args, cfg) -> int:
    scales = _scales_for(args, cfg)
    fmt = _opt(args, cfg, "format", "json")
    numeric = _opt(args, cfg, "numeric", False, bool)
    if numeric:
        count = _opt(args, cfg, "count", 4, int)
        if count < 1:
            raise UsageError("count must be >= 1")
        params, grid = _numeric_setup(args, cfg, count)
        result = solve_spectrum(params, grid, count=count)
        unit = _hartree(scales)
        payload = result.to_dict()
        payload["mode"] = "numeric"
        for lv in payload["levels"]:
            lv["energy"] *= unit
        if fmt == "csv":
            rows = [
                [_fmt(lv["energy"]), lv["multiplicity"], lv["parity"]]
                for lv in payload["levels"]
            ]
            _emit(_csv_text(["energy", "multiplicity", "parity"], rows), args.output)
        else:
            _emit(_json_text(payload), args.output)
        return 0
    n_max = _opt(args, cfg, "n-max", 5, int)
    if n_max < 1:
        raise UsageError("n-max must be >= 1")
    levels = [
        {"n": n, "energy": energy(n, scales), "multiplicity": 1, "parity": "odd"}
        for n in range(1, n_max + 1)
    ]
    if fmt == "csv":
        rows = [[lv["n"], _fmt(lv["energy"]), 1, "odd"] for lv in levels]
        _emit(_csv_text(["n", "energy", "multiplicity", "parity"], rows), args.output)
    else:
        _emit(_json_text({"mode": "analytic", "levels": levels}), args.output)
    return 0


# ---------------------------------------------------------------------------
# eval


def cmd_eval(args, cfg) -> int:
    scales = _scales_for(args, cfg)
    n = _opt(args, cfg, "n", 1, int)
    if n < 1:
        raise UsageError("n must be >= 1")
    space = _opt(args, cfg, "space", "x")
    if space not in ("x", "k"):
        raise UsageError("space must be 'x' or 'k'")
    rng = args.range
    if rng is None:
        dflt = 5.0 * n * scales.bohr_radius
        rng = (-dflt, dflt) if space == "x" else (-10.0 / scales.bohr_radius, 10.0 / scales.bohr_radius)
    lo, hi = float(rng[0]), float(rng[1])
    if not lo < hi:
        raise UsageError("range needs lo < hi")
    points = _opt(args, cfg, "points", 101, int)
    if points < 2:
        raise UsageError("points must be >= 2")
    xs = np.linspace(lo, hi, points)
    if space == "x":
        vals = psi(n, xs, scales).astype(complex)
        label = "position"
    else:
        vals = phi(n, xs, scales)
        label = "momentum"
    fmt = _opt(args, cfg, "format", "json")
    if fmt == "csv":
        rows = [[_fmt(x), _fmt(v.real), _fmt(v.imag)] for x, v in zip(xs, vals)]
        _emit(_csv_text(["abscissa", "re", "im"], rows), args.output)
    else:
        payload = {
            "n": n,
            "space": label,
            "abscissae": list(xs),
            "re": list(vals.real),
            "im": list(vals.imag),
        }
        _emit(_json_text(payload), args.output)
    return 0


# ---------------------------------------------------------------------------
# verify and groundstate-check


_CHECK_GROUPS = (
    "parseval",
    "normalization",
    "orthonormality",
    "fourier",
    "schrodinger",
    "matching",
    "groundstate",
    "current",
    "semiclassical",
    "boundary-defect",
    "deep-scan",
)


def _quad_for(args, cfg, n: int, scales: PhysicalScales) -> vf.QuadratureSpec:
    return vf.QuadratureSpec(
        domain_halfwidth=_opt(
            args, cfg, "quad-halfwidth", 40.0 * n * scales.bohr_radius, float
        ),
        node_count=_opt(args, cfg, "quad-points", 64, int),
        scheme=_opt(args, cfg, "quad-scheme", "gauss-legendre-composite"),
    )


def _boundary_defect_checks() -> list:
    h = 1e-3
    pos = np.arange(1, 41) * h
    x = np.concatenate([-pos[::-1], pos])
    params = ExtensionParams.rotation(0.0)

    def sample(fn):
        return WavefunctionSample(x, np.asarray(fn(x), dtype=complex), "position")

    s1 = sample(lambda t: psi(1, t))
    s2 = sample(lambda t: psi(2, t))
    kink = sample(lambda t: np.exp(-np.abs(t)))
    half = sample(lambda t: half_line_solution(1, "+", t))
    bump = sample(lambda t: np.where(np.abs(t) > 0.02, np.exp(-(np.abs(t) - 0.02)), 0.0))

    d_ok = boundary_defect(s1, s2, params)
    d_detect = boundary_defect(kink, half, params)
    d_zero = boundary_defect(bump, bump, params)
    return [
        vf.make_check(
            "boundary-defect[eigenstates]",
            d_ok,
            1e-8,
            "cross-origin boundary term for two admissible states",
        ),
        vf.make_check(
            "boundary-defect[kink-vs-halfline]",
            max(0.0, (1e-2 - d_detect) / 1e-2),
            0.0,
            f"defect {d_detect:.6g} for a kinked even function against a one-sided state "
            "(must exceed 1e-2)",
        ),
        vf.make_check(
            "boundary-defect[compact-pair]",
            d_zero,
            1e-12,
            "both functions vanish identically near the origin",
        ),
    ]


def _deep_scan_check() -> vf.CheckResult:
    grid = GridSpec(halfwidth_L=20.0, epsilon=1e-4, step=2.5e-5)
    changes, min_abs, npts = deep_scan(grid)
    return vf.make_check(
        "no-deep-level",
        float(changes),
        0.0,
        f"matching-function sign changes on [-50, -1): {changes}; "
        f"smallest magnitude {min_abs:.4g} over {npts} points",
    )


def _groundstate_checks() -> list:
    return list(
        vf.groundstate_rejection(
            np.linspace(-60.0, -1e-3, 241), np.geomspace(0.1, 10.0, 201)
        ).checks
    )


def _assemble_report(args, cfg, selected, scales: PhysicalScales) -> vf.VerificationReport:
    one_n = _opt(args, cfg, "n", None, int)
    checks = []
    if "parseval" in selected:
        for n in [one_n] if one_n else range(1, 9):
            checks.append(vf.check_parseval(n, _quad_for(args, cfg, n, scales), scales))
    if "normalization" in selected:
        for n in [one_n] if one_n else range(1, 11):
            checks.append(
                vf.check_normalization_constant(n, _quad_for(args, cfg, n, scales), scales)
            )
    if "orthonormality" in selected:
        nm = one_n if one_n and one_n >= 2 else 8
        checks.extend(vf.check_orthonormality(nm, _quad_for(args, cfg, nm, scales), scales).checks)
    if "fourier" in selected:
        a0 = scales.bohr_radius
        kgrid = np.linspace(-10.0 / a0, 10.0 / a0, 41)
        for n in [one_n] if one_n else range(1, 6):
            checks.append(
                vf.check_fourier_consistency(n, kgrid, _quad_for(args, cfg, n, scales), scales)
            )
    if "schrodinger" in selected:
        for n in [one_n] if one_n else range(1, 9):
            checks.append(vf.check_schrodinger_residual(n, scales))
    if "matching" in selected:
        eps = [10.0**-j for j in range(1, 6)]
        for n in [one_n] if one_n else range(1, 7):
            checks.extend(vf.check_matching(n, eps).checks)
        for candidate in ("half-line", "even-kink"):
            rejected = vf.check_matching(1, eps, candidate=candidate)
            worst = min(
                c.measured / max(c.tolerance, 1e-12)
                for c in rejected.checks
                if c.name.startswith("matching[")
            )
            checks.append(
                vf.make_check(
                    f"matching-rejects[{candidate}]",
                    max(0.0, (5.0 - worst) / 5.0),
                    0.0,
                    f"smallest residual-to-bound ratio {worst:.6g} (must stay >= 5)",
                )
            )
    if "groundstate" in selected:
        checks.extend(_groundstate_checks())
    if "current" in selected:
        checks.append(vf.check_current_real(1, scales))
        checks.append(vf.check_current_real(3, scales))
        checks.append(vf.check_current_superposition(1, 2, scales))
    if "semiclassical" in selected:
        checks.extend(vf.check_semiclassical(1, None, scales).checks)
    if "boundary-defect" in selected:
        checks.extend(_boundary_defect_checks())
    if "deep-scan" in selected:
        checks.append(_deep_scan_check())
    return vf.VerificationReport.from_checks(checks)


def cmd_verify(args, cfg) -> int:
    scales = _scales_for(args, cfg)
    if args.check:
        selected = list(args.check)
    elif "check" in cfg:
        selected = [s.strip() for s in cfg["check"].split(",") if s.strip()]
    else:
        selected = list(_CHECK_GROUPS)
    bad = [s for s in selected if s not in _CHECK_GROUPS]
    if bad:
        raise UsageError(f"unknown check group(s) {bad}; choose from {list(_CHECK_GROUPS)}")
    report = _assemble_report(args, cfg, selected, scales)
    if not report.checks:
        raise UsageError("selection produced an empty report")
    fmt = _opt(args, cfg, "format", "json")
    if fmt == "csv":
        _emit(
            _csv_text(["name", "measured", "tolerance", "passed", "detail"], _report_rows(report)),
            args.output,
        )
    else:
        _emit(_json_text(report.to_dict()), args.output)
    return 0 if report.all_passed else 1


def cmd_groundstate_check(args, cfg) -> int:
    checks = _groundstate_checks() + [_deep_scan_check()]
    report = vf.VerificationReport.from_checks(checks)
    fmt = _opt(args, cfg, "format", "json")
    if fmt == "csv":
        _emit(
            _csv_text(["name", "measured", "tolerance", "passed", "detail"], _report_rows(report)),
            args.output,
        )
    else:
        _emit(_json_text(report.to_dict()), args.output)
    return 0 if report.all_passed else 1


# ---------------------------------------------------------------------------
# current and semiclassical


def cmd_current(args, cfg) -> int:
    scales = _scales_for(args, cfg)
    a0 = scales.bohr_radius
    n_single = _opt(args, cfg, "n", None, int)
    rng = args.range or (-0.5 * a0, 0.5 * a0)
    lo, hi = float(rng[0]), float(rng[1])
    if not lo < hi:
        raise UsageError("range needs lo < hi")
    points = _opt(args, cfg, "points", 501, int)
    if points < 3:
        raise UsageError("points must be >= 3 for a derivative stencil")
    xs = np.linspace(lo, hi, points)
    if n_single is not None:
        vals = psi(n_single, xs, scales).astype(complex)
        label = f"eigenstate n={n_single}"
    else:
        mix = args.mix or (1, 2)
        na, nb = int(mix[0]), int(mix[1])
        vals = (psi(na, xs, scales) + 1j * psi(nb, xs, scales)) / math.sqrt(2.0)
        label = f"superposition ({na}, {nb})"
    j = vf.probability_current(WavefunctionSample(xs, vals, "position"), scales).values
    fmt = _opt(args, cfg, "format", "json")
    if fmt == "csv":
        rows = [[_fmt(x), _fmt(val)] for x, val in zip(xs, j)]
        _emit(_csv_text(["x", "j"], rows), args.output)
    else:
        _emit(
            _json_text(
                {"state": label, "abscissae": list(xs), "current": list(np.asarray(j, dtype=float))}
            ),
            args.output,
        )
    return 0


def cmd_semiclassical(args, cfg) -> int:
    scales = _scales_for(args, cfg)
    n = _opt(args, cfg, "n", 1, int)
    a0 = scales.bohr_radius
    dmin = _opt(args, cfg, "delta-min", 1e-4 * a0, float)
    dmax = _opt(args, cfg, "delta-max", 1e-1 * a0, float)
    dcount = _opt(args, cfg, "delta-count", 13, int)
    if not 0 < dmin < dmax or dcount < 2:
        raise UsageError("need 0 < delta-min < delta-max and delta-count >= 2")
    deltas = np.geomspace(dmin, dmax, dcount)
    ratios = np.array([vf.semiclassical_time_ratio(n, float(d), scales) for d in deltas])
    exponent = float(np.polyfit(np.log(deltas), np.log(ratios), 1)[0])
    fmt = _opt(args, cfg, "format", "json")
    if fmt == "csv":
        rows = [[_fmt(d), _fmt(r)] for d, r in zip(deltas, ratios)]
        _emit(_csv_text(["delta", "ratio"], rows), args.output)
    else:
        _emit(
            _json_text(
                {
                    "n": n,
                    "deltas": list(deltas),
                    "ratios": list(ratios),
                    "fitted_exponent": exponent,
                }
            ),
            args.output,
        )
    return 0


# ---------------------------------------------------------------------------
# report (the rendering path)


def cmd_report(args, cfg) -> int:
    from . import plots

    outdir = Path(args.output or "report")
    outdir.mkdir(parents=True, exist_ok=True)
    written = []

    analytic = [(n, energy(n)) for n in range(1, 6)]
    grid0 = GridSpec(halfwidth_L=320.0, epsilon=1e-4, step=2.5e-5)
    p0 = ExtensionParams.rotation(0.0)
    rot = solve_spectrum(p0, grid0, count=4)
    gridd = GridSpec(halfwidth_L=160.0, epsilon=1e-4, step=2.5e-5)
    dirich = solve_spectrum(ExtensionParams.dirichlet(), gridd, count=4)

    def put(name, text):
        (outdir / name).write_text(text)
        written.append(name)

    put(
        "spectrum_analytic.csv",
        _csv_text(
            ["n", "energy", "multiplicity", "parity"],
            [[n, _fmt(e), 1, "odd"] for n, e in analytic],
        ),
    )
    for fname, result in (("spectrum_rotation0.csv", rot), ("spectrum_dirichlet.csv", dirich)):
        put(
            fname,
            _csv_text(
                ["energy", "multiplicity", "parity"],
                [[_fmt(lv.energy), lv.multiplicity, lv.parity] for lv in result.levels],
            ),
        )

    report = _assemble_report(args, cfg, list(_CHECK_GROUPS), ATOMIC)
    put("verify.json", _json_text(report.to_dict()))

    samples = {lv.energy: eigenfunction(p0, grid0, lv.energy) for lv in rot.levels[:3]}
    entries = [(n, samples.get(lv.energy)) for n, lv in zip((1, 2, 3), rot.levels[:3])]
    figures = {
        "fig_spectrum.png": plots.spectrum_figure(analytic, rot, dirich),
        "fig_eigenfunctions.png": plots.eigenfunction_figure(entries),
        "fig_momentum.png": plots.momentum_figure((1, 2, 3, 4)),
    }

    eps = [10.0**-j for j in range(1, 6)]
    series = {}
    for label, cand in (
        ("eigenstate n=1", "eigenstate"),
        ("one-sided state", "half-line"),
        ("kinked even", "even-kink"),
    ):
        rep = vf.check_matching(1, eps, candidate=cand)
        res = [c.measured for c in sorted(
            (c for c in rep.checks if c.name.startswith("matching[")),
            key=lambda c: -float(c.name.rsplit("eps=", 1)[1].rstrip("]")),
        )]
        series[label] = (sorted(eps, reverse=True), res)
    figures["fig_matching.png"] = plots.matching_figure(series)

    deltas = np.geomspace(1e-4, 1e-1, 13)
    ratios = [vf.semiclassical_time_ratio(1, float(d)) for d in deltas]
    exponent = float(np.polyfit(np.log(deltas), np.log(ratios), 1)[0])
    figures["fig_semiclassical.png"] = plots.semiclassical_figure(deltas, ratios, exponent)

    for name, fig in figures.items():
        fig.savefig(outdir / name, dpi=150)
        written.append(name)

    status = "all checks passed" if report.all_passed else "CHECK FAILURES PRESENT"
    sys.stdout.write(
        f"report written to {outdir} ({len(written)} files): {', '.join(sorted(written))}\n"
        f"verification: {status}\n"
    )
    return 0 if report.all_passed else 1


# ---------------------------------------------------------------------------
# parser


def _add_common(sp) -> None:
    sp.add_argument("--format", choices=("json", "csv"), default=None)
    sp.add_argument("--output", default=None, metavar="PATH")
    sp.add_argument("--config", default=None, metavar="PATH")
    sp.add_argument("--si", action="store_const", const=True, default=None)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coulomb1d",
        description="Bound states of the one-dimensional Coulomb potential: "
        "closed forms, a verification suite, and an interface-condition shooting solver.",
    )
    sub = parser.add_subparsers(dest="command")

    sp = sub.add_parser("spectrum", help="tabulate bound levels (closed form or solver)")
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--analytic", dest="numeric", action="store_const", const=False, default=None)
    mode.add_argument("--numeric", dest="numeric", action="store_const", const=True)
    sp.add_argument("--n-max", type=int, default=None)
    sp.add_argument("--count", type=int, default=None)
    sp.add_argument("--theta", type=float, default=None)
    sp.add_argument("--dirichlet", action="store_const", const=True, default=None)
    sp.add_argument("--halfwidth", type=float, default=None)
    sp.add_argument("--epsilon", type=float, default=None)
    sp.add_argument("--step", type=float, default=None)
    _add_common(sp)
    sp.set_defaults(handler=cmd_spectrum)

    sp = sub.add_parser("eval", help="sample a bound state in position or momentum space")
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--space", choices=("x", "k"), default=None)
    sp.add_argument("--range", type=float, nargs=2, default=None, metavar=("LO", "HI"))
    sp.add_argument("--points", type=int, default=None)
    _add_common(sp)
    sp.set_defaults(handler=cmd_eval)

    sp = sub.add_parser("verify", help="run the numerical verification suite")
    sp.add_argument("--check", action="append", default=None, metavar="GROUP")
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--quad-points", type=int, default=None)
    sp.add_argument("--quad-halfwidth", type=float, default=None)
    sp.add_argument("--quad-scheme", default=None)
    _add_common(sp)
    sp.set_defaults(handler=cmd_verify)

    sp = sub.add_parser("current", help="probability current density of a sampled state")
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--mix", type=int, nargs=2, default=None, metavar=("N1", "N2"))
    sp.add_argument("--range", type=float, nargs=2, default=None, metavar=("LO", "HI"))
    sp.add_argument("--points", type=int, default=None)
    _add_common(sp)
    sp.set_defaults(handler=cmd_current)

    sp = sub.add_parser("semiclassical", help="classical crossing-time ratio scan")
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--delta-min", type=float, default=None)
    sp.add_argument("--delta-max", type=float, default=None)
    sp.add_argument("--delta-count", type=int, default=None)
    _add_common(sp)
    sp.set_defaults(handler=cmd_semiclassical)

    sp = sub.add_parser(
        "groundstate-check",
        help="rejection of the even exponential candidate plus the deep-level scan",
    )
    _add_common(sp)
    sp.set_defaults(handler=cmd_groundstate_check)

    sp = sub.add_parser("report", help="write figures and delimited results to a directory")
    _add_common(sp)
    sp.set_defaults(handler=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    if getattr(args, "handler", None) is None:
        parser.print_help(sys.stderr)
        return 2
    try:
        cfg = _load_config(args.config) if args.config else {}
        return args.handler(args, cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (SolverError, SeriesError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
