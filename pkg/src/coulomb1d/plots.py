"""Report figures: level diagrams, eigenfunctions, momentum densities.

Figure builders take precomputed data and return matplotlib Figure
objects; rendering to files is the caller's job (the command-line report
path).  Nothing here computes physics.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .states import phi, psi

__all__ = [
    "spectrum_figure",
    "eigenfunction_figure",
    "momentum_figure",
    "matching_figure",
    "semiclassical_figure",
]


def spectrum_figure(analytic, numeric=None, dirichlet=None):
    """Level diagram: closed-form ladder next to solver output.

    analytic: iterable of (n, energy); numeric/dirichlet: SpectrumResult.
    """
    fig, ax = plt.subplots(figsize=(6.0, 4.5))
    cols = {"closed form": 0.0}
    for n, e in analytic:
        ax.hlines(e, -0.18, 0.18, color="C0")
        ax.annotate(f"n={n}", (0.20, e), fontsize=8, va="center")
    pos = 1.0
    for label, result, color in (
        ("rotation(0)", numeric, "C1"),
        ("dirichlet", dirichlet, "C2"),
    ):
        if result is None:
            continue
        cols[label] = pos
        for lv in result.levels:
            ax.hlines(lv.energy, pos - 0.18, pos + 0.18, color=color)
            if lv.multiplicity > 1:
                ax.annotate(
                    f"x{lv.multiplicity}", (pos + 0.20, lv.energy), fontsize=8, va="center"
                )
        pos += 1.0
    ax.set_xticks(list(cols.values()))
    ax.set_xticklabels(list(cols.keys()))
    ax.set_ylabel("energy (atomic units)")
    ax.set_title("bound levels")
    ax.grid(axis="y", alpha=0.3)
    fig.tight_layout()
    return fig


def eigenfunction_figure(entries):
    """Closed-form curves with numeric samples on top.

    entries: iterable of (n, sample or None); samples are thinned to keep
    the markers readable.
    """
    entries = list(entries)
    fig, axes = plt.subplots(len(entries), 1, figsize=(6.0, 2.2 * len(entries)), sharex=True)
    if len(entries) == 1:
        axes = [axes]
    for ax, (n, sample) in zip(axes, entries):
        span = 12.0 * n
        xs = np.linspace(-span, span, 801)
        ax.plot(xs, psi(n, xs), color="C0", lw=1.2, label="closed form")
        if sample is not None:
            keep = np.abs(sample.abscissae) <= span
            x = sample.abscissae[keep]
            v = np.asarray(sample.values)[keep]
            stride = max(1, x.size // 120)
            ax.plot(x[::stride], v[::stride], ".", ms=3.5, color="C1", label="shooting")
        ax.set_ylabel(f"psi_{n}")
        ax.axhline(0.0, color="k", lw=0.5, alpha=0.4)
        if ax is axes[0]:
            ax.legend(loc="upper right", fontsize=8)
    axes[-1].set_xlabel("x (units of a0)")
    fig.suptitle("bound states: closed form vs shooting solver", y=0.995)
    fig.tight_layout()
    return fig


def momentum_figure(ns):
    """Imaginary part and modulus squared of the momentum representation."""
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(8.0, 3.2))
    for n in ns:
        ks = np.linspace(-8.0 / n, 8.0 / n, 801)
        vals = phi(n, ks)
        ax1.plot(ks, vals.imag, lw=1.1, label=f"n={n}")
        ax2.plot(ks, np.abs(vals) ** 2, lw=1.1, label=f"n={n}")
    ax1.set_title("Im phi_n(k)  (Re phi_n = 0)")
    ax2.set_title("|phi_n(k)|^2")
    for ax in (ax1, ax2):
        ax.set_xlabel("k (units of 1/a0)")
        ax.legend(fontsize=8)
    fig.tight_layout()
    return fig


def matching_figure(series):
    """Cross-origin matching residual against the interval half-width.

    series: mapping label -> (epsilons, residuals).  Residuals at the
    1e-12 floor are shown at the floor; the guide line marks linear decay.
    """
    fig, ax = plt.subplots(figsize=(5.5, 4.0))
    floor = 1e-12
    for label, (eps, res) in series.items():
        shown = np.maximum(np.asarray(res, dtype=float), floor)
        ax.loglog(eps, shown, "o-", ms=4, lw=1.0, label=label)
    guide = np.asarray(sorted(next(iter(series.values()))[0]))
    ax.loglog(guide, guide, "k--", lw=0.8, alpha=0.6, label="linear bound")
    ax.axhline(floor, color="k", lw=0.5, alpha=0.3)
    ax.set_xlabel("interval half-width eps (z units)")
    ax.set_ylabel("matching residual")
    ax.set_title("cross-origin matching")
    ax.legend(fontsize=8)
    fig.tight_layout()
    return fig


def semiclassical_figure(deltas, ratios, exponent):
    fig, ax = plt.subplots(figsize=(5.0, 3.8))
    ax.loglog(deltas, ratios, "o-", ms=4, lw=1.0, color="C0", label="dwell-time ratio")
    d = np.asarray(deltas, dtype=float)
    anchor = ratios[len(ratios) // 2] / d[len(d) // 2] ** 0.5
    ax.loglog(d, anchor * np.sqrt(d), "k--", lw=0.8, label="sqrt(delta) slope")
    ax.set_xlabel("origin interval width delta (units of a0)")
    ax.set_ylabel("t_origin / t_reference")
    ax.set_title(f"classical crossing times (fitted exponent {exponent:.3f})")
    ax.legend(fontsize=8)
    fig.tight_layout()
    return fig
