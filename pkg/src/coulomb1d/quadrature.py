"""Deterministic quadrature plumbing shared by the verification checks.

Two schemes back the public checks: composite Gauss-Legendre on an explicit
panel list (the caller chooses the grading), and an iteratively refined
trapezoid rule for the alternate scheme label.  Panels are the right tool
here because the integrands split into three awkward families: products of
bound states with an integrable near-origin weight, slowly decaying
rational tails in k, and oscillatory Fourier kernels.  Gauss nodes never
touch panel endpoints, so integrable endpoint behavior needs no special
casing.

Everything is pure and deterministic; no adaptive randomness, so repeated
runs are reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "PanelRule",
    "panel_nodes",
    "integrate",
    "uniform_edges",
    "geometric_edges",
    "trapezoid_refined",
]


@dataclass(frozen=True)
class PanelRule:
    """Strictly increasing panel edges plus a Gauss-Legendre order per panel."""

    edges: tuple
    order: int = 64

    def __post_init__(self) -> None:
        edges = tuple(float(e) for e in self.edges)
        if len(edges) < 2:
            raise ValueError("need at least two panel edges")
        if any(b <= a for a, b in zip(edges, edges[1:])):
            raise ValueError("panel edges must be strictly increasing")
        if self.order < 2:
            raise ValueError("Gauss-Legendre order must be >= 2")
        object.__setattr__(self, "edges", edges)


def panel_nodes(rule: PanelRule):
    """Flattened nodes and weights of the composite rule."""
    base_x, base_w = np.polynomial.legendre.leggauss(rule.order)
    edges = np.asarray(rule.edges)
    a = edges[:-1, None]
    b = edges[1:, None]
    half = (b - a) / 2.0
    nodes = (a + b) / 2.0 + half * base_x[None, :]
    weights = half * base_w[None, :]
    return nodes.ravel(), weights.ravel()


def integrate(func, rule: PanelRule):
    """Integral of a vectorized callable over the union of panels."""
    nodes, weights = panel_nodes(rule)
    return np.sum(weights * np.asarray(func(nodes)), axis=-1)


def uniform_edges(lo: float, hi: float, panels: int):
    if panels < 1:
        raise ValueError("need at least one panel")
    if hi <= lo:
        raise ValueError("need hi > lo")
    return tuple(np.linspace(lo, hi, panels + 1))


def geometric_edges(inner: float, outer: float, panels: int):
    """Geometrically graded edges, inner > 0; panels+1 edges in total."""
    if not 0.0 < inner < outer:
        raise ValueError("need 0 < inner < outer")
    if panels < 1:
        raise ValueError("need at least one panel")
    return tuple(np.geomspace(inner, outer, panels + 1))


def trapezoid_refined(func, lo: float, hi: float, base_points: int, max_doublings: int = 6):
    """Trapezoid value after repeated grid doubling, plus the last change.

    Refinement stops early once the value moves by less than 1e-13 in
    relative terms.  The returned change is a crude convergence estimate
    the caller can surface in a report detail.
    """
    if hi <= lo:
        raise ValueError("need hi > lo")
    n = max(int(base_points), 3)
    xs = np.linspace(lo, hi, n)
    value = np.trapezoid(func(xs), xs)
    change = np.inf
    for _ in range(max_doublings):
        n = 2 * n - 1
        xs = np.linspace(lo, hi, n)
        new = np.trapezoid(func(xs), xs)
        change = abs(new - value)
        value = new
        if change <= 1e-13 * max(1.0, abs(value)):
            break
    return value, change
