"""Independent numerical checks of the closed-form bound-state claims.

Each check recomputes one analytic statement by quadrature or finite
differences and reports the discrepancy as a :class:`CheckResult`.  The
code here deliberately avoids the closed-form shortcuts it is checking:
norms are integrated numerically, the momentum representation is compared
against a brute-force Fourier integral, and the interface behavior at the
origin is probed on shrinking intervals.

Conventions for rejection-style checks (where the claim is that some
candidate FAILS a property): measured is the shortfall of the observed
violation below a stated threshold, scaled to be dimensionless, with
tolerance 0.  That keeps the CheckResult invariant (passed exactly when
measured <= tolerance) uniform across the suite.

All checks are deterministic and side-effect-free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .quadrature import (
    PanelRule,
    geometric_edges,
    integrate,
    trapezoid_refined,
    uniform_edges,
)
from .states import (
    ATOMIC,
    PhysicalScales,
    WavefunctionSample,
    energy,
    half_line_solution,
    normalization,
    psi,
    psi_prime,
    psi_second,
    phi,
)
from .states import _qn

__all__ = [
    "QuadratureSpec",
    "CheckResult",
    "VerificationReport",
    "check_parseval",
    "check_normalization_constant",
    "check_orthonormality",
    "check_fourier_consistency",
    "check_matching",
    "groundstate_rejection",
    "schrodinger_residual",
    "check_schrodinger_residual",
    "semiclassical_time_ratio",
    "check_semiclassical",
    "probability_current",
    "check_current_real",
    "check_current_superposition",
    "default_report",
]

_EPS = float(np.finfo(float).eps)

# Fixed momentum-space cutoff, in units of 1/(n a0).  The density falls off
# like (n a0 k)^-6 once the oscillation amplitude is accounted for, so the
# discarded tail is far below every tolerance used here.
_K_CUT = 600.0


@dataclass(frozen=True)
class QuadratureSpec:
    """User-facing quadrature knob: domain size, node budget, scheme label.

    The half-width is a position-space length; momentum-space integrals
    choose their own cutoff internally so that a truncated position domain
    shows up as a mismatch rather than being silently compensated.
    """

    domain_halfwidth: float
    node_count: int = 64
    scheme: str = "gauss-legendre-composite"

    _SCHEMES = ("gauss-legendre-composite", "trapezoid-refined")

    def __post_init__(self) -> None:
        if self.domain_halfwidth <= 0.0:
            raise ValueError("domain_halfwidth must be positive")
        if self.node_count < 16:
            raise ValueError("node_count must be at least 16")
        if self.scheme not in self._SCHEMES:
            raise ValueError(f"scheme must be one of {self._SCHEMES}")


def default_quadrature(n_max: int, scales: PhysicalScales = ATOMIC) -> QuadratureSpec:
    """Overkill-by-design default: half-width 40 n a0, 64-node panels."""
    return QuadratureSpec(domain_halfwidth=40.0 * n_max * scales.bohr_radius)


@dataclass(frozen=True)
class CheckResult:
    name: str
    measured: float
    tolerance: float
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "measured": self.measured,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "detail": self.detail,
        }


def make_check(name: str, measured: float, tolerance: float, detail: str = "") -> CheckResult:
    measured = float(measured)
    return CheckResult(
        name=name,
        measured=measured,
        tolerance=float(tolerance),
        passed=bool(measured <= tolerance),
        detail=detail,
    )


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple
    all_passed: bool

    @classmethod
    def from_checks(cls, checks) -> "VerificationReport":
        ordered = tuple(sorted(checks, key=lambda c: c.name))
        return cls(checks=ordered, all_passed=all(c.passed for c in ordered))

    def to_dict(self) -> dict:
        return {
            "checks": [c.to_dict() for c in self.checks],
            "all_passed": self.all_passed,
        }

    def merged_with(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport.from_checks(self.checks + other.checks)


# ---------------------------------------------------------------------------
# integral building blocks


def _gl_integral(func, edges, order):
    return float(integrate(func, PanelRule(edges=edges, order=order)))


def _panel_count(quad: QuadratureSpec) -> int:
    # half a panel per node keeps the default spec at 32 panels of 64 nodes;
    # coarse settings shrink both, so insufficient budgets actually fail.
    return max(1, quad.node_count // 2)


def _position_norm(n: int, quad: QuadratureSpec, scales: PhysicalScales):
    """2 int_0^H psi_n^2 dx together with a truncation/refinement estimate."""
    H = quad.domain_halfwidth
    f = lambda x: psi(n, x, scales) ** 2
    if quad.scheme == "trapezoid-refined":
        half, change = trapezoid_refined(f, 0.0, H, quad.node_count * 32 + 1)
        inner, _ = trapezoid_refined(f, 0.0, 0.75 * H, quad.node_count * 24 + 1)
        return 2.0 * half, 2.0 * max(change, abs(half - inner))
    panels = _panel_count(quad)
    edges = uniform_edges(0.0, H, panels)
    value = _gl_integral(f, edges, quad.node_count)
    inner = _gl_integral(f, uniform_edges(0.0, 0.75 * H, panels), quad.node_count)
    coarse = _gl_integral(f, edges, max(16, quad.node_count // 2))
    est = max(abs(value - inner), abs(value - coarse))
    return 2.0 * value, 2.0 * est


def _momentum_edges(n: int, scales: PhysicalScales):
    inv = 1.0 / (n * scales.bohr_radius)
    knee = 8.0 * inv
    cut = _K_CUT * inv
    return uniform_edges(0.0, knee, 16) + geometric_edges(knee, cut, 16)[1:], cut


def _momentum_norm(n: int, quad: QuadratureSpec, scales: PhysicalScales):
    """2 int_0^K |phi_n|^2 dk with its own refinement estimate."""
    f = lambda k: np.abs(phi(n, k, scales)) ** 2
    edges, cut = _momentum_edges(n, scales)
    if quad.scheme == "trapezoid-refined":
        value, change = trapezoid_refined(f, 0.0, cut, quad.node_count * 64 + 1, 5)
        return 2.0 * value, 2.0 * change, cut
    value = _gl_integral(f, edges, quad.node_count)
    coarse = _gl_integral(f, edges, max(16, quad.node_count // 2))
    return 2.0 * value, 2.0 * abs(value - coarse), cut


# ---------------------------------------------------------------------------
# checks


def check_parseval(
    n, quad: QuadratureSpec, scales: PhysicalScales = ATOMIC, tolerance: float = 1e-7
) -> CheckResult:
    """Position-space and momentum-space norms must agree (both equal 1).

    The momentum integral uses the plain k measure, under which both sides
    are unit-normalized with the unitary transform convention; the detail
    string records both values and the internal cutoff.
    """
    n = _qn(n)
    ix, ex = _position_norm(n, quad, scales)
    ik, ek, cut = _momentum_norm(n, quad, scales)
    measured = abs(ik - ix)
    detail = (
        f"position norm {ix:.12g} (est {ex:.3g}), "
        f"momentum norm {ik:.12g} (est {ek:.3g}, cutoff {cut:.6g})"
    )
    if max(ex, ek) > tolerance:
        detail = "quadrature not converged (truncated domain or too few nodes); " + detail
    return make_check(f"parseval[n={n}]", measured, tolerance, detail)


def check_normalization_constant(
    n, quad: QuadratureSpec, scales: PhysicalScales = ATOMIC, tolerance: float = 1e-10
) -> CheckResult:
    """Closed-form prefactor against the quadrature-derived one.

    Integrates the unnormalized shape z exp(-|z|/2) Lag(n-1,1,|z|) squared
    and compares 1/sqrt of that integral with :func:`normalization`.
    """
    n = _qn(n)
    a = normalization(n, scales)
    raw = lambda x: (psi(n, x, scales) / a) ** 2
    H = quad.domain_halfwidth
    ival = 2.0 * _gl_integral(raw, uniform_edges(0.0, H, _panel_count(quad)), quad.node_count)
    a_quad = 1.0 / math.sqrt(ival)
    measured = abs(a_quad - a) / a
    detail = f"closed form {a:.12g}, from quadrature {a_quad:.12g}"
    return make_check(f"normalization[n={n}]", measured, tolerance, detail)


def check_orthonormality(
    n_max: int, quad: QuadratureSpec, scales: PhysicalScales = ATOMIC, tolerance: float = 1e-8
) -> VerificationReport:
    """Gram matrix of the first n_max states against the identity.

    One entry per pair (m, n), m <= n; products of the odd eigenfunctions
    are even, so integration runs over a half-line and doubles.
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    H = quad.domain_halfwidth
    edges = uniform_edges(0.0, H, _panel_count(quad))
    nodes_w = PanelRule(edges=edges, order=quad.node_count)
    if quad.scheme == "trapezoid-refined":
        grid = np.linspace(0.0, H, quad.node_count * 1024 + 1)
        vals = np.array([psi(n, grid, scales) for n in range(1, n_max + 1)])
        gram = 2.0 * np.array(
            [[np.trapezoid(vals[i] * vals[j], grid) for j in range(n_max)] for i in range(n_max)]
        )
    else:
        from .quadrature import panel_nodes

        xs, ws = panel_nodes(nodes_w)
        vals = np.array([psi(n, xs, scales) for n in range(1, n_max + 1)])
        gram = 2.0 * (vals * ws) @ vals.T
    checks = []
    for i in range(n_max):
        for j in range(i, n_max):
            target = 1.0 if i == j else 0.0
            measured = abs(gram[i, j] - target)
            checks.append(
                make_check(
                    f"orthonormality[{i + 1},{j + 1}]",
                    measured,
                    tolerance,
                    f"overlap {gram[i, j]:.12g}",
                )
            )
    return VerificationReport.from_checks(checks)


def check_fourier_consistency(
    n, k_grid, quad: QuadratureSpec, scales: PhysicalScales = ATOMIC, tolerance: float = 1e-5
) -> CheckResult:
    """Brute-force Fourier transform of psi against the closed-form phi.

    The transform of an odd real function reduces to a sine integral over
    the positive half-line; comparison is pointwise on k_grid after
    aligning one global phase (taken at the largest reference value).
    """
    n = _qn(n)
    k = np.asarray(list(k_grid), dtype=float)
    if k.size == 0:
        raise ValueError("k_grid must be nonempty")
    from .quadrature import panel_nodes

    rule = PanelRule(
        edges=uniform_edges(0.0, quad.domain_halfwidth, _panel_count(quad)),
        order=quad.node_count,
    )
    xs, ws = panel_nodes(rule)
    wpsi = ws * psi(n, xs, scales)
    numeric = (-2j / math.sqrt(2.0 * math.pi)) * (np.sin(np.outer(k, xs)) @ wpsi)
    reference = phi(n, k, scales)
    idx = int(np.argmax(np.abs(reference)))
    if abs(reference[idx]) > 0 and abs(numeric[idx]) > 0:
        align = numeric[idx] / reference[idx]
        align /= abs(align)
    else:
        align = 1.0
    measured = float(np.max(np.abs(numeric - align * reference)))
    detail = f"global phase {align:.6g}, {k.size} k points, halfwidth {quad.domain_halfwidth:.6g}"
    return make_check(f"fourier[n={n}]", measured, tolerance, detail)


# -- interface matching across the origin -----------------------------------

_MATCH_FLOOR = 1e-12
_MATCH_SLOPE_C = 1.0

_CANDIDATES = ("eigenstate", "half-line", "even-kink")


def _matching_state(n: int, candidate: str):
    """Value and derivative of the candidate as functions of the stretched
    variable z = 2x/(n a0), in atomic units (the functional is scale free)."""
    if candidate == "eigenstate":
        value = lambda z: psi(n, n * np.asarray(z) / 2.0)
        deriv = lambda z: (n / 2.0) * psi_prime(n, n * np.asarray(z) / 2.0)
    elif candidate == "half-line":
        value = lambda z: half_line_solution(n, "+", n * np.asarray(z) / 2.0)
        deriv = lambda z: np.where(
            np.asarray(z) > 0,
            math.sqrt(2.0) * (n / 2.0) * psi_prime(n, n * np.asarray(z) / 2.0),
            0.0,
        )
    elif candidate == "even-kink":
        value = lambda z: np.exp(-np.abs(z) / 2.0)
        deriv = lambda z: -0.5 * np.sign(z) * np.exp(-np.abs(z) / 2.0)
    else:
        raise ValueError(f"candidate must be one of {_CANDIDATES}")
    return value, deriv


def check_matching(n, epsilons, candidate: str = "eigenstate") -> VerificationReport:
    """Integral of the stationary equation across [-eps, eps].

    For an admissible state the combination

        psi'(eps) - psi'(-eps) + n ( -int_{-eps}^0 psi/z dz + int_0^eps psi/z dz )

    must vanish as eps drops, at least linearly.  Each epsilon gets its own
    entry with tolerance max(eps, 1e-12); a trailing summary entry reports
    the worst residual-to-bound ratio and the fitted decay order.  For the
    rejected candidates (one-sided states, the kinked even exponential) the
    derivative jump survives the limit and the entries fail, which is the
    point: this check is the computational form of the argument that kills
    them.  The kinked candidate's near-origin weight psi/z is not
    integrable; on the endpoint-free Gauss grid it evaluates to a large
    finite value that grows with resolution, and the residual stays O(1)
    or worse either way.
    """
    n = _qn(n)
    eps = [float(e) for e in epsilons]
    if not eps or any(e <= 0 for e in eps):
        raise ValueError("epsilons must be positive")
    if any(b >= a for a, b in zip(eps, eps[1:])):
        raise ValueError("epsilons must be strictly decreasing")
    value, deriv = _matching_state(n, candidate)

    checks = []
    residuals = []
    weight_peak = 0.0
    for e in eps:
        pos = _gl_integral(lambda z: value(z) / z, (0.0, e), 32)
        neg = _gl_integral(lambda z: value(z) / z, (-e, 0.0), 32)
        measured = abs(float(deriv(e)) - float(deriv(-e)) + n * (pos - neg))
        residuals.append(measured)
        nodes = np.array([e * t for t in (1e-3, 0.1, 0.5, 1.0)])
        weight_peak = max(weight_peak, float(np.max(np.abs(value(nodes) / nodes))))
        checks.append(
            make_check(
                f"matching[{candidate},n={n},eps={e:.0e}]",
                measured,
                max(_MATCH_SLOPE_C * e, _MATCH_FLOOR),
                f"derivative jump plus weighted integral, eps={e:.3g}",
            )
        )

    ratios = [r / max(_MATCH_SLOPE_C * e, _MATCH_FLOOR) for r, e in zip(residuals, eps)]
    above = [(e, r) for e, r in zip(eps, residuals) if r > _MATCH_FLOOR]
    if len(above) >= 2:
        le = np.log([e for e, _ in above])
        lr = np.log([r for _, r in above])
        slope = float(np.polyfit(le, lr, 1)[0])
        slope_note = f"fitted decay order {slope:.3g}"
    else:
        slope = math.inf
        slope_note = "residuals at or below floor 1e-12; decay order not resolvable (exact cancellation)"
    checks.append(
        make_check(
            f"matching-decay[{candidate},n={n}]",
            max(ratios),
            1.0,
            f"{slope_note}; max |psi/z| on probe nodes {weight_peak:.6g}",
        )
    )
    return VerificationReport.from_checks(checks)


# -- rejection of the even exponential candidate ----------------------------


def groundstate_rejection(
    E_grid,
    x_grid,
    scale_l: float = 1.0,
    scales: PhysicalScales = ATOMIC,
) -> VerificationReport:
    """Shows the even exponential exp(-|x|/l) is not an eigenstate.

    Three entries:

    * residual-gap: the stationary-equation residual of the candidate,
      minimized over the supplied energies, stays above 0.1; the pointwise
      residual is (|-1/(2 l^2) - 1/|x| - E|) exp(-|x|/l) in atomic units,
      which cannot vanish on an interval for any single E because of the
      x-dependent 1/|x| term.
    * derivative-jump: the kink at the origin, slope -1/l meeting +1/l,
      i.e. a jump of magnitude 2/l, incompatible with the derivative
      continuity required of admissible states.
    * eigenstate-sanity: the genuine odd states pass the same residual
      scan at their own energies, tying this check back to the solver of
      record rather than to a strawman.

    Rejection entries use the shortfall convention described in the module
    docstring (measured 0 with tolerance 0 when the violation is present).
    """
    E = np.asarray(list(E_grid), dtype=float)
    x = np.asarray(list(x_grid), dtype=float)
    if E.size == 0 or not np.all(np.isfinite(E)):
        raise ValueError("E_grid must be a nonempty list of finite energies")
    if np.any(x == 0.0):
        raise ValueError("x_grid must exclude the origin")
    if scale_l <= 0.0:
        raise ValueError("scale_l must be positive")
    ax = np.abs(x)
    cand = np.exp(-ax / scale_l)
    sup_per_E = np.array(
        [np.max(np.abs((-1.0 / (2.0 * scale_l**2) - 1.0 / ax - e) * cand)) for e in E]
    )
    best = int(np.argmin(sup_per_E))
    gap = float(sup_per_E[best])
    threshold = 0.1
    checks = [
        make_check(
            "groundstate-rejection[residual-gap]",
            max(0.0, (threshold - gap) / threshold),
            0.0,
            f"min-over-E sup residual {gap:.6g} at E={E[best]:.6g}, threshold {threshold}, scale l={scale_l:.6g}",
        )
    ]

    jump = 2.0 / scale_l
    checks.append(
        make_check(
            "groundstate-rejection[derivative-jump]",
            max(0.0, (1e-2 - abs(jump)) / 1e-2),
            0.0,
            f"one-sided slopes -/+ 1/l meet at 0; jump magnitude {jump:.6g}",
        )
    )

    worst = 0.0
    for n in (1, 2, 3):
        r = schrodinger_residual(n, x[np.abs(x) >= 1e-3], scales)
        worst = max(worst, float(np.max(r)))
    checks.append(
        make_check(
            "groundstate-rejection[eigenstate-sanity]",
            worst,
            1e-7,
            "odd eigenstates under the identical residual scan at their own energies",
        )
    )
    return VerificationReport.from_checks(checks)


def schrodinger_residual(n, x, scales: PhysicalScales = ATOMIC):
    """Relative stationary-equation residual of the closed-form state.

    Pointwise |H psi - E psi| divided by |E psi| + floor, the floor being
    machine epsilon times |E| max|psi| on the grid so the far tail does not
    divide by zero.  Derivatives are the exact closed forms.
    """
    n = _qn(n)
    x = np.asarray(x, dtype=float)
    if np.any(x == 0.0):
        raise ValueError("x must exclude the origin")
    hh = scales.hbar**2 / (2.0 * scales.mass)
    e_n = energy(n, scales)
    p = psi(n, x, scales)
    lhs = -hh * psi_second(n, x, scales) - scales.charge_sq * p / np.abs(x)
    floor = _EPS * abs(e_n) * float(np.max(np.abs(p)))
    return np.abs(lhs - e_n * p) / (np.abs(e_n * p) + floor)


def check_schrodinger_residual(
    n, scales: PhysicalScales = ATOMIC, tolerance: float = 1e-7
) -> CheckResult:
    n = _qn(n)
    a0 = scales.bohr_radius
    x = np.geomspace(1e-3 * a0, 40.0 * n * a0, 3000)
    worst = float(np.max(schrodinger_residual(n, x, scales)))
    return make_check(
        f"schrodinger-residual[n={n}]",
        worst,
        tolerance,
        f"3000 log-spaced points on [1e-3, {40 * n}] a0",
    )


# -- semiclassical crossing-time argument -----------------------------------


def semiclassical_time_ratio(n, delta: float, scales: PhysicalScales = ATOMIC) -> float:
    """Classical dwell time near the origin over dwell time at mid-orbit.

    The classical speed at energy E_n is v(x) = sqrt(2 (e^2/|x| - |E|)/m),
    valid inside the turning point x_t = e^2/|E|.  The origin interval
    [-delta/2, delta/2] has finite crossing time despite v diverging (the
    singularity integrates like sqrt x), and the ratio against an equal
    width interval centered at x_t/2 vanishes like sqrt delta.
    """
    n = _qn(n)
    e_n = energy(n, scales)
    x_t = scales.charge_sq / abs(e_n)
    if not 0.0 < delta < x_t:
        raise ValueError(f"delta must lie strictly inside the turning point {x_t:.6g}")

    def dwell(xs):
        v = np.sqrt(2.0 * (scales.charge_sq / xs - abs(e_n)) / scales.mass)
        return 1.0 / v

    half = delta / 2.0
    origin_edges = (0.0,) + geometric_edges(half * 1e-8, half, 24)
    t_origin = 2.0 * _gl_integral(dwell, origin_edges, 32)
    center = x_t / 2.0
    t_ref = _gl_integral(dwell, uniform_edges(center - half, center + half, 4), 32)
    return t_origin / t_ref


def check_semiclassical(
    n=1, deltas=None, scales: PhysicalScales = ATOMIC
) -> VerificationReport:
    """Fits the crossing-time ratio against delta on a log grid.

    Two entries: the fitted exponent must be 0.5 within 0.05, and the
    ratio must shrink monotonically toward zero with delta.
    """
    n = _qn(n)
    a0 = scales.bohr_radius
    if deltas is None:
        deltas = np.geomspace(1e-4 * a0, 1e-1 * a0, 13)
    d = np.asarray(list(deltas), dtype=float)
    ratios = np.array([semiclassical_time_ratio(n, float(x), scales) for x in d])
    order = np.argsort(d)
    d, ratios = d[order], ratios[order]
    slope = float(np.polyfit(np.log(d), np.log(ratios), 1)[0])
    checks = [
        make_check(
            "semiclassical[exponent]",
            abs(slope - 0.5),
            0.05,
            f"fitted exponent {slope:.6g} over delta in [{d[0]:.3g}, {d[-1]:.3g}]",
        ),
        make_check(
            "semiclassical[monotone]",
            max(0.0, float(np.max(ratios[:-1] - ratios[1:]))),
            0.0,
            f"ratio range [{ratios[0]:.6g}, {ratios[-1]:.6g}], decreasing toward small delta",
        ),
    ]
    return VerificationReport.from_checks(checks)


# -- probability current -----------------------------------------------------


def probability_current(
    sample: WavefunctionSample, scales: PhysicalScales = ATOMIC
) -> WavefunctionSample:
    """Current density j = (hbar/m) Im(conj(psi) psi') on the sample grid.

    Requires a uniform position grid of at least 3 points; the derivative
    is a second-order central difference (one-sided at the ends).  The
    prefactor is the standard hbar/m; continuity and vanishing statements
    are prefactor-independent.
    """
    if sample.space != "position":
        raise ValueError("current is defined on position-space samples")
    x = sample.abscissae
    if x.size < 3:
        raise ValueError("need at least 3 grid points")
    dx = np.diff(x)
    if np.max(np.abs(dx - dx[0])) > 1e-9 * abs(dx[0]):
        raise ValueError("grid must be uniform")
    vals = sample.values.astype(complex)
    deriv = np.gradient(vals, x[1] - x[0])
    j = (scales.hbar / scales.mass) * np.imag(np.conjugate(vals) * deriv)
    return WavefunctionSample(abscissae=x, values=j, space="position")


def check_current_real(n, scales: PhysicalScales = ATOMIC) -> CheckResult:
    """Real eigenstate samples carry exactly zero current."""
    n = _qn(n)
    a0 = scales.bohr_radius
    x = np.linspace(-20.0 * n * a0, 20.0 * n * a0, 2001)
    sample = WavefunctionSample(x, psi(n, x, scales) + 0j, "position")
    j = probability_current(sample, scales).values
    mid = float(np.abs(j[x.size // 2]))
    return make_check(
        f"current-real[n={n}]",
        float(np.max(np.abs(j))),
        1e-12,
        f"j at the origin {mid:.3g}",
    )


def check_current_superposition(
    n_a=1, n_b=2, scales: PhysicalScales = ATOMIC, tolerance: float = 1e-8
) -> CheckResult:
    """Continuity of j across the origin for a complex two-state mix.

    Samples (psi_a + i psi_b)/sqrt2 on a uniform grid straddling 0 and
    measures the jump between the two grid points adjacent to the origin.
    """
    n_a, n_b = _qn(n_a), _qn(n_b)
    a0 = scales.bohr_radius
    h = 1e-3 * a0
    x = np.arange(-50, 51) * h
    vals = (psi(n_a, x, scales) + 1j * psi(n_b, x, scales)) / math.sqrt(2.0)
    j = probability_current(WavefunctionSample(x, vals, "position"), scales).values
    i0 = x.size // 2
    jump = float(abs(j[i0 + 1] - j[i0 - 1]))
    return make_check(
        f"current-jump[{n_a},{n_b}]",
        jump,
        tolerance,
        f"j(-h)={j[i0 - 1]:.6g}, j(0)={j[i0]:.6g}, j(+h)={j[i0 + 1]:.6g}, h={h:.3g}",
    )


# ---------------------------------------------------------------------------


def default_report(scales: PhysicalScales = ATOMIC) -> VerificationReport:
    """The full analytic-side suite with default ranges and tolerances.

    Solver-backed checks (interface defect, absence of deep levels) are
    assembled by the command-line layer, which owns the solver import.
    """
    checks: list[CheckResult] = []
    for n in range(1, 9):
        checks.append(check_parseval(n, default_quadrature(n, scales), scales))
        checks.append(check_schrodinger_residual(n, scales))
    for n in range(1, 11):
        checks.append(check_normalization_constant(n, default_quadrature(n, scales), scales))
    checks.extend(check_orthonormality(8, default_quadrature(8, scales), scales).checks)
    a0 = scales.bohr_radius
    kgrid = np.linspace(-10.0 / a0, 10.0 / a0, 41)
    for n in range(1, 6):
        checks.append(check_fourier_consistency(n, kgrid, default_quadrature(n, scales), scales))
    eps = [10.0**-j for j in range(1, 6)]
    for n in range(1, 7):
        checks.extend(check_matching(n, eps).checks)
    for candidate in ("half-line", "even-kink"):
        rejected = check_matching(1, eps, candidate=candidate)
        worst = min(
            c.measured / max(c.tolerance, _MATCH_FLOOR)
            for c in rejected.checks
            if c.name.startswith("matching[")
        )
        checks.append(
            make_check(
                f"matching-rejects[{candidate}]",
                max(0.0, (5.0 - worst) / 5.0),
                0.0,
                f"smallest residual-to-bound ratio {worst:.6g} (must stay >= 5)",
            )
        )
    checks.extend(
        groundstate_rejection(
            np.linspace(-60.0, -1e-3, 241), np.geomspace(0.1, 10.0, 201), 1.0, scales
        ).checks
    )
    checks.append(check_current_real(1, scales))
    checks.append(check_current_real(3, scales))
    checks.append(check_current_superposition(1, 2, scales))
    checks.extend(check_semiclassical(1, None, scales).checks)
    return VerificationReport.from_checks(checks)
