"""Shooting solver for point-interaction extensions at the origin.

The stationary equation away from x = 0 (atomic units),

    psi'' = -2 (E + 1/|x|) psi,

is integrated on [eps, L] only; the potential is never evaluated inside
the origin exclusion, and the two half-lines talk to each other solely
through an interface condition on the boundary data

    (psi(0-), psi'(0-)) = R(theta) (psi(0+), psi'(0+)),

with R a rotation matrix, plus a separate Dirichlet variant psi(0-) =
psi(0+) = 0 that decouples the half-lines.

Near the origin every solution is a combination A u1 + B u0 of the
Frobenius pair

    u1(x) = x - x^2 + ...                  (regular, value 0, slope 1)
    u0(x) = 1 + ... - 2 ln(x) u1(x)        (singular slope),

so the raw boundary data at eps mixes a clean part with a log-divergent
part.  Taking the limit along the basis: the value at the origin is B and
the slope of the B-part diverges, which forces B = 0 for any extension
that constrains the slope, and makes B = 0 exactly the Dirichlet
condition as well.  The shooting function returned by :func:`shoot` is
therefore the normalized singular amplitude B/hypot(A, B) of the
half-line solution that decays at infinity: a smooth function of E whose
simple zeros are the admissible levels.  (The textbook alternative, a 2x2
determinant of raw boundary data at finite eps, factorizes here into
v(eps) d(eps) by mirror symmetry and picks up eps-dependent pseudo-zeros
from the log branch; projecting onto the Frobenius basis removes them.)

What distinguishes the variants is the assembly of eigenfunctions:

* rotation(0): odd continuation, one state per zero (continuity of value
  and slope picks the antisymmetric combination),
* rotation(pi): even continuation, one state per zero (the sign flip in
  R allows the mirror-symmetric combination instead),
* rotation(theta) with sin(theta) != 0: no bound state at all; the
  off-diagonal entries couple the finite value to the divergent slope, so
  only the trivial solution satisfies the condition (see
  :func:`solve_spectrum`),
* dirichlet: the two half-lines are independent, so each zero carries two
  states and the spectrum is twofold degenerate with zero pair split by
  construction.

The potential is mirror symmetric, so a single half-line integration
serves both sides; left-side data is an exact reflection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .states import WavefunctionSample

__all__ = [
    "SolverError",
    "ExtensionParams",
    "GridSpec",
    "ShootingConfig",
    "Level",
    "SpectrumResult",
    "interface_residual",
    "shoot",
    "solve_spectrum",
    "eigenfunction",
    "parity_label",
    "deep_scan",
    "boundary_defect",
]

_H_OUTER = 0.05  # step cap away from the origin; refined as x/8 approaching it
_DEGENERACY_TOL = 1e-6
_SCAN_PER_DECADE = 400
_FROBENIUS_TERMS = 16


class SolverError(RuntimeError):
    """Raised when the shooting scan cannot deliver what was asked."""


@dataclass(frozen=True)
class ExtensionParams:
    """Which extension: rotation(theta) or the decoupling Dirichlet variant."""

    variant: str = "rotation"
    theta: float = 0.0

    def __post_init__(self) -> None:
        if self.variant not in ("rotation", "dirichlet"):
            raise ValueError("variant must be 'rotation' or 'dirichlet'")
        if not 0.0 <= self.theta < 2.0 * math.pi:
            raise ValueError("theta must lie in [0, 2 pi)")
        if self.variant == "dirichlet" and self.theta != 0.0:
            raise ValueError("the dirichlet variant takes no angle")

    @classmethod
    def rotation(cls, theta: float = 0.0) -> "ExtensionParams":
        return cls(variant="rotation", theta=float(theta))

    @classmethod
    def dirichlet(cls) -> "ExtensionParams":
        return cls(variant="dirichlet")

    def rotation_matrix(self) -> np.ndarray:
        c, s = math.cos(self.theta), math.sin(self.theta)
        return np.array([[c, -s], [s, c]])

    def to_dict(self) -> dict:
        return {"variant": self.variant, "theta": self.theta}


@dataclass(frozen=True)
class GridSpec:
    """Integration domain [epsilon, halfwidth_L] and the near-origin step floor.

    The integrator grades its step as x/8 while approaching the origin,
    capped outward at an internal constant; `step` is the floor that
    grading is allowed to reach next to the exclusion radius.
    """

    halfwidth_L: float
    epsilon: float = 1e-4
    step: float = 2.5e-5

    def __post_init__(self) -> None:
        if not 0.0 < self.epsilon < self.halfwidth_L:
            raise ValueError("need 0 < epsilon < halfwidth_L")
        if not 0.0 < self.step <= self.epsilon / 4.0:
            raise ValueError("need 0 < step <= epsilon/4")

    def to_dict(self) -> dict:
        return {
            "halfwidth_L": self.halfwidth_L,
            "epsilon": self.epsilon,
            "step": self.step,
        }


@dataclass(frozen=True)
class ShootingConfig:
    energy_bracket: tuple
    bisection_tol: float = 1e-9
    max_iter: int = 60

    def __post_init__(self) -> None:
        lo, hi = (float(self.energy_bracket[0]), float(self.energy_bracket[1]))
        if not lo < hi < 0.0:
            raise ValueError("need E_lo < E_hi < 0")
        if self.bisection_tol <= 0.0 or self.max_iter < 1:
            raise ValueError("bisection_tol must be positive, max_iter >= 1")
        object.__setattr__(self, "energy_bracket", (lo, hi))


@dataclass(frozen=True)
class Level:
    energy: float
    multiplicity: int
    parity: str

    def to_dict(self) -> dict:
        return {"energy": self.energy, "multiplicity": self.multiplicity, "parity": self.parity}


@dataclass(frozen=True)
class SpectrumResult:
    levels: tuple
    params: ExtensionParams
    grid: GridSpec

    def __post_init__(self) -> None:
        es = [lv.energy for lv in self.levels]
        if any(b <= a for a, b in zip(es, es[1:])):
            raise ValueError("levels must be strictly ascending in energy")
        if any(lv.multiplicity < 1 for lv in self.levels):
            raise ValueError("multiplicities must be >= 1")
        object.__setattr__(self, "levels", tuple(self.levels))

    def energies(self) -> np.ndarray:
        return np.array([lv.energy for lv in self.levels])

    def state_count(self) -> int:
        return sum(lv.multiplicity for lv in self.levels)

    def to_dict(self) -> dict:
        return {
            "levels": [lv.to_dict() for lv in self.levels],
            "params": self.params.to_dict(),
            "grid": self.grid.to_dict(),
        }


# ---------------------------------------------------------------------------
# grid and integrator


@lru_cache(maxsize=16)
def _grid_points(L: float, eps: float, step: float) -> np.ndarray:
    """Descending integration abscissae from L to eps with graded spacing."""
    xs = [L]
    x = L
    while x > eps:
        h = min(_H_OUTER, max(x / 8.0, step), x - eps)
        x -= h
        xs.append(x)
    pts = np.array(xs)
    pts[-1] = eps
    return pts


def _integrate_halfline(E, grid: GridSpec, record: bool = False):
    """March psi'' = -2(E + 1/x) psi from the decaying tail down to eps.

    Vectorized over an array of energies; each energy activates at its own
    starting abscissa (where exp decay from L would underflow anyway) with
    tail data (1, -kappa).  Returns (value, slope) at eps, plus the full
    trajectory when record is set.  Amplitudes grow inward by at most
    ~exp(80), comfortably inside double range, so no renormalization is
    needed mid-march.
    """
    E = np.atleast_1d(np.asarray(E, dtype=float))
    if np.any(E >= 0.0):
        raise ValueError("bound-state search needs E < 0")
    xs = _grid_points(grid.halfwidth_L, grid.epsilon, grid.step)
    kappa = np.sqrt(-2.0 * E)
    start = np.minimum(grid.halfwidth_L, grid.epsilon + 70.0 / kappa + 4.0 / np.abs(E))

    v = np.zeros_like(E)
    d = np.zeros_like(E)
    alive = np.zeros(E.shape, dtype=bool)
    E2 = 2.0 * E
    traj = np.zeros((xs.size, E.size)) if record else None

    for j in range(xs.size - 1):
        x0 = xs[j]
        fresh = (~alive) & (x0 <= start)
        if np.any(fresh):
            v[fresh] = 1.0
            d[fresh] = -kappa[fresh]
            alive[fresh] = True
        if record:
            traj[j] = v
        h = x0 - xs[j + 1]
        xm = x0 - 0.5 * h
        x1 = xs[j + 1]
        f0 = -(E2 + 2.0 / x0)
        fm = -(E2 + 2.0 / xm)
        f1 = -(E2 + 2.0 / x1)
        av1 = d
        ad1 = f0 * v
        av2 = d - 0.5 * h * ad1
        ad2 = fm * (v - 0.5 * h * av1)
        av3 = d - 0.5 * h * ad2
        ad3 = fm * (v - 0.5 * h * av2)
        av4 = d - h * ad3
        ad4 = f1 * (v - h * av3)
        v = v - (h / 6.0) * (av1 + 2.0 * av2 + 2.0 * av3 + av4)
        d = d - (h / 6.0) * (ad1 + 2.0 * ad2 + 2.0 * ad3 + ad4)

    if record:
        traj[-1] = v
    if not (np.all(np.isfinite(v)) and np.all(np.isfinite(d))):
        raise SolverError("integration produced non-finite values")
    return (v, d, xs, traj) if record else (v, d)


def _frobenius_data(E, eps: float, terms: int = _FROBENIUS_TERMS):
    """Values and slopes of the basis pair (u1, u0) at eps, per energy.

    u1 = sum a_m x^m with a_1 = 1; u0 = sum b_m x^m - 2 ln(x) u1 with
    b_0 = 1, b_1 = 0.  The recurrences follow from x psi'' + 2 psi
    + 2 E x psi = 0; the ln coefficient -2 is fixed by the m = 0 balance.
    """
    E = np.atleast_1d(np.asarray(E, dtype=float))
    gamma = -2.0
    a = np.zeros((terms + 2, E.size))
    b = np.zeros((terms + 2, E.size))
    a[1] = 1.0
    b[0] = 1.0
    for m in range(1, terms + 1):
        a[m + 1] = -(2.0 * a[m] + 2.0 * E * a[m - 1]) / (m * (m + 1))
        b[m + 1] = -(2.0 * b[m] + 2.0 * E * b[m - 1] + gamma * (2 * m + 1) * a[m + 1]) / (
            m * (m + 1)
        )
    powers = eps ** np.arange(terms + 2)
    dpowers = np.arange(terms + 2) * eps ** np.maximum(np.arange(terms + 2) - 1, 0)
    dpowers[0] = 0.0
    u1v = powers @ a
    u1d = dpowers @ a
    wv = powers @ b
    wd = dpowers @ b
    ln = math.log(eps)
    u0v = wv + gamma * ln * u1v
    u0d = wd + gamma * (ln * u1d + u1v / eps)
    return u1v, u1d, u0v, u0d


def _singular_amplitude(E, grid: GridSpec):
    """Normalized B of the decaying half-line solution, vectorized in E."""
    v, d = _integrate_halfline(E, grid)
    u1v, u1d, u0v, u0d = _frobenius_data(E, grid.epsilon)
    det = u1v * u0d - u0v * u1d
    A = (u0d * v - u0v * d) / det
    B = (u1v * d - u1d * v) / det
    return B / np.hypot(A, B)


def interface_residual(params: ExtensionParams, left, right) -> np.ndarray:
    """Mismatch of boundary data against the interface condition.

    left and right are (value, derivative) pairs of origin limits taken
    from below and from above.  For the rotation family the residual is
    left - R(theta) right; for the Dirichlet variant it is the pair of
    boundary values themselves, since each must vanish independently.
    """
    lv = np.asarray(left, dtype=float)
    rv = np.asarray(right, dtype=float)
    if lv.shape != (2,) or rv.shape != (2,):
        raise ValueError("left and right must be (value, derivative) pairs")
    if params.variant == "dirichlet":
        return np.array([lv[0], rv[0]])
    return lv - params.rotation_matrix() @ rv


def shoot(E: float, params: ExtensionParams, grid: GridSpec) -> float:
    """Matching function whose zeros in E are the bound levels.

    For rotation(0), rotation(pi), and dirichlet this is the normalized
    singular Frobenius amplitude of the decaying half-line solution (see
    the module docstring); all three share the same zeros and differ in
    how eigenfunctions are assembled from them.  For rotation angles with
    sin(theta) != 0 the interface couples the finite boundary value to
    the divergent slope and no nontrivial solution matches at any energy;
    the returned value is the constant 1, the lower bound of the
    normalized mismatch, so a scan correctly finds nothing.
    """
    E = float(E)
    if E >= 0.0:
        raise ValueError("bound-state search needs E < 0")
    if params.variant == "rotation" and abs(math.sin(params.theta)) > 1e-15:
        return 1.0
    return float(_singular_amplitude(np.array([E]), grid)[0])


def _default_config(zeros_needed: int) -> ShootingConfig:
    e_hi = -1.0 / (2.0 * (zeros_needed + 0.5) ** 2)
    return ShootingConfig(energy_bracket=(-1.0, e_hi))


def _scan_brackets(grid: GridSpec, cfg: ShootingConfig):
    """Sign-change brackets of the matching function over the energy window."""
    lo, hi = cfg.energy_bracket
    decades = math.log10(abs(lo) / abs(hi))
    npts = max(int(math.ceil(_SCAN_PER_DECADE * decades)) + 2, 16)
    Es = -np.geomspace(abs(hi), abs(lo), npts)
    Es = np.sort(Es)
    vals = _singular_amplitude(Es, grid)
    signs = np.where(vals >= 0.0, 1.0, -1.0)
    flips = np.nonzero(signs[:-1] != signs[1:])[0]
    return [(Es[i], Es[i + 1]) for i in flips]


def _refine_roots(brackets, grid: GridSpec, cfg: ShootingConfig) -> np.ndarray:
    """Zoom bisection, all brackets refined together in one batch per round."""
    lo = np.array([b[0] for b in brackets])
    hi = np.array([b[1] for b in brackets])
    flo = _singular_amplitude(lo, grid)
    sub = 9
    for _ in range(cfg.max_iter):
        if np.all(hi - lo <= cfg.bisection_tol):
            break
        mesh = lo[:, None] + (hi - lo)[:, None] * np.linspace(0.0, 1.0, sub)[None, :]
        vals = _singular_amplitude(mesh.ravel(), grid).reshape(mesh.shape)
        signs = np.where(vals >= 0.0, 1.0, -1.0)
        ref = np.where(flo >= 0.0, 1.0, -1.0)
        changed = signs != ref[:, None]
        first = np.argmax(changed, axis=1)  # first subnode past the sign change
        first = np.clip(first, 1, sub - 1)
        new_lo = np.take_along_axis(mesh, (first - 1)[:, None], axis=1).ravel()
        new_hi = np.take_along_axis(mesh, first[:, None], axis=1).ravel()
        flo = np.take_along_axis(vals, (first - 1)[:, None], axis=1).ravel()
        lo, hi = new_lo, new_hi
    return 0.5 * (lo + hi)


def solve_spectrum(
    params: ExtensionParams,
    grid: GridSpec,
    cfg: ShootingConfig | None = None,
    count: int = 4,
) -> SpectrumResult:
    """Lowest `count` bound states (counted with multiplicity).

    Scans the matching function for sign changes on a log energy mesh,
    refines each bracket, and assembles levels: multiplicity 1 for the
    rotation family, 2 for Dirichlet (the two half-lines decouple and
    share the identical radial condition, so the degenerate pair has
    exactly zero split; it is reported as one level of multiplicity 2).
    Parity labels come from symmetry-defect integrals of the assembled
    eigenfunction, not from assumptions.  Raises SolverError when the
    energy window holds fewer sign changes than requested.

    Rotation angles with sin(theta) != 0 admit no bound state (module
    docstring); the result is then an empty spectrum rather than an
    error, since that emptiness is the answer.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if params.variant == "rotation" and abs(math.sin(params.theta)) > 1e-15:
        return SpectrumResult(levels=(), params=params, grid=grid)

    per_zero = 2 if params.variant == "dirichlet" else 1
    zeros_needed = -(-count // per_zero)
    if cfg is None:
        cfg = _default_config(zeros_needed)
    brackets = _scan_brackets(grid, cfg)
    if len(brackets) < zeros_needed:
        raise SolverError(
            f"bracket exhaustion: found {len(brackets)} sign changes in "
            f"[{cfg.energy_bracket[0]:.6g}, {cfg.energy_bracket[1]:.6g}], needed {zeros_needed}"
        )
    roots = _refine_roots(brackets[:zeros_needed], grid, cfg)
    roots = np.sort(roots)

    merged: list[list] = []
    for e in roots:
        if merged and abs(e - merged[-1][0]) <= _DEGENERACY_TOL:
            merged[-1][1] += per_zero
        else:
            merged.append([float(e), per_zero])

    levels = []
    for e, mult in merged:
        sample = eigenfunction(params, grid, e)
        levels.append(Level(energy=e, multiplicity=mult, parity=parity_label(sample)))
    return SpectrumResult(levels=tuple(levels), params=params, grid=grid)


def eigenfunction(params: ExtensionParams, grid: GridSpec, E: float) -> WavefunctionSample:
    """Normalized eigenfunction sample on the symmetric grid (origin excluded).

    One half-line trajectory is integrated at the given energy; the other
    side is its exact mirror, signed according to the variant: odd for
    rotation(0), even for rotation(pi), right-half support for Dirichlet
    (the representative of the degenerate pair).  The overall sign makes
    the function positive just right of the origin.
    """
    E = float(E)
    if params.variant == "rotation" and abs(math.sin(params.theta)) > 1e-15:
        raise ValueError("no bound eigenfunctions exist for sin(theta) != 0")
    v, d, xs, traj = _integrate_halfline(np.array([E]), grid, record=True)
    right = traj[::-1, 0]  # ascending in x
    x_right = xs[::-1]
    if right[0] < 0.0 or (right[0] == 0.0 and right[1] < 0.0):
        right = -right
    if params.variant == "dirichlet":
        left = np.zeros_like(right)
    elif params.theta == 0.0:
        left = -right[::-1]
    else:  # rotation(pi)
        left = right[::-1]
    x_full = np.concatenate([-x_right[::-1], x_right])
    vals = np.concatenate([left, right])
    norm = math.sqrt(np.trapezoid(vals**2, x_full))
    return WavefunctionSample(abscissae=x_full, values=vals / norm, space="position")


def parity_label(sample: WavefunctionSample) -> str:
    """odd / even / none from symmetry-defect integrals of the sample.

    Requires a mirror-symmetric grid.  The defects are the norm fractions
    of the symmetric and antisymmetric parts; a label is assigned when the
    opposing fraction is under 1 percent.
    """
    x = sample.abscissae
    if not np.allclose(x, -x[::-1], rtol=0.0, atol=1e-12 * float(np.max(np.abs(x)))):
        raise ValueError("parity labeling needs a mirror-symmetric grid")
    vals = np.asarray(sample.values, dtype=float)
    mirror = vals[::-1]
    total = np.trapezoid(vals**2, x)
    anti_defect = float(np.trapezoid((vals + mirror) ** 2, x) / (4.0 * total))
    sym_defect = float(np.trapezoid((vals - mirror) ** 2, x) / (4.0 * total))
    if anti_defect < 0.01:
        return "odd"
    if sym_defect < 0.01:
        return "even"
    return "none"


def deep_scan(
    grid: GridSpec, e_lo: float = -50.0, e_hi: float = -1.0, per_decade: int = _SCAN_PER_DECADE
):
    """Sign-change census of the matching function on a deep energy window.

    Returns (sign_changes, min_abs_value, points).  Used to rule out
    spurious strongly bound states: the admissible spectrum starts at
    -1/2, so the window below it must contain no zero.
    """
    if not e_lo < e_hi < 0.0:
        raise ValueError("need e_lo < e_hi < 0")
    decades = math.log10(abs(e_lo) / abs(e_hi))
    npts = max(int(math.ceil(per_decade * decades)) + 2, 16)
    Es = np.sort(-np.geomspace(abs(e_hi), abs(e_lo), npts))
    vals = _singular_amplitude(Es, grid)
    signs = np.where(vals >= 0.0, 1.0, -1.0)
    changes = int(np.count_nonzero(signs[:-1] != signs[1:]))
    return changes, float(np.min(np.abs(vals))), npts


# ---------------------------------------------------------------------------
# self-adjointness boundary term


def boundary_defect(
    phi_sample: WavefunctionSample, psi_sample: WavefunctionSample, params: ExtensionParams
) -> float:
    """Modulus of the cross-origin jump of the bilinear boundary term.

    The term W(x) = conj(phi) psi' - conj(phi)' psi, integrated by parts
    from both sides, leaves the defect lim_{x->0-} W - lim_{x->0+} W.
    Hermiticity of the extension demands this vanish for admissible pairs;
    the expression itself carries no theta, the angle only decides which
    pairs are admissible (params is accepted for interface symmetry).

    Both samples must share a mirror-symmetric uniform grid excluding the
    origin, at least 7 points per side; slopes are order-4 central
    differences and the one-sided limits come from cubic extrapolation of
    W through the innermost usable points.
    """
    x = phi_sample.abscissae
    if psi_sample.abscissae.shape != x.shape or not np.array_equal(psi_sample.abscissae, x):
        raise ValueError("samples must share one grid")
    if phi_sample.space != "position" or psi_sample.space != "position":
        raise ValueError("boundary term is defined on position-space samples")
    if np.any(x == 0.0) or not np.allclose(x, -x[::-1], rtol=0.0, atol=1e-12 * float(x[-1])):
        raise ValueError("need a mirror-symmetric grid excluding the origin")
    pos = x > 0
    xp = x[pos]
    m = xp.size
    if m < 7:
        raise ValueError("need at least 7 points per side")
    h = xp[1] - xp[0]
    if np.max(np.abs(np.diff(xp) - h)) > 1e-9 * h:
        raise ValueError("grid must be uniform on each side")

    def one_side(sign):
        sel = x > 0 if sign > 0 else x < 0
        xs = x[sel]
        f = np.asarray(phi_sample.values, dtype=complex)[sel]
        g = np.asarray(psi_sample.values, dtype=complex)[sel]
        if sign < 0:  # order ascending in distance from origin
            xs, f, g = xs[::-1], f[::-1], g[::-1]
        step = xs[1] - xs[0]
        df = (f[:-4] - 8.0 * f[1:-3] + 8.0 * f[3:-1] - f[4:]) / (12.0 * step)
        dg = (g[:-4] - 8.0 * g[1:-3] + 8.0 * g[3:-1] - g[4:]) / (12.0 * step)
        core_f, core_g, core_x = f[2:-2], g[2:-2], xs[2:-2]
        w = np.conjugate(core_f) * dg - np.conjugate(df) * core_g
        return np.abs(core_x), w

    dist_r, w_right = one_side(+1)
    dist_l, w_left = one_side(-1)
    k = min(4, dist_r.size)
    # defect as a function of |x|, extrapolated to the origin
    diff = (w_left - w_right)[:k]
    dd = dist_r[:k]
    coeffs = np.polyfit(dd, diff.real, k - 1)
    real0 = np.polyval(coeffs, 0.0)
    coeffs_im = np.polyfit(dd, diff.imag, k - 1)
    imag0 = np.polyval(coeffs_im, 0.0)
    return float(abs(complex(real0, imag0)))
