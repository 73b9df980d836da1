"""Closed-form bound states of the attractive 1/|x| potential on the line.

Hamiltonian (coordinate representation):

    H psi = -(hbar^2 / 2m) psi'' - (e^2 / |x|) psi

Bound-state facts implemented here, all of which the verification layer
re-derives numerically:

* energies  E_n = -hbar^2 / (2 m a0^2 n^2),  n = 1, 2, ...
* eigenfunctions, with z = 2 x / (n a0),

      psi_n(x) = A_n * z * exp(-|z|/2) * Lag(n-1, 1, |z|),
      A_n = 1 / (n * sqrt(2 n a0)),

  odd in x, vanishing at the origin, with continuous derivative there.
* momentum representation phi_n(k): an odd, purely imaginary rational
  function of n a0 k (see :func:`phi`), normalized so that
  int |phi_n(k)|^2 dk = 1 with the unitary transform convention
  phi(k) = (2 pi)^(-1/2) int psi(x) exp(-i k x) dx.

Sign convention: the overall phase of psi_n is fixed so psi_n(x) > 0 as
x -> 0+ for every n, and phi_n carries the matching factor (-1)^(n+1) so
that phi_n is exactly the Fourier transform of psi_n, not merely equal up
to phase.

Everything is evaluated with stable Laguerre recurrences; no factorials of
z-dependent quantities appear.  Functions accept scalar or array x / k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .special import N_MAX, RangeLimitError, laguerre_std

__all__ = [
    "PhysicalScales",
    "ATOMIC",
    "QuantumNumber",
    "EigenState",
    "WavefunctionSample",
    "energy",
    "normalization",
    "psi",
    "psi_prime",
    "psi_second",
    "phi",
    "residue_kernel",
    "half_line_solution",
    "make_state",
]

# exp(-|z|/2) underflows to 0 beyond this; psi is clamped to exactly 0 there.
_UNDERFLOW_Z = -2.0 * math.log(5e-324)


@dataclass(frozen=True)
class PhysicalScales:
    """Dimensional constants of the problem.

    Defaults are Hartree atomic units (hbar = m = e^2 = a0 = 1).  If
    ``bohr_radius`` is not supplied it is derived as hbar^2 / (m e^2);
    passing it explicitly allows unit systems where the numerical value
    is more convenient than the derived one.
    """

    hbar: float = 1.0
    mass: float = 1.0
    charge_sq: float = 1.0
    bohr_radius: float | None = None

    def __post_init__(self) -> None:
        for name in ("hbar", "mass", "charge_sq"):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"{name} must be positive")
        if self.bohr_radius is None:
            object.__setattr__(
                self, "bohr_radius", self.hbar**2 / (self.mass * self.charge_sq)
            )
        elif self.bohr_radius <= 0.0:
            raise ValueError("bohr_radius must be positive")

    @classmethod
    def si(cls) -> "PhysicalScales":
        """CODATA-2018 values in SI units (lengths in m, energies in J)."""
        return cls(
            hbar=1.054571817e-34,
            mass=9.1093837015e-31,
            charge_sq=2.3070775523e-28,  # e^2 / (4 pi eps0), J m
            bohr_radius=5.29177210903e-11,
        )


ATOMIC = PhysicalScales()


@dataclass(frozen=True)
class QuantumNumber:
    """Validated principal quantum number, 1 <= n <= N_MAX."""

    n: int

    def __post_init__(self) -> None:
        if self.n != int(self.n) or self.n < 1:
            raise ValueError(f"quantum number must be a positive integer, got {self.n!r}")
        if self.n > N_MAX:
            raise RangeLimitError(f"n={self.n} exceeds the supported range n <= {N_MAX}")
        object.__setattr__(self, "n", int(self.n))

    def __int__(self) -> int:
        return self.n


def _qn(n) -> int:
    return QuantumNumber(int(n)).n


@dataclass(frozen=True)
class EigenState:
    """One bound level: quantum number, energy, parity label, normalization."""

    n: int
    energy: float
    parity: str
    norm_constant: float

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "energy": self.energy,
            "parity": self.parity,
            "norm_constant": self.norm_constant,
        }


@dataclass
class WavefunctionSample:
    """A sampled wavefunction: strictly increasing abscissae plus values."""

    abscissae: np.ndarray
    values: np.ndarray
    space: str = "position"

    def __post_init__(self) -> None:
        self.abscissae = np.asarray(self.abscissae, dtype=float)
        self.values = np.asarray(self.values)
        if self.abscissae.ndim != 1 or self.abscissae.shape != self.values.shape:
            raise ValueError("abscissae and values must be 1-d arrays of equal length")
        if self.abscissae.size >= 2 and not np.all(np.diff(self.abscissae) > 0):
            raise ValueError("abscissae must be strictly increasing")
        if self.space not in ("position", "momentum"):
            raise ValueError(f"space must be 'position' or 'momentum', got {self.space!r}")


def energy(n, scales: PhysicalScales = ATOMIC) -> float:
    """Bound-state energy E_n = -hbar^2 / (2 m a0^2 n^2)."""
    n = _qn(n)
    a0 = scales.bohr_radius
    return -scales.hbar**2 / (2.0 * scales.mass * a0**2 * n**2)


def normalization(n, scales: PhysicalScales = ATOMIC) -> float:
    """Positive constant A_n = 1 / (n sqrt(2 n a0)).

    This is the prefactor of z exp(-|z|/2) Lag(n-1, 1, |z|); it follows in
    closed form from the Laguerre norm integral
    int_0^inf e^-z z^2 Lag(n-1,1,z)^2 dz = 2 n^2 and dx = (n a0 / 2) dz.
    """
    n = _qn(n)
    return 1.0 / (n * math.sqrt(2.0 * n * scales.bohr_radius))


def _zgeometry(n: int, x, scales: PhysicalScales):
    xarr = np.asarray(x, dtype=float)
    z = 2.0 * xarr / (n * scales.bohr_radius)
    return xarr, z, xarr.ndim == 0


def psi(n, x, scales: PhysicalScales = ATOMIC):
    """Eigenfunction psi_n(x); odd, real, psi_n -> +0 from above as x -> 0+.

    Output is clamped to exactly 0 where exp(-|z|/2) underflows.
    """
    n = _qn(n)
    _, z, scalar = _zgeometry(n, x, scales)
    az = np.abs(z)
    decay = np.exp(-np.minimum(az, _UNDERFLOW_Z) / 2.0)
    val = normalization(n, scales) * z * decay * laguerre_std(n - 1, 1, az)
    val = np.where(az >= _UNDERFLOW_Z, 0.0, val)
    return float(val) if scalar else val


def _poly_trio(n: int, az):
    """Lag(n-1,1), its z-derivative and second derivative on |z|."""
    g = laguerre_std(n - 1, 1, az)
    gp = -laguerre_std(n - 2, 2, az) if n >= 2 else np.zeros_like(az)
    gpp = laguerre_std(n - 3, 3, az) if n >= 3 else np.zeros_like(az)
    return g, gp, gpp


def psi_prime(n, x, scales: PhysicalScales = ATOMIC):
    """d psi_n / dx, an even function, finite and nonzero at the origin."""
    n = _qn(n)
    _, z, scalar = _zgeometry(n, x, scales)
    az = np.abs(z)
    g, gp, _ = _poly_trio(n, az)
    decay = np.exp(-np.minimum(az, _UNDERFLOW_Z) / 2.0)
    dfdz = decay * (g + az * gp - az * g / 2.0)
    dfdz = np.where(az >= _UNDERFLOW_Z, 0.0, dfdz)
    val = normalization(n, scales) * (2.0 / (n * scales.bohr_radius)) * dfdz
    return float(val) if scalar else val


def psi_second(n, x, scales: PhysicalScales = ATOMIC):
    """d^2 psi_n / dx^2 for x != 0 (odd; the origin itself is a kink of psi'')."""
    n = _qn(n)
    _, z, scalar = _zgeometry(n, x, scales)
    az = np.abs(z)
    g, gp, gpp = _poly_trio(n, az)
    decay = np.exp(-np.minimum(az, _UNDERFLOW_Z) / 2.0)
    d2 = decay * (2.0 * gp + az * gpp - g - az * gp + az * g / 4.0)
    d2 = np.where(az >= _UNDERFLOW_Z, 0.0, d2)
    val = (
        normalization(n, scales)
        * (2.0 / (n * scales.bohr_radius)) ** 2
        * np.sign(z)
        * d2
    )
    return float(val) if scalar else val


def phi(n, k, scales: PhysicalScales = ATOMIC):
    """Momentum representation phi_n(k): odd in k and purely imaginary.

    With u = n a0 k and r = (1 - iu)/(1 + iu),

        phi_n(k) = (-1)^(n+1) sqrt(n a0 / pi) * (r^n - r^-n) / (1 + u^2).

    The sign factor ties the phase to the coordinate-space convention:
    phi_n equals (2 pi)^(-1/2) int psi_n(x) e^(-ikx) dx exactly.
    """
    n = _qn(n)
    a0 = scales.bohr_radius
    karr = np.asarray(k, dtype=float)
    scalar = karr.ndim == 0
    u = n * a0 * karr
    r = (1.0 - 1j * u) / (1.0 + 1j * u)
    braced = r**n - r ** (-n)
    val = (-1.0) ** (n + 1) * math.sqrt(n * a0 / math.pi) * braced / (1.0 + u * u)
    return complex(val) if scalar else val


def residue_kernel(n, z, branch: str = "+"):
    """Contour-integral kernel F_+/- of the bound-state construction.

    F_+(z) = (1/(n-1)!) d^n/dz^n [ z^(n-1) e^-z ], which resums to the
    closed polynomial-times-exponential form -e^-z Lag(n-1, 1, z); the
    '-' branch is its reflection F_-(z) = F_+(-z).  On the decaying side
    (z > 0 for '+') this equals the k-plane integral
    int dk/2pi e^{ikz} (k/(k -+ i))^n taken around the order-n pole.
    """
    n = _qn(n)
    if branch not in ("+", "-"):
        raise ValueError(f"branch must be '+' or '-', got {branch!r}")
    zarr = np.asarray(z, dtype=float)
    scalar = zarr.ndim == 0
    zz = zarr if branch == "+" else -zarr
    val = -np.exp(-zz) * laguerre_std(n - 1, 1, zz)
    return float(val) if scalar else val


def half_line_solution(n, side: str, x, scales: PhysicalScales = ATOMIC):
    """Bound state confined to one half-line, normalized on that half-line.

    These are sqrt(2) * psi_n on the chosen side and identically zero on
    the other; the derivative therefore jumps at the origin, which is what
    disqualifies them on the full line under the derivative-continuity
    interface condition.
    """
    n = _qn(n)
    if side not in ("+", "-"):
        raise ValueError(f"side must be '+' or '-', got {side!r}")
    xarr = np.asarray(x, dtype=float)
    scalar = xarr.ndim == 0
    keep = xarr > 0 if side == "+" else xarr < 0
    val = np.where(keep, math.sqrt(2.0) * psi(n, xarr, scales), 0.0)
    return float(val) if scalar else val


def make_state(n, scales: PhysicalScales = ATOMIC) -> EigenState:
    """Assemble the EigenState record for level n (parity is always odd)."""
    n = _qn(n)
    return EigenState(
        n=n,
        energy=energy(n, scales),
        parity="odd",
        norm_constant=normalization(n, scales),
    )
