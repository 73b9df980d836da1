"""Polynomial special functions used by the bound-state closed forms.

Two associated-Laguerre conventions appear in the older literature on the
Coulomb problem and they differ by more than normalization, so both are
exposed explicitly:

* ``laguerre_std(n, m, z)`` is the standard polynomial
  ``Lag(n, m, z) = (1/n!) e^z z^-m d^n/dz^n (e^-z z^(n+m))``
  of degree ``n`` (the convention scipy and most modern tables use).
* ``laguerre_paper(n, z)`` is the degree ``n-1`` polynomial
  ``n e^z d^n/dz^n (z^(n-1) e^-z)``, the form that shows up when the
  bound-state recursion is resummed.  It relates to the standard one by
  ``laguerre_paper(n, z) = -n! * laguerre_std(n-1, 1, z)``.

The standard polynomial is evaluated by the three-term recurrence in the
degree, which is the numerically stable direction for z >= 0; everything
else is derived from it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "SeriesControl",
    "SeriesError",
    "RangeLimitError",
    "laguerre_std",
    "laguerre_paper",
    "kummer_constant",
    "kummer_1f1",
]

#: Largest principal quantum number the closed forms are guaranteed for.
N_MAX = 30


class SeriesError(RuntimeError):
    """A series did not converge within the allotted number of terms."""


class RangeLimitError(ValueError):
    """Requested order is outside the supported quantum-number range."""


@dataclass(frozen=True)
class SeriesControl:
    """Termination policy for series evaluation.

    max_terms: hard cap on the number of summed terms.
    rel_tol: stop once the running term is this small relative to the
        accumulated sum (two consecutive terms must satisfy the bound,
        which guards against accidental zeros of a single term).
    """

    max_terms: int = 500
    rel_tol: float = 1e-14

    def __post_init__(self) -> None:
        if self.max_terms < 1:
            raise ValueError("max_terms must be positive")
        if not 0.0 < self.rel_tol < 1.0:
            raise ValueError("rel_tol must lie in (0, 1)")


def _as_float_array(z):
    arr = np.asarray(z, dtype=float)
    return arr, arr.ndim == 0


def laguerre_std(n: int, m: int, z):
    """Standard associated Laguerre polynomial ``Lag(n, m, z)``.

    Evaluated by the degree recurrence

        (k+1) Lag(k+1, m, z) = (2k + m + 1 - z) Lag(k, m, z) - (k+m) Lag(k-1, m, z)

    starting from ``Lag(0,m,z) = 1`` and ``Lag(1,m,z) = 1 + m - z``.
    Accepts scalar or array ``z``; the result has the shape of ``z``.
    """
    if n != int(n) or n < 0:
        raise ValueError(f"degree n must be a nonnegative integer, got {n!r}")
    if m != int(m) or m < 0:
        raise ValueError(f"order m must be a nonnegative integer, got {m!r}")
    n, m = int(n), int(m)
    zarr, scalar = _as_float_array(z)
    prev = np.ones_like(zarr)
    if n == 0:
        return float(prev) if scalar else prev
    cur = 1.0 + m - zarr
    for k in range(1, n):
        prev, cur = cur, ((2.0 * k + m + 1.0 - zarr) * cur - (k + m) * prev) / (k + 1.0)
    return float(cur) if scalar else cur


def laguerre_paper(n: int, z):
    """Degree ``n-1`` Laguerre polynomial ``n e^z d^n/dz^n (z^(n-1) e^-z)``.

    This is the polynomial attached to the n-th bound state in the
    resummed-series form; it equals ``-n! * laguerre_std(n-1, 1, z)``.
    Its value at zero is ``-n * n!``.
    """
    if n != int(n) or n < 1:
        raise ValueError(f"index n must be a positive integer, got {n!r}")
    n = int(n)
    if n > N_MAX:
        raise RangeLimitError(f"n={n} exceeds the supported range n <= {N_MAX}")
    return -math.factorial(n) * laguerre_std(n - 1, 1, z)


def kummer_constant(n: int) -> float:
    """Value of :func:`laguerre_paper` at z = 0, namely ``-n * n!``.

    Fixes the constant relating the resummed-series polynomial to the
    terminating Kummer function: laguerre_paper(n, z) equals
    ``kummer_constant(n) * 1F1(1-n; 2; z)``.
    """
    if n != int(n) or n < 1:
        raise ValueError(f"index n must be a positive integer, got {n!r}")
    n = int(n)
    if n > N_MAX:
        raise RangeLimitError(f"n={n} exceeds the supported range n <= {N_MAX}")
    return -float(n) * math.factorial(n)


def kummer_1f1(a: float, b: float, z, ctrl: SeriesControl | None = None):
    """Confluent hypergeometric function 1F1(a; b; z) by direct series.

    When ``a`` is zero or a negative integer the series terminates exactly
    and the finite polynomial is returned regardless of ``ctrl``.  Otherwise
    terms are accumulated until two consecutive terms fall below
    ``ctrl.rel_tol`` relative to the running sum; exceeding
    ``ctrl.max_terms`` raises :class:`SeriesError`.

    ``b`` must not be zero or a negative integer (the series is undefined
    there).
    """
    if ctrl is None:
        ctrl = SeriesControl()
    if b == int(b) and b <= 0:
        raise ValueError(f"b must not be zero or a negative integer, got {b!r}")
    zarr, scalar = _as_float_array(z)

    terminates = a == int(a) and a <= 0
    acc = np.ones_like(zarr)
    term = np.ones_like(zarr)
    if terminates:
        # polynomial of degree -a: the (-a+1)-th term carries the factor (a + (-a)) = 0
        for k in range(int(-a)):
            term = term * (a + k) / (b + k) * zarr / (k + 1.0)
            acc = acc + term
        return float(acc) if scalar else acc

    small_streak = 0
    for k in range(ctrl.max_terms):
        term = term * (a + k) / (b + k) * zarr / (k + 1.0)
        acc = acc + term
        if np.all(np.abs(term) <= ctrl.rel_tol * np.maximum(np.abs(acc), 1e-300)):
            small_streak += 1
            if small_streak >= 2:
                return float(acc) if scalar else acc
        else:
            small_streak = 0
    raise SeriesError(
        f"1F1({a}, {b}, z) did not converge within {ctrl.max_terms} terms"
    )
