"""Power-law normalization series.

Partial sums of 1/(a+r)^alpha and their infinite-series limit, the latter
with a rigorous truncation-error bound.  Sums are computed chunkwise with
numpy (pairwise summation inside a chunk) and the chunk totals combined by
math.fsum, a compensated scheme whose relative error stays below 1e-13 out
to n = 1e8.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DivergenceError

_CHUNK = 1 << 22


@dataclass(frozen=True)
class SeriesValue:
    """A series approximation together with a rigorous error bound."""

    value: float
    error_bound: float


def _power_sum(n: int, alpha: float, shift: float) -> float:
    """sum_{r=1..n} (shift + r)^(-alpha), compensated."""
    pieces = []
    for start in range(1, n + 1, _CHUNK):
        stop = min(start + _CHUNK - 1, n)
        r = np.arange(start, stop + 1, dtype=np.float64)
        pieces.append(float(np.sum((shift + r) ** (-alpha))))
    return math.fsum(pieces)


def _check_args(n: int, alpha: float, a: float = 0.0) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not alpha > 0:
        raise ValueError(f"alpha must be > 0, got {alpha}")
    if a < 0:
        raise ValueError(f"shift must be >= 0, got {a}")


def harmonic(n: int, alpha: float) -> float:
    """Generalized harmonic number sum_{r=1..n} r^(-alpha)."""
    _check_args(n, alpha)
    return _power_sum(int(n), float(alpha), 0.0)


def shifted_harmonic(n: int, alpha: float, a: float) -> float:
    """sum_{r=1..n} (a+r)^(-alpha); equals harmonic(n, alpha) at a=0."""
    _check_args(n, alpha, a)
    return _power_sum(int(n), float(alpha), float(a))


def hurwitz_zeta(alpha: float, a: float, tol: float) -> SeriesValue:
    """sum_{r=1..inf} (a+r)^(-alpha) with a certified error bound <= tol.

    The tail after n terms is bracketed by integrals of the summand,

        (a+n+1)^(1-alpha)/(alpha-1)  <=  tail  <=  (a+n)^(1-alpha)/(alpha-1),

    and the midpoint of the bracket is added to the partial sum; half the
    bracket width (plus float-summation slop) is reported as the bound.
    Diverges for alpha <= 1.
    """
    if not alpha > 1:
        raise DivergenceError(f"series diverges for alpha <= 1 (got alpha={alpha})")
    if a < 0:
        raise ValueError(f"shift must be >= 0, got {a}")
    if not tol > 0:
        raise ValueError(f"tol must be > 0, got {tol}")

    def halfwidth(n: int) -> float:
        lo = (a + n + 1.0) ** (1.0 - alpha) / (alpha - 1.0)
        hi = (a + n + 0.0) ** (1.0 - alpha) / (alpha - 1.0)
        return 0.5 * (hi - lo)

    n = 64
    while halfwidth(n) > 0.45 * tol:
        n *= 2
        if n > 1 << 31:
            raise ValueError(f"tol={tol} needs more than 2^31 terms at alpha={alpha}")

    partial = _power_sum(n, alpha, a)
    lo = (a + n + 1.0) ** (1.0 - alpha) / (alpha - 1.0)
    hi = (a + n + 0.0) ** (1.0 - alpha) / (alpha - 1.0)
    value = partial + 0.5 * (lo + hi)
    # fsum of pairwise chunk sums is within a few ulp; 1e-14 relative covers it
    bound = 0.5 * (hi - lo) + 1e-14 * abs(value)
    if bound > tol:
        raise ValueError(f"tol={tol} is below attainable float64 accuracy here")
    return SeriesValue(value=value, error_bound=bound)
