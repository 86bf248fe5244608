"""Parameter estimation for rank-frequency laws.

Two routes are provided: ordinary least squares on the log-log plot (the
classic straight-line reading) and maximum likelihood over the finite rank
support.  The rank-shift parameter is profiled out in the LS case: for a
fixed shift the model is linear in (log c, alpha), so only a 1-D search
over the shift remains.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateDataError, InsufficientDataError
from .models import ZipfMandelbrotModel, ZipfModel
from .ranking import RankedTable
from .series import shifted_harmonic

PROFILE_GRID_POINTS = 129
ALPHA_FLOOR = 1e-8


@dataclass(frozen=True)
class FitReport:
    """A fitted model with its objective and goodness-of-fit diagnostics.

    objective is the sum of squared log-residuals for method "ls" and the
    negative log-likelihood for method "mle"; r_squared applies to "ls"
    only.  boundary_flag marks an estimate sitting on a search bound.
    """

    model: object
    method: str
    objective: float
    r_squared: float | None
    ks_distance: float
    ranks_used: int
    boundary_flag: bool

    def to_dict(self) -> dict:
        return {
            "method": self.method,
            "model": self.model.to_dict(),
            "objective": self.objective,
            "r_squared": self.r_squared,
            "ks_distance": self.ks_distance,
            "ranks_used": self.ranks_used,
            "boundary_flag": self.boundary_flag,
        }


def _usable_rows(rt: RankedTable, min_freq: float):
    """Ranks and frequencies of the rows with frequency > min_freq.

    Frequencies are non-increasing, so the retained rows are a prefix and
    keep their original ranks.
    """
    if min_freq < 0:
        raise ValueError(f"min_freq must be >= 0, got {min_freq}")
    k = int(np.count_nonzero(rt.frequencies > min_freq))
    return np.arange(1, k + 1, dtype=np.float64), rt.frequencies[:k].astype(np.float64)


def _require_fittable(freqs: np.ndarray, min_rows: int = 3) -> None:
    if len(freqs) < min_rows:
        raise InsufficientDataError(
            f"need at least {min_rows} usable rows, got {len(freqs)}"
        )
    if np.unique(freqs).size < 2:
        raise DegenerateDataError("all retained frequencies are equal")


def _ls_at_shift(ranks: np.ndarray, logf: np.ndarray, a: float):
    """OLS of log f on log(a + r): (slope, intercept, sse, sst)."""
    x = np.log(a + ranks)
    xm = float(x.mean())
    ym = float(logf.mean())
    dx = x - xm
    dy = logf - ym
    slope = float(dx @ dy) / float(dx @ dx)
    intercept = ym - slope * xm
    resid = logf - (intercept + slope * x)
    return slope, intercept, float(resid @ resid), float(dy @ dy)


def _model_cdf(alpha: float, a: float, V: int) -> np.ndarray:
    weights = (a + np.arange(1, V + 1, dtype=np.float64)) ** (-alpha)
    return np.cumsum(weights) / float(np.sum(weights))


def _ks_from_freqs(freqs: np.ndarray, alpha: float, a: float) -> float:
    ecdf = np.cumsum(freqs) / float(np.sum(freqs))
    return float(np.max(np.abs(ecdf - _model_cdf(alpha, a, len(freqs)))))


def ks_statistic(rt: RankedTable, m) -> float:
    """Max gap between the empirical cumulative token share by rank and the
    model's CDF over the same support."""
    if rt.vocabulary_size == 0:
        raise ValueError("ks_statistic needs a non-empty table")
    a = m.a if isinstance(m, ZipfMandelbrotModel) else 0.0
    return _ks_from_freqs(rt.frequencies, m.alpha, a)


def _golden_min(f, lo: float, hi: float, width: float, best=None):
    """Deterministic golden-section minimization of f over [lo, hi].

    Shrinks the bracket to <= width and returns the best (x, f(x)) over
    every point evaluated, preferring the lower x on exact ties.
    """

    def consider(x, fx, cur):
        if cur is None or fx < cur[1] or (fx == cur[1] and x < cur[0]):
            return (x, fx)
        return cur

    if best is None:
        best = consider(lo, f(lo), None)
        best = consider(hi, f(hi), best)
    if hi - lo <= width:
        return best
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a_, b_ = lo, hi
    c = b_ - invphi * (b_ - a_)
    d = a_ + invphi * (b_ - a_)
    fc, fd = f(c), f(d)
    best = consider(d, fd, consider(c, fc, best))
    while (b_ - a_) > width:
        if fc <= fd:
            b_, d, fd = d, c, fc
            c = b_ - invphi * (b_ - a_)
            fc = f(c)
            best = consider(c, fc, best)
        else:
            a_, c, fc = c, d, fd
            d = a_ + invphi * (b_ - a_)
            fd = f(d)
            best = consider(d, fd, best)
    return best


def fit_zipf_ls(rt: RankedTable, min_freq: float = 0.0) -> FitReport:
    """Least-squares fit of f = c / r^alpha in log-log space."""
    ranks, freqs = _usable_rows(rt, min_freq)
    _require_fittable(freqs)
    logf = np.log(freqs)
    slope, intercept, sse, sst = _ls_at_shift(ranks, logf, 0.0)
    alpha = -slope
    if alpha <= 0:
        raise DegenerateDataError(f"log-log slope {slope} admits no alpha > 0")
    model = ZipfModel(alpha=alpha, c=math.exp(intercept))
    return FitReport(
        model=model,
        method="ls",
        objective=sse,
        r_squared=1.0 - sse / sst,
        ks_distance=_ks_from_freqs(freqs, alpha, 0.0),
        ranks_used=len(freqs),
        boundary_flag=False,
    )


def fit_zm_profiled_ls(
    rt: RankedTable, a_max: float = 100.0, tol: float = 1e-6, min_freq: float = 0.0
) -> FitReport:
    """Least-squares fit of f = c / (a + r)^alpha with the shift profiled out.

    The shift objective phi(a) (inner OLS residual) is scanned on a coarse
    grid over [0, a_max], then the bracketing interval is refined by
    golden-section search; the reported minimum is the best point actually
    evaluated (lowest shift on ties), so phi never exceeds any scanned grid
    value.  At a = 0 the result reproduces fit_zipf_ls exactly.
    """
    if a_max < 0:
        raise ValueError(f"a_max must be >= 0, got {a_max}")
    if not tol > 0:
        raise ValueError(f"tol must be > 0, got {tol}")
    ranks, freqs = _usable_rows(rt, min_freq)
    _require_fittable(freqs)
    logf = np.log(freqs)

    def phi(a: float) -> float:
        return _ls_at_shift(ranks, logf, a)[2]

    grid = np.unique(np.linspace(0.0, a_max, PROFILE_GRID_POINTS))
    values = [phi(a) for a in grid]
    i_best = int(np.lexsort((grid, values))[0])
    best = (float(grid[i_best]), values[i_best])
    if len(grid) > 1:
        lo = float(grid[max(i_best - 1, 0)])
        hi = float(grid[min(i_best + 1, len(grid) - 1)])
        best = _golden_min(phi, lo, hi, width=tol * 0.25, best=best)

    a_hat = best[0]
    slope, intercept, sse, sst = _ls_at_shift(ranks, logf, a_hat)
    alpha = -slope
    if alpha <= 0:
        raise DegenerateDataError(f"log-log slope {slope} admits no alpha > 0")
    model = ZipfMandelbrotModel(alpha=alpha, a=a_hat, c=math.exp(intercept))
    return FitReport(
        model=model,
        method="ls",
        objective=sse,
        r_squared=1.0 - sse / sst,
        ks_distance=_ks_from_freqs(freqs, alpha, a_hat),
        ranks_used=len(freqs),
        boundary_flag=(a_hat <= tol) or (a_hat >= a_max - tol),
    )


def zm_log_likelihood(frequencies, alpha: float, a: float) -> float:
    """Multinomial log-likelihood of rank-ordered frequencies under the
    finite-support model (constant terms dropped):

        log L = -alpha * sum_r f_r log(a+r) - N * log(sum_r (a+r)^(-alpha))
    """
    f = np.asarray(frequencies, dtype=np.float64)
    logshift = np.log(a + np.arange(1, len(f) + 1, dtype=np.float64))
    norm = float(np.sum(np.exp(-alpha * logshift)))
    return -alpha * float(f @ logshift) - float(f.sum()) * math.log(norm)


def fit_zm_mle(
    rt: RankedTable,
    a_max: float = 100.0,
    alpha_max: float = 10.0,
    tol: float = 1e-6,
    min_freq: float = 0.0,
) -> FitReport:
    """Maximum-likelihood fit of the shifted model over (0, alpha_max] x [0, a_max].

    Coordinate descent from (alpha, a) = (1, 0), each coordinate solved by
    golden-section search over its full range, stopping once neither
    parameter moves by tol in an outer iteration.  Deterministic.
    """
    if a_max < 0 or not alpha_max > 0 or not tol > 0:
        raise ValueError("need a_max >= 0, alpha_max > 0, tol > 0")
    ranks, freqs = _usable_rows(rt, min_freq)
    _require_fittable(freqs)
    N = float(freqs.sum())

    def nll_parts(logshift: np.ndarray):
        s = float(freqs @ logshift)

        def g(al: float) -> float:
            return al * s + N * math.log(float(np.sum(np.exp(-al * logshift))))

        return g

    def nll_of_a(alpha: float):
        def h(av: float) -> float:
            logshift = np.log(av + ranks)
            norm = float(np.sum(np.exp(-alpha * logshift)))
            return alpha * float(freqs @ logshift) + N * math.log(norm)

        return h

    alpha, a = 1.0, 0.0
    inner = tol * 0.25
    for _ in range(200):
        g = nll_parts(np.log(a + ranks))
        new_alpha = _golden_min(g, ALPHA_FLOOR, alpha_max, width=inner)[0]
        new_a = _golden_min(nll_of_a(new_alpha), 0.0, a_max, width=inner)[0]
        moved = max(abs(new_alpha - alpha), abs(new_a - a))
        alpha, a = new_alpha, new_a
        if moved < tol:
            break

    objective = -zm_log_likelihood(freqs, alpha, a)
    c = N / shifted_harmonic(len(freqs), alpha, a)
    model = ZipfMandelbrotModel(alpha=alpha, a=a, c=c)
    on_bound = (
        alpha <= ALPHA_FLOOR + tol
        or alpha >= alpha_max - tol
        or a <= tol
        or a >= a_max - tol
    )
    return FitReport(
        model=model,
        method="mle",
        objective=objective,
        r_squared=None,
        ks_distance=_ks_from_freqs(freqs, alpha, a),
        ranks_used=len(freqs),
        boundary_flag=on_bound,
    )
