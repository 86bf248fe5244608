"""Rank-frequency law variants, as frequency curves and as finite-support
probability distributions.

The probability forms normalize over the observed vocabulary V rather than
the infinite series: the empirically relevant exponents sit near alpha = 1,
where the infinite sum diverges, so finite support is the only coherent
normalization there.
"""

from dataclasses import dataclass

import numpy as np

from .series import shifted_harmonic


@dataclass(frozen=True)
class ZipfModel:
    """f(r) = c / r^alpha."""

    alpha: float
    c: float

    def __post_init__(self):
        if not self.alpha > 0:
            raise ValueError(f"alpha must be > 0, got {self.alpha}")
        if not self.c > 0:
            raise ValueError(f"c must be > 0, got {self.c}")

    def to_dict(self) -> dict:
        return {"type": "zipf", "alpha": self.alpha, "a": 0.0, "c": self.c}


@dataclass(frozen=True)
class ZipfMandelbrotModel:
    """f(r) = c / (a + r)^alpha; reduces to ZipfModel at a = 0.

    The rank shift is allowed any value a >= 0 (fits on real corpora land
    at a ~ 1 and beyond).
    """

    alpha: float
    a: float
    c: float

    def __post_init__(self):
        if not self.alpha > 0:
            raise ValueError(f"alpha must be > 0, got {self.alpha}")
        if self.a < 0:
            raise ValueError(f"a must be >= 0, got {self.a}")
        if not self.c > 0:
            raise ValueError(f"c must be > 0, got {self.c}")

    def to_dict(self) -> dict:
        return {"type": "zm", "alpha": self.alpha, "a": self.a, "c": self.c}


def model_from_dict(doc: dict):
    kind = doc.get("type")
    if kind == "zipf":
        return ZipfModel(alpha=doc["alpha"], c=doc["c"])
    if kind == "zm":
        return ZipfMandelbrotModel(alpha=doc["alpha"], a=doc["a"], c=doc["c"])
    raise ValueError(f"unknown model type {kind!r}")


def _check_rank(r: int, upper: int | None = None) -> None:
    if r < 1:
        raise ValueError(f"rank must be >= 1, got {r}")
    if upper is not None and r > upper:
        raise ValueError(f"rank must be in [1, {upper}], got {r}")


def zipf_frequency(m: ZipfModel, r: int) -> float:
    _check_rank(r)
    return m.c * float(r) ** (-m.alpha)


def zm_frequency(m: ZipfMandelbrotModel, r: int) -> float:
    _check_rank(r)
    return m.c * (m.a + float(r)) ** (-m.alpha)


def zm_pmf(alpha: float, a: float, V: int, r: int) -> float:
    """P(rank = r) = (a+r)^(-alpha) / sum_{k=1..V} (a+k)^(-alpha)."""
    _check_rank(r, V)
    return (a + float(r)) ** (-alpha) / shifted_harmonic(V, alpha, a)


def zm_cdf(alpha: float, a: float, V: int, r: int) -> float:
    """P(rank <= r); strictly increasing in r, equal to 1 at r = V."""
    _check_rank(r, V)
    return shifted_harmonic(r, alpha, a) / shifted_harmonic(V, alpha, a)


def zm_pmf_table(alpha: float, a: float, V: int) -> np.ndarray:
    """All V probabilities at once (rank 1 at index 0)."""
    if V < 1:
        raise ValueError(f"V must be >= 1, got {V}")
    if not alpha > 0:
        raise ValueError(f"alpha must be > 0, got {alpha}")
    if a < 0:
        raise ValueError(f"a must be >= 0, got {a}")
    weights = (a + np.arange(1, V + 1, dtype=np.float64)) ** (-alpha)
    return weights / shifted_harmonic(V, alpha, a)
