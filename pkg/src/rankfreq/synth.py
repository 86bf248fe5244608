"""Seeded sampling oracle: corpora drawn from a known rank-frequency law.

Every estimator in the package can be checked end to end against corpora
whose true parameters are known.  Sampling is inverse-CDF over the
precomputed cumulative weights (O(V) memory, exact), so a spec with the
same seed reproduces the same table within a build.
"""

from dataclasses import dataclass

import numpy as np

from .corpus import FrequencyTable
from .models import zm_pmf_table

# identifier recorded in run manifests; bit-reproducibility is promised per
# generator identifier, not across generator changes
GENERATOR_ID = "numpy-pcg64"


@dataclass(frozen=True)
class SynthSpec:
    """Generator configuration for a synthetic corpus."""

    alpha: float
    a: float
    V: int
    N: int
    seed: int

    def __post_init__(self):
        if self.V < 1:
            raise ValueError(f"V must be >= 1, got {self.V}")
        if self.N < 0:
            raise ValueError(f"N must be >= 0, got {self.N}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")


def token_name(rank: int, V: int) -> str:
    """Rank-r token name: "t000001" for rank 1 (width grows past 10^6)."""
    width = max(6, len(str(V)))
    return f"t{rank:0{width}d}"


def _shard_seed(seed: int, shard: int) -> int:
    # documented mixing function: XOR with the shard index
    return (seed ^ shard) & (2**64 - 1)


def _draw_counts(spec: SynthSpec, n_draws: int, seed: int, cdf: np.ndarray) -> np.ndarray:
    rng = np.random.default_rng(seed)
    u = rng.random(n_draws)
    idx = np.searchsorted(cdf, u, side="right")
    # guard the u == 1.0 - eps edge against cdf[-1] rounding below 1
    idx[idx >= spec.V] = spec.V - 1
    return np.bincount(idx, minlength=spec.V)


def sample_counts(spec: SynthSpec, shards: int = 1) -> np.ndarray:
    """Counts per true rank (index r-1) from N independent draws.

    With shards > 1 the draws are split into `shards` blocks, each seeded by
    XOR-mixing the shard index into the spec seed; output is reproducible
    per (seed, shard count) pair.  shards=1 is the canonical stream.
    """
    if shards < 1:
        raise ValueError(f"shards must be >= 1, got {shards}")
    counts = np.zeros(spec.V, dtype=np.int64)
    if spec.N == 0:
        return counts
    cdf = np.cumsum(zm_pmf_table(spec.alpha, spec.a, spec.V))
    base, extra = divmod(spec.N, shards)
    for shard in range(shards):
        n_draws = base + (1 if shard < extra else 0)
        if n_draws:
            counts += _draw_counts(spec, n_draws, _shard_seed(spec.seed, shard), cdf)
    return counts


def sample_corpus(spec: SynthSpec, shards: int = 1) -> FrequencyTable:
    """Sample a corpus; tokens are named by true rank, zero counts dropped."""
    counts = sample_counts(spec, shards=shards)
    entries = {
        token_name(r, spec.V): int(c)
        for r, c in enumerate(counts, start=1)
        if c > 0
    }
    return FrequencyTable.from_entries(entries) if entries else FrequencyTable.empty()
