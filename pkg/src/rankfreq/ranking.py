"""Deterministic rank-frequency tables and head/tail mass structure."""

import csv
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

import numpy as np

from .corpus import FrequencyTable
from .ioutil import format_number

HAPAX_TOL = 1e-9  # real-valued tables count a row as hapax when |f - 1| < this


@dataclass(frozen=True, eq=False)
class RankedTable:
    """Tokens ordered by non-increasing frequency with dense ranks 1..V.

    Ties are broken by ascending code-point order of the token, so the
    table is a pure function of the FrequencyTable contents.
    """

    tokens: tuple
    frequencies: np.ndarray
    total_tokens: float

    @property
    def vocabulary_size(self) -> int:
        return len(self.tokens)

    def rows(self) -> Iterator[tuple]:
        """Yield (rank, token, frequency) triples."""
        for i, tok in enumerate(self.tokens):
            yield i + 1, tok, self.frequencies[i]

    @cached_property
    def cumulative_shares(self) -> np.ndarray:
        """Cumulative token-mass share by rank (index r-1 covers ranks <= r)."""
        return np.cumsum(self.frequencies) / float(self.total_tokens)


def rank(table: FrequencyTable) -> RankedTable:
    """Order a FrequencyTable into a RankedTable (empty tables allowed)."""
    items = sorted(table.entries.items(), key=lambda kv: (-float(kv[1]), kv[0]))
    tokens = tuple(tok for tok, _ in items)
    freqs = np.array([float(c) for _, c in items], dtype=np.float64)
    return RankedTable(tokens=tokens, frequencies=freqs, total_tokens=table.total_tokens)


def coverage(rt: RankedTable, j: int) -> float:
    """Share of total tokens covered by the top-j types."""
    V = rt.vocabulary_size
    if not 0 <= j <= V:
        raise ValueError(f"j must be in [0, {V}], got {j}")
    if j == 0:
        return 0.0
    return float(rt.cumulative_shares[j - 1])


@dataclass(frozen=True)
class HeadTailReport:
    """Coverage of the frequent head plus the hapax tail, side by side."""

    head_coverage: list  # (fraction of top types, fraction of tokens covered)
    hapax_count: int
    hapax_type_fraction: float
    hapax_token_fraction: float


def head_tail_report(rt: RankedTable, head_fractions: list) -> HeadTailReport:
    """Quantify how much mass sits in the head and how much in the
    once-only tail."""
    V = rt.vocabulary_size
    if V == 0:
        raise ValueError("head_tail_report needs a non-empty table")
    head = []
    for q in head_fractions:
        if not 0 < q <= 1:
            raise ValueError(f"head fraction must be in (0, 1], got {q}")
        # rounding guard: 0.2 * 5000 must stay at j=1000
        j = min(V, max(1, math.ceil(round(q * V, 9))))
        head.append((q, coverage(rt, j)))
    is_hapax = np.abs(rt.frequencies - 1.0) < HAPAX_TOL
    hapax_count = int(np.count_nonzero(is_hapax))
    hapax_mass = float(np.sum(rt.frequencies[is_hapax]))
    return HeadTailReport(
        head_coverage=head,
        hapax_count=hapax_count,
        hapax_type_fraction=hapax_count / V,
        hapax_token_fraction=hapax_mass / float(rt.total_tokens),
    )


def write_rank_csv(rt: RankedTable, path) -> None:
    """rank,token,frequency,relative_frequency,cumulative_coverage"""
    shares = rt.cumulative_shares if rt.vocabulary_size else np.array([])
    N = float(rt.total_tokens) if rt.total_tokens else 0.0
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["rank", "token", "frequency", "relative_frequency", "cumulative_coverage"])
        for r, tok, f in rt.rows():
            writer.writerow(
                [
                    r,
                    tok,
                    format_number(f),
                    f"{f / N:.10g}",
                    f"{shares[r - 1]:.10g}",
                ]
            )


def write_loglog_points(rt: RankedTable, path) -> None:
    """Two-column "rank frequency" plain text for log-log plotting."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for r, _, f in rt.rows():
            fh.write(f"{r} {format_number(f)}\n")
