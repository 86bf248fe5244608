"""Exception types shared across the package.

The CLI maps these onto its exit-code contract: malformed or missing data
exits 3, numeric/degenerate failures exit 4.
"""


class RankfreqError(Exception):
    """Base class for all rankfreq errors."""


class DataFormatError(RankfreqError):
    """Input bytes or lines do not match the expected format."""


class InsufficientDataError(RankfreqError):
    """Not enough usable rows to run the requested operation."""


class DegenerateDataError(RankfreqError):
    """Data admits no valid model (e.g. all frequencies equal)."""


class DivergenceError(RankfreqError):
    """A requested infinite series does not converge."""
