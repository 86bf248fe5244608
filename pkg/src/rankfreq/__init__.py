"""rankfreq: rank-frequency corpus statistics and power-law fitting."""

__version__ = "0.1.0"

from .corpus import (
    FrequencyTable,
    TokenizerConfig,
    count,
    count_file,
    iter_file_tokens,
    load_counts,
    merge,
    tokenize,
    write_counts,
)
from .errors import (
    DataFormatError,
    DegenerateDataError,
    DivergenceError,
    InsufficientDataError,
    RankfreqError,
)
from .fit import (
    FitReport,
    fit_zipf_ls,
    fit_zm_mle,
    fit_zm_profiled_ls,
    ks_statistic,
    zm_log_likelihood,
)
from .models import (
    ZipfMandelbrotModel,
    ZipfModel,
    model_from_dict,
    zipf_frequency,
    zm_cdf,
    zm_frequency,
    zm_pmf,
    zm_pmf_table,
)
from .ranking import (
    HeadTailReport,
    RankedTable,
    coverage,
    head_tail_report,
    rank,
    write_loglog_points,
    write_rank_csv,
)
from .series import SeriesValue, harmonic, hurwitz_zeta, shifted_harmonic
from .synth import GENERATOR_ID, SynthSpec, sample_corpus, sample_counts, token_name

__all__ = [
    "__version__",
    "FrequencyTable",
    "TokenizerConfig",
    "count",
    "count_file",
    "iter_file_tokens",
    "load_counts",
    "merge",
    "tokenize",
    "write_counts",
    "RankfreqError",
    "DataFormatError",
    "DegenerateDataError",
    "DivergenceError",
    "InsufficientDataError",
    "FitReport",
    "fit_zipf_ls",
    "fit_zm_mle",
    "fit_zm_profiled_ls",
    "ks_statistic",
    "zm_log_likelihood",
    "ZipfModel",
    "ZipfMandelbrotModel",
    "model_from_dict",
    "zipf_frequency",
    "zm_frequency",
    "zm_pmf",
    "zm_cdf",
    "zm_pmf_table",
    "RankedTable",
    "HeadTailReport",
    "rank",
    "coverage",
    "head_tail_report",
    "write_rank_csv",
    "write_loglog_points",
    "SeriesValue",
    "harmonic",
    "shifted_harmonic",
    "hurwitz_zeta",
    "SynthSpec",
    "sample_corpus",
    "sample_counts",
    "token_name",
    "GENERATOR_ID",
]
