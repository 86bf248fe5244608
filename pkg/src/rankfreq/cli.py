"""Command-line pipeline: count, rank, fit, synth, report, zeta.

Exit codes: 0 success, 2 usage error, 3 data error (malformed or
insufficient input), 4 numeric/degenerate error.  Artifact-producing runs
write a <output>.manifest.json recording the invocation, input digests,
tool version, timestamp and seed; manifests are the only outputs allowed
to differ between identical re-runs (timestamp only).
"""

import argparse
import json
import shlex
import sys
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .corpus import TokenizerConfig, count_file, load_counts, merge, write_counts
from .errors import (
    DataFormatError,
    DegenerateDataError,
    DivergenceError,
    InsufficientDataError,
)
from .fit import fit_zipf_ls, fit_zm_mle, fit_zm_profiled_ls
from .ioutil import round10, sha256_file
from .ranking import head_tail_report, rank, write_loglog_points, write_rank_csv
from .series import hurwitz_zeta
from .synth import GENERATOR_ID, SynthSpec, sample_corpus
from .ranking import RankedTable

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 3
EXIT_NUMERIC = 4


def _round_floats(obj):
    if isinstance(obj, float):
        return round10(obj)
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    return obj


def _dump_json(doc: dict) -> str:
    return json.dumps(_round_floats(doc), ensure_ascii=False, indent=2) + "\n"


def _write_manifest(out_path, argv, input_paths, seed=None, generator=None) -> None:
    manifest = {
        "command": shlex.join(["rankfreq"] + list(argv)),
        "inputs": {str(p): sha256_file(p) for p in input_paths},
        "tool_version": __version__,
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "seed": seed,
    }
    if generator is not None:
        manifest["generator"] = generator
    Path(str(out_path) + ".manifest.json").write_text(
        _dump_json(manifest), encoding="utf-8"
    )


def _load_ranked(path) -> RankedTable:
    return rank(load_counts(path))


def cmd_count(args, argv) -> int:
    config = TokenizerConfig(
        mode=args.mode,
        drop_whitespace=args.drop_space,
        drop_punctuation=args.drop_punct,
        lowercase=args.lowercase,
    )
    table = merge(*(count_file(p, config) for p in args.inputs))
    write_counts(table, args.out)
    _write_manifest(args.out, argv, args.inputs)
    return EXIT_OK


def cmd_rank(args, argv) -> int:
    rt = _load_ranked(args.counts)
    write_rank_csv(rt, args.out)
    plot_out = args.plot_out or str(args.out) + ".loglog.txt"
    write_loglog_points(rt, plot_out)
    _write_manifest(args.out, argv, [args.counts])
    return EXIT_OK


def _run_fit(rt: RankedTable, args):
    if args.method == "ls":
        if args.model == "zipf":
            return fit_zipf_ls(rt, min_freq=args.min_freq)
        return fit_zm_profiled_ls(
            rt, a_max=args.a_max, tol=args.tol, min_freq=args.min_freq
        )
    # MLE; the pure-zipf variant is the shifted model pinned at a = 0
    a_max = 0.0 if args.model == "zipf" else args.a_max
    return fit_zm_mle(
        rt,
        a_max=a_max,
        alpha_max=args.alpha_max,
        tol=args.tol,
        min_freq=args.min_freq,
    )


def cmd_fit(args, argv) -> int:
    rt = _load_ranked(args.counts)
    report = _run_fit(rt, args)
    doc = {
        "tool": "rankfreq",
        "version": __version__,
        "input": str(args.counts),
        "input_sha256": sha256_file(args.counts),
    }
    doc.update(report.to_dict())
    if args.json or args.out:
        text = _dump_json(doc)
    else:
        m = report.model.to_dict()
        lines = [f"method {report.method}", f"model {m['type']}"]
        lines += [f"{k} {round10(m[k]):.10g}" for k in ("alpha", "a", "c")]
        lines.append(f"objective {round10(report.objective):.10g}")
        if report.r_squared is not None:
            lines.append(f"r_squared {round10(report.r_squared):.10g}")
        lines.append(f"ks_distance {round10(report.ks_distance):.10g}")
        lines.append(f"ranks_used {report.ranks_used}")
        lines.append(f"boundary_flag {str(report.boundary_flag).lower()}")
        text = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        _write_manifest(args.out, argv, [args.counts])
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_report(args, argv) -> int:
    try:
        fractions = [float(q) for q in args.head_fractions.split(",") if q.strip()]
    except ValueError:
        raise DataFormatError(f"bad --head-fractions value {args.head_fractions!r}")
    if not fractions or any(not 0 < q <= 1 for q in fractions):
        raise DataFormatError("--head-fractions needs comma-separated values in (0, 1]")
    rt = _load_ranked(args.counts)
    if rt.vocabulary_size == 0:
        raise DataFormatError(f"{args.counts}: empty counts table")
    rep = head_tail_report(rt, fractions)
    doc = {
        "tool": "rankfreq",
        "version": __version__,
        "input": str(args.counts),
        "input_sha256": sha256_file(args.counts),
        "total_tokens": rt.total_tokens,
        "vocabulary_size": rt.vocabulary_size,
        "head_coverage": [
            {"type_fraction": q, "token_coverage": c} for q, c in rep.head_coverage
        ],
        "hapax_count": rep.hapax_count,
        "hapax_type_fraction": rep.hapax_type_fraction,
        "hapax_token_fraction": rep.hapax_token_fraction,
    }
    text = _dump_json(doc)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        _write_manifest(args.out, argv, [args.counts])
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_synth(args, argv) -> int:
    spec = SynthSpec(alpha=args.alpha, a=args.a, V=args.vocab, N=args.tokens, seed=args.seed)
    table = sample_corpus(spec, shards=args.shards)
    write_counts(table, args.out)
    _write_manifest(args.out, argv, [], seed=args.seed, generator=GENERATOR_ID)
    return EXIT_OK


def cmd_zeta(args, argv) -> int:
    sv = hurwitz_zeta(args.alpha, args.shift, args.tol)
    sys.stdout.write(f"value {sv.value:.10g}\nerror_bound {sv.error_bound:.10g}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rankfreq",
        description="Rank-frequency corpus statistics and power-law fitting.",
    )
    parser.add_argument("--version", action="version", version=f"rankfreq {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count token frequencies into a TSV")
    p.add_argument("inputs", nargs="+", help="UTF-8 text files")
    p.add_argument("--mode", choices=["char", "word"], default="char")
    p.add_argument("--drop-punct", action="store_true", help="drop punctuation/symbols")
    p.add_argument("--drop-space", action="store_true", help="drop whitespace tokens")
    p.add_argument("--lowercase", action="store_true")
    p.add_argument("--out", required=True, help="output counts TSV")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("rank", help="rank a counts TSV into a CSV table")
    p.add_argument("counts", help="token<TAB>count file")
    p.add_argument("--out", required=True, help="output CSV")
    p.add_argument("--plot-out", default=None, help="two-column rank/frequency file")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("fit", help="fit a frequency law to a counts TSV")
    p.add_argument("counts")
    p.add_argument("--method", choices=["mle", "ls"], default="mle")
    p.add_argument("--model", choices=["zipf", "zm"], default="zm")
    p.add_argument("--min-freq", type=float, default=0.0, dest="min_freq")
    p.add_argument("--a-max", type=float, default=100.0, dest="a_max")
    p.add_argument("--alpha-max", type=float, default=10.0, dest="alpha_max")
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--json", action="store_true", help="print the full JSON report")
    p.add_argument("--out", default=None, help="write the JSON report to a file")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("report", help="head/tail coverage report as JSON")
    p.add_argument("counts")
    p.add_argument("--head-fractions", default="0.01,0.05,0.1,0.2,0.5")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("synth", help="sample a synthetic corpus with known parameters")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--a", type=float, default=0.0)
    p.add_argument("--vocab", type=int, required=True)
    p.add_argument("--tokens", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--shards", type=int, default=1)
    p.add_argument("--out", required=True, help="output counts TSV")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("zeta", help="shifted zeta value with certified error bound")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--shift", type=float, default=0.0)
    p.add_argument("--tol", type=float, default=1e-10)
    p.set_defaults(func=cmd_zeta)

    return parser


def _validate(parser, args) -> None:
    if args.command == "synth":
        if not args.alpha > 0:
            parser.error("--alpha must be > 0")
        if args.a < 0:
            parser.error("--a must be >= 0")
        if args.vocab < 1:
            parser.error("--vocab must be >= 1")
        if args.tokens < 0:
            parser.error("--tokens must be >= 0")
        if not 0 <= args.seed < 2**64:
            parser.error("--seed must be an unsigned 64-bit integer")
        if args.shards < 1:
            parser.error("--shards must be >= 1")
    if args.command == "fit":
        if args.min_freq < 0:
            parser.error("--min-freq must be >= 0")
        if args.a_max < 0 or not args.alpha_max > 0 or not args.tol > 0:
            parser.error("need --a-max >= 0, --alpha-max > 0, --tol > 0")
    if args.command == "zeta" and not args.tol > 0:
        parser.error("--tol must be > 0")


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    try:
        return args.func(args, argv)
    except DataFormatError as exc:
        print(f"rankfreq: data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except InsufficientDataError as exc:
        print(f"rankfreq: insufficient data: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (DegenerateDataError, DivergenceError) as exc:
        print(f"rankfreq: numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"rankfreq: {exc}", file=sys.stderr)
        return EXIT_DATA


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
