"""Command-line interface: the pipeline as composable, file-based stages.

Every run is fully reconstructable from its command line (echoed to stderr
unless --quiet), all randomness flows from explicit seed flags, and output
files are written atomically so an aborted run leaves no partial file.
Exit codes: 0 success, 1 runtime failure, 2 usage error.
"""

import argparse
import os
import sys
import tempfile

from . import __version__, analysis, bootstrap, cluster, dataset, ingest, scoring
from .errors import PipelineError
from .lexicon import Origin, load_lexicon, save_lexicon


def _atomic_write_text(path: str, text: str) -> None:
    """Write via a temp file + rename; failures leave no partial output."""
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        os.replace(tmp, path)
    finally:
        if os.path.exists(tmp):
            os.unlink(tmp)


def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _require_inputs(*paths: str) -> None:
    for path in paths:
        if not os.path.exists(path):
            raise PipelineError(f"input not found: {path}")


def _log(args, message: str) -> None:
    if not args.quiet:
        print(message, file=sys.stderr)


def _u64(text: str) -> int:
    value = int(text)
    if value < 0 or value >= 1 << 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("value must be >= 1")
    return value


def _add_filter_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("tweet filter")
    group.add_argument(
        "--require-lang", default="en", metavar="TAG",
        help="keep tweets whose language tag matches (prefix before '-'; default: en)",
    )
    group.add_argument(
        "--no-require-lang", dest="require_lang", action="store_const", const=None,
        help="disable the language criterion",
    )
    group.add_argument(
        "--require-country", default="US", metavar="CODE",
        help="keep tweets with this place country code (default: US)",
    )
    group.add_argument(
        "--no-require-country", dest="require_country", action="store_const", const=None,
        help="disable the country criterion",
    )
    group.add_argument(
        "--require-place-type", default="city", metavar="TYPE",
        help="keep tweets with this place type (default: city)",
    )
    group.add_argument(
        "--no-require-place-type", dest="require_place_type",
        action="store_const", const=None,
        help="disable the place-type criterion",
    )


def _filter_config(args) -> ingest.FilterConfig:
    return ingest.FilterConfig(
        require_lang=args.require_lang,
        require_country=args.require_country,
        require_place_type=args.require_place_type,
    )


def _add_bootstrap_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("expansion variants")
    group.add_argument(
        "--zero-evidence-as-zero", action="store_true",
        help="tweets without any scored token propose candidate 0 instead of nothing",
    )
    group.add_argument(
        "--distinct-denominator", action="store_true",
        help="divide by the distinct-term count instead of the token count",
    )
    group.add_argument(
        "--self-feed", action="store_true",
        help="let earlier expansions score later tweets (order-dependent)",
    )


def _expand_options(args) -> bootstrap.ExpandOptions:
    return bootstrap.ExpandOptions(
        zero_evidence_as_zero=args.zero_evidence_as_zero,
        distinct_denominator=args.distinct_denominator,
        self_feed=args.self_feed,
        raw_tokens=args.raw_tokens,
    )


def _read_corpus_file(path: str, cfg: ingest.FilterConfig):
    return ingest.read_corpus(_read_text(path), cfg)


def cmd_ingest(args) -> int:
    _require_inputs(args.infile)
    tweets, stats = _read_corpus_file(args.infile, _filter_config(args))
    _atomic_write_text(
        args.out, "".join(ingest.tweet_to_json(t) + "\n" for t in tweets)
    )
    _log(args, f"ingest: {stats.describe()} -> {args.out}")
    return 0


def cmd_bootstrap(args) -> int:
    _require_inputs(args.seed_lexicon, args.corpus)
    seed_lex = load_lexicon(_read_text(args.seed_lexicon), Origin.SEED)
    tweets, ingest_stats = _read_corpus_file(args.corpus, _filter_config(args))
    merged, stats = bootstrap.expand_lexicon(tweets, seed_lex, _expand_options(args))
    _atomic_write_text(args.out, save_lexicon(merged))
    _log(args, f"bootstrap: {ingest_stats.describe()}")
    _log(args, f"bootstrap: {stats.describe()} -> {args.out}")
    return 0


def cmd_score(args) -> int:
    _require_inputs(args.lexicon, args.infile)
    lexicon = load_lexicon(_read_text(args.lexicon), Origin.EXPANDED)
    tweets, ingest_stats = _read_corpus_file(args.infile, _filter_config(args))
    records, stats = scoring.score_corpus(tweets, lexicon, raw_tokens=args.raw_tokens)
    _atomic_write_text(args.out, dataset.write_csv(records))
    _log(args, f"score: {ingest_stats.describe()}")
    _log(args, f"score: {stats.describe()} -> {args.out}")
    return 0


def cmd_dataset(args) -> int:
    _require_inputs(*args.infiles)
    if not args.out_csv and not args.out_arff:
        raise PipelineError("nothing to do: pass --out-csv and/or --out-arff")
    records = []
    for path in args.infiles:
        records.extend(dataset.read_csv(_read_text(path)))
    if args.seed is not None:
        records = dataset.shuffle(records, args.seed)
    if args.out_csv:
        _atomic_write_text(args.out_csv, dataset.write_csv(records))
        _log(args, f"dataset: {len(records)} records -> {args.out_csv}")
    if args.out_arff:
        _atomic_write_text(
            args.out_arff,
            dataset.write_arff(records, args.relation, include_date=args.arff_include_date),
        )
        _log(args, f"dataset: {len(records)} records -> {args.out_arff}")
    return 0


def cmd_cluster(args) -> int:
    _require_inputs(args.infile)
    points = dataset.read_points(_read_text(args.infile))
    model = cluster.kmeans(points, args.k, seed=args.seed, normalize=args.normalize)
    if args.out_model:
        _atomic_write_text(args.out_model, model.to_json())
    if args.out_summary:
        summary = cluster.centroid_summary(model, points)
        _atomic_write_text(args.out_summary, cluster.render_centroid_summary(summary))
    _log(
        args,
        f"cluster: n={len(points)} k={model.k} iterations={model.iterations} "
        f"sse={model.sse:.4f} sizes={model.cluster_sizes}",
    )
    return 0


def cmd_analyze(args) -> int:
    _require_inputs(args.infile, args.model)
    records = dataset.read_csv(_read_text(args.infile))
    model = cluster.ClusterModel.from_json(_read_text(args.model))
    profile = analysis.dispersion_by_length(records, args.bin_width)
    statistic = analysis.cone_statistic(records, model)
    if args.out_profile:
        _atomic_write_text(args.out_profile, profile.to_csv())
    if args.out_scatter:
        _atomic_write_text(args.out_scatter, analysis.export_scatter(records, model))
    if args.out_figure or args.out_dispersion_figure:
        from . import report  # defer matplotlib import to the render path

        if args.out_figure:
            report.render_scatter_figure(records, model, args.out_figure)
        if args.out_dispersion_figure:
            report.render_dispersion_figure(profile, args.out_dispersion_figure)
    rendered = "undefined" if statistic is None else f"{statistic:.6f}"
    _log(args, f"analyze: records={len(records)} cone_statistic={rendered}")
    return 0


def cmd_simulate(args) -> int:
    if args.dist == "pm1":
        pool = analysis.PM1_SCORES
    elif args.dist.startswith("lexicon:"):
        path = args.dist.partition(":")[2]
        _require_inputs(path)
        pool = analysis.scores_from_lexicon(load_lexicon(_read_text(path), Origin.EXPANDED))
    else:
        raise PipelineError(f"unknown distribution {args.dist!r} (use pm1 or lexicon:<file>)")
    cfg = analysis.NullModelConfig(
        n_tweets=args.n,
        min_len=args.min_len,
        max_len=args.max_len,
        scores=pool,
        rng_seed=args.seed,
    )
    records = analysis.simulate_null(cfg)
    _atomic_write_text(args.out, dataset.write_csv(records))
    _log(args, f"simulate: {len(records)} records -> {args.out}")
    return 0


def cmd_pipeline(args) -> int:
    _require_inputs(args.infile, args.seed_lexicon)
    outdir = args.outdir
    os.makedirs(outdir, exist_ok=True)
    paths = {name: os.path.join(outdir, name) for name in (
        "accepted.jsonl", "lexicon.txt", "scored.csv", "dataset.csv",
        "dataset.arff", "model.json", "summary.txt", "profile.csv",
        "scatter.tsv", "scatter.png", "dispersion.png",
    )}

    cfg = _filter_config(args)
    tweets, ingest_stats = _read_corpus_file(args.infile, cfg)
    _atomic_write_text(
        paths["accepted.jsonl"], "".join(ingest.tweet_to_json(t) + "\n" for t in tweets)
    )
    _log(args, f"[1/6] ingest: {ingest_stats.describe()}")

    seed_lex = load_lexicon(_read_text(args.seed_lexicon), Origin.SEED)
    merged, expand_stats = bootstrap.expand_lexicon(tweets, seed_lex, _expand_options(args))
    _atomic_write_text(paths["lexicon.txt"], save_lexicon(merged))
    _log(args, f"[2/6] bootstrap: {expand_stats.describe()}")

    records, score_stats = scoring.score_corpus(tweets, merged, raw_tokens=args.raw_tokens)
    _atomic_write_text(paths["scored.csv"], dataset.write_csv(records))
    _log(args, f"[3/6] score: {score_stats.describe()}")

    shuffled = dataset.shuffle(records, args.shuffle_seed)
    _atomic_write_text(paths["dataset.csv"], dataset.write_csv(shuffled))
    _atomic_write_text(
        paths["dataset.arff"],
        dataset.write_arff(shuffled, args.relation, include_date=args.arff_include_date),
    )
    _log(args, f"[4/6] dataset: {len(shuffled)} records, shuffle_seed={args.shuffle_seed}")

    points = [(float(r.length), r.sentiment) for r in shuffled]
    model = cluster.kmeans(points, args.k, seed=args.cluster_seed, normalize=args.normalize)
    _atomic_write_text(paths["model.json"], model.to_json())
    summary = cluster.centroid_summary(model, points)
    _atomic_write_text(paths["summary.txt"], cluster.render_centroid_summary(summary))
    _log(
        args,
        f"[5/6] cluster: k={model.k} iterations={model.iterations} "
        f"sse={model.sse:.4f} sizes={model.cluster_sizes}",
    )

    profile = analysis.dispersion_by_length(shuffled, args.bin_width)
    statistic = analysis.cone_statistic(shuffled, model)
    _atomic_write_text(paths["profile.csv"], profile.to_csv())
    _atomic_write_text(paths["scatter.tsv"], analysis.export_scatter(shuffled, model))
    from . import report

    report.render_scatter_figure(shuffled, model, paths["scatter.png"])
    report.render_dispersion_figure(profile, paths["dispersion.png"])
    rendered = "undefined" if statistic is None else f"{statistic:.6f}"
    _log(args, f"[6/6] analyze: cone_statistic={rendered}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--quiet", action="store_true", help="suppress the stderr run log"
    )

    parser = argparse.ArgumentParser(
        prog="tweetsent",
        description="Tweet sentiment pipeline: lexicon bootstrap, scoring, "
        "dataset emission, k-means clustering, and dispersion analysis.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser(
        "ingest", parents=[common],
        help="filter a JSON Lines capture file into accepted tweet records",
    )
    p.add_argument("--in", dest="infile", required=True, metavar="JSONL")
    p.add_argument("--out", required=True, metavar="JSONL")
    _add_filter_flags(p)
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser(
        "bootstrap", parents=[common],
        help="expand a seed lexicon over a corpus and write the merged lexicon",
    )
    p.add_argument("--seed", dest="seed_lexicon", required=True, metavar="LEXICON",
                   help="seed lexicon file (term<TAB>score)")
    p.add_argument("--corpus", required=True, metavar="JSONL")
    p.add_argument("--out", required=True, metavar="LEXICON")
    p.add_argument("--raw-tokens", action="store_true",
                   help="skip URL/mention removal and punctuation trimming")
    _add_filter_flags(p)
    _add_bootstrap_flags(p)
    p.set_defaults(func=cmd_bootstrap)

    p = sub.add_parser(
        "score", parents=[common],
        help="score tweets with a lexicon and write length/sentiment/date CSV",
    )
    p.add_argument("--lexicon", required=True, metavar="LEXICON")
    p.add_argument("--in", dest="infile", required=True, metavar="JSONL")
    p.add_argument("--out", required=True, metavar="CSV")
    p.add_argument("--raw-tokens", action="store_true",
                   help="skip URL/mention removal and punctuation trimming")
    _add_filter_flags(p)
    p.set_defaults(func=cmd_score)

    p = sub.add_parser(
        "dataset", parents=[common],
        help="concatenate scored CSVs, shuffle deterministically, emit CSV/ARFF",
    )
    p.add_argument("--in", dest="infiles", required=True, nargs="+", metavar="CSV")
    p.add_argument("--seed", type=_u64, default=None, metavar="U64",
                   help="shuffle seed; omit to keep input order")
    p.add_argument("--out-csv", metavar="CSV")
    p.add_argument("--out-arff", metavar="ARFF")
    p.add_argument("--relation", default="tweets")
    p.add_argument("--arff-include-date", action="store_true",
                   help="add the capture date as an ARFF string attribute")
    p.set_defaults(func=cmd_dataset)

    p = sub.add_parser(
        "cluster", parents=[common],
        help="k-means over (length, sentiment) points from a CSV or ARFF file",
    )
    p.add_argument("--in", dest="infile", required=True, metavar="CSV|ARFF")
    p.add_argument("--k", type=_positive_int, default=2)
    p.add_argument("--seed", type=_u64, default=10, metavar="U64")
    p.add_argument("--normalize", action="store_true",
                   help="min-max scale features before clustering")
    p.add_argument("--out-model", metavar="JSON")
    p.add_argument("--out-summary", metavar="TXT")
    p.set_defaults(func=cmd_cluster)

    p = sub.add_parser(
        "analyze", parents=[common],
        help="dispersion profile, cone statistic, scatter export, figures",
    )
    p.add_argument("--in", dest="infile", required=True, metavar="CSV")
    p.add_argument("--model", required=True, metavar="JSON")
    p.add_argument("--bin-width", type=_positive_int, default=10)
    p.add_argument("--out-profile", metavar="CSV")
    p.add_argument("--out-scatter", metavar="TSV")
    p.add_argument("--out-figure", metavar="PNG",
                   help="render the clustered scatter figure")
    p.add_argument("--out-dispersion-figure", metavar="PNG",
                   help="render the dispersion-band figure")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser(
        "simulate", parents=[common],
        help="generate null-model tweets with i.i.d. term scores",
    )
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--min-len", type=_positive_int, default=1, metavar="TOKENS")
    p.add_argument("--max-len", type=_positive_int, default=23, metavar="TOKENS")
    p.add_argument("--dist", default="pm1", metavar="pm1|lexicon:FILE",
                   help="term score distribution (default: symmetric -1/+1)")
    p.add_argument("--seed", type=_u64, default=0, metavar="U64")
    p.add_argument("--out", required=True, metavar="CSV")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser(
        "pipeline", parents=[common],
        help="run ingest -> bootstrap -> score -> dataset -> cluster -> analyze",
    )
    p.add_argument("--in", dest="infile", required=True, metavar="JSONL")
    p.add_argument("--seed-lexicon", required=True, metavar="LEXICON")
    p.add_argument("--outdir", required=True, metavar="DIR")
    p.add_argument("--shuffle-seed", type=_u64, default=1, metavar="U64")
    p.add_argument("--cluster-seed", type=_u64, default=10, metavar="U64")
    p.add_argument("--k", type=_positive_int, default=2)
    p.add_argument("--bin-width", type=_positive_int, default=10)
    p.add_argument("--relation", default="tweets")
    p.add_argument("--arff-include-date", action="store_true")
    p.add_argument("--normalize", action="store_true")
    p.add_argument("--raw-tokens", action="store_true")
    _add_filter_flags(p)
    _add_bootstrap_flags(p)
    p.set_defaults(func=cmd_pipeline)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.quiet:
        shown = argv if argv is not None else sys.argv[1:]
        print("tweetsent " + " ".join(shown), file=sys.stderr)
    try:
        return args.func(args)
    except (PipelineError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())
