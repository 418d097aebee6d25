"""Command-line entry point: ingest -> extract -> analyze -> classify ->
report, each emitting deterministic static artifacts.

Exit codes: 0 success, 1 input/structural error, 2 degenerate-statistics
warning escalated by --strict-degenerate.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
from pathlib import Path

import numpy as np

from . import corpus as cp
from . import features as ft
from . import learn as ln
from . import lexicon as lx
from . import postag as pt
from . import stats as st

SCHEMA_VERSION = "1"

LABEL_ORDER = {cp.REAL: 0, cp.FAKE: 1, cp.SATIRE: 2}


class CliError(Exception):
    pass


def _sha256(path: str | Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _load_resources(args) -> ft.Resources:
    return ft.Resources(
        tagger=pt.TaggerModel.load(args.tagger_model) if args.tagger_model else pt.default_model(),
        categories=lx.load_category_lexicon(args.category_lexicon),
        frequency=lx.load_frequency_table(args.frequency_table),
        sentiment=lx.load_sentiment_lexicon(args.sentiment_lexicon),
        stopwords=lx.load_stopwords(args.stoplist),
    )


def cmd_ingest(args) -> int:
    corpus, load_report = cp.load_corpus(args.corpus, args.dataset_id)
    validation = cp.validate_corpus(corpus)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    (out / "manifest.txt").write_text(
        f"schema_version={SCHEMA_VERSION}\n" + corpus.manifest.as_text(), encoding="utf-8"
    )
    lines = [f"schema_version={SCHEMA_VERSION}"]
    for path, reason in load_report.errors:
        lines.append(f"load_error\t{path}\t{reason}")
    lines.append(validation.as_text().rstrip("\n"))
    (out / "validation.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")
    for label in cp.LABELS:
        print(f"{label}: {corpus.manifest.counts.get(label, 0)}")
    if load_report.errors:
        print(f"{len(load_report.errors)} document(s) failed to load", file=sys.stderr)
    return 0


def cmd_extract(args) -> int:
    corpus, _ = cp.load_corpus(args.corpus, args.dataset_id)
    resources = _load_resources(args)
    vectors = []
    labels = {}
    for doc in corpus.documents:
        text = doc.title if args.part == "title" else doc.body
        if args.part == "title" and not text.strip():
            continue  # unverified/absent titles are skipped, not zeroed
        vectors.append(ft.extract_all(doc, args.part, resources))
        labels[doc.id] = doc.label
    if not vectors:
        raise CliError(f"no documents with a non-empty {args.part}")
    matrix = ft.build_matrix(vectors, labels, args.part)
    all_na = sum(1 for row in matrix.rows if all(v is None for v in row))
    ft.write_matrix(matrix, args.out)
    print(f"wrote {args.out}: {len(matrix.rows)} rows x {len(matrix.feature_names)} features")
    if all_na > 0.1 * len(matrix.rows):
        print(f"{all_na} all-undefined rows (> 10%)", file=sys.stderr)
        return 1
    return 0


def _analyze_matrix(matrix: ft.FeatureMatrix, alpha: float) -> st.OrderingReport:
    labels = sorted(set(matrix.labels), key=lambda l: LABEL_ORDER.get(l, 9))
    report = st.OrderingReport(part=matrix.part, dataset_id=0, alpha=alpha)
    for feature in matrix.feature_names:
        groups = {label: matrix.group_column(feature, label) for label in labels}
        report.rows.append(st.compare_feature(feature, groups, alpha))
    return report


def _write_ordering_report(report: st.OrderingReport, out: Path, bold_p: float,
                           source_hash: str) -> None:
    rows = report.sorted_rows()
    lines = [
        f"schema_version={SCHEMA_VERSION}",
        f"part={report.part}",
        f"alpha={report.alpha}",
        f"bold_p={bold_p}",
        f"input_sha256={source_hash}",
        "feature\ttest\tstatistic\tp_value\tordering\tsignificant\tbold\tnote",
    ]
    for r in rows:
        if r.test_used == "skipped":
            lines.append(f"{r.feature}\tskipped\t\t\t\t\t\t{r.skipped_reason}")
            continue
        bold = "1" if r.p_value < bold_p else "0"
        note = "degenerate" if r.degenerate else ""
        lines.append(
            f"{r.feature}\t{r.test_used}\t{r.statistic:.6g}\t{r.p_value:.6g}"
            f"\t{r.ordering}\t{int(r.significant)}\t{bold}\t{note}"
        )
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")


def _write_ordering_table(report: st.OrderingReport, out: Path, bold_p: float) -> None:
    """Fixed-width human-readable table of the significant features."""
    rows = [r for r in report.sorted_rows() if r.test_used != "skipped" and r.significant]
    lines = [f"Features that differ in the {report.part} (alpha={report.alpha})", ""]
    lines.append(f"{'Feature':<14}{'Ordering':<28}{'p':<12}{'test':<8}bold")
    for r in rows:
        bold = "*" if r.p_value < bold_p else ""
        lines.append(f"{r.feature:<14}{r.ordering:<28}{r.p_value:<12.4g}{r.test_used:<8}{bold}")
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")


def cmd_analyze(args) -> int:
    matrix = ft.read_matrix(args.matrix)
    report = _analyze_matrix(matrix, args.alpha)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    source_hash = _sha256(args.matrix)
    _write_ordering_report(report, out / "ordering.tsv", args.bold_p, source_hash)
    _write_ordering_table(report, out / "ordering.txt", args.bold_p)
    n_sig = sum(1 for r in report.rows if r.significant)
    print(f"{n_sig} significant feature(s) at alpha={args.alpha}")
    if args.strict_degenerate and any(r.degenerate for r in report.rows):
        print("degenerate statistics present", file=sys.stderr)
        return 2
    return 0


def _select_features(matrix: ft.FeatureMatrix, args) -> tuple[str, ...]:
    if args.preset:
        return ln.PRESETS[args.preset]
    report = _analyze_matrix(matrix, args.alpha)
    top = st.rank_features(report.rows, args.top_k, args.alpha)
    if len(top) < args.top_k:
        print(f"only {len(top)} significant feature(s) available", file=sys.stderr)
    if not top:
        raise CliError("no significant features to classify with")
    return tuple(top)


def cmd_classify(args) -> int:
    matrix = ft.read_matrix(args.matrix)
    pair = tuple(args.pair.split(":"))
    if len(pair) != 2 or not all(p in cp.LABELS for p in pair):
        raise CliError(f"--pair must be label:label from {cp.LABELS}, got {args.pair!r}")
    keep = [i for i, l in enumerate(matrix.labels) if l in pair]
    if not keep:
        raise CliError(f"no rows with labels {pair}")
    names = _select_features(matrix, args)
    cols = [matrix.feature_names.index(n) for n in names]
    X = np.array(
        [[np.nan if matrix.rows[i][j] is None else matrix.rows[i][j] for j in cols] for i in keep]
    )
    labels = [matrix.labels[i] for i in keep]
    report = ln.cross_validate(
        X, labels, k=args.folds, C=args.C, seed=args.seed, feature_names=names
    )
    lines = [
        f"schema_version={SCHEMA_VERSION}",
        f"part={matrix.part}",
        f"pair={pair[0]}:{pair[1]}",
        f"features={','.join(names)}",
        f"folds={report.k}",
        f"C={args.C}",
        f"seed={report.seed}",
        f"input_sha256={_sha256(args.matrix)}",
        f"baseline={report.baseline:.6g}",
        f"mean_accuracy={report.mean_accuracy:.6g}",
        "fold\taccuracy",
    ]
    for i, acc in enumerate(report.fold_accuracies):
        lines.append(f"{i}\t{acc:.6g}")
    Path(args.out).write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(
        f"{pair[0]} vs {pair[1]} ({matrix.part}): mean accuracy "
        f"{report.mean_accuracy:.1%} over {report.baseline:.1%} baseline"
    )
    return 0


def cmd_report(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    ci_features = args.ci_features.split(",")
    lines = [
        f"schema_version={SCHEMA_VERSION}",
        "section=inputs",
    ]
    for path in [args.matrix, *args.analysis, *args.classification]:
        lines.append(f"input\t{path}\t{_sha256(path)}")

    matrix = ft.read_matrix(args.matrix)
    ci_lines = ["feature,label,n,mean,ci_lower,ci_upper"]
    labels = sorted(set(matrix.labels), key=lambda l: LABEL_ORDER.get(l, 9))
    for feature in ci_features:
        for label in labels:
            vals = [v for v in matrix.group_column(feature, label) if v is not None]
            if len(vals) < 2:
                continue
            mean, lo, hi = st.confidence_interval(vals, 0.95)
            ci_lines.append(f"{feature},{label},{len(vals)},{mean:.6g},{lo:.6g},{hi:.6g}")
    (out / "ci_plot_data.csv").write_text("\n".join(ci_lines) + "\n", encoding="utf-8")

    lines.append("section=analysis")
    for path in args.analysis:
        for raw in Path(path).read_text(encoding="utf-8").splitlines():
            lines.append(raw)
    lines.append("section=classification")
    for path in args.classification:
        for raw in Path(path).read_text(encoding="utf-8").splitlines():
            lines.append(raw)
    (out / "report.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {out / 'report.txt'} and {out / 'ci_plot_data.csv'}")
    return 0


def _add_resource_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tagger-model", default=None)
    p.add_argument("--category-lexicon", default=None)
    p.add_argument("--frequency-table", default=None)
    p.add_argument("--sentiment-lexicon", default=None)
    p.add_argument("--stoplist", default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="newsstyle",
        description="Stylometric comparison of fake, real, and satire news",
    )
    parser.add_argument("--jobs", type=int, default=1, help="worker hint (processing is deterministic either way)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="load and validate a corpus directory")
    p.add_argument("--corpus", required=True)
    p.add_argument("--dataset-id", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("extract", help="extract the feature matrix for one part")
    p.add_argument("--corpus", required=True)
    p.add_argument("--dataset-id", type=int, required=True)
    p.add_argument("--part", choices=["title", "body"], required=True)
    p.add_argument("--out", required=True)
    _add_resource_flags(p)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("analyze", help="run the normality-gated comparison protocol")
    p.add_argument("--matrix", required=True)
    p.add_argument("--alpha", type=float, default=0.05)
    p.add_argument("--bold-p", type=float, default=0.005)
    p.add_argument("--strict-degenerate", action="store_true")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("classify", help="cross-validate a linear SVM on selected features")
    p.add_argument("--matrix", required=True)
    p.add_argument("--pair", required=True, help="label pair, e.g. fake:real")
    p.add_argument("--preset", choices=sorted(ln.PRESETS))
    p.add_argument("--top-k", type=int, default=4)
    p.add_argument("--alpha", type=float, default=0.05)
    p.add_argument("--folds", type=int, default=5)
    p.add_argument("--C", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("report", help="consolidated report plus CI plot data")
    p.add_argument("--matrix", required=True)
    p.add_argument("--analysis", nargs="*", default=[])
    p.add_argument("--classification", nargs="*", default=[])
    p.add_argument("--ci-features", default="all_caps,NNP,per_stop")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CliError, cp.CorpusError, ft.MatrixFormatError, lx.LexiconFormatError,
            ln.LearnError, pt.TaggerError, FileNotFoundError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
