"""The full feature catalog for a document part (title or body).

Features fall into three families: complexity (readability indices, tree
depths, fluency, lexical diversity), psychology (category counts and
sentiment strengths), and stylistic (POS counts, stop-word percentage,
punctuation, capitalization). A value of None marks a feature whose
preconditions fail (e.g. fluency on a part with no words); everything
else is a float.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path

from . import lexicon as lx
from . import postag as pt
from . import textseg as ts
from .corpus import Document

COMPLEXITY_FEATURES = (
    "GI", "SMOG", "FK", "med_depth", "med_np_depth", "med_vp_depth",
    "flu_coca_c", "flu_coca_d", "TTR", "avg_wlen",
)
POS_FEATURES = (
    "NN", "NNP", "PRP", "PRP$", "WP", "DT", "WDT", "CD", "RB", "UH",
    "VB", "JJ", "VBD", "VBG", "VBN", "VBP", "VBZ",
)
STYLISTIC_CATEGORY_FEATURES = (
    "focuspast", "focusfuture", "i", "we", "you", "shehe", "quant",
    "compare", "negate", "swear", "netspeak", "interrog",
)
PSYCH_CATEGORY_FEATURES = (
    "analytic", "insight", "cause", "discrep", "tentat", "certain",
    "differ", "affil", "power", "reward", "risk", "personal", "tone",
    "affect",
)
CATALOG = (
    COMPLEXITY_FEATURES
    + ("WC", "WPS")
    + POS_FEATURES
    + STYLISTIC_CATEGORY_FEATURES
    + ("exclaim", "all_caps", "per_stop", "allPunc", "quotes", "#vps")
    + PSYCH_CATEGORY_FEATURES
    + ("str_neg", "str_pos")
)

# Penn fine tags folded into the catalog's coarse counts
_TAG_FOLD = {
    "NN": "NN", "NNS": "NN", "NNP": "NNP", "NNPS": "NNP",
    "PRP": "PRP", "PRP$": "PRP$", "WP": "WP", "WP$": "WP",
    "DT": "DT", "WDT": "WDT", "CD": "CD",
    "RB": "RB", "RBR": "RB", "RBS": "RB", "UH": "UH",
    "VB": "VB", "JJ": "JJ", "JJR": "JJ", "JJS": "JJ",
    "VBD": "VBD", "VBG": "VBG", "VBN": "VBN", "VBP": "VBP", "VBZ": "VBZ",
}

_QUOTE_CHARS = set('"\'“”‘’')

NA = None


@dataclass
class Resources:
    """Everything extraction needs, loaded once and shared."""
    tagger: pt.TaggerModel
    categories: lx.CategoryLexicon
    frequency: lx.FrequencyTable
    sentiment: lx.SentimentLexicon
    stopwords: frozenset[str]

    @classmethod
    def default(cls) -> "Resources":
        return cls(
            tagger=pt.default_model(),
            categories=lx.load_category_lexicon(),
            frequency=lx.load_frequency_table(),
            sentiment=lx.load_sentiment_lexicon(),
            stopwords=lx.load_stopwords(),
        )


@dataclass
class FeatureVector:
    doc_id: str
    part: str  # title | body
    values: dict[str, float | None] = field(default_factory=dict)


def _median(xs: list[float]) -> float:
    xs = sorted(xs)
    n = len(xs)
    mid = n // 2
    if n % 2:
        return float(xs[mid])
    return (xs[mid - 1] + xs[mid]) / 2.0


def _word_tokens(tokens: list[ts.Token]) -> list[ts.Token]:
    return [t for t in tokens if t.kind == ts.WORD]


def extract_complexity(
    tagged: list[pt.TaggedSentence],
    trees: list[pt.ChunkNode],
    freq: lx.FrequencyTable,
) -> dict[str, float | None]:
    """Readability indices, tree-depth medians, fluency, TTR, word length."""
    if not tagged:
        return {name: NA for name in COMPLEXITY_FEATURES}
    pairs = [(tok, t) for s in tagged for tok, t in s.tokens]
    words = [(tok, t) for tok, t in pairs if tok.kind == ts.WORD]
    tokens = [tok for tok, _ in pairs]
    out: dict[str, float | None] = {}
    n_sent = len(tagged)
    n_words = len(words)
    if n_words == 0:
        out.update({name: NA for name in ("GI", "SMOG", "FK", "TTR", "avg_wlen")})
    else:
        syllables = sum(ts.count_syllables(tok.lower) for tok, _ in words)
        complex_words = sum(1 for tok, t in words if ts.is_complex_word(tok.norm, t))
        poly = sum(1 for tok, _ in words if ts.count_syllables(tok.lower) >= 3)
        out["GI"] = 0.4 * (n_words / n_sent + 100.0 * complex_words / n_words)
        out["FK"] = 0.39 * n_words / n_sent + 11.8 * syllables / n_words - 15.59
        out["SMOG"] = 1.0430 * math.sqrt(poly * 30.0 / n_sent) + 3.1291
        out["TTR"] = len({tok.lower for tok, _ in words}) / n_words
        out["avg_wlen"] = sum(len(tok.norm) for tok, _ in words) / n_words
    metrics = [pt.tree_metrics(t) for t in trees]
    out["med_depth"] = _median([m[0] for m in metrics]) if metrics else NA
    out["med_np_depth"] = _median([m[1] for m in metrics]) if metrics else NA
    out["med_vp_depth"] = _median([m[2] for m in metrics]) if metrics else NA
    out["flu_coca_d"] = lx.fluency_doc(tokens, freq)
    out["flu_coca_c"] = lx.fluency_least3(tokens, freq)
    return out


def extract_stylistic(
    tagged: list[pt.TaggedSentence],
    trees: list[pt.ChunkNode],
    stopwords: frozenset[str],
    categories: lx.CategoryLexicon,
) -> dict[str, float | None]:
    """Word/sentence counts, folded POS counts, punctuation and casing."""
    pairs = [(tok, t) for s in tagged for tok, t in s.tokens]
    tokens = [tok for tok, _ in pairs]
    words = _word_tokens(tokens)
    out: dict[str, float | None] = {}
    wc = len(words)
    out["WC"] = float(wc)
    n_sent = len(tagged)
    pos_counts = {name: 0 for name in POS_FEATURES}
    for _, t in pairs:
        folded = _TAG_FOLD.get(t)
        if folded in pos_counts:
            pos_counts[folded] += 1
    out.update({k: float(v) for k, v in pos_counts.items()})
    out["all_caps"] = float(sum(1 for t in words if t.is_all_caps))
    if wc == 0:
        out["per_stop"] = NA
        out["WPS"] = NA
    else:
        out["per_stop"] = 100.0 * sum(1 for t in words if t.lower in stopwords) / wc
        out["WPS"] = wc / n_sent
    out["allPunc"] = float(sum(1 for t in tokens if t.kind == ts.PUNCT))
    out["quotes"] = float(
        sum(1 for t in tokens if t.kind in (ts.PUNCT, ts.SYMBOL) and t.text in _QUOTE_CHARS)
    )
    out["exclaim"] = float(sum(1 for t in tokens if t.text == "!"))
    out["#vps"] = float(sum(pt.tree_metrics(t)[3] for t in trees))
    cat_counts = lx.match_categories(tokens, categories)
    for name in STYLISTIC_CATEGORY_FEATURES:
        out[name] = float(cat_counts.get(name, 0))
    return out


def extract_psychological(
    tagged: list[pt.TaggedSentence],
    sentences: list[ts.Sentence],
    categories: lx.CategoryLexicon,
    sentiment: lx.SentimentLexicon,
) -> dict[str, float | None]:
    """Category counts plus average sentence-level sentiment strengths."""
    tokens = [tok for s in tagged for tok, _ in s.tokens]
    cat_counts = lx.match_categories(tokens, categories)
    out: dict[str, float | None] = {
        name: float(cat_counts.get(name, 0)) for name in PSYCH_CATEGORY_FEATURES
    }
    if sentences:
        neg, pos = lx.sentiment_strength(sentences, sentiment)
        out["str_neg"], out["str_pos"] = neg, pos
    else:
        out["str_neg"] = out["str_pos"] = NA
    return out


def extract_all(doc: Document, part: str, resources: Resources) -> FeatureVector:
    """Every catalog feature for one document part.

    An empty part yields a vector of all-undefined markers.
    """
    if part not in ("title", "body"):
        raise ValueError(f"part must be 'title' or 'body', got {part!r}")
    text = doc.title if part == "title" else doc.body
    vec = FeatureVector(doc_id=doc.id, part=part)
    if not text.strip():
        vec.values = {name: NA for name in CATALOG}
        return vec
    sentences = ts.split_sentences(text)
    tagged = [pt.tag(s, resources.tagger) for s in sentences]
    trees = [pt.chunk(t) for t in tagged]
    values: dict[str, float | None] = {}
    values.update(extract_complexity(tagged, trees, resources.frequency))
    values.update(extract_stylistic(tagged, trees, resources.stopwords, resources.categories))
    values.update(extract_psychological(tagged, sentences, resources.categories, resources.sentiment))
    vec.values = {name: values[name] for name in CATALOG}
    return vec


# ---------------------------------------------------------------------------
# feature matrix

class MatrixFormatError(ValueError):
    pass


@dataclass
class FeatureMatrix:
    feature_names: tuple[str, ...]
    doc_ids: tuple[str, ...]
    labels: tuple[str, ...]
    part: str
    rows: list[list[float | None]]

    def column(self, feature: str) -> list[float | None]:
        try:
            j = self.feature_names.index(feature)
        except ValueError:
            raise MatrixFormatError(f"unknown feature {feature!r}") from None
        return [row[j] for row in self.rows]

    def group_column(self, feature: str, label: str) -> list[float | None]:
        col = self.column(feature)
        return [v for v, l in zip(col, self.labels) if l == label]


def build_matrix(
    vectors: list[FeatureVector], labels: dict[str, str], part: str
) -> FeatureMatrix:
    names = CATALOG
    rows = []
    ids = []
    labs = []
    for vec in vectors:
        missing = [n for n in names if n not in vec.values]
        if missing:
            raise MatrixFormatError(f"{vec.doc_id}: missing features {missing}")
        rows.append([vec.values[n] for n in names])
        ids.append(vec.doc_id)
        labs.append(labels[vec.doc_id])
    return FeatureMatrix(
        feature_names=tuple(names), doc_ids=tuple(ids), labels=tuple(labs),
        part=part, rows=rows,
    )


def _format_value(v: float | None) -> str:
    if v is None or (isinstance(v, float) and math.isnan(v)):
        return "NA"
    if v == int(v) and abs(v) < 1e15:
        return str(int(v))
    return repr(float(v))


def write_matrix(matrix: FeatureMatrix, path: str | Path) -> None:
    """CSV with header doc_id,label,part,<features>; NA marks undefined."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["doc_id", "label", "part", *matrix.feature_names])
        for doc_id, label, row in zip(matrix.doc_ids, matrix.labels, matrix.rows):
            writer.writerow([doc_id, label, matrix.part, *[_format_value(v) for v in row]])


def read_matrix(path: str | Path) -> FeatureMatrix:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise MatrixFormatError(f"{path}: empty file") from None
        if header[:3] != ["doc_id", "label", "part"]:
            raise MatrixFormatError(f"{path}: bad header {header[:3]}")
        names = tuple(header[3:])
        unknown = [n for n in names if n not in CATALOG]
        if unknown:
            raise MatrixFormatError(f"{path}: unknown feature column(s) {unknown}")
        ids, labels, rows = [], [], []
        part = ""
        for lineno, rec in enumerate(reader, 2):
            if len(rec) != len(names) + 3:
                raise MatrixFormatError(f"{path}:{lineno}: ragged row")
            ids.append(rec[0])
            labels.append(rec[1])
            part = rec[2]
            rows.append([None if v == "NA" else float(v) for v in rec[3:]])
    return FeatureMatrix(
        feature_names=names, doc_ids=tuple(ids), labels=tuple(labels),
        part=part, rows=rows,
    )
