"""Dictionary resources: word categories, frequency tables, sentiment.

The shipped files are open substitutes for the proprietary resources the
study area typically relies on; the file formats are what matter. Holders
of licensed dictionaries can convert them to these formats and drop them
in.

Category lexicon format::

    %negate
    no
    not
    never
    damn*        # trailing * matches any continuation

Frequency table: TSV ``word<TAB>freq_per_million``.
Sentiment lexicon: TSV ``term<TAB>strength`` with ``%boosters`` and
``%negators`` blocks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .textseg import WORD, Sentence, Token

_RESOURCE_DIR = Path(__file__).parent / "resources"


class LexiconFormatError(ValueError):
    """Raised for malformed lexicon files; carries the line number."""

    def __init__(self, path, lineno: int, message: str):
        super().__init__(f"{path}:{lineno}: {message}")
        self.lineno = lineno


@dataclass
class CategoryLexicon:
    name: str
    version: str
    exact: dict[str, dict[str, None]] = field(default_factory=dict)
    stems: dict[str, list[str]] = field(default_factory=dict)

    @property
    def categories(self) -> list[str]:
        return list(self.exact)

    def entry_count(self, category: str) -> int:
        return len(self.exact[category]) + len(self.stems[category])


def load_category_lexicon(path: str | Path | None = None) -> CategoryLexicon:
    """Parse a %-block category file into exact entries and wildcard stems."""
    path = Path(path) if path else _RESOURCE_DIR / "categories.dic"
    lex = CategoryLexicon(name=path.stem, version="1")
    current: str | None = None
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("%"):
            name = line[1:].strip()
            if not name:
                raise LexiconFormatError(path, lineno, "empty category name")
            if name in lex.exact:
                raise LexiconFormatError(path, lineno, f"duplicate category {name!r}")
            lex.exact[name] = {}
            lex.stems[name] = []
            current = name
            continue
        if current is None:
            raise LexiconFormatError(path, lineno, "entry before any %category header")
        entry = line.lower()
        if "*" in entry[:-1] or entry == "*":
            raise LexiconFormatError(path, lineno, f"wildcard only allowed as trailing *: {raw.strip()!r}")
        if entry.endswith("*"):
            stem = entry[:-1]
            if stem not in lex.stems[current]:
                lex.stems[current].append(stem)
        else:
            lex.exact[current][entry] = None
    for cat in lex.stems:
        lex.stems[cat].sort(key=len, reverse=True)
    return lex


def match_categories(tokens: list[Token], lex: CategoryLexicon) -> dict[str, int]:
    """Count word tokens per category (a token may hit several categories).

    Exact entries beat wildcard stems; among stems the longest wins,
    which only matters for counting a token at most once per category.
    """
    counts = {cat: 0 for cat in lex.exact}
    for tok in tokens:
        if tok.kind != WORD:
            continue
        w = tok.lower
        for cat in lex.exact:
            if w in lex.exact[cat]:
                counts[cat] += 1
            else:
                for stem in lex.stems[cat]:
                    if w.startswith(stem):
                        counts[cat] += 1
                        break
    return counts


@dataclass
class FrequencyTable:
    corpus_name: str
    freqs: dict[str, float]

    def lookup(self, word: str) -> float:
        return self.freqs.get(word.lower(), 0.0)


def load_frequency_table(path: str | Path | None = None) -> FrequencyTable:
    path = Path(path) if path else _RESOURCE_DIR / "frequency.tsv"
    freqs: dict[str, float] = {}
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise LexiconFormatError(path, lineno, f"expected word<TAB>freq, got {raw!r}")
        word, freq = parts
        value = float(freq)
        if value < 0:
            raise LexiconFormatError(path, lineno, f"negative frequency for {word!r}")
        freqs[word.lower()] = value
    return FrequencyTable(corpus_name=path.stem, freqs=freqs)


def fluency_doc(tokens: list[Token], ft: FrequencyTable) -> float | None:
    """Mean per-million frequency over word tokens; unknown words count 0.

    Returns None when the token list has no words (undefined feature).
    """
    words = [t for t in tokens if t.kind == WORD]
    if not words:
        return None
    return sum(ft.lookup(t.lower) for t in words) / len(words)


def fluency_least3(tokens: list[Token], ft: FrequencyTable) -> float | None:
    """Mean frequency of the 3 rarest distinct word types (fewer if the
    document has fewer types); frequency ties broken alphabetically."""
    types = sorted({t.lower for t in tokens if t.kind == WORD})
    if not types:
        return None
    ranked = sorted(types, key=lambda w: (ft.lookup(w), w))[:3]
    return sum(ft.lookup(w) for w in ranked) / len(ranked)


@dataclass
class SentimentLexicon:
    terms: dict[str, int]          # word or trailing-* stem -> strength
    boosters: dict[str, int]       # word -> magnitude shift
    negators: frozenset[str]
    _stems: list[tuple[str, int]] = field(default_factory=list)

    def __post_init__(self):
        self._stems = sorted(
            ((k[:-1], v) for k, v in self.terms.items() if k.endswith("*")),
            key=lambda kv: len(kv[0]),
            reverse=True,
        )

    def strength(self, word: str) -> int | None:
        w = word.lower()
        if w in self.terms:
            return self.terms[w]
        for stem, s in self._stems:
            if w.startswith(stem):
                return s
        return None


def load_sentiment_lexicon(path: str | Path | None = None) -> SentimentLexicon:
    path = Path(path) if path else _RESOURCE_DIR / "sentiment.tsv"
    terms: dict[str, int] = {}
    boosters: dict[str, int] = {}
    negators: set[str] = set()
    section = "terms"
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("%"):
            section = line[1:].strip()
            if section not in ("terms", "boosters", "negators"):
                raise LexiconFormatError(path, lineno, f"unknown section {section!r}")
            continue
        parts = line.split("\t")
        if section == "negators":
            negators.add(parts[0].lower())
            continue
        if len(parts) != 2:
            raise LexiconFormatError(path, lineno, f"expected term<TAB>value, got {raw!r}")
        word, value = parts[0].lower(), int(parts[1])
        if section == "terms":
            if not (2 <= abs(value) <= 5):
                raise LexiconFormatError(path, lineno, f"strength out of range: {value}")
            terms[word] = value
        else:
            if abs(value) not in (1, 2):
                raise LexiconFormatError(path, lineno, f"booster shift out of range: {value}")
            boosters[word] = value
    return SentimentLexicon(terms=terms, boosters=boosters, negators=frozenset(negators))


def _sentence_scores(sent: Sentence, sl: SentimentLexicon) -> tuple[int, int]:
    neg, pos = -1, 1
    words = [t for t in sent.tokens if t.kind == WORD]
    for i, tok in enumerate(words):
        s = sl.strength(tok.lower)
        if s is None:
            continue
        if i > 0 and words[i - 1].lower in sl.boosters:
            s = (1 if s > 0 else -1) * max(abs(s) + sl.boosters[words[i - 1].lower], 1)
        negated = any(w.lower in sl.negators for w in words[max(0, i - 2):i])
        if negated:
            s = -abs(s) + 1 if s > 0 else -1
        if s < 0:
            neg = min(neg, max(s, -5))
        else:
            pos = max(pos, min(s, 5))
    return neg, pos


def sentiment_strength(sentences: list[Sentence], sl: SentimentLexicon) -> tuple[float, float]:
    """Average per-sentence negative and positive strengths.

    Per sentence: most negative matched strength after booster/negator
    adjustment (default -1), and symmetrically the most positive
    (default +1); both clamped to the [-5,-1] / [1,5] bands.
    """
    if not sentences:
        raise ValueError("sentiment_strength requires at least one sentence")
    scores = [_sentence_scores(s, sl) for s in sentences]
    avg_neg = sum(n for n, _ in scores) / len(scores)
    avg_pos = sum(p for _, p in scores) / len(scores)
    return avg_neg, avg_pos


def load_stopwords(path: str | Path | None = None) -> frozenset[str]:
    path = Path(path) if path else _RESOURCE_DIR / "stopwords.txt"
    words = set()
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(line.lower())
    return frozenset(words)
