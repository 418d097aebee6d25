"""Part-of-speech tagging and shallow chunking.

A greedy averaged-perceptron tagger over a Penn-style tagset, a
longest-match chunk grammar producing NP/VP/PP/O phrases, and loaders for
externally tagged or parsed input when higher-fidelity tools are on hand.
"""

from __future__ import annotations

import json
import random
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path

from .textseg import NUMBER, PUNCT, SYMBOL, WORD, Sentence, Token

_RESOURCE_DIR = Path(__file__).parent / "resources"

TAGSET = (
    "NN NNS NNP NNPS PRP PRP$ WP WP$ DT WDT PDT CD RB RBR RBS UH "
    "VB VBD VBG VBN VBP VBZ JJ JJR JJS IN TO MD CC EX POS RP WRB FW "
    "SYM PUNCT"
).split()

VERB_TAGS = frozenset({"VB", "VBD", "VBG", "VBN", "VBP", "VBZ"})
NOUN_TAGS = frozenset({"NN", "NNS", "NNP", "NNPS"})


class TaggerError(ValueError):
    pass


@dataclass
class TaggerModel:
    tagset: tuple[str, ...]
    weights: dict[str, dict[str, float]]
    lexical_backoff: dict[str, str]
    version: str = "1"
    vocab: set[str] = field(default_factory=set)

    def save(self, path: str | Path) -> None:
        payload = {
            "format": "newsstyle-tagger",
            "version": self.version,
            "tagset": list(self.tagset),
            "weights": self.weights,
            "lexical_backoff": self.lexical_backoff,
            "vocab": sorted(self.vocab),
        }
        Path(path).write_text(json.dumps(payload, sort_keys=True), encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "TaggerModel":
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
        if payload.get("format") != "newsstyle-tagger":
            raise TaggerError(f"{path}: not a tagger model file")
        return cls(
            tagset=tuple(payload["tagset"]),
            weights=payload["weights"],
            lexical_backoff=payload["lexical_backoff"],
            version=payload["version"],
            vocab=set(payload["vocab"]),
        )


@dataclass(frozen=True)
class TaggedSentence:
    tokens: tuple[tuple[Token, str], ...]

    def tags(self) -> list[str]:
        return [tag for _, tag in self.tokens]


def load_closed_class(path: str | Path | None = None) -> dict[str, str]:
    """word<TAB>tag backoff list for closed-class words."""
    path = Path(path) if path else _RESOURCE_DIR / "closed_class.tsv"
    backoff = {}
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        word, tag = line.split("\t")
        backoff[word.lower()] = tag
    return backoff


def _features(tokens: list[Token], i: int, prev: str, prev2: str) -> list[str]:
    tok = tokens[i]
    w = tok.norm
    low = tok.lower
    feats = [
        "bias",
        f"w={w}",
        f"lw={low}",
        f"suf1={low[-1:]}",
        f"suf2={low[-2:]}",
        f"suf3={low[-3:]}",
        f"p1={prev}",
        f"p2={prev2}|{prev}",
        f"pw={tokens[i - 1].lower if i > 0 else '<s>'}",
        f"nw={tokens[i + 1].lower if i + 1 < len(tokens) else '</s>'}",
    ]
    if tok.is_all_caps:
        feats.append("allcaps")
    if tok.kind == NUMBER:
        feats.append("num")
    if w[:1].isupper():
        feats.append("cap")
    return feats


def _predict(model: TaggerModel, feats: list[str]) -> str:
    scores: dict[str, float] = defaultdict(float)
    for f in feats:
        for tag, w in model.weights.get(f, {}).items():
            scores[tag] += w
    if not scores:
        return "NN"
    # deterministic argmax: score desc, tag name asc
    return min(scores, key=lambda t: (-scores[t], t))


def _fixed_tag(model: TaggerModel, tok: Token) -> str | None:
    """Backoff and fallback rules applied before the perceptron."""
    if tok.kind in (PUNCT, SYMBOL):
        return "PUNCT"
    if tok.lower in model.lexical_backoff:
        return model.lexical_backoff[tok.lower]
    if tok.kind == NUMBER:
        return "CD"
    if tok.lower not in model.vocab and tok.is_all_caps:
        return "NNP"
    return None


def tag(sentence: Sentence, model: TaggerModel) -> TaggedSentence:
    """Greedy left-to-right tagging with closed-class backoff and
    unknown-word fallbacks (all-caps -> NNP, numbers -> CD)."""
    tokens = list(sentence.tokens)
    prev, prev2 = "<s>", "<s2>"
    out = []
    for i, tok in enumerate(tokens):
        fixed = _fixed_tag(model, tok)
        if fixed is not None:
            t = fixed
        else:
            t = _predict(model, _features(tokens, i, prev, prev2))
        out.append((tok, t))
        prev2, prev = prev, t
    return TaggedSentence(tokens=tuple(out))


def train_tagger(
    annotated: list[TaggedSentence],
    epochs: int = 5,
    seed: int = 0,
    backoff: dict[str, str] | None = None,
) -> TaggerModel:
    """Averaged-perceptron training, deterministic for a fixed seed."""
    if not annotated:
        raise TaggerError("empty training set")
    for sent in annotated:
        for _, t in sent.tokens:
            if t not in TAGSET:
                raise TaggerError(f"tag {t!r} not in tagset")
    backoff = dict(backoff) if backoff is not None else load_closed_class()

    model = TaggerModel(
        tagset=tuple(TAGSET), weights={}, lexical_backoff=backoff, version="1"
    )
    weights: dict[str, dict[str, float]] = defaultdict(lambda: defaultdict(float))
    totals: dict[tuple[str, str], float] = defaultdict(float)
    stamps: dict[tuple[str, str], int] = defaultdict(int)
    step = 0

    def bump(feat: str, t: str, delta: float) -> None:
        key = (feat, t)
        totals[key] += (step - stamps[key]) * weights[feat][t]
        stamps[key] = step
        weights[feat][t] += delta

    order = list(range(len(annotated)))
    rng = random.Random(seed)
    for _ in range(epochs):
        rng.shuffle(order)
        for idx in order:
            sent = annotated[idx]
            tokens = [tok for tok, _ in sent.tokens]
            model.vocab.update(t.lower for t in tokens)
            prev, prev2 = "<s>", "<s2>"
            for i, (tok, gold) in enumerate(sent.tokens):
                fixed = _fixed_tag(model, tok)
                if fixed is not None:
                    guess = fixed
                else:
                    step += 1
                    feats = _features(tokens, i, prev, prev2)
                    guess = _predict(model, feats)
                    if guess != gold:
                        for f in feats:
                            bump(f, gold, +1.0)
                            bump(f, guess, -1.0)
                    # condition on gold history for stable training
                    guess = gold
                prev2, prev = prev, guess
                model.weights = weights  # live weights during training

    averaged: dict[str, dict[str, float]] = {}
    for feat, tagw in weights.items():
        for t, w in tagw.items():
            key = (feat, t)
            total = totals[key] + (step - stamps[key]) * w
            avg = total / max(step, 1)
            if abs(avg) > 1e-12:
                averaged.setdefault(feat, {})[t] = round(avg, 6)
    model.weights = averaged
    return model


# ---------------------------------------------------------------------------
# chunking

@dataclass(frozen=True)
class ChunkNode:
    label: str  # S, NP, VP, PP, O
    children: tuple  # ChunkNode or (Token, tag) leaves


def _match_np(tags: list[str], i: int) -> int | None:
    j = i
    if j < len(tags) and tags[j] in ("DT", "PRP$"):
        j += 1
    while j < len(tags) and tags[j] in ("JJ", "JJR", "JJS"):
        j += 1
    head = j
    while j < len(tags) and (tags[j] in NOUN_TAGS or tags[j] in ("PRP", "CD")):
        j += 1
    return j if j > head else None


def _match_pp(tags: list[str], i: int) -> tuple[int, int] | None:
    if i >= len(tags) or tags[i] != "IN":
        return None
    np_end = _match_np(tags, i + 1)
    if np_end is None:
        return None
    return i + 1, np_end


def _match_vp(tags: list[str], i: int) -> tuple[int, int, int] | None:
    """Returns (verb_end, inner_start, end); inner_start == end when the
    optional NP/PP complement is absent."""
    j = i
    while j < len(tags) and tags[j] in ("RB", "RBR", "RBS"):
        j += 1
    head = j
    while j < len(tags) and tags[j] in VERB_TAGS:
        j += 1
    if j == head:
        return None
    verb_end = j
    pp = _match_pp(tags, j)
    np_end = _match_np(tags, j)
    pp_end = pp[1] if pp else None
    best = max(e for e in (np_end, pp_end, j) if e is not None)
    return verb_end, j, best


def chunk(ts: TaggedSentence) -> ChunkNode:
    """Longest-match phrase grammar over the tag sequence.

    NP := (DT|PRP$)? JJ* (noun|PRP|CD)+
    VP := RB* verb+ (NP|PP)?
    PP := IN NP
    Unmatched tokens become O leaves directly under the root.
    """
    leaves = list(ts.tokens)
    tags = [t for _, t in leaves]
    children: list = []
    i = 0
    while i < len(leaves):
        candidates: list[tuple[int, ChunkNode]] = []
        vp = _match_vp(tags, i)
        if vp is not None:
            verb_end, inner_start, end = vp
            kids: list = list(leaves[i:verb_end])
            if end > inner_start:
                if tags[inner_start] == "IN":
                    np_start, np_end = inner_start + 1, end
                    pp_kids = [leaves[inner_start], ChunkNode("NP", tuple(leaves[np_start:np_end]))]
                    kids.append(ChunkNode("PP", tuple(pp_kids)))
                else:
                    kids.append(ChunkNode("NP", tuple(leaves[inner_start:end])))
            candidates.append((end, ChunkNode("VP", tuple(kids))))
        pp = _match_pp(tags, i)
        if pp is not None:
            np_start, end = pp
            node = ChunkNode("PP", (leaves[i], ChunkNode("NP", tuple(leaves[np_start:end]))))
            candidates.append((end, node))
        np_end = _match_np(tags, i)
        if np_end is not None:
            candidates.append((np_end, ChunkNode("NP", tuple(leaves[i:np_end]))))
        if candidates:
            end, node = max(candidates, key=lambda c: c[0])
            children.append(node)
            i = end
        else:
            children.append(leaves[i])
            i += 1
    return ChunkNode("S", tuple(children))


def _node_depth(node) -> int:
    if not isinstance(node, ChunkNode):
        return 0
    if not node.children:
        return 1
    return 1 + max(_node_depth(c) for c in node.children)


def _walk(node):
    yield node
    if isinstance(node, ChunkNode):
        for c in node.children:
            yield from _walk(c)


def tree_metrics(tree: ChunkNode) -> tuple[int, int, int, int]:
    """(depth, np_depth, vp_depth, vp_count).

    Depth counts edges on the longest root-to-leaf path; np/vp depths are
    the deepest NP/VP subtree's internal depth (0 when absent).
    """
    depth = _node_depth(tree)
    np_depth = vp_depth = vp_count = 0
    for node in _walk(tree):
        if isinstance(node, ChunkNode):
            if node.label == "NP":
                np_depth = max(np_depth, _node_depth(node))
            elif node.label == "VP":
                vp_depth = max(vp_depth, _node_depth(node))
                vp_count += 1
    return depth, np_depth, vp_depth, vp_count


def leaf_count(tree: ChunkNode) -> int:
    return sum(1 for n in _walk(tree) if not isinstance(n, ChunkNode))


# ---------------------------------------------------------------------------
# external input

def load_pretagged(path: str | Path) -> list[TaggedSentence]:
    """token<TAB>tag lines, blank line between sentences."""
    path = Path(path)
    sentences: list[TaggedSentence] = []
    current: list[tuple[Token, str]] = []
    offset = 0
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        if not raw.strip():
            if current:
                sentences.append(TaggedSentence(tokens=tuple(current)))
                current = []
            continue
        parts = raw.split("\t")
        if len(parts) != 2 or not parts[0]:
            raise TaggerError(f"{path}:{lineno}: expected token<TAB>tag, got {raw!r}")
        text, t = parts
        if t not in TAGSET:
            raise TaggerError(f"{path}:{lineno}: tag {t!r} not in tagset")
        kind = WORD if text[0].isalpha() else (NUMBER if text[0].isdigit() else PUNCT)
        tok = Token(
            text=text,
            kind=kind,
            span=(offset, offset + len(text)),
            is_all_caps=kind == WORD and len(text) >= 2 and text.isupper(),
        )
        offset += len(text) + 1
        current.append((tok, t))
    if current:
        sentences.append(TaggedSentence(tokens=tuple(current)))
    return sentences


def parse_bracketed(line: str) -> ChunkNode:
    """Parse one parenthesized tree, e.g. ``(S (NP Dogs) (VP bark) .)``.

    Labels are arbitrary; bare words become leaves. Used to import
    external parser output for depth metrics.
    """
    pos = 0

    def skip_ws():
        nonlocal pos
        while pos < len(line) and line[pos].isspace():
            pos += 1

    def parse_node():
        nonlocal pos
        skip_ws()
        if pos >= len(line):
            raise TaggerError("unexpected end of tree string")
        if line[pos] == "(":
            pos += 1
            skip_ws()
            start = pos
            while pos < len(line) and not line[pos].isspace() and line[pos] not in "()":
                pos += 1
            label = line[start:pos]
            children = []
            while True:
                skip_ws()
                if pos >= len(line):
                    raise TaggerError("unbalanced parentheses in tree string")
                if line[pos] == ")":
                    pos += 1
                    return ChunkNode(label or "S", tuple(children))
                children.append(parse_node())
        start = pos
        while pos < len(line) and not line[pos].isspace() and line[pos] not in "()":
            pos += 1
        word = line[start:pos]
        tok = Token(text=word, kind=WORD, span=(start, pos))
        return (tok, "")

    node = parse_node()
    skip_ws()
    if pos != len(line):
        raise TaggerError(f"trailing text after tree: {line[pos:]!r}")
    if not isinstance(node, ChunkNode):
        raise TaggerError("tree must have a labeled root")
    return node


def load_bracketed(path: str | Path) -> list[ChunkNode]:
    trees = []
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not raw.strip():
            continue
        try:
            trees.append(parse_bracketed(raw.strip()))
        except TaggerError as e:
            raise TaggerError(f"{path}:{lineno}: {e}") from None
    return trees


_DEFAULT_MODEL: TaggerModel | None = None


def default_model() -> TaggerModel:
    """The pinned tagger model shipped with the package."""
    global _DEFAULT_MODEL
    if _DEFAULT_MODEL is None:
        _DEFAULT_MODEL = TaggerModel.load(_RESOURCE_DIR / "tagger_model.json")
    return _DEFAULT_MODEL
