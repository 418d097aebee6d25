"""Regenerate the shipped tagger training corpus and pinned model.

The corpus is template-generated news-register English with gold tags
(token<TAB>tag TSV, blank line between sentences). The pinned model is the
averaged perceptron trained on it with a fixed seed, so feature extraction
stays reproducible across installs.
"""

import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from newsstyle.postag import TaggedSentence, load_pretagged, train_tagger  # noqa: E402

POOLS = {
    "NN": """story report article election campaign government city state country
        president official police court law bill budget tax economy market
        company industry job worker leader minister party vote debate plan
        policy program issue problem question answer statement interview
        decision ruling order proposal meeting visit event speech protest
        attack threat crisis deal agreement war health care hospital school
        student teacher child family house street road building office
        store hotel airport station car truck plane driver accident fire
        emergency storm weather climate energy water food dog cat year
        month week day morning night time money bank fund debt profit cost
        price growth change support effort result effect reason goal
        method process level amount size area region center week group
        member nation border security system service product sale customer
        phone computer website email newspaper television radio""".split(),
    "NNS": """stories reports articles elections campaigns governments cities
        states countries officials laws bills taxes markets companies jobs
        workers leaders parties votes debates plans policies programs
        issues problems questions statements decisions orders proposals
        meetings events speeches protests attacks threats deals agreements
        hospitals schools students teachers children families houses
        streets roads buildings offices stores cars trucks drivers fires
        storms years months weeks days nights funds costs prices changes
        efforts results reasons goals methods levels amounts areas regions
        groups members nations borders systems services products sales
        customers phones computers websites emails voters candidates""".split(),
    "NNP": """Washington London Paris Berlin Moscow Beijing Tokyo Ottawa Canberra
        America Britain France Germany Russia China Japan Canada Australia
        Texas Florida Ohio Virginia Georgia Oregon Boston Chicago Denver
        Seattle Atlanta Houston Dallas Phoenix Miami Congress Senate
        Parliament Pentagon Reuters Clinton Trump Obama Johnson Smith
        Brown Davis Wilson Miller Taylor Anderson Thomas Jackson White
        Harris Martin Thompson Garcia Martinez Robinson Lewis Walker
        Hall Allen Young King Wright Scott Green Baker Adams Nelson
        Carter Mitchell Roberts Turner Phillips Campbell Parker Evans
        Edwards Collins Stewart Morris Rogers Reed Cook Morgan Bell
        Murphy Bailey Rivera Cooper Richardson Cox Howard Ward Hillary
        Monday Tuesday Wednesday Thursday Friday Saturday Sunday January
        February March April June July August September October November
        December Europe Asia Africa Microsoft Google Apple Amazon Boeing
        Ford Toyota Nissan Pennsylvania Michigan Wisconsin Minnesota
        Colorado Nevada Arizona Alabama Tennessee Kentucky Indiana""".split(),
    "VBD": """said told announced reported claimed stated argued denied admitted
        confirmed revealed declared warned promised refused agreed decided
        voted passed signed vetoed proposed rejected approved launched
        started ended won lost gained dropped rose fell increased
        decreased visited met left arrived returned called asked answered
        showed found gave took made went came saw ran walked spoke wrote
        read built bought sold paid raised cut hit struck blew accused
        blamed charged arrested investigated testified appeared happened
        occurred continued stopped began finished helped hurt killed
        died survived escaped attacked defended supported opposed""".split(),
    "VBZ": """says tells announces reports claims states argues denies admits
        confirms reveals declares warns promises refuses agrees decides
        votes passes signs proposes rejects approves launches starts ends
        wins loses gains drops rises falls increases decreases visits
        meets leaves arrives returns calls asks answers shows finds gives
        takes makes goes comes sees runs walks speaks writes reads builds
        buys sells pays raises cuts hits blows accuses blames charges
        arrests continues stops begins finishes helps hurts supports
        opposes believes wants needs plans expects hopes knows thinks""".split(),
    "VBP": """say tell announce report claim state argue deny admit confirm
        reveal declare warn promise refuse agree decide vote pass sign
        propose reject approve launch start end win lose gain drop rise
        fall increase decrease visit meet leave arrive return call ask
        answer show find give take make go come see run walk speak write
        read build buy sell pay raise cut hit blow accuse blame charge
        arrest continue stop begin finish help hurt support oppose
        believe want need plan expect hope know think""".split(),
    "VB": """say tell announce report claim argue deny admit confirm reveal
        declare warn promise refuse agree decide vote pass sign propose
        reject approve launch start end win lose gain drop rise fall
        increase decrease visit meet leave arrive return call ask answer
        show find give take make go come see run walk speak write read
        build buy sell pay raise cut replace repeal reform fund block
        delay review consider discuss address resolve handle prevent""".split(),
    "VBG": """saying telling announcing reporting claiming arguing denying
        confirming revealing warning promising refusing agreeing deciding
        voting passing signing proposing rejecting approving launching
        starting ending winning losing gaining dropping rising falling
        increasing decreasing visiting meeting leaving arriving returning
        calling asking showing finding giving taking making going coming
        seeing running walking speaking writing reading building buying
        selling paying raising cutting laundering blowing breaking""".split(),
    "VBN": """said told announced reported claimed argued denied admitted
        confirmed revealed declared warned promised refused agreed decided
        voted passed signed proposed rejected approved launched started
        ended won lost gained dropped risen fallen increased decreased
        visited met left arrived returned called asked answered shown
        found given taken made gone come seen run spoken written read
        built bought sold paid raised cut replaced repealed reformed
        blocked delayed reviewed considered discussed addressed broken""".split(),
    "JJ": """new old big small large long short high low good bad great poor
        major minor local national federal political economic public
        private social legal illegal military foreign domestic recent
        current former late early modern young strong weak rich serious
        simple difficult easy hard possible impossible likely unlikely
        important special certain clear dark bright heavy light quick
        slow full empty open closed free safe dangerous popular famous
        common rare real fake false true red blue green white black
        republican democratic presidential preexisting financial medical
        environmental industrial commercial residential controversial""".split(),
    "RB": """quickly slowly carefully quietly loudly clearly badly well
        recently finally eventually suddenly immediately directly
        publicly privately officially reportedly allegedly repeatedly
        strongly sharply slightly significantly largely mostly partly
        fully nearly hardly barely really truly actually certainly
        probably possibly apparently seriously successfully angrily""".split(),
    "UH": "oh ah wow hey ouch oops hmm yeah alas huh".split(),
    "CD": "35 75 100 2016 36 233 4000 50 12 7 2.5 1,000 90 45 60 15 20 25 30 80".split(),
}

TEMPLATES = [
    "DT NN VBD IN DT NN .",
    "DT JJ NN VBZ DT JJ NN .",
    "NNP VBD IN NNP .",
    "NNP NNP VBD DT JJ NN .",
    "PRP VBP DT NN IN DT NN .",
    "DT NN IN DT NN VBD JJ .",
    "NNP VBZ IN DT NN IN NNP .",
    "CD NNS VBD IN DT NN .",
    "DT NNS VBP RB JJ .",
    "PRP VBD DT NNS IN NNP .",
    "NNP , DT JJ NN , VBD DT NN .",
    "DT NN VBZ VBG DT NNS .",
    "NNS IN NNP VBP DT NN .",
    "DT JJ NNS VBD RB .",
    "NNP VBD IN PRP VBD DT NN .",
    "IN DT NN , DT NNS VBD .",
    "DT NN MD VB DT NN .",
    "PRP MD RB VB DT JJ NNS .",
    "NNP NNP VBZ DT NN IN DT NNS .",
    "DT NN VBD CD NNS .",
    "NNP VBD IN DT NN VBD JJ .",
    "WP VBD DT NN ?",
    "DT NN VBD : PRP VBD DT NNS .",
    "UH , DT NN VBZ JJ !",
    "NNP VBZ RB VBG DT NN .",
    "DT NNS VBP VBN IN DT NN .",
    "PRP$ NN VBD DT JJ NN IN NNP .",
    "DT JJ JJ NN VBD IN CD NNS .",
    "NNP CC NNP VBD DT NN .",
    "DT NN IN NNS VBZ JJ CC JJ .",
    "EX VBP CD NNS IN DT NN .",
    "VBG DT NN , NNP VBD DT NNS .",
]

CLOSED = {
    "DT": "the the the a a an this that these those".split(),
    "IN": "of in on at by for with about against between into through during before after from".split(),
    "PRP": "he she they we it i you".split(),
    "PRP$": "his her their our its my your".split(),
    "MD": "will would could should may might must can".split(),
    "CC": "and but or".split(),
    "WP": "who what".split(),
    "EX": ["there"],
    "TO": ["to"],
    ".": ["."],
    ",": [","],
    ":": [":"],
    "?": ["?"],
    "!": ["!"],
}

PUNCT_TAGS = {".", ",", ":", "?", "!"}


def generate(n_sentences: int, seed: int) -> list[str]:
    rng = random.Random(seed)
    lines = []
    for _ in range(n_sentences):
        template = rng.choice(TEMPLATES).split()
        first = True
        for slot in template:
            if slot in PUNCT_TAGS:
                word, t = rng.choice(CLOSED[slot]), "PUNCT"
            elif slot in CLOSED:
                word, t = rng.choice(CLOSED[slot]), slot
            else:
                word, t = rng.choice(POOLS[slot]), slot
            if first and slot not in PUNCT_TAGS:
                if t not in ("NNP", "CD") and word.islower():
                    word = word.capitalize()
                first = False
            lines.append(f"{word}\t{t}")
        lines.append("")
    return lines


def main() -> None:
    res = Path(__file__).resolve().parents[1] / "src/newsstyle/resources"
    corpus_path = res / "tagged_corpus.tsv"
    lines = generate(n_sentences=1600, seed=2016)
    corpus_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    sentences = load_pretagged(corpus_path)
    tokens = sum(len(s.tokens) for s in sentences)
    print(f"corpus: {len(sentences)} sentences, {tokens} tokens")

    model = train_tagger(sentences, epochs=5, seed=7)
    model.save(res / "tagger_model.json")
    print(f"model: {len(model.weights)} features, vocab {len(model.vocab)}")


if __name__ == "__main__":
    main()
