"""Seeded generator for the bundled synthetic bookmarking fixture.

25 users bookmark 122 distinct websites with 366 raw tag rows. Rows carry
realistic noise (Turkish uppercase, one-letter typos, inflected forms,
URL spelling variants, a few exact duplicates) and the thesaurus plants
cross-user synonym pairs so expansion has something to do.

Regenerate the checked-in files with ``python scripts/make_fixture.py``.
"""

from __future__ import annotations

import random
from importlib import resources
from pathlib import Path

from tagrec.model import Corpus
from tagrec.normalize import normalize_url
from tagrec.preprocess import default_suffix_table, spell_correct, stem
from tagrec.tsv import write_lines

SEED = 20130101
N_USERS = 25
N_SITES = 122
N_ROWS = 366
N_SHARED = 12
N_DUPLICATES = 4

TOPICS = {
    "haber": ["haber", "havadis", "gündem", "gazete", "siyaset", "ekonomi"],
    "spor": ["spor", "futbol", "basketbol", "maç", "lig", "takım"],
    "muzik": ["müzik", "musiki", "şarkı", "konser", "albüm", "radyo"],
    "sinema": ["film", "sinema", "dizi", "oyuncu", "yönetmen", "fragman"],
    "yemek": ["yemek", "tarif", "mutfak", "tatlı", "lezzet", "restoran"],
    "teknoloji": ["teknoloji", "yazılım", "bilgisayar", "donanım", "internet", "program"],
    "egitim": ["eğitim", "okul", "mektep", "ders", "sınav", "üniversite"],
    "seyahat": ["seyahat", "yolculuk", "tatil", "otel", "gezi", "harita"],
    "saglik": ["sağlık", "sıhhat", "doktor", "hekim", "ilaç", "hastane"],
    "alisveris": ["alışveriş", "indirim", "mağaza", "kampanya", "fiyat", "ürün"],
    "edebiyat": ["kitap", "edebiyat", "roman", "şiir", "yazar", "sözlük", "lügat"],
    "oyun": ["oyun", "eğlence", "bulmaca", "konsol"],
}

SYNONYM_PAIRS = [
    ("haber", "havadis"),
    ("müzik", "musiki"),
    ("film", "sinema"),
    ("okul", "mektep"),
    ("seyahat", "yolculuk"),
    ("sağlık", "sıhhat"),
    ("doktor", "hekim"),
    ("sözlük", "lügat"),
    ("oyun", "eğlence"),
]

# Entries whose synonyms never occur as tags.
DISTRACTORS = {
    "kitap": ["eser", "cilt"],
    "araç": ["vasıta"],
    "ev": ["konut", "mesken"],
    "bilgisayar": ["kompüter"],
    "fiyat": ["eder", "paha"],
}

# Extra corpus words that are never used as tags.
FILLER = ["araç", "ev", "eser", "konut", "kalem", "masa", "kapı", "deniz", "güneş", "yol"]

URL_FORMS = [
    "{h}",
    "http://{h}",
    "https://{h}/",
    "http://www.{h}/",
    "WWW.{H}",
    "https://www.{h}/index.html",
    "{h}/#top",
    "HTTP://{H}/",
]

BACK_VOWELS = set("aıou")
FRONT_VOWELS = set("eiöü")


def turkish_upper(s: str) -> str:
    return s.replace("i", "İ").replace("ı", "I").upper()


def _plural(word: str) -> str:
    for c in reversed(word):
        if c in BACK_VOWELS:
            return word + "lar"
        if c in FRONT_VOWELS:
            return word + "ler"
    return word + "ler"


def _typo(word: str, rng: random.Random) -> str:
    letters = "abcçdefgğhıijklmnoöprsştuüvyz"
    i = rng.randrange(len(word))
    kind = rng.choice(["delete", "replace", "insert", "transpose"])
    if kind == "delete" and len(word) > 3:
        return word[:i] + word[i + 1:]
    if kind == "transpose" and i < len(word) - 1:
        return word[:i] + word[i + 1] + word[i] + word[i + 2:]
    if kind == "insert":
        return word[:i] + rng.choice(letters) + word[i:]
    return word[:i] + rng.choice(letters) + word[i + 1:]


class _Cleaner:
    def __init__(self, corpus: Corpus):
        self.corpus = corpus
        self.table = default_suffix_table()

    def __call__(self, tag: str) -> str:
        word, _ = spell_correct(tag, self.corpus)
        return stem(word, self.table, self.corpus)


def generate(seed: int = SEED) -> dict[str, list[str]]:
    """Return the fixture as ``{filename: lines}``."""
    rng = random.Random(seed)
    vocab = sorted({w for words in TOPICS.values() for w in words})

    corpus_counts = {w: rng.randint(5, 500) for w in vocab}
    for w in FILLER:
        corpus_counts.setdefault(w, rng.randint(5, 500))
    corpus = Corpus(corpus_counts)
    clean = _Cleaner(corpus)
    for w in vocab:
        assert clean(w) == w, f"vocabulary word {w!r} is not stable under cleaning"

    topics = sorted(TOPICS)
    users = [f"u{i:02d}" for i in range(1, N_USERS + 1)]
    interests = {u: rng.sample(topics, 2) for u in users}

    # 122 distinct sites, round-robin over users, then a few shared bookmarks
    sites = []
    counter = {t: 0 for t in topics}
    bookmarks = []
    for k in range(N_SITES):
        user = users[k % N_USERS]
        topic = rng.choice(interests[user])
        counter[topic] += 1
        host = f"{topic}{counter[topic]:02d}.com.tr"
        sites.append((host, topic))
        bookmarks.append((user, host, topic))
    for _ in range(N_SHARED):
        user = rng.choice(users)
        owned = {h for u, h, _ in bookmarks if u == user}
        pool = [(h, t) for h, t in sites if t in interests[user] and h not in owned]
        if not pool:
            pool = [(h, t) for h, t in sites if h not in owned]
        host, topic = rng.choice(pool)
        bookmarks.append((user, host, topic))

    # distribute tag rows: 2 or 3 tags per bookmark, N_ROWS - N_DUPLICATES in total
    n_tags = N_ROWS - N_DUPLICATES
    per = [2] * len(bookmarks)
    for i in rng.sample(range(len(bookmarks)), n_tags - 2 * len(bookmarks)):
        per[i] = 3

    rows = []
    for (user, host, topic), k in zip(bookmarks, per):
        for base in rng.sample(TOPICS[topic], k):
            rows.append((user, _url_form(host, rng), _noisy(base, rng, clean)))
    for user, url, tag in rng.sample(rows, N_DUPLICATES):
        host = normalize_url(url).split("/", 1)[0]
        rows.append((user, _url_form(host, rng), tag))
    rng.shuffle(rows)
    assert len(rows) == N_ROWS

    synonyms: dict[str, set[str]] = {}
    for a, b in SYNONYM_PAIRS:
        synonyms.setdefault(a, set()).add(b)
        synonyms.setdefault(b, set()).add(a)
    for w, syns in DISTRACTORS.items():
        synonyms.setdefault(w, set()).update(syns)

    return {
        "triples.tsv": [f"{u}\t{url}\t{tag}" for u, url, tag in rows],
        "corpus.tsv": [f"{w}\t{corpus_counts[w]}" for w in sorted(corpus_counts)],
        "thesaurus.tsv": [f"{w}\t{','.join(sorted(s))}" for w, s in sorted(synonyms.items())],
    }


def _url_form(host: str, rng: random.Random) -> str:
    return rng.choice(URL_FORMS).format(h=host, H=host.upper())


def _noisy(base: str, rng: random.Random, clean) -> str:
    r = rng.random()
    if r < 0.08:
        for _ in range(10):
            typo = _typo(base, rng)
            if typo != base and clean(typo) == base:
                return typo
    elif r < 0.18:
        inflected = _plural(base)
        if clean(inflected) == base:
            base = inflected
    r = rng.random()
    if r < 0.15:
        return turkish_upper(base)
    if r < 0.25:
        return turkish_upper(base[0]) + base[1:]
    return base


def write(out_dir, seed: int = SEED) -> list[Path]:
    out_dir = Path(out_dir)
    paths = []
    for name, lines in generate(seed).items():
        write_lines(out_dir / name, lines)
        paths.append(out_dir / name)
    return paths


def bundled_path(name: str) -> Path:
    """Path of a checked-in fixture file inside the installed package."""
    return Path(str(resources.files("tagrec").joinpath("data/fixture", name)))
