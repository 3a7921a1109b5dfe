import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import damerau_levenshtein, spell_correct_scan, stem_reference
from tagrec.model import Corpus, Provenance
from tagrec.preprocess import (
    TURKISH_ALPHABET,
    PreprocessOptions,
    SuffixTable,
    default_suffix_table,
    generate_edits1,
    load_corpus,
    load_suffix_table,
    normalize_url,
    preprocess_dataset,
    spell_correct,
    stem,
    turkish_lowercase,
)
from tagrec.tsv import InputError

ALPHABET = "".join(TURKISH_ALPHABET)

# |edits1("ev")| from enumerating every string of length 1-3 over the alphabet
# and keeping those at Damerau-Levenshtein distance 1.
EV_EDIT_COUNT = 144


def test_alphabet():
    assert len(TURKISH_ALPHABET) == 29 == len(set(TURKISH_ALPHABET))
    assert not set("qwx") & set(TURKISH_ALPHABET)


def test_edits1_contains_each_kind():
    edits = generate_edits1("ev")
    assert {"dev", "e", "ve", "ez"} <= edits
    assert "ev" not in edits


def test_edits1_count_frozen():
    assert len(generate_edits1("ev")) == EV_EDIT_COUNT


def test_edits1_matches_enumeration_oracle():
    brute = {
        "".join(p)
        for n in (1, 2, 3)
        for p in itertools.product(ALPHABET, repeat=n)
        if damerau_levenshtein("ev", "".join(p)) == 1
    }
    assert generate_edits1("ev") == brute


def test_edits1_repeated_letters():
    edits = generate_edits1("aa")
    assert "aa" not in edits
    assert all(damerau_levenshtein("aa", e) == 1 for e in edits)


def test_edits1_rejects_empty():
    with pytest.raises(ValueError):
        generate_edits1("")


@given(st.text(ALPHABET, min_size=1, max_size=6))
@settings(max_examples=60)
def test_every_edit_at_distance_one(word):
    assert all(damerau_levenshtein(word, e) == 1 for e in generate_edits1(word))


def test_spell_correct_examples():
    corpus = Corpus({"kitap": 10, "ev": 3})
    assert spell_correct("kitap", corpus) == ("kitap", False)
    assert spell_correct("kitp", corpus) == ("kitap", True)
    assert spell_correct("xqzw", corpus) == ("xqzw", False)


def test_spell_correct_prefers_frequency_then_turkish_order():
    assert spell_correct("kal", Corpus({"kel": 5, "kul": 9})) == ("kul", True)
    # equal frequency: c < ç in Turkish order, but ç > d in code points
    assert spell_correct("xam", Corpus({"çam": 4, "dam": 4})) == ("çam", True)
    assert spell_correct("ıxık", Corpus({"ışık": 1, "ıtık": 1})) == ("ışık", True)


def test_spell_correct_agrees_with_corpus_scan(rng):
    words = ["kitap", "kalem", "masa", "defter", "okul", "ders", "ev", "el", "dil", "çay", "şiir", "ağaç"]
    counts = {w: rng.randint(1, 5) for w in words}
    corpus = Corpus(counts)
    for w in words:
        for _ in range(10):
            i = rng.randrange(len(w))
            typo = w[:i] + rng.choice(ALPHABET) + w[i + 1:]
            assert spell_correct(typo, corpus) == spell_correct_scan(typo, counts)


TABLE = default_suffix_table()


def test_default_table_order():
    sufs = TABLE.suffixes
    assert sufs == tuple(sorted(sufs, key=lambda s: (-len(s), s)))
    assert {"lar", "ler", "de", "da", "den", "dan", "si", "sü", "ı"} <= set(sufs)
    assert TABLE.min_stem_length == 2


@pytest.mark.parametrize(
    "tag, expected",
    [("kitaplar", "kitap"), ("evler", "ev"), ("lar", "lar"), ("evlerde", "ev"), ("su", "su")],
)
def test_stem_examples(tag, expected):
    assert stem(tag, TABLE, Corpus()) == expected


def test_stem_plural_only_table():
    table = SuffixTable(("lar", "ler"))
    assert stem("kitaplar", table) == "kitap"
    assert stem("oyun", table) == "oyun"


def test_stem_corpus_veto():
    # "araba" is a word and "arab" is not, so the -a strip is vetoed
    corpus = Corpus(["araba"])
    assert stem("araba", TABLE, corpus) == "araba"
    assert stem("araba", TABLE, Corpus()) == "arab"
    # plural of a corpus word is not itself a word, so stripping proceeds
    assert stem("arabalar", TABLE, corpus) == "araba"


def test_stem_veto_falls_through_to_shorter_suffix():
    table = SuffixTable(("si", "i"))
    corpus = Corpus(["kedisi", "kedis"])
    # -si would leave "kedi" (not a word) so it is vetoed; -i leaves "kedis" (a word)
    assert stem("kedisi", table, corpus) == "kedis"


@given(st.text(ALPHABET, min_size=1, max_size=12))
def test_stem_length_guard(word):
    out = stem(word, TABLE)
    assert out
    assert len(out) >= min(len(word), TABLE.min_stem_length)
    assert word.startswith(out)


@given(st.text(ALPHABET, min_size=1, max_size=10), st.sets(st.text(ALPHABET, min_size=1, max_size=8), max_size=8))
@settings(max_examples=60)
def test_stem_matches_reference(word, corpus_words):
    counts = {w: 1 for w in corpus_words}
    assert stem(word, TABLE, Corpus(counts)) == stem_reference(word, TABLE.suffixes, counts)


def test_suffix_table_validation():
    with pytest.raises(ValueError):
        SuffixTable(("lar", " "))
    assert SuffixTable(("LAR", "e", "lar")).suffixes == ("lar", "e")


def test_load_suffix_table(tmp_path):
    p = tmp_path / "suf.txt"
    p.write_text("# comment\nler\n\nlar  # plural\nde\n", encoding="utf-8")
    assert load_suffix_table(p).suffixes == ("lar", "ler", "de")


def test_load_corpus(tmp_path):
    p = tmp_path / "c.tsv"
    p.write_text("kitap\t12\nEv\n\nev\t2\n", encoding="utf-8")
    c = load_corpus(p)
    assert c.frequency("kitap") == 12 and c.frequency("ev") == 3


@pytest.mark.parametrize("body", ["kitap\tx\n", "kitap\t0\n", "a\tb\tc\n"])
def test_load_corpus_errors_name_the_line(tmp_path, body):
    p = tmp_path / "c.tsv"
    p.write_text("ev\n" + body, encoding="utf-8")
    with pytest.raises(InputError) as exc:
        load_corpus(p)
    assert exc.value.lineno == 2 and str(p) in str(exc.value)


CORPUS = Corpus({"kitap": 50, "haber": 40, "spor": 30, "müzik": 20, "araba": 5})


def test_preprocess_composition_example():
    d, report = preprocess_dataset([("u1", "HTTP://WWW.A.COM/", "KİTAPLAR")], CORPUS)
    assert d.keys() == {("u1", "a.com", "kitap")}
    assert d.get("u1", "a.com", "kitap").provenance is Provenance.STEMMED
    assert (report.lowercased, report.stemmed, report.urls_rewritten) == (1, 1, 1)


def test_preprocess_url_forms_collapse():
    rows = [("u1", "https://a.com/", "haber"), ("u1", "a.com", "haber")]
    d, report = preprocess_dataset(rows, CORPUS)
    assert len(d) == 1 and report.duplicates_collapsed == 1


def test_preprocess_flags():
    rows = [("u1", "a.com", "habr"), ("u1", "a.com", "kitaplar")]
    d, _ = preprocess_dataset(rows, CORPUS, options=PreprocessOptions(spellcheck=False, stemming=False))
    assert d.tags() == {"habr", "kitaplar"}
    d, report = preprocess_dataset(rows, CORPUS)
    assert d.tags() == {"haber", "kitap"}
    assert report.spell_corrected == 1 and report.stemmed == 1
    assert d.get("u1", "a.com", "haber").provenance is Provenance.SPELL_CORRECTED


def test_preprocess_collects_malformed_rows():
    rows = [("u1", "a.com", "haber"), ("u2", "", "spor"), ("u3", "b.com", "  "), ("u4", "c.com"), ("", "d.com", "x")]
    d, report = preprocess_dataset(rows, CORPUS)
    assert len(d) == 1
    assert [idx for idx, _ in report.malformed] == [2, 3, 4, 5]
    assert report.rows_accepted == 1


def test_preprocess_provenance_independent_of_order():
    # "haberler" (stemmed) and "haber" (original) collapse onto one triple
    rows = [("u1", "a.com", "haberler"), ("u1", "a.com", "haber")]
    for order in (rows, rows[::-1]):
        d, _ = preprocess_dataset(order, CORPUS)
        assert d.get("u1", "a.com", "haber").provenance is Provenance.ORIGINAL


def _noisy_rows(seed, n=50):
    rng = random.Random(seed)
    words = list(CORPUS)
    hosts = ["a.com", "b.org", "c.com.tr", "d.net/blog"]
    forms = ["{h}", "http://{h}/", "https://www.{h}", "WWW.{H}/index.html", "{h}#x"]
    rows = []
    for _ in range(n):
        w = rng.choice(words)
        r = rng.random()
        if r < 0.2:
            i = rng.randrange(len(w))
            w = w[:i] + w[i + 1:]
        elif r < 0.4:
            w = w + rng.choice(["lar", "ler", "de", "da"])
        if rng.random() < 0.3:
            w = w.upper()
        h = rng.choice(hosts)
        rows.append((rng.choice(["u1", "u2", "u3"]), rng.choice(forms).format(h=h, H=h.upper()), w))
    return rows


def test_preprocess_report_matches_row_by_row_script():
    rows = _noisy_rows(7)
    lowered = corrected = stemmed = rewritten = 0
    keys = set()
    for user, url, tag in rows:
        low = turkish_lowercase(tag)
        lowered += low != tag
        word, fixed = spell_correct(low, CORPUS)
        corrected += fixed
        s = stem(word, TABLE, CORPUS)
        stemmed += s != word
        site = normalize_url(url)
        rewritten += site != url
        keys.add((user, site, s))
    d, report = preprocess_dataset(rows, CORPUS)
    assert d.keys() == keys
    assert report.rows_read == 50
    assert report.lowercased == lowered
    assert report.spell_corrected == corrected
    assert report.stemmed == stemmed
    assert report.urls_rewritten == rewritten
    assert report.duplicates_collapsed == 50 - len(keys)
    assert corrected and stemmed and lowered and report.duplicates_collapsed


@given(st.randoms())
@settings(max_examples=25)
def test_preprocess_deterministic_under_shuffle(rnd):
    rows = _noisy_rows(11, 40)
    shuffled = rows[:]
    rnd.shuffle(shuffled)
    d1, _ = preprocess_dataset(rows, CORPUS)
    d2, _ = preprocess_dataset(shuffled, CORPUS)
    assert [(t.key, t.provenance) for t in d1] == [(t.key, t.provenance) for t in d2]
