"""Cleaning raw bookmark rows: casefolding, spell correction, URL
normalization and suffix-stripping stemming."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable, Sequence

from tagrec.model import Corpus, Dataset, Provenance, Triple, check_tag
from tagrec.normalize import (
    TURKISH_ALPHABET,
    normalize_url,
    turkish_lowercase,
    turkish_sort_key,
)
from tagrec.tsv import InputError

__all__ = [
    "TURKISH_ALPHABET",
    "PreprocessOptions",
    "PreprocessReport",
    "SuffixTable",
    "default_suffix_table",
    "generate_edits1",
    "load_corpus",
    "load_suffix_table",
    "normalize_url",
    "preprocess_dataset",
    "spell_correct",
    "stem",
    "turkish_lowercase",
]

log = logging.getLogger(__name__)


def generate_edits1(word: str, alphabet: Sequence[str] = TURKISH_ALPHABET) -> set[str]:
    """All strings one insertion, deletion, substitution or adjacent
    transposition away from *word*.

    Substitutions by the same letter and swaps of two equal letters are
    left out, so *word* itself never appears in the result.
    """
    if not word:
        raise ValueError("cannot generate edits of an empty word")
    splits = [(word[:i], word[i:]) for i in range(len(word) + 1)]
    deletes = [a + b[1:] for a, b in splits if b]
    transposes = [a + b[1] + b[0] + b[2:] for a, b in splits if len(b) > 1 and b[0] != b[1]]
    replaces = [a + c + b[1:] for a, b in splits if b for c in alphabet if c != b[0]]
    inserts = [a + c + b for a, b in splits for c in alphabet]
    edits = set(deletes + transposes + replaces + inserts)
    edits.discard(word)
    return edits


def spell_correct(word: str, corpus: Corpus, alphabet: Sequence[str] = TURKISH_ALPHABET) -> tuple[str, bool]:
    """Return ``(word, corrected)``.

    Words already in the corpus are left alone. Otherwise the one-edit
    neighbour with the highest corpus frequency wins, ties going to the
    first in Turkish alphabetical order.
    """
    if not word:
        raise ValueError("cannot spell-correct an empty word")
    if word in corpus:
        return word, False
    candidates = [w for w in generate_edits1(word, alphabet) if w in corpus]
    if not candidates:
        return word, False
    best = min(candidates, key=lambda w: (-corpus.frequency(w), turkish_sort_key(w)))
    return best, True


@dataclass(frozen=True)
class SuffixTable:
    suffixes: tuple[str, ...]
    min_stem_length: int = 2

    def __post_init__(self):
        cleaned = set()
        for s in self.suffixes:
            s = turkish_lowercase(s.strip())
            if not s:
                raise ValueError("empty suffix in suffix table")
            cleaned.add(s)
        if self.min_stem_length < 1:
            raise ValueError("min_stem_length must be >= 1")
        # longest first, then lexicographic
        object.__setattr__(self, "suffixes", tuple(sorted(cleaned, key=lambda s: (-len(s), s))))


def load_suffix_table(path, min_stem_length: int = 2) -> SuffixTable:
    """Read one suffix per line; ``#`` starts a comment."""
    suffixes = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                suffixes.append(line)
    return SuffixTable(tuple(suffixes), min_stem_length)


def default_suffix_table() -> SuffixTable:
    ref = resources.files("tagrec").joinpath("data/suffixes.txt")
    with resources.as_file(ref) as path:
        return load_suffix_table(path)


def load_corpus(path) -> Corpus:
    """Read ``word`` or ``word<TAB>frequency`` lines."""
    counts: dict[str, int] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\r\n")
            if not line.strip():
                continue
            parts = line.split("\t")
            word = turkish_lowercase(parts[0].strip())
            if not word or len(parts) > 2:
                raise InputError(path, lineno, "expected 'word' or 'word<TAB>frequency'")
            freq = 1
            if len(parts) == 2:
                try:
                    freq = int(parts[1])
                except ValueError:
                    raise InputError(path, lineno, f"bad frequency {parts[1]!r}") from None
                if freq < 1:
                    raise InputError(path, lineno, "frequency must be >= 1")
            counts[word] = counts.get(word, 0) + freq
    return Corpus(counts)


def stem(tag: str, table: SuffixTable, corpus: Corpus | None = None) -> str:
    """Strip suffixes longest-first until none applies.

    A strip is skipped when it would leave fewer than ``min_stem_length``
    letters, or when it would turn a corpus word into a non-word.
    """
    corpus = corpus if corpus is not None else Corpus()
    word = tag
    changed = True
    while changed:
        changed = False
        for suffix in table.suffixes:
            if not word.endswith(suffix) or len(word) - len(suffix) < table.min_stem_length:
                continue
            candidate = word[: -len(suffix)]
            if word in corpus and candidate not in corpus:
                continue
            word = candidate
            changed = True
            break
    return word


@dataclass
class PreprocessOptions:
    spellcheck: bool = True
    stemming: bool = True


@dataclass
class PreprocessReport:
    rows_read: int = 0
    lowercased: int = 0
    spell_corrected: int = 0
    stemmed: int = 0
    urls_rewritten: int = 0
    duplicates_collapsed: int = 0
    malformed: list[tuple[int, str]] = field(default_factory=list)

    @property
    def rows_accepted(self) -> int:
        return self.rows_read - len(self.malformed)

    def lines(self) -> list[str]:
        out = [
            f"rows_read: {self.rows_read}",
            f"rows_accepted: {self.rows_accepted}",
            f"rows_malformed: {len(self.malformed)}",
            f"tags_lowercased: {self.lowercased}",
            f"tags_spell_corrected: {self.spell_corrected}",
            f"tags_stemmed: {self.stemmed}",
            f"urls_rewritten: {self.urls_rewritten}",
            f"duplicates_collapsed: {self.duplicates_collapsed}",
        ]
        out.extend(f"malformed_row {idx}: {reason}" for idx, reason in self.malformed)
        return out


_PROVENANCE_RANK = {p: i for i, p in enumerate(Provenance)}


def preprocess_dataset(
    raw: Iterable[tuple[str, str, str]],
    corpus: Corpus | None = None,
    alphabet: Sequence[str] = TURKISH_ALPHABET,
    table: SuffixTable | None = None,
    options: PreprocessOptions | None = None,
) -> tuple[Dataset, PreprocessReport]:
    """Turn raw ``(user, url, tag)`` rows into a clean :class:`Dataset`.

    Bad rows are recorded in the report (by 1-based row number) and skipped.
    The result does not depend on row order: when several rows collapse
    onto one triple, the least-transformed provenance is kept.
    """
    options = options or PreprocessOptions()
    corpus = corpus if corpus is not None else Corpus()
    if options.stemming and table is None:
        table = default_suffix_table()
    if options.spellcheck and not len(corpus):
        log.warning("spell checking against an empty corpus changes nothing")

    report = PreprocessReport()
    cleaned: list[Triple] = []
    for idx, row in enumerate(raw, 1):
        report.rows_read += 1
        try:
            user, url, tag = row
            user = user.strip()
            tag = tag.strip()
            if not tag:
                raise ValueError("empty tag")
            lowered = turkish_lowercase(tag)
            word, provenance = lowered, Provenance.ORIGINAL
            corrected = False
            if options.spellcheck:
                word, corrected = spell_correct(word, corpus, alphabet)
                if corrected:
                    provenance = Provenance.SPELL_CORRECTED
            if options.stemming:
                stemmed = stem(word, table, corpus)
                if stemmed != word:
                    word, provenance = stemmed, Provenance.STEMMED
            site = normalize_url(url)
            triple = Triple(user, site, check_tag(word), provenance)
        except (ValueError, TypeError) as exc:
            report.malformed.append((idx, str(exc)))
            continue
        report.lowercased += lowered != tag
        report.spell_corrected += corrected
        report.stemmed += provenance is Provenance.STEMMED
        report.urls_rewritten += site != url
        cleaned.append(triple)

    cleaned.sort(key=lambda t: (t.key, _PROVENANCE_RANK[t.provenance]))
    dataset = Dataset(cleaned)
    report.duplicates_collapsed = len(cleaned) - len(dataset)
    return dataset, report
