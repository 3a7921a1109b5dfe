"""Domain types: triples, the deduplicated dataset, lexicon and corpus."""

from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from tagrec.normalize import normalize_url, turkish_lowercase

_FORBIDDEN = ("\t", "\n", "\r")


class Provenance(enum.Enum):
    ORIGINAL = "original"
    SPELL_CORRECTED = "spell_corrected"
    STEMMED = "stemmed"
    SYNONYM_ADDED = "synonym_added"


def check_tag(value: str) -> str:
    if not isinstance(value, str) or not value.strip():
        raise ValueError(f"empty tag: {value!r}")
    if turkish_lowercase(value) != value:
        raise ValueError(f"tag is not lowercase: {value!r}")
    if any(c in value for c in _FORBIDDEN):
        raise ValueError(f"tag contains a tab or newline: {value!r}")
    return value


def check_user(value: str) -> str:
    if not isinstance(value, str) or not value:
        raise ValueError("empty user id")
    if any(c in value for c in _FORBIDDEN):
        raise ValueError(f"user id contains a tab or newline: {value!r}")
    return value


def check_site(value: str) -> str:
    if not isinstance(value, str) or not value:
        raise ValueError("empty site")
    if any(c in value for c in _FORBIDDEN) or normalize_url(value) != value:
        raise ValueError(f"site is not a normalized URL: {value!r}")
    return value


@dataclass(frozen=True)
class Triple:
    """One ⟨user, site, tag⟩ assertion.

    Equality and hashing cover the identity fields only, so a synonym-added
    copy of an existing triple compares equal to the original.
    """

    user: str
    site: str
    tag: str
    provenance: Provenance = Provenance.ORIGINAL

    def __post_init__(self):
        check_user(self.user)
        check_site(self.site)
        check_tag(self.tag)

    @property
    def key(self) -> tuple[str, str, str]:
        return (self.user, self.site, self.tag)

    def __eq__(self, other):
        if not isinstance(other, Triple):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)


class Dataset:
    """Set of triples keyed on (user, site, tag), with counting indices.

    Instances are treated as immutable; :meth:`with_triple` and
    :meth:`with_triples` return new datasets. When a key is inserted twice
    the first triple (and its provenance) is kept.
    """

    def __init__(self, triples: Iterable[Triple] = ()):
        self._triples: dict[tuple[str, str, str], Triple] = {}
        for t in triples:
            if not isinstance(t, Triple):
                raise TypeError(f"expected Triple, got {type(t).__name__}")
            self._triples.setdefault(t.key, t)
        self._build_indices()

    def _build_indices(self):
        tags_of = defaultdict(set)
        sites_of = defaultdict(set)
        sites_with = defaultdict(set)
        users_on = defaultdict(set)
        tag_count = defaultdict(int)
        for user, site, tag in self._triples:
            tags_of[site].add(tag)
            sites_of[user].add(site)
            sites_with[tag].add(site)
            users_on[site, tag].add(user)
            tag_count[tag] += 1
        self._tags_of = {k: frozenset(v) for k, v in tags_of.items()}
        self._sites_of = {k: frozenset(v) for k, v in sites_of.items()}
        self._sites_with = {k: frozenset(v) for k, v in sites_with.items()}
        self._users_on = {k: frozenset(v) for k, v in users_on.items()}
        self._tag_count = dict(tag_count)

    def __len__(self):
        return len(self._triples)

    def __iter__(self) -> Iterator[Triple]:
        return iter(self.sorted_triples())

    def __contains__(self, item):
        if isinstance(item, Triple):
            return item.key in self._triples
        return item in self._triples

    def __eq__(self, other):
        if not isinstance(other, Dataset):
            return NotImplemented
        return self._triples.keys() == other._triples.keys()

    def __repr__(self):
        return f"Dataset({len(self)} triples, {len(self._tags_of)} sites)"

    @property
    def triples(self) -> frozenset[Triple]:
        return frozenset(self._triples.values())

    def keys(self) -> frozenset[tuple[str, str, str]]:
        return frozenset(self._triples)

    def get(self, user: str, site: str, tag: str) -> Triple | None:
        return self._triples.get((user, site, tag))

    def sorted_triples(self) -> list[Triple]:
        return [self._triples[k] for k in sorted(self._triples)]

    def with_triple(self, t: Triple) -> Dataset:
        return self.with_triples([t])

    def with_triples(self, triples: Iterable[Triple]) -> Dataset:
        new = list(self._triples.values())
        new.extend(triples)
        return Dataset(new)

    def users(self) -> frozenset[str]:
        return frozenset(self._sites_of)

    def websites(self) -> frozenset[str]:
        return frozenset(self._tags_of)

    def tags(self) -> frozenset[str]:
        return frozenset(self._sites_with)

    def tags_of(self, site: str) -> frozenset[str]:
        return self._tags_of.get(site, frozenset())

    def sites_of(self, user: str) -> frozenset[str]:
        return self._sites_of.get(user, frozenset())

    def sites_with_tag(self, tag: str) -> frozenset[str]:
        return self._sites_with.get(tag, frozenset())

    def users_on(self, site: str, tag: str) -> frozenset[str]:
        """Users who attached *tag* to *site*."""
        return self._users_on.get((site, tag), frozenset())

    def tag_occurrences(self, tag: str) -> int:
        """Number of triples carrying *tag*."""
        return self._tag_count.get(tag, 0)


def dataset_insert(d: Dataset, t: Triple) -> Dataset:
    return d.with_triple(t)


class SynonymLexicon(Mapping[str, frozenset]):
    """Word -> synonyms mapping, used exactly as loaded (no symmetric closure)."""

    def __init__(self, entries: Mapping[str, Iterable[str]] | None = None):
        merged: dict[str, set[str]] = {}
        for word, syns in (entries or {}).items():
            word = check_tag(turkish_lowercase(word.strip()))
            bucket = merged.setdefault(word, set())
            for s in syns:
                s = turkish_lowercase(s.strip())
                if s and s != word:
                    bucket.add(check_tag(s))
        self._entries = {w: frozenset(s) for w, s in merged.items() if s}

    def __getitem__(self, word):
        return self._entries[word]

    def __iter__(self):
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)

    def synonyms(self, word: str) -> frozenset[str]:
        return self._entries.get(word, frozenset())

    def pairs(self) -> list[tuple[str, str]]:
        """All ⟨word, synonym⟩ pairs, sorted."""
        return sorted((w, s) for w, syns in self._entries.items() for s in syns)


class Corpus(Mapping[str, int]):
    """Known Turkish words with frequency counts (1 when unknown)."""

    def __init__(self, words: Mapping[str, int] | Iterable[str] = ()):
        if isinstance(words, Mapping):
            items = words.items()
        else:
            items = ((w, 1) for w in words)
        counts: dict[str, int] = {}
        for word, freq in items:
            word = turkish_lowercase(word.strip())
            if not word:
                raise ValueError("empty corpus word")
            if int(freq) < 1:
                raise ValueError(f"frequency must be >= 1 for {word!r}")
            counts[word] = counts.get(word, 0) + int(freq)
        self._counts = counts

    def __getitem__(self, word):
        return self._counts[word]

    def __iter__(self):
        return iter(self._counts)

    def __len__(self):
        return len(self._counts)

    def frequency(self, word: str) -> int:
        return self._counts.get(word, 0)
