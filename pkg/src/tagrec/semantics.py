"""Synonym expansion of the tag dataset."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from tagrec.model import Dataset, Provenance, SynonymLexicon, Triple
from tagrec.normalize import turkish_lowercase
from tagrec.tsv import InputError, read_rows


@dataclass(frozen=True)
class ExpansionReport:
    added_count: int
    original_triple_count: int

    @property
    def percent_increase(self) -> float:
        """Added triples as a fraction of the original count (0 for empty input)."""
        if not self.original_triple_count:
            return 0.0
        return self.added_count / self.original_triple_count

    def lines(self) -> list[str]:
        return [
            f"original_triples: {self.original_triple_count}",
            f"added_triples: {self.added_count}",
            f"expanded_triples: {self.original_triple_count + self.added_count}",
            f"percent_increase: {100 * self.percent_increase:.1f}",
        ]


def expand_synonyms(d: Dataset, lex: SynonymLexicon) -> tuple[Dataset, ExpansionReport]:
    """Add ⟨user, site, synonym⟩ for each synonym of an existing tag,
    provided the synonym is itself already used as a tag somewhere.

    One pass over the input triples: added triples are not expanded again,
    and the vocabulary check always looks at the input, never at the
    partially grown result.
    """
    vocabulary = d.tags()
    # tag -> synonyms that pass the vocabulary check
    usable = {}
    for tag in vocabulary:
        syns = lex.synonyms(tag) & vocabulary
        if syns:
            usable[tag] = syns

    added = []
    for t in d.sorted_triples():
        for s in sorted(usable.get(t.tag, ())):
            if (t.user, t.site, s) not in d:
                added.append(Triple(t.user, t.site, s, Provenance.SYNONYM_ADDED))

    expanded = d.with_triples(added)
    return expanded, ExpansionReport(len(expanded) - len(d), len(d))


def load_lexicon(path) -> SynonymLexicon:
    """Read ``word<TAB>syn1,syn2,...`` lines. Repeated headwords are merged."""
    entries: dict[str, set[str]] = defaultdict(set)
    for lineno, cols in read_rows(path):
        if cols[0].lstrip().startswith("#"):
            continue
        if len(cols) != 2 or not cols[0].strip():
            raise InputError(path, lineno, "expected 'word<TAB>syn1,syn2,...'")
        entries[cols[0]].update(s for s in cols[1].split(",") if s.strip())
    try:
        return SynonymLexicon(entries)
    except ValueError as exc:
        raise InputError(path, 0, str(exc)) from None


def lexicon_lines(lex: SynonymLexicon) -> list[str]:
    return [f"{w}\t{','.join(sorted(lex[w]))}" for w in sorted(lex)]


def read_mythes(dat_path) -> SynonymLexicon:
    """Convert a MyThes ``.dat`` thesaurus into a lexicon.

    The data file starts with an encoding line, followed by ``word|n``
    headers each followed by *n* ``(pos)|syn|syn...`` meaning lines. The
    companion ``.idx`` file only holds byte offsets into the data file and
    is not needed here. Synonyms containing commas or tabs cannot be
    represented in the TSV format and are dropped.
    """
    with open(dat_path, "rb") as fh:
        encoding = fh.readline().decode("ascii").strip() or "utf-8"
        text = fh.read().decode(encoding)

    entries: dict[str, set[str]] = defaultdict(set)
    lines = iter(enumerate(text.splitlines(), 2))
    for lineno, line in lines:
        if not line.strip():
            continue
        head, sep, count = line.rpartition("|")
        if not sep or not count.strip().isdigit():
            raise InputError(dat_path, lineno, f"expected 'word|count', got {line!r}")
        word = turkish_lowercase(head.strip())
        for _ in range(int(count)):
            try:
                lineno, meaning = next(lines)
            except StopIteration:
                raise InputError(dat_path, lineno, f"truncated entry for {word!r}") from None
            for syn in meaning.split("|")[1:]:
                syn = turkish_lowercase(syn.strip())
                if syn and "," not in syn and "\t" not in syn:
                    entries[word].add(syn)
    return SynonymLexicon({w: s for w, s in entries.items() if w and "\t" not in w})
