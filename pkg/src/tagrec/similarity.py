"""Tag popularity, tag representativeness and website similarity.

Each site is described by a rating vector over its tags, weighted by
popularity x representativeness; two sites are compared by the cosine of
their rating vectors. With uniform weights this reduces to the plain
binary tag cosine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Mapping

from tagrec.model import Dataset


def tag_popularity(tag: str, d: Dataset) -> float:
    """Share of all websites that carry *tag* (distinct sites, not triples)."""
    sites = d.sites_with_tag(tag)
    if not sites:
        raise KeyError(f"tag not in dataset: {tag!r}")
    return len(sites) / len(d.websites())


def tag_representativeness(tag: str, site: str, d: Dataset) -> float:
    """Fraction of the triples carrying *tag* that attach it to *site*."""
    total = d.tag_occurrences(tag)
    if not total:
        raise KeyError(f"tag not in dataset: {tag!r}")
    return len(d.users_on(site, tag)) / total


def _tags(site: str, d: Dataset) -> frozenset[str]:
    tags = d.tags_of(site)
    if not tags:
        raise KeyError(f"site has no tags: {site!r}")
    return tags


def cosine_tag_similarity(a: str, b: str, d: Dataset) -> float:
    """Cosine of the binary tag-incidence vectors of two sites."""
    ta, tb = _tags(a, d), _tags(b, d)
    return min(1.0, len(ta & tb) / (math.sqrt(len(ta)) * math.sqrt(len(tb))))


@dataclass(frozen=True)
class RatingVector:
    site: str
    weights: Mapping[str, float]

    def __post_init__(self):
        for tag, w in self.weights.items():
            if not (w > 0 and math.isfinite(w)):
                raise ValueError(f"bad weight {w!r} for tag {tag!r}")

    @property
    def norm(self) -> float:
        return math.sqrt(math.fsum(w * w for w in self.weights.values()))

    def __getitem__(self, tag: str) -> float:
        return self.weights.get(tag, 0.0)


def site_rating_vector(site: str, d: Dataset) -> RatingVector:
    """Rating vector of *site*; tags the site does not carry weigh 0."""
    tags = _tags(site, d)
    return RatingVector(
        site,
        {t: tag_popularity(t, d) * tag_representativeness(t, site, d) for t in sorted(tags)},
    )


def _rating_cosine(ra: RatingVector, rb: RatingVector, norm_a: float, norm_b: float) -> float:
    shared = sorted(ra.weights.keys() & rb.weights.keys())
    if not shared:
        return 0.0
    dot = math.fsum(ra.weights[t] * rb.weights[t] for t in shared)
    return min(1.0, dot / (norm_a * norm_b))


def site_similarity(a: str, b: str, d: Dataset) -> float:
    ra, rb = site_rating_vector(a, d), site_rating_vector(b, d)
    na, nb = ra.norm, rb.norm
    if na == 0 or nb == 0:
        raise ValueError(f"zero-norm rating vector for {a!r} or {b!r}")
    return _rating_cosine(ra, rb, na, nb)


def _pair(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a <= b else (b, a)


class SimilarityMatrix:
    """Scores for unordered pairs of distinct sites.

    Looking a site up against itself gives 1.0; it is never stored.
    """

    def __init__(self, scores: Mapping[tuple[str, str], float], sites=()):
        self._scores = {}
        for (a, b), score in scores.items():
            if a == b:
                raise ValueError(f"self pair stored for {a!r}")
            self._scores[_pair(a, b)] = score
        self._sites = frozenset(sites) | {s for p in self._scores for s in p}

    def __len__(self):
        return len(self._scores)

    def __getitem__(self, pair: tuple[str, str]) -> float:
        a, b = pair
        if a == b:
            if a not in self._sites:
                raise KeyError(a)
            return 1.0
        return self._scores[_pair(a, b)]

    def get(self, a: str, b: str, default: float = 0.0) -> float:
        try:
            return self[a, b]
        except KeyError:
            return default

    def sites(self) -> frozenset[str]:
        return self._sites

    def items(self) -> Iterator[tuple[tuple[str, str], float]]:
        """Pairs in lexicographic order."""
        for pair in sorted(self._scores):
            yield pair, self._scores[pair]

    def lines(self) -> list[str]:
        return [f"{a}\t{b}\t{score:.6f}" for (a, b), score in self.items()]


def build_similarity_matrix(d: Dataset) -> SimilarityMatrix:
    """Similarity of every unordered pair of distinct websites in *d*."""
    sites = sorted(d.websites())
    ratings = [site_rating_vector(s, d) for s in sites]
    norms = [r.norm for r in ratings]
    scores = {}
    for i, a in enumerate(sites):
        for j in range(i + 1, len(sites)):
            scores[a, sites[j]] = _rating_cosine(ratings[i], ratings[j], norms[i], norms[j])
    return SimilarityMatrix(scores, sites)
