"""Per-user ranked website recommendations from a similarity matrix."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from tagrec.model import Dataset
from tagrec.similarity import SimilarityMatrix

DEFAULT_TOP_N = 5

AGGREGATES = ("max", "mean", "sum")

# Scores are rounded before ranking so that exact mathematical ties, which
# floating point may split by an ulp, fall through to the URL tie-break.
SCORE_DIGITS = 12


@dataclass(frozen=True)
class Recommendation:
    user: str
    site: str
    score: float
    rank: int


def _aggregate(values: list[float], how: str) -> float:
    if how == "max":
        return max(values)
    if how == "mean":
        return sum(values) / len(values)
    if how == "sum":
        return sum(values)
    raise ValueError(f"unknown aggregate {how!r}; expected one of {AGGREGATES}")


def recommend_for_user(
    user: str,
    d: Dataset,
    m: SimilarityMatrix,
    top_n: int = DEFAULT_TOP_N,
    aggregate: str = "max",
) -> list[Recommendation]:
    """Rank the sites *user* does not own by their similarity to the ones
    they do.

    A candidate's score aggregates (``max`` by default) its similarity to
    each of the user's sites. Zero scores are dropped; ties go to the
    lexicographically smaller URL.
    """
    if top_n < 1:
        raise ValueError("top_n must be >= 1")
    owned = sorted(d.sites_of(user))
    if not owned:
        raise KeyError(f"unknown user: {user!r}")
    scored = []
    for cand in sorted(d.websites() - set(owned)):
        score = round(_aggregate([m[cand, s] for s in owned], aggregate), SCORE_DIGITS)
        if score > 0:
            scored.append((-score, cand))
    scored.sort()
    return [
        Recommendation(user, site, -neg, rank)
        for rank, (neg, site) in enumerate(scored[:top_n], 1)
    ]


def recommend_all(
    d: Dataset,
    m: SimilarityMatrix,
    top_n: int = DEFAULT_TOP_N,
    aggregate: str = "max",
) -> dict[str, list[Recommendation]]:
    return {u: recommend_for_user(u, d, m, top_n, aggregate) for u in sorted(d.users())}


def recommendation_lines(recs: Mapping[str, list[Recommendation]]) -> list[str]:
    return [
        f"{r.user}\t{r.rank}\t{r.site}\t{r.score:.6f}"
        for user in sorted(recs)
        for r in recs[user]
    ]
