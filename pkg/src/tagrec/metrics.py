"""Acceptance statistics over per-user accepted/presented counts."""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from typing import Sequence

from tagrec.tsv import InputError, read_rows


@dataclass(frozen=True)
class AcceptanceRecord:
    user: str
    accepted: int
    presented: int

    def __post_init__(self):
        if self.presented < 1:
            raise ValueError(f"{self.user}: presented must be >= 1")
        if not 0 <= self.accepted <= self.presented:
            raise ValueError(f"{self.user}: accepted must be in [0, presented]")


@dataclass(frozen=True)
class AcceptanceStats:
    n_users: int
    mean_accepted: float
    sem: float
    percent_accepted: float
    percent_succeeded: float
    threshold: float

    def lines(self) -> list[str]:
        return [
            f"users: {self.n_users}",
            f"mean_accepted: {self.mean_accepted:.3f}",
            f"sem: {self.sem:.3f}",
            f"percent_accepted: {self.percent_accepted:.1f}",
            f"threshold: {self.threshold:g}",
            f"percent_succeeded: {self.percent_succeeded:.1f}",
        ]


def acceptance_stats(records: Sequence[AcceptanceRecord], threshold: float | None = None) -> AcceptanceStats:
    """Mean accepted per user, its standard error (sample std / sqrt n),
    overall acceptance percentage and the share of users with at least
    *threshold* acceptances.

    When *threshold* is None the mean itself is used as the threshold.
    """
    n = len(records)
    if n < 2:
        raise ValueError("need at least 2 records for a standard error")
    accepted = [r.accepted for r in records]
    for r in records:
        if r.accepted > r.presented:
            raise ValueError(f"{r.user}: accepted > presented")
    mean = sum(accepted) / n
    sem = statistics.stdev(accepted) / math.sqrt(n)
    if threshold is None:
        threshold = mean
    return AcceptanceStats(
        n_users=n,
        mean_accepted=mean,
        sem=sem,
        percent_accepted=100 * sum(accepted) / sum(r.presented for r in records),
        percent_succeeded=100 * sum(a >= threshold for a in accepted) / n,
        threshold=threshold,
    )


def load_acceptance(path, presented_default: int | None = None) -> list[AcceptanceRecord]:
    """Read ``user<TAB>accepted<TAB>presented`` rows.

    The presented column may be omitted when *presented_default* is given.
    """
    records = []
    for lineno, cols in read_rows(path):
        if len(cols) == 2 and presented_default is not None:
            cols = [*cols, str(presented_default)]
        if len(cols) != 3:
            raise InputError(path, lineno, "expected 'user<TAB>accepted<TAB>presented'")
        try:
            records.append(AcceptanceRecord(cols[0], int(cols[1]), int(cols[2])))
        except ValueError as exc:
            raise InputError(path, lineno, str(exc)) from None
    return records
