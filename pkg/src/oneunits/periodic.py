"""Detection of ultimately periodic structure in finite symbol windows.

A window of K symbols only ever provides evidence: a report (w, r) states
that the window repeats with period r after a preperiod of w symbols, with
at least two full periods observed inside the window.  Callers bound the
search explicitly and interpret a hit at window scale.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import WindowTooSmall

__all__ = ["PeriodReport", "find_period"]


@dataclass(frozen=True)
class PeriodReport:
    """Claimed preperiod and period of a symbol stream."""

    preperiod: int
    period: int

    def __post_init__(self) -> None:
        if self.preperiod < 0 or self.period < 1:
            raise ValueError("need preperiod >= 0 and period >= 1")


def find_period(symbols, max_preperiod: int, max_period: int) -> PeriodReport | None:
    """Smallest (period, then preperiod) under which the window repeats.

    For each candidate r the minimal preperiod is one past the last index n
    with symbols[n + r] != symbols[n].  A candidate is accepted when that
    preperiod fits the bound and the window still holds two full periods
    after it; the first acceptable r wins.  Returns None if none qualifies.
    """
    if max_preperiod < 0 or max_period < 1:
        raise ValueError("need max_preperiod >= 0 and max_period >= 1")
    seq = np.asarray(symbols)
    k = len(seq)
    if max_preperiod + 2 * max_period > k:
        raise WindowTooSmall(
            f"window of {k} symbols cannot hold preperiod {max_preperiod} "
            f"plus two periods of {max_period}")
    for r in range(1, max_period + 1):
        mism = np.nonzero(seq[r:] != seq[:-r])[0]
        w = int(mism[-1]) + 1 if mism.size else 0
        if w <= max_preperiod and w + 2 * r <= k:
            return PeriodReport(w, r)
    return None
