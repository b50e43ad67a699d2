"""Pareto dominance and nondominance filtering.

All objectives are compared in minimization form (maximized objectives carry
a -1 sense inside the outcome vector), so `a` dominates `b` exactly when
a <= b componentwise and a != b.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .core import OutcomeVector, SolutionVector


@dataclass(frozen=True)
class LabeledOutcome:
    """An outcome vector together with one solution that attains it."""

    outcome: OutcomeVector
    preimage: SolutionVector


@dataclass
class SolveStats:
    """Bookkeeping collected while solving one instance."""

    algorithm: str = ""
    subproblems: int = 0
    feasible: int = 0
    candidates: int = 0
    dominated_candidates: int = 0
    duplicate_candidates: int = 0
    elapsed: float = 0.0


@dataclass
class ParetoResult:
    """Complete nondominated set plus one efficient preimage per point.

    `nondominated` is canonically sorted (tuple lexicographic order) and is
    an antichain under dominance; `representatives[i]` attains
    `nondominated[i]` and is the lexicographically smallest
    (outcome, solution) witness, so results are reproducible regardless of
    subproblem completion order.
    """

    nondominated: list[OutcomeVector]
    representatives: list[SolutionVector]
    stats: SolveStats = field(default_factory=SolveStats)

    def __len__(self) -> int:
        return len(self.nondominated)


def dominates(a: Sequence, b: Sequence) -> bool:
    """True iff a <= b componentwise and a != b (layouts must match)."""
    if len(a) != len(b):
        raise ValueError("outcome layouts differ")
    return all(x <= y for x, y in zip(a, b)) and tuple(a) != tuple(b)


def filter_nondominated(items: Iterable[LabeledOutcome]) -> ParetoResult:
    """Keep the distinct nondominated outcomes, one preimage each.

    Candidates are sorted by (outcome, preimage); since a dominating vector
    is lexicographically smaller than anything it dominates, each candidate
    only needs to be checked against the already-kept ones.  Duplicate
    outcomes collapse onto their first (canonical) representative.
    """
    ordered = sorted(items, key=lambda lo: (lo.outcome, lo.preimage))
    kept: list[LabeledOutcome] = []
    stats = SolveStats(candidates=len(ordered))
    prev_outcome: OutcomeVector | None = None
    for cand in ordered:
        if cand.outcome == prev_outcome:
            stats.duplicate_candidates += 1
            continue
        prev_outcome = cand.outcome
        if any(dominates(prev.outcome, cand.outcome) for prev in kept):
            stats.dominated_candidates += 1
            continue
        kept.append(cand)
    return ParetoResult(
        nondominated=[lo.outcome for lo in kept],
        representatives=[lo.preimage for lo in kept],
        stats=stats,
    )
