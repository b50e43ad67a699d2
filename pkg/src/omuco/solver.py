"""Solver orchestration: dispatch, subproblem enumeration, and the oracle.

`solve` picks the cheapest exact route for an instance:

* non-conflicting unconstrained instances collapse to the all-zeros or
  all-ones solution (minimizing non-negative costs selects nothing,
  maximizing selects everything);
* instances whose only objective is the real sum are solved by direct
  selection;
* one constrained ordinal objective plus one further objective goes through
  the greedy partition-matroid path;
* both ordinal objectives plus the real objective go through the
  lattice-indexed transportation subproblems.

`oracle_solve` enumerates all solutions outright and is the independent
ground truth the tests compare against; it shares no code with the solver
paths beyond the outcome definition.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import islice
from math import lcm

import numpy as np

from . import greedy
from .core import Instance, SolutionVector, cost_matrix, outcome, validate
from .dominance import LabeledOutcome, ParetoResult, SolveStats, filter_nondominated
from .lattice import RhsVector, iter_rhs_vectors
from .subproblem import build_transport, demands_from_rhs, quick_feasible
from .flow import solve_transport

_EPSILON_BATCH = 4096


class InvalidInstanceError(ValueError):
    """Raised when an instance fails validation."""

    def __init__(self, violations: tuple[str, ...]):
        super().__init__("; ".join(violations))
        self.violations = violations


@dataclass(frozen=True)
class SolverConfig:
    """Solve-time options.

    `augment`, when set, must be a positive exact rational strictly below
    1/((K_tilde + K_hat) * n); it switches the collection to augmented
    scalarizations whose optima are all efficient, so the final filter
    removes nothing.  `workers` is a hint for concurrent subproblem solving;
    results are identical for any worker count.
    """

    algorithm: str = "auto"  # auto | epsilon | greedy | brute
    augment: Fraction | None = None
    workers: int = 1
    cardinality: int | None = None  # overrides the instance's own value


def auto_delta(inst: Instance) -> Fraction:
    """Largest convenient augmentation value satisfying the strict bound."""
    return Fraction(1, _total_categories(inst) * inst.n + 1)


def _total_categories(inst: Instance) -> int:
    total = 0
    if inst.tilde is not None:
        total += inst.tilde.num_categories
    if inst.hat is not None:
        total += inst.hat.num_categories
    return total


def solve(inst: Instance, cfg: SolverConfig | None = None) -> ParetoResult:
    """Complete nondominated set and one efficient preimage per point."""
    cfg = cfg or SolverConfig()
    if cfg.cardinality is not None:
        inst = inst.with_cardinality(cfg.cardinality)
    report = validate(inst)
    if not report.valid:
        raise InvalidInstanceError(report.violations)
    if cfg.augment is not None:
        _check_delta(inst, cfg.augment)

    started = time.perf_counter()
    if cfg.algorithm == "brute":
        result = oracle_solve(inst)
    elif inst.tilde is None and inst.hat is None:
        result = _solve_real_only(inst)
    elif cfg.algorithm == "greedy":
        if _needs_epsilon(inst):
            raise ValueError("greedy cannot handle two constrained ordinal objectives "
                             "plus the real objective; use epsilon")
        result = _solve_greedy(inst, cfg.augment)
    elif cfg.algorithm == "epsilon":
        result = _solve_epsilon(inst, cfg.augment, cfg.workers)
    elif cfg.algorithm == "auto":
        if inst.cardinality is None and not inst.conflicting:
            result = _solve_trivial(inst)
        elif _needs_epsilon(inst):
            result = _solve_epsilon(inst, cfg.augment, cfg.workers)
        else:
            result = _solve_greedy(inst, cfg.augment)
    else:
        raise ValueError(f"unknown algorithm {cfg.algorithm!r}")
    result.stats.elapsed = time.perf_counter() - started
    return result


def _check_delta(inst: Instance, delta: Fraction) -> None:
    if inst.gamma == 0:
        raise ValueError("augmentation requires the real-valued objective")
    if delta <= 0:
        raise ValueError("augmentation value must be positive")
    budget = _total_categories(inst) * inst.n
    if budget > 0 and delta >= Fraction(1, budget):
        raise ValueError(f"augmentation value must be below 1/{budget}")


def _needs_epsilon(inst: Instance) -> bool:
    return inst.tilde is not None and inst.hat is not None and inst.gamma != 0


def _single_result(inst: Instance, x: SolutionVector, algorithm: str) -> ParetoResult:
    return ParetoResult(
        nondominated=[outcome(inst, x)],
        representatives=[x],
        stats=SolveStats(algorithm=algorithm, candidates=1),
    )


def _solve_trivial(inst: Instance) -> ParetoResult:
    """Non-conflicting unconstrained instances have a one-point solution."""
    senses = {s for s in (inst.alpha, inst.beta, inst.gamma) if s != 0}
    if senses == {1}:
        return _single_result(inst, (0,) * inst.n, "trivial")
    return _single_result(inst, (1,) * inst.n, "trivial")


def _solve_real_only(inst: Instance) -> ParetoResult:
    """Only the real sum objective is present: pick the best selection.

    Without a cardinality constraint the canonical representative selects
    exactly the items with negative signed cost (zero-cost items are
    excluded for reproducibility among the alternative optima); with one,
    the cheapest w items by (signed cost, index) are selected.
    """
    if inst.cardinality is None:
        bits = tuple(1 if inst.gamma * inst.f[i] < 0 else 0 for i in range(inst.n))
    else:
        order = sorted(range(inst.n), key=lambda i: (inst.gamma * inst.f[i], i))
        chosen = set(order[: inst.cardinality])
        bits = tuple(1 if i in chosen else 0 for i in range(inst.n))
    return _single_result(inst, bits, "real-only")


def _solve_greedy(inst: Instance, augment: Fraction | None) -> ParetoResult:
    entries, enumerated = greedy.collect_candidates(inst, augment)
    feasible = len(entries)
    if augment is not None:
        entries = _prune_augmented(entries)
    result = filter_nondominated(labeled for _, _, labeled in entries)
    result.stats.algorithm = "greedy"
    result.stats.subproblems = enumerated
    result.stats.feasible = feasible
    return result


def _solve_epsilon(inst: Instance, augment: Fraction | None, workers: int) -> ParetoResult:
    def handle(rhs: RhsVector):
        cd = demands_from_rhs(rhs)
        if not quick_feasible(inst, cd):
            return None
        fr = solve_transport(build_transport(inst, cd, augment))
        if not fr.optimal:
            return None
        bits = tuple(1 if i in set(fr.selected_items) else 0 for i in range(inst.n))
        return rhs, fr.objective, LabeledOutcome(outcome=outcome(inst, bits), preimage=bits)

    entries: list[tuple[RhsVector, Fraction, LabeledOutcome]] = []
    enumerated = 0
    stream = iter_rhs_vectors(inst)
    if workers <= 1:
        for rhs in stream:
            enumerated += 1
            entry = handle(rhs)
            if entry is not None:
                entries.append(entry)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            while True:
                batch = list(islice(stream, _EPSILON_BATCH))
                if not batch:
                    break
                enumerated += len(batch)
                entries.extend(e for e in pool.map(handle, batch) if e is not None)

    feasible = len(entries)
    if augment is not None:
        entries = _prune_augmented(entries)
    result = filter_nondominated(labeled for _, _, labeled in entries)
    result.stats.algorithm = "epsilon"
    result.stats.subproblems = enumerated
    result.stats.feasible = feasible
    return result


def _prune_augmented(
    entries: list[tuple[RhsVector, Fraction, LabeledOutcome]]
) -> list[tuple[RhsVector, Fraction, LabeledOutcome]]:
    """Keep only optima of the augmented inequality scalarizations.

    A feasible solution of the inequality-constrained subproblem with
    right-hand side r has a counting profile r' <= r (signed componentwise),
    and within a fixed profile the equality optimum minimizes the augmented
    value, so the inequality optimum at r is the minimum equality optimum
    over the lower set of r.  An equality optimum that is undercut anywhere
    in its own lower set is therefore never an inequality optimum and is
    dropped; everything kept is efficient.
    """
    signatures = [rhs.signed_values() for rhs, _, _ in entries]
    kept = []
    for i, (rhs_i, value_i, labeled_i) in enumerate(entries):
        sig_i = signatures[i]
        undercut = any(
            value_j < value_i and all(a <= b for a, b in zip(sig_j, sig_i))
            for (_, value_j, _), sig_j in zip(entries, signatures)
        )
        if not undercut:
            kept.append((rhs_i, value_i, labeled_i))
    return kept


def oracle_solve(inst: Instance, bound: int = 20) -> ParetoResult:
    """Ground truth by full enumeration of all solutions.

    Refuses instances with more than `bound` items (2^n outcomes are
    materialized).  Exact: outcome components are scaled to integers; if the
    scaled values could overflow 64-bit arithmetic the slow pure-Python
    enumeration takes over.
    """
    report = validate(inst)
    if not report.valid:
        raise InvalidInstanceError(report.violations)
    if inst.n > bound:
        raise ValueError(f"oracle refuses n={inst.n} above bound {bound}")

    scale = 1
    scaled_f: list[int] | None = None
    if inst.gamma != 0:
        scale = lcm(*(v.denominator for v in inst.f)) if inst.f else 1
        scaled_f = [int(v * scale) for v in inst.f]
        if sum(abs(v) for v in scaled_f) > 2**62:
            return _oracle_slow(inst)

    started = time.perf_counter()
    masks = np.arange(2**inst.n, dtype=np.int64)
    bits = ((masks[:, None] >> np.arange(inst.n)) & 1).astype(np.int64)
    if inst.cardinality is not None:
        bits = bits[bits.sum(axis=1) == inst.cardinality]
    total = bits.shape[0]

    blocks = []
    f_column: int | None = None
    if inst.alpha != 0:
        blocks.append(inst.alpha * (bits @ np.array(cost_matrix(inst.tilde, inst.n)).T))
    if inst.beta != 0:
        blocks.append(inst.beta * (bits @ np.array(cost_matrix(inst.hat, inst.n)).T))
    if inst.gamma != 0:
        blocks.append(inst.gamma * (bits @ np.array(scaled_f, dtype=np.int64))[:, None])
        f_column = -1
    z = np.hstack(blocks) if blocks else np.zeros((total, 0), dtype=np.int64)

    keys = [bits[:, j] for j in reversed(range(inst.n))]
    keys += [z[:, j] for j in reversed(range(z.shape[1]))]
    order = np.lexsort(tuple(keys))
    z, bits = z[order], bits[order]

    first = np.ones(total, dtype=bool)
    first[1:] = (z[1:] != z[:-1]).any(axis=1)
    zu, bu = z[first], bits[first]

    idx = np.arange(zu.shape[0])
    kept: list[int] = []
    while idx.size:
        i = idx[0]
        kept.append(int(i))
        rest = idx[1:]
        idx = rest[~(zu[rest] >= zu[i]).all(axis=1)]

    nondominated = []
    representatives = []
    for i in kept:
        values: list[Fraction | int] = [int(v) for v in zu[i]]
        if f_column is not None:
            values[-1] = Fraction(int(zu[i, -1]), scale)
        nondominated.append(tuple(values))
        representatives.append(tuple(int(b) for b in bu[i]))
    stats = SolveStats(
        algorithm="brute",
        subproblems=total,
        feasible=total,
        candidates=total,
        duplicate_candidates=total - int(first.sum()),
        dominated_candidates=int(first.sum()) - len(kept),
        elapsed=time.perf_counter() - started,
    )
    return ParetoResult(nondominated=nondominated, representatives=representatives, stats=stats)


def _oracle_slow(inst: Instance) -> ParetoResult:
    """Pure-Python enumeration fallback for extreme coefficient sizes."""
    labeled = []
    for mask in range(2**inst.n):
        bits = tuple((mask >> j) & 1 for j in range(inst.n))
        if inst.cardinality is not None and sum(bits) != inst.cardinality:
            continue
        labeled.append(LabeledOutcome(outcome=outcome(inst, bits), preimage=bits))
    result = filter_nondominated(labeled)
    result.stats.algorithm = "brute"
    result.stats.subproblems = len(labeled)
    result.stats.feasible = len(labeled)
    return result
