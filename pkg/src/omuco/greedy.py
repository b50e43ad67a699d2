"""Greedy fast path for instances with one constrained ordinal objective.

When only one ordinal objective appears in the subproblem constraints (the
other objective being the real sum or a second ordinal used as objective),
the feasible selections of each scalarized subproblem are exactly the bases
of a partition matroid over the category groups.  Sorting each group once by
the second objective and taking per-group prefixes therefore solves every
subproblem optimally; iterating over the whole counting-vector lattice and
filtering yields the complete nondominated set.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Instance, SolutionVector, outcome
from .dominance import LabeledOutcome, ParetoResult, filter_nondominated
from .lattice import RhsVector, iter_counting_vectors, iter_counting_vectors_of_size
from .subproblem import CategoryDemand, demands_from_rhs, item_cost


@dataclass(frozen=True)
class CategoryPartition:
    """Items grouped by the constrained ordinal objective's categories.

    `groups[i]` holds the 0-based indices of items in category i+1, ordered
    by worsening second objective: ascending signed real cost when the real
    objective is present, ascending signed category of the other ordinal
    objective otherwise, ties by item index.  `which` records whether the
    tilde or hat objective is the constrained one.
    """

    groups: tuple[tuple[int, ...], ...]
    which: str  # "tilde" | "hat"


def _second_objective_key(inst: Instance, constrained: str):
    if inst.gamma != 0 and inst.f is not None:
        return lambda item: (inst.gamma * inst.f[item], item)
    other = inst.hat if constrained == "tilde" else inst.tilde
    other_sense = inst.beta if constrained == "tilde" else inst.alpha
    if other is not None and other_sense != 0:
        return lambda item: (other_sense * other.assignment[item], item)
    return lambda item: (item,)


def partition_and_sort(inst: Instance) -> CategoryPartition:
    """Group items by constrained-objective category and sort each group."""
    if inst.alpha != 0 and inst.tilde is not None:
        constrained, which = inst.tilde, "tilde"
    elif inst.beta != 0 and inst.hat is not None:
        constrained, which = inst.hat, "hat"
    else:
        raise ValueError("greedy path needs an ordinal objective")
    key = _second_objective_key(inst, which)
    return CategoryPartition(
        groups=tuple(tuple(sorted(group, key=key)) for group in constrained.groups()),
        which=which,
    )


def greedy_fill(part: CategoryPartition, cd: CategoryDemand) -> SolutionVector | None:
    """Take the required prefix of each category group, or None if some
    group is too small (the subproblem is then infeasible)."""
    needs = cd.supplies if part.which == "tilde" else cd.demands
    n = sum(len(g) for g in part.groups)
    bits = [0] * n
    for group, need in zip(part.groups, needs):
        if need > len(group):
            return None
        for item in group[:need]:
            bits[item] = 1
    return tuple(bits)


def collect_candidates(
    inst: Instance, augment: Fraction | None = None
) -> tuple[list[tuple[RhsVector, Fraction, LabeledOutcome]], int]:
    """Solve every subproblem of the constrained lattice in lexicographic
    order.

    Returns the feasible entries as (right-hand side, subproblem objective
    value, candidate) plus the number of subproblems enumerated.  The
    objective value includes the augmentation term when `augment` is set
    (the per-group sort is unaffected: the augmentation contribution of the
    constrained objective is constant within a group).
    """
    part = partition_and_sort(inst)
    sense = inst.alpha if part.which == "tilde" else inst.beta
    k = (inst.tilde if part.which == "tilde" else inst.hat).num_categories
    if inst.cardinality is None:
        stream = iter_counting_vectors(k, inst.n)
    else:
        stream = iter_counting_vectors_of_size(k, inst.n, inst.cardinality)
    entries: list[tuple[RhsVector, Fraction, LabeledOutcome]] = []
    enumerated = 0
    for u in stream:
        enumerated += 1
        signed = tuple(sense * v for v in u)
        rhs = RhsVector(signed, None) if part.which == "tilde" else RhsVector(None, signed)
        x = greedy_fill(part, demands_from_rhs(rhs))
        if x is None:
            continue
        value = sum(
            (item_cost(inst, i, augment) for i, bit in enumerate(x) if bit), Fraction(0)
        )
        entries.append((rhs, value, LabeledOutcome(outcome=outcome(inst, x), preimage=x)))
    return entries, enumerated


def solve_biobjective(inst: Instance) -> ParetoResult:
    """Complete nondominated set via the greedy subproblem solver."""
    entries, enumerated = collect_candidates(inst)
    result = filter_nondominated(labeled for _, _, labeled in entries)
    result.stats.algorithm = "greedy"
    result.stats.subproblems = enumerated
    result.stats.feasible = len(entries)
    return result
