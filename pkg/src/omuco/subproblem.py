"""Construction of one scalarized subproblem as a transportation instance.

Equality constraints on the cumulative counting vectors fix the exact number
of selected items per category: consecutive differences of the sign-stripped
right-hand side give per-category supplies (tilde side) and demands (hat
side).  Selecting items then becomes a transportation problem on the
category grid, with one unit-capacity arc per item.  An absent ordinal side
degenerates to a single catch-all category absorbing the whole selection.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Instance
from .lattice import RhsVector


@dataclass(frozen=True)
class CategoryDemand:
    """Per-category selection counts required by one right-hand side."""

    supplies: tuple[int, ...]
    demands: tuple[int, ...]
    total: int


@dataclass(frozen=True)
class TransportInstance:
    """Items bucketed by category pair, with exact per-item costs.

    `cells[(i, j)]` lists the 0-based indices of items in tilde category i+1
    and hat category j+1 (index 0 when a side is absent); every item appears
    in exactly one cell.  `item_costs[i]` is the subproblem objective
    contribution of selecting item i.
    """

    supplies: tuple[int, ...]
    demands: tuple[int, ...]
    cells: dict[tuple[int, int], tuple[int, ...]]
    item_costs: tuple[Fraction, ...]

    @property
    def total(self) -> int:
        return sum(self.supplies)


def demands_from_rhs(rhs: RhsVector) -> CategoryDemand:
    """Per-category counts from a right-hand side.

    Supplies are the consecutive differences of the sign-stripped tilde side
    (last entry minus an implicit trailing zero); demands likewise for the
    hat side.  An absent side becomes the single catch-all count.
    """
    total = rhs.size
    supplies = _differences(rhs.b_tilde, total)
    demands = _differences(rhs.b_hat, total)
    return CategoryDemand(supplies=supplies, demands=demands, total=total)


def _differences(side: tuple[int, ...] | None, total: int) -> tuple[int, ...]:
    if side is None:
        return (total,)
    magnitudes = [abs(v) for v in side] + [0]
    return tuple(magnitudes[i] - magnitudes[i + 1] for i in range(len(side)))


def quick_feasible(inst: Instance, cd: CategoryDemand) -> bool:
    """Necessary-condition screen: enough items per category on each side.

    Exact when at most one ordinal objective is constrained (the condition
    from the greedy feasibility argument); with both sides constrained it
    only checks the two marginals and the flow solver settles feasibility.
    """
    tilde_counts = _category_counts(inst.tilde, inst.n, len(cd.supplies))
    if any(need > have for need, have in zip(cd.supplies, tilde_counts)):
        return False
    hat_counts = _category_counts(inst.hat, inst.n, len(cd.demands))
    return not any(need > have for need, have in zip(cd.demands, hat_counts))


def _category_counts(obj, n: int, size: int) -> list[int]:
    # A length-1 side is a single bucket holding all n items, whether the
    # objective is absent, unconstrained, or genuinely single-category.
    if size == 1:
        return [n]
    counts = [0] * size
    for cat in obj.assignment:
        counts[cat - 1] += 1
    return counts


def item_cost(inst: Instance, item: int, augment: Fraction | None = None) -> Fraction:
    """Objective contribution of selecting `item`.

    Base cost is the signed real coefficient.  With augmentation, an item in
    tilde category a and hat category b adds delta*(alpha*a + beta*b): the
    item contributes exactly its category index many ones to each summed
    counting vector.
    """
    cost = Fraction(0)
    if inst.gamma != 0 and inst.f is not None:
        cost += inst.gamma * inst.f[item]
    if augment is not None:
        term = 0
        if inst.alpha != 0 and inst.tilde is not None:
            term += inst.alpha * inst.tilde.assignment[item]
        if inst.beta != 0 and inst.hat is not None:
            term += inst.beta * inst.hat.assignment[item]
        cost += augment * term
    return cost


def build_transport(
    inst: Instance, cd: CategoryDemand, augment: Fraction | None = None
) -> TransportInstance:
    """Bucket all items into category-pair cells and attach exact costs."""
    costs = tuple(item_cost(inst, i, augment) for i in range(inst.n))
    buckets: dict[tuple[int, int], list[int]] = {}
    for item in range(inst.n):
        row = inst.tilde.assignment[item] - 1 if len(cd.supplies) > 1 else 0
        col = inst.hat.assignment[item] - 1 if len(cd.demands) > 1 else 0
        buckets.setdefault((row, col), []).append(item)
    return TransportInstance(
        supplies=cd.supplies,
        demands=cd.demands,
        cells={key: tuple(items) for key, items in sorted(buckets.items())},
        item_costs=costs,
    )
