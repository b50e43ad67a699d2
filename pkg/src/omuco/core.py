"""Domain types for ordinal multi-objective instances and their outcome vectors.

An instance consists of n selectable items, up to two ordinal objectives
(categories eta_1 < ... < eta_K, better first), an optional real-valued sum
objective f, and per-objective senses alpha/beta/gamma in {-1, 0, +1}
(+1 minimize, -1 maximize, 0 absent).

Solutions are binary vectors.  An ordinal objective is evaluated through its
incremental counting vector: component j counts the selected items whose
category index is >= j, so counting vectors are always non-increasing.
Real costs are kept as exact `fractions.Fraction` values so that dominance
comparisons and subproblem objectives never suffer float rounding.

All types are immutable after construction; the operations are pure
functions, safe to share across concurrent workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

# A solution is a 0/1 tuple of length n; item i corresponds to entry i (0-based).
SolutionVector = tuple[int, ...]

# Non-increasing tuple of selected-item counts per category threshold.
CountingVector = tuple[int, ...]

# Signed objective vector used for dominance comparisons.  Layout:
# [alpha * tilde counting vector] ++ [beta * hat counting vector] ++ [gamma * f(x)],
# blocks omitted for senses equal to zero.
OutcomeVector = tuple[Fraction | int, ...]


@dataclass(frozen=True)
class OrdinalObjective:
    """Assignment of each item to one of `num_categories` ordered categories.

    Category indices are 1-based: 1 is the best category, `num_categories`
    the worst (for minimization).
    """

    num_categories: int
    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "assignment", tuple(self.assignment))

    def groups(self) -> list[list[int]]:
        """Item indices (0-based) per category, index c-1 holds category c."""
        out: list[list[int]] = [[] for _ in range(self.num_categories)]
        for item, cat in enumerate(self.assignment):
            out[cat - 1].append(item)
        return out


@dataclass(frozen=True)
class Instance:
    """One optimization instance.

    `tilde`/`hat` are the first/second ordinal objectives and must be present
    exactly when the matching sense (`alpha`/`beta`) is nonzero; `f` likewise
    for `gamma`.  `cardinality`, when set, restricts solutions to exactly that
    many selected items.
    """

    n: int
    alpha: int
    beta: int
    gamma: int
    tilde: OrdinalObjective | None = None
    hat: OrdinalObjective | None = None
    f: tuple[Fraction, ...] | None = None
    cardinality: int | None = None

    def __post_init__(self) -> None:
        if self.f is not None:
            object.__setattr__(self, "f", tuple(Fraction(v) for v in self.f))

    @property
    def num_objectives(self) -> int:
        return sum(1 for s in (self.alpha, self.beta, self.gamma) if s != 0)

    @property
    def conflicting(self) -> bool:
        """True when some objective is minimized and another maximized."""
        senses = (self.alpha, self.beta, self.gamma)
        return 1 in senses and -1 in senses

    @property
    def outcome_length(self) -> int:
        length = 0
        if self.alpha != 0 and self.tilde is not None:
            length += self.tilde.num_categories
        if self.beta != 0 and self.hat is not None:
            length += self.hat.num_categories
        if self.gamma != 0:
            length += 1
        return length

    def with_cardinality(self, w: int | None) -> "Instance":
        return Instance(
            n=self.n,
            alpha=self.alpha,
            beta=self.beta,
            gamma=self.gamma,
            tilde=self.tilde,
            hat=self.hat,
            f=self.f,
            cardinality=w,
        )


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of `validate`: violations plus derived routing flags."""

    violations: tuple[str, ...]
    trivial: bool = False
    conflicting: bool = False
    biobjective: bool = False
    three_objective: bool = False

    @property
    def valid(self) -> bool:
        return not self.violations


def cost_matrix(obj: OrdinalObjective, n: int) -> list[list[int]]:
    """Binary K x n matrix whose column i has ones in rows 1..category(i).

    Every column is a prefix interval of ones, so the matrix (and any
    row-sign-flipped variant) is an interval matrix.
    """
    k = obj.num_categories
    rows = [[0] * n for _ in range(k)]
    for item, cat in enumerate(obj.assignment):
        for j in range(cat):
            rows[j][item] = 1
    return rows


def counting_vector(obj: OrdinalObjective, x: Sequence[int]) -> CountingVector:
    """Counting vector of the selection x: entry j-1 counts selected items
    with category index >= j."""
    counts = [0] * obj.num_categories
    for item, bit in enumerate(x):
        if bit:
            for j in range(obj.assignment[item]):
                counts[j] += 1
    return tuple(counts)


def real_value(inst: Instance, x: Sequence[int]) -> Fraction:
    """Value of the real sum objective f on x (0 when f is absent)."""
    if inst.f is None:
        return Fraction(0)
    return sum((inst.f[i] for i, bit in enumerate(x) if bit), Fraction(0))


def outcome(inst: Instance, x: Sequence[int]) -> OutcomeVector:
    """Signed outcome vector of x, blocks omitted for absent objectives."""
    values: list[Fraction | int] = []
    if inst.alpha != 0 and inst.tilde is not None:
        values.extend(inst.alpha * c for c in counting_vector(inst.tilde, x))
    if inst.beta != 0 and inst.hat is not None:
        values.extend(inst.beta * c for c in counting_vector(inst.hat, x))
    if inst.gamma != 0:
        values.append(inst.gamma * real_value(inst, x))
    return tuple(values)


def validate(inst: Instance) -> ValidationReport:
    """Check an instance and derive routing flags.

    Violations are reported, never raised: callers at the boundary (CLI,
    file parsing) turn them into diagnostics.
    """
    violations: list[str] = []
    if inst.n < 0:
        violations.append("item count must be non-negative")
    for sense, name in ((inst.alpha, "alpha"), (inst.beta, "beta"), (inst.gamma, "gamma")):
        if sense not in (-1, 0, 1):
            violations.append(f"{name} must be -1, 0 or +1")
    if inst.alpha == inst.beta == inst.gamma == 0:
        violations.append("no objective: all senses are zero")

    for sense, obj, name in ((inst.alpha, inst.tilde, "tilde"), (inst.beta, inst.hat, "hat")):
        if sense != 0 and obj is None:
            violations.append(f"{name} objective required by its sense but missing")
        if sense == 0 and obj is not None:
            violations.append(f"{name} objective present but its sense is zero")
        if obj is not None:
            if obj.num_categories < 1:
                violations.append(f"{name}: category count must be positive")
            if len(obj.assignment) != inst.n:
                violations.append(f"{name}: expected {inst.n} category entries")
            for item, cat in enumerate(obj.assignment):
                if not 1 <= cat <= obj.num_categories:
                    violations.append(
                        f"{name}: item {item + 1} category {cat} out of range 1..{obj.num_categories}"
                    )

    if inst.gamma != 0 and inst.f is None:
        violations.append("f objective required by gamma but missing")
    if inst.gamma == 0 and inst.f is not None:
        violations.append("f coefficients present but gamma is zero")
    if inst.f is not None:
        if len(inst.f) != inst.n:
            violations.append(f"f: expected {inst.n} coefficients")
        for item, value in enumerate(inst.f):
            if value < 0:
                violations.append(f"f: coefficient {item + 1} is negative")

    if inst.cardinality is not None and not 0 <= inst.cardinality <= inst.n:
        violations.append(f"cardinality {inst.cardinality} out of range 0..{inst.n}")

    ordinal_count = sum(1 for o in (inst.tilde, inst.hat) if o is not None)
    return ValidationReport(
        violations=tuple(violations),
        trivial=not inst.conflicting and inst.cardinality is None and not violations,
        conflicting=inst.conflicting,
        biobjective=inst.num_objectives == 2 and ordinal_count >= 1,
        three_objective=inst.num_objectives == 3,
    )
