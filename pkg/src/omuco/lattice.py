"""Enumeration of attainable counting vectors and subproblem right-hand sides.

For one ordinal objective with K categories and n items, the attainable
counting vectors form the lattice of non-increasing non-negative integer
K-tuples with first entry at most n.  Each scalarized subproblem is indexed
by a right-hand-side pair drawn from the paired lattice where both sides
select the same number of items.  Streams are lazy generators in
lexicographic order, so the solver never materializes the full lattice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .core import Instance


@dataclass(frozen=True)
class RhsVector:
    """Right-hand side of one scalarized subproblem.

    Each present side is a signed counting-vector target: the sign-stripped
    vector is a lattice member, and when both sides are present their first
    components have equal magnitude (both count the selected items).
    """

    b_tilde: tuple[int, ...] | None
    b_hat: tuple[int, ...] | None

    @property
    def size(self) -> int:
        """Number of selected items this right-hand side pins down."""
        if self.b_tilde is not None:
            return abs(self.b_tilde[0])
        if self.b_hat is not None:
            return abs(self.b_hat[0])
        return 0

    def signed_values(self) -> tuple[int, ...]:
        """Concatenated signed entries (present sides only), for lattice
        comparisons between right-hand sides."""
        values: tuple[int, ...] = ()
        if self.b_tilde is not None:
            values += self.b_tilde
        if self.b_hat is not None:
            values += self.b_hat
        return values


def iter_counting_vectors(k: int, n: int) -> Iterator[tuple[int, ...]]:
    """All non-increasing K-tuples of non-negative integers with first entry
    <= n, in lexicographic order, each exactly once."""
    if k < 1:
        raise ValueError("category count must be positive")
    if n < 0:
        raise ValueError("item count must be non-negative")

    def rec(prefix: tuple[int, ...], bound: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield prefix
            return
        for value in range(bound + 1):
            yield from rec(prefix + (value,), value, remaining - 1)

    yield from rec((), n, k)


def iter_counting_vectors_of_size(k: int, n: int, w: int) -> Iterator[tuple[int, ...]]:
    """Lattice slice with first entry fixed to w (exactly w items selected)."""
    if not 0 <= w <= n:
        raise ValueError(f"size {w} out of range 0..{n}")

    def rec(prefix: tuple[int, ...], bound: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield prefix
            return
        for value in range(bound + 1):
            yield from rec(prefix + (value,), value, remaining - 1)

    yield from rec((w,), w, k - 1)


def count_counting_vectors(k: int, n: int) -> int:
    """Closed-form size of the full lattice."""
    return sum(math.comb(w + k - 1, k - 1) for w in range(n + 1))


def count_counting_vectors_of_size(k: int, w: int) -> int:
    """Closed-form size of the fixed-size slice."""
    return math.comb(w + k - 1, k - 1)


def iter_rhs_vectors(inst: Instance) -> Iterator[RhsVector]:
    """Right-hand sides of all scalarized subproblems of `inst`.

    Pairs a signed tilde target with a signed hat target of equal selected
    count; a side is absent when its objective is.  Under a cardinality
    constraint only the matching slice is produced.  Yields nothing when
    both ordinal objectives are absent (the solver treats the pure-f case
    separately).

    Order: ascending selected count, then tilde side lexicographic, then hat
    side lexicographic (on the sign-stripped vectors).
    """
    has_tilde = inst.alpha != 0 and inst.tilde is not None
    has_hat = inst.beta != 0 and inst.hat is not None
    if not has_tilde and not has_hat:
        return

    sizes = range(inst.n + 1) if inst.cardinality is None else (inst.cardinality,)

    if has_tilde and has_hat:
        kt = inst.tilde.num_categories
        kh = inst.hat.num_categories
        for w in sizes:
            for ut in iter_counting_vectors_of_size(kt, inst.n, w):
                bt = tuple(inst.alpha * v for v in ut)
                for uh in iter_counting_vectors_of_size(kh, inst.n, w):
                    yield RhsVector(bt, tuple(inst.beta * v for v in uh))
    elif has_tilde:
        k = inst.tilde.num_categories
        for w in sizes:
            for u in iter_counting_vectors_of_size(k, inst.n, w):
                yield RhsVector(tuple(inst.alpha * v for v in u), None)
    else:
        k = inst.hat.num_categories
        for w in sizes:
            for u in iter_counting_vectors_of_size(k, inst.n, w):
                yield RhsVector(None, tuple(inst.beta * v for v in u))


def count_rhs_vectors(inst: Instance) -> int:
    """Closed-form length of `iter_rhs_vectors(inst)`."""
    has_tilde = inst.alpha != 0 and inst.tilde is not None
    has_hat = inst.beta != 0 and inst.hat is not None
    if not has_tilde and not has_hat:
        return 0
    sizes = range(inst.n + 1) if inst.cardinality is None else (inst.cardinality,)
    total = 0
    for w in sizes:
        per_size = 1
        if has_tilde:
            per_size *= count_counting_vectors_of_size(inst.tilde.num_categories, w)
        if has_hat:
            per_size *= count_counting_vectors_of_size(inst.hat.num_categories, w)
        total += per_size
    return total
