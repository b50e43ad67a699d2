from fractions import Fraction

import pytest

from omuco.core import Instance, OrdinalObjective
from omuco.fileio import GeneratorSpec, generate_instance

CONFLICTING_PATTERNS = [
    (a, b, g)
    for a in (-1, 0, 1)
    for b in (-1, 0, 1)
    for g in (-1, 0, 1)
    if 1 in (a, b, g) and -1 in (a, b, g)
]

NONCONFLICTING_PATTERNS = [
    (a, b, g)
    for a in (-1, 0, 1)
    for b in (-1, 0, 1)
    for g in (-1, 0, 1)
    if (a, b, g) != (0, 0, 0) and not (1 in (a, b, g) and -1 in (a, b, g))
]


@pytest.fixture
def six_item() -> Instance:
    """Six items in three categories (maximize), costs 1..6 (minimize),
    exactly three selected."""
    return Instance(
        n=6,
        alpha=-1,
        beta=0,
        gamma=1,
        tilde=OrdinalObjective(num_categories=3, assignment=(3, 3, 1, 2, 3, 1)),
        f=tuple(Fraction(i) for i in range(1, 7)),
        cardinality=3,
    )


@pytest.fixture
def four_item_one() -> Instance:
    """A singleton selection dominates a particular pair here."""
    return Instance(
        n=4,
        alpha=1,
        beta=1,
        gamma=-1,
        tilde=OrdinalObjective(num_categories=3, assignment=(2, 1, 2, 1)),
        hat=OrdinalObjective(num_categories=3, assignment=(3, 2, 1, 3)),
        f=(Fraction(10), Fraction(1), Fraction(3), Fraction(2)),
    )


@pytest.fixture
def four_item_two() -> Instance:
    """All items pairwise incomparable; exactly one pair is dominated."""
    return Instance(
        n=4,
        alpha=1,
        beta=1,
        gamma=-1,
        tilde=OrdinalObjective(num_categories=3, assignment=(1, 2, 1, 2)),
        hat=OrdinalObjective(num_categories=3, assignment=(2, 1, 1, 2)),
        f=(Fraction(10), Fraction(5), Fraction(1), Fraction(11)),
    )


@pytest.fixture
def make_instance():
    """Factory for seeded random instances."""

    def _make(seed, n, ktilde=1, khat=1, alpha=1, beta=0, gamma=-1, w=None, fmax=9):
        spec = GeneratorSpec(
            n=n, ktilde=ktilde, khat=khat, alpha=alpha, beta=beta, gamma=gamma,
            w=w, fmax=fmax, seed=seed,
        )
        return generate_instance(spec)

    return _make
