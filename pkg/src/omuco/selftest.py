"""Built-in regression suite over hand-checked reference instances.

Run via `omuco selftest`.  Each check prints one PASS/FAIL line; the suite
succeeds only if every check passes.
"""

from __future__ import annotations

from fractions import Fraction

from .core import Instance, OrdinalObjective, outcome
from .dominance import dominates
from .fileio import GeneratorSpec, generate_instance
from .greedy import collect_candidates, solve_biobjective
from .lattice import iter_counting_vectors_of_size
from .solver import SolverConfig, oracle_solve, solve


def six_item_cardinality_instance() -> Instance:
    """Six items in three categories (maximize), integer costs 1..6
    (minimize), exactly three items selected."""
    return Instance(
        n=6,
        alpha=-1,
        beta=0,
        gamma=1,
        tilde=OrdinalObjective(num_categories=3, assignment=(3, 3, 1, 2, 3, 1)),
        f=tuple(Fraction(i) for i in range(1, 7)),
        cardinality=3,
    )


def four_item_instance_one() -> Instance:
    """Four items where a singleton selection dominates a pair."""
    return Instance(
        n=4,
        alpha=1,
        beta=1,
        gamma=-1,
        tilde=OrdinalObjective(num_categories=3, assignment=(2, 1, 2, 1)),
        hat=OrdinalObjective(num_categories=3, assignment=(3, 2, 1, 3)),
        f=(Fraction(10), Fraction(1), Fraction(3), Fraction(2)),
    )


def four_item_instance_two() -> Instance:
    """Four pairwise-incomparable items where one pair dominates another."""
    return Instance(
        n=4,
        alpha=1,
        beta=1,
        gamma=-1,
        tilde=OrdinalObjective(num_categories=3, assignment=(1, 2, 1, 2)),
        hat=OrdinalObjective(num_categories=3, assignment=(2, 1, 1, 2)),
        f=(Fraction(10), Fraction(5), Fraction(1), Fraction(11)),
    )


def _check_greedy_walkthrough() -> tuple[bool, str]:
    inst = six_item_cardinality_instance()
    entries, _ = collect_candidates(inst)
    values = [value for _, value, _ in entries]
    expected_values = [Fraction(v) for v in (13, 10, 8, 6, 7, 8)]
    result = solve_biobjective(inst)
    expected_front = [
        (-3, -3, -3, Fraction(8)),
        (-3, -3, -2, Fraction(7)),
        (-3, -2, -2, Fraction(6)),
    ]
    ok = values == expected_values and result.nondominated == expected_front
    return ok, "greedy walkthrough on the six-item cardinality instance"


def _check_lattice_slice() -> tuple[bool, str]:
    got = list(iter_counting_vectors_of_size(3, 6, 3))
    expected = [
        (3, 0, 0), (3, 1, 0), (3, 1, 1), (3, 2, 0), (3, 2, 1),
        (3, 2, 2), (3, 3, 0), (3, 3, 1), (3, 3, 2), (3, 3, 3),
    ]
    return got == expected, "counting-vector lattice slice (K=3, n=6, w=3)"


def _check_dominance_pairs() -> tuple[bool, str]:
    one = four_item_instance_one()
    z1 = outcome(one, (1, 0, 0, 0))
    z2 = outcome(one, (0, 0, 1, 1))
    two = four_item_instance_two()
    z3 = outcome(two, (1, 1, 0, 0))
    z4 = outcome(two, (0, 0, 1, 1))
    ok = (
        z1 == (1, 1, 0, 1, 1, 1, Fraction(-10))
        and dominates(z1, z2)
        and z3 == (2, 1, 0, 2, 1, 0, Fraction(-15))
        and dominates(z3, z4)
    )
    return ok, "dominance pairs on the four-item instances"


def _check_brute_front() -> tuple[bool, str]:
    result = solve(four_item_instance_two(), SolverConfig(algorithm="brute"))
    ok = len(result) == 15 and (0, 0, 1, 1) not in result.representatives
    return ok, "brute-force front of the pairwise-incomparable instance"


def _check_epsilon_matches_oracle() -> tuple[bool, str]:
    spec = GeneratorSpec(n=8, ktilde=2, khat=2, alpha=1, beta=-1, gamma=1, fmax=9, seed=20240811)
    inst = generate_instance(spec)
    got = solve(inst, SolverConfig(algorithm="epsilon"))
    want = oracle_solve(inst)
    return got.nondominated == want.nondominated, "epsilon path matches full enumeration"


def run(echo=print) -> bool:
    """Run all checks; returns True when everything passed."""
    checks = [
        _check_greedy_walkthrough,
        _check_lattice_slice,
        _check_dominance_pairs,
        _check_brute_front,
        _check_epsilon_matches_oracle,
    ]
    all_ok = True
    for check in checks:
        ok, label = check()
        echo(f"{'PASS' if ok else 'FAIL'}  {label}")
        all_ok &= ok
    return all_ok
