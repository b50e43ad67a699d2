import random
from fractions import Fraction

import pytest

from omuco.core import Instance, OrdinalObjective, outcome
from omuco.fileio import emit_result
from omuco.lattice import count_counting_vectors_of_size, count_rhs_vectors
from omuco.solver import (
    InvalidInstanceError,
    SolverConfig,
    auto_delta,
    oracle_solve,
    solve,
)

from conftest import CONFLICTING_PATTERNS, NONCONFLICTING_PATTERNS
import helpers


class TestDispatch:
    def test_all_minimizing_selects_nothing(self, make_instance):
        inst = make_instance(seed=2, n=6, ktilde=2, khat=2, alpha=1, beta=1, gamma=1)
        result = solve(inst)
        assert result.representatives == [(0,) * 6]
        assert result.nondominated == [outcome(inst, (0,) * 6)]

    def test_all_maximizing_selects_everything(self, make_instance):
        inst = make_instance(seed=3, n=5, ktilde=3, khat=1, alpha=-1, beta=0, gamma=-1)
        result = solve(inst)
        assert result.representatives == [(1,) * 5]

    def test_conflicting_extremes_stay_efficient(self, make_instance):
        rng = random.Random(79)
        for alpha, beta, gamma in CONFLICTING_PATTERNS:
            inst = make_instance(
                seed=rng.randint(0, 10**6), n=6, ktilde=2, khat=2,
                alpha=alpha, beta=beta, gamma=gamma, fmax=5,
            )
            if inst.f is not None:
                # strictly positive costs, else all-ones need not be efficient
                inst = Instance(
                    n=inst.n, alpha=alpha, beta=beta, gamma=gamma,
                    tilde=inst.tilde, hat=inst.hat,
                    f=tuple(v + 1 for v in inst.f),
                )
            result = solve(inst)
            assert outcome(inst, (0,) * 6) in result.nondominated
            assert outcome(inst, (1,) * 6) in result.nondominated

    def test_forced_greedy_rejects_three_objectives(self, four_item_one):
        with pytest.raises(ValueError):
            solve(four_item_one, SolverConfig(algorithm="greedy"))

    def test_forced_epsilon_on_biobjective(self, six_item):
        eps = solve(six_item, SolverConfig(algorithm="epsilon"))
        grd = solve(six_item, SolverConfig(algorithm="greedy"))
        assert eps.nondominated == grd.nondominated

    def test_invalid_instance_raises(self):
        with pytest.raises(InvalidInstanceError):
            solve(Instance(n=2, alpha=0, beta=0, gamma=0))

    def test_unknown_algorithm(self, six_item):
        with pytest.raises(ValueError):
            solve(six_item, SolverConfig(algorithm="magic"))

    def test_cardinality_override(self, six_item):
        base = solve(six_item.with_cardinality(None))
        overridden = solve(six_item.with_cardinality(None), SolverConfig(cardinality=3))
        assert overridden.nondominated == solve(six_item).nondominated
        assert base.nondominated != overridden.nondominated


class TestRealOnly:
    def test_minimizing_selects_nothing(self):
        inst = Instance(n=3, alpha=0, beta=0, gamma=1,
                        f=(Fraction(0), Fraction(2), Fraction(1)))
        result = solve(inst)
        assert result.representatives == [(0, 0, 0)]
        assert result.nondominated == [(Fraction(0),)]

    def test_maximizing_skips_zero_cost_items(self):
        inst = Instance(n=3, alpha=0, beta=0, gamma=-1,
                        f=(Fraction(0), Fraction(2), Fraction(1)))
        result = solve(inst)
        assert result.representatives == [(0, 1, 1)]
        assert result.nondominated == [(Fraction(-3),)]
        assert result.nondominated == oracle_solve(inst).nondominated

    def test_cardinality_selection(self):
        inst = Instance(n=4, alpha=0, beta=0, gamma=1,
                        f=(Fraction(5), Fraction(1), Fraction(3), Fraction(1)),
                        cardinality=2)
        result = solve(inst)
        assert result.representatives == [(0, 1, 0, 1)]
        assert result.nondominated == oracle_solve(inst).nondominated


class TestLemmaShortcuts:
    def test_all_nonconflicting_patterns(self, make_instance):
        rng = random.Random(83)
        for alpha, beta, gamma in NONCONFLICTING_PATTERNS:
            for _ in range(3):
                inst = make_instance(
                    seed=rng.randint(0, 10**6), n=rng.randint(1, 8),
                    ktilde=rng.randint(1, 3), khat=rng.randint(1, 3),
                    alpha=alpha, beta=beta, gamma=gamma, fmax=5,
                )
                result = solve(inst)
                if (alpha, beta) != (0, 0):
                    want = (0,) * inst.n if 1 in (alpha, beta, gamma) else (1,) * inst.n
                    assert result.representatives == [want]
                assert result.nondominated == oracle_solve(inst).nondominated


class TestExactness:
    def test_matches_oracle_across_patterns(self, make_instance):
        rng = random.Random(89)
        for alpha, beta, gamma in CONFLICTING_PATTERNS:
            for _ in range(4):
                n = rng.randint(0, 10)
                inst = make_instance(
                    seed=rng.randint(0, 10**6), n=n,
                    ktilde=rng.randint(1, 3), khat=rng.randint(1, 3),
                    alpha=alpha, beta=beta, gamma=gamma,
                    w=rng.choice((None, n // 2)), fmax=6,
                )
                result = solve(inst)
                oracle = oracle_solve(inst)
                assert result.nondominated == oracle.nondominated
                for z, x in zip(result.nondominated, result.representatives):
                    assert outcome(inst, x) == z

    def test_stats_count_the_lattice(self, make_instance):
        inst = make_instance(seed=97, n=8, ktilde=2, khat=2, alpha=1, beta=-1, gamma=1)
        result = solve(inst)
        assert result.stats.algorithm == "epsilon"
        assert result.stats.subproblems == count_rhs_vectors(inst)
        biobj = make_instance(seed=97, n=8, ktilde=3, khat=1, alpha=-1, beta=0, gamma=1, w=4)
        result = solve(biobj)
        assert result.stats.algorithm == "greedy"
        assert result.stats.subproblems == count_counting_vectors_of_size(3, 4)


class TestDeterminism:
    def test_worker_counts_agree(self, make_instance):
        inst = make_instance(seed=101, n=9, ktilde=2, khat=2, alpha=-1, beta=1, gamma=1)
        results = [solve(inst, SolverConfig(workers=k)) for k in (1, 2, 8)]
        for other in results[1:]:
            assert other.nondominated == results[0].nondominated
            assert other.representatives == results[0].representatives

    def test_repeat_runs_identical(self, six_item):
        a = solve(six_item)
        b = solve(six_item)
        assert emit_result(a, "csv", six_item) == emit_result(b, "csv", six_item)


class TestAugmentation:
    def test_filter_removes_nothing(self, make_instance):
        rng = random.Random(103)
        for _ in range(12):
            inst = make_instance(
                seed=rng.randint(0, 10**6), n=rng.randint(1, 8),
                ktilde=rng.randint(1, 3), khat=rng.randint(1, 3),
                alpha=rng.choice((-1, 1)), beta=rng.choice((-1, 0, 1)),
                gamma=rng.choice((-1, 1)), fmax=6,
            )
            result = solve(inst, SolverConfig(augment=auto_delta(inst)))
            assert result.stats.dominated_candidates == 0
            assert result.nondominated == oracle_solve(inst).nondominated

    def test_rejects_pure_ordinal(self, make_instance):
        inst = make_instance(seed=107, n=4, ktilde=2, khat=2, alpha=1, beta=-1, gamma=0)
        with pytest.raises(ValueError):
            solve(inst, SolverConfig(augment=Fraction(1, 100)))

    def test_rejects_out_of_bound_delta(self, four_item_one):
        with pytest.raises(ValueError):
            solve(four_item_one, SolverConfig(augment=Fraction(1, 24)))
        with pytest.raises(ValueError):
            solve(four_item_one, SolverConfig(augment=Fraction(0)))
        solve(four_item_one, SolverConfig(augment=Fraction(1, 25)))  # strict bound ok


class TestOracle:
    def test_refuses_large_instances(self, make_instance):
        inst = make_instance(seed=109, n=21, ktilde=1, alpha=1, beta=0, gamma=-1)
        with pytest.raises(ValueError):
            oracle_solve(inst)

    def test_cardinality_enumeration(self, six_item):
        result = oracle_solve(six_item)
        assert result.stats.subproblems == 20  # C(6, 3)
        assert result.nondominated == solve(six_item).nondominated

    def test_single_item_conflict(self):
        inst = Instance(
            n=1, alpha=1, beta=0, gamma=-1,
            tilde=OrdinalObjective(2, (2,)), f=(Fraction(4),),
        )
        result = oracle_solve(inst)
        assert len(result.nondominated) == 2

    def test_matches_definitional_front(self, make_instance):
        rng = random.Random(113)
        for _ in range(10):
            inst = make_instance(
                seed=rng.randint(0, 10**6), n=rng.randint(0, 9),
                ktilde=rng.randint(1, 3), khat=rng.randint(1, 3),
                alpha=rng.choice((-1, 1)), beta=rng.choice((-1, 1)), gamma=rng.choice((-1, 1)),
                fmax=5,
            )
            front, efficient = helpers.brute_front(inst)
            result = oracle_solve(inst)
            assert result.nondominated == front
            assert all(x in efficient for x in result.representatives)

    def test_slow_path_matches_fast_path(self):
        # huge coefficients force the pure-Python fallback
        big = 2**70
        inst_big = Instance(n=4, alpha=1, beta=0, gamma=-1,
                            tilde=OrdinalObjective(2, (1, 2, 1, 2)),
                            f=(Fraction(big), Fraction(1), Fraction(2), Fraction(3)))
        inst_small = Instance(n=4, alpha=1, beta=0, gamma=-1,
                              tilde=OrdinalObjective(2, (1, 2, 1, 2)),
                              f=(Fraction(7), Fraction(1), Fraction(2), Fraction(3)))
        front_big, _ = helpers.brute_front(inst_big)
        assert oracle_solve(inst_big).nondominated == front_big
        front_small, _ = helpers.brute_front(inst_small)
        assert oracle_solve(inst_small).nondominated == front_small
