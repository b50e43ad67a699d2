import random
from fractions import Fraction

import pytest

from omuco.core import outcome
from omuco.dominance import LabeledOutcome, dominates, filter_nondominated

import helpers


class TestDominates:
    def test_singleton_beats_pair(self, four_item_one):
        a = outcome(four_item_one, (1, 0, 0, 0))
        b = outcome(four_item_one, (0, 0, 1, 1))
        assert a == (1, 1, 0, 1, 1, 1, -10)
        assert b == (2, 1, 0, 2, 1, 1, -5)
        assert dominates(a, b)
        assert not dominates(b, a)

    def test_never_dominates_itself(self, four_item_one):
        z = outcome(four_item_one, (1, 0, 1, 0))
        assert not dominates(z, z)

    def test_pair_beats_pair(self, four_item_two):
        a = outcome(four_item_two, (1, 1, 0, 0))
        b = outcome(four_item_two, (0, 0, 1, 1))
        assert a == (2, 1, 0, 2, 1, 0, -15)
        assert b == (2, 1, 0, 2, 1, 0, -12)
        assert dominates(a, b)

    def test_layout_mismatch_is_an_error(self):
        with pytest.raises(ValueError):
            dominates((1, 2), (1, 2, 3))


def _labeled(pairs):
    return [LabeledOutcome(outcome=z, preimage=x) for z, x in pairs]


class TestFilterNondominated:
    def test_six_item_greedy_candidates(self):
        # the six feasible subproblem optima of the six-item example
        candidates = _labeled([
            ((-3, -1, 0, Fraction(13)), (0, 0, 1, 1, 0, 1)),
            ((-3, -1, -1, Fraction(10)), (1, 0, 1, 0, 0, 1)),
            ((-3, -2, -1, Fraction(8)), (1, 0, 1, 1, 0, 0)),
            ((-3, -2, -2, Fraction(6)), (1, 1, 1, 0, 0, 0)),
            ((-3, -3, -2, Fraction(7)), (1, 1, 0, 1, 0, 0)),
            ((-3, -3, -3, Fraction(8)), (1, 1, 0, 0, 1, 0)),
        ])
        result = filter_nondominated(candidates)
        assert result.nondominated == [
            (-3, -3, -3, Fraction(8)),
            (-3, -3, -2, Fraction(7)),
            (-3, -2, -2, Fraction(6)),
        ]
        assert result.representatives == [
            (1, 1, 0, 0, 1, 0), (1, 1, 0, 1, 0, 0), (1, 1, 1, 0, 0, 0),
        ]
        assert result.stats.dominated_candidates == 3

    def test_singleton(self):
        result = filter_nondominated(_labeled([((1, 2), (1, 0))]))
        assert result.nondominated == [(1, 2)]
        assert result.representatives == [(1, 0)]

    def test_four_item_two_full_enumeration(self, four_item_two):
        labeled = [
            LabeledOutcome(outcome=outcome(four_item_two, x), preimage=x)
            for x in helpers.all_solutions(4)
        ]
        result = filter_nondominated(labeled)
        assert len(result.nondominated) == 15
        assert (0, 0, 1, 1) not in result.representatives

    def test_duplicates_collapse_to_first_preimage(self):
        result = filter_nondominated(_labeled([
            ((0, 0), (1, 0)),
            ((0, 0), (0, 1)),
        ]))
        assert result.nondominated == [(0, 0)]
        assert result.representatives == [(0, 1)]  # smallest (outcome, bits)
        assert result.stats.duplicate_candidates == 1

    def test_properties_against_definition(self, make_instance):
        rng = random.Random(23)
        for _ in range(20):
            inst = make_instance(
                seed=rng.randint(0, 10**6),
                n=rng.randint(1, 9),
                ktilde=rng.randint(1, 3),
                khat=rng.randint(1, 3),
                alpha=rng.choice((-1, 1)),
                beta=rng.choice((-1, 1)),
                gamma=rng.choice((-1, 1)),
                fmax=4,
            )
            labeled = [
                LabeledOutcome(outcome=outcome(inst, x), preimage=x)
                for x in helpers.all_solutions(inst.n)
            ]
            result = filter_nondominated(labeled)
            # antichain
            for u in result.nondominated:
                for v in result.nondominated:
                    assert not dominates(u, v)
            # domination closure over the input
            front = set(result.nondominated)
            for lo in labeled:
                assert lo.outcome in front or any(
                    dominates(u, lo.outcome) for u in result.nondominated
                )
            # idempotence
            again = filter_nondominated(
                LabeledOutcome(outcome=z, preimage=x)
                for z, x in zip(result.nondominated, result.representatives)
            )
            assert again.nondominated == result.nondominated
            assert again.representatives == result.representatives
            # equality with the definitional oracle
            expected_front, _ = helpers.brute_front(inst)
            assert result.nondominated == expected_front
