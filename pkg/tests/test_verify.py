import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import plant_framing, random_code

from frameproof import (
    BudgetExceeded,
    base_code,
    framed_witness_holds,
    is_frameproof_cover,
    is_frameproof_naive,
    is_t_determined,
    make_code,
)

FRAMABLE = make_code(2, 2, [(0, 1), (1, 0), (0, 0)])


class TestNaive:
    def test_ternary_base_is_2fp(self):
        assert is_frameproof_naive(base_code("q3"), 2).verdict

    def test_framing_witness_is_deterministic(self):
        report = is_frameproof_naive(FRAMABLE, 2)
        assert not report.verdict
        assert report.witness.coalition == ((0, 1), (1, 0))
        assert report.witness.framed_word == (0, 0)
        assert framed_witness_holds(report.witness)

    def test_rejects_small_c(self):
        with pytest.raises(ValueError):
            is_frameproof_naive(base_code("q3"), 1)

    def test_budget_exceeded(self):
        with pytest.raises(BudgetExceeded) as exc:
            is_frameproof_naive(base_code("q5"), 2, budget=10)
        assert exc.value.examined is not None

    def test_monotone_in_c(self):
        # c-frameproof implies c'-frameproof for c' <= c
        for name in ("q4", "q10"):
            code = base_code(name)
            assert is_frameproof_cover(code, 3).verdict
            assert is_frameproof_cover(code, 2).verdict

    def test_subset_count(self):
        report = is_frameproof_naive(base_code("q3"), 2)
        assert report.subsets_examined == 8 + 28  # singletons + pairs


class TestCover:
    def test_quaternary_base_is_3fp(self):
        assert is_frameproof_cover(base_code("q4"), 3).verdict

    def test_framing_found(self):
        report = is_frameproof_cover(FRAMABLE, 2)
        assert not report.verdict
        assert report.witness.framed_word == (0, 0)
        assert framed_witness_holds(report.witness)

    def test_parallel_matches_serial(self):
        code = base_code("q5")
        serial = is_frameproof_cover(code, 2)
        parallel = is_frameproof_cover(code, 2, jobs=2)
        assert serial.verdict == parallel.verdict is True
        bad = FRAMABLE
        assert is_frameproof_cover(bad, 2, jobs=2).verdict is False

    def test_agrees_with_naive_on_planted_violations(self):
        rng = random.Random(404)
        planted = 0
        for _ in range(40):
            code = random_code(rng, max_q=4, max_l=4, max_size=9)
            out = plant_framing(code, rng, c=3)
            if out is None:
                continue
            planted += 1
            bad, _ = out
            naive = is_frameproof_naive(bad, 3)
            cover = is_frameproof_cover(bad, 3)
            assert naive.verdict is False and cover.verdict is False
            assert framed_witness_holds(naive.witness)
            assert framed_witness_holds(cover.witness)
        assert planted > 10

    @given(st.integers(0, 10_000), st.integers(2, 3))
    @settings(max_examples=80, derandomize=True, deadline=None)
    def test_oracle_equivalence(self, seed, c):
        code = random_code(random.Random(seed), max_q=4, max_l=4, max_size=10)
        naive = is_frameproof_naive(code, c)
        cover = is_frameproof_cover(code, c)
        assert naive.verdict == cover.verdict
        if not naive.verdict:
            assert framed_witness_holds(naive.witness)
            assert framed_witness_holds(cover.witness)

    @given(st.integers(0, 10_000), st.integers(2, 3))
    @settings(max_examples=60, derandomize=True, deadline=None)
    def test_verdicts_match_literal_definition(self, seed, c):
        # ground truth straight from the definition: desc(P) & C == P for
        # every coalition P of size <= c, via actual set enumeration
        from itertools import combinations

        from frameproof import enumerate_descendants

        code = random_code(random.Random(seed), max_q=4, max_l=3, max_size=8)
        word_set = set(code.words)
        expected = True
        for k in range(1, min(c, code.size) + 1):
            for coalition in combinations(code.words, k):
                if enumerate_descendants(coalition) & word_set != set(coalition):
                    expected = False
                    break
            if not expected:
                break
        assert is_frameproof_naive(code, c).verdict == expected
        assert is_frameproof_cover(code, c).verdict == expected


class TestTDetermined:
    def test_base_codes(self):
        for name in ("q3", "q4", "q5", "q10"):
            assert is_t_determined(base_code(name), 2).verdict

    def test_larger_t_still_holds(self):
        # the infinity-count clause is tighter than needed for t+1, and the
        # agreement clause relaxes monotonically
        for name in ("q3", "q4", "q5", "q10"):
            assert is_t_determined(base_code(name), 3).verdict

    def test_all_infinity_word_fails(self):
        code = make_code(4, 3, base_code("q3").words + ((0, 0, 0, 0),), inf_id=0)
        report = is_t_determined(code, 2)
        assert not report.verdict
        assert report.witness.kind == "inf_count"
        assert report.witness.pair == ((0, 0, 0, 0),)
        assert len(report.witness.positions) == 4

    def test_agreement_violation(self):
        code = make_code(3, 3, [(1, 1, 0), (1, 1, 2)], inf_id=0)
        report = is_t_determined(code, 2)
        assert not report.verdict
        assert report.witness.kind == "agreement"
        assert report.witness.pair == ((1, 1, 0), (1, 1, 2))
        assert report.witness.positions == (0, 1)

    def test_requires_infinity_symbol(self):
        with pytest.raises(ValueError):
            is_t_determined(make_code(2, 2, [(0, 1)]), 2)

    def test_requires_positive_t(self):
        with pytest.raises(ValueError):
            is_t_determined(base_code("q3"), 0)

    def test_t_equal_one(self):
        # t=1: no infinity entries at all, and no agreement anywhere
        assert is_t_determined(make_code(3, 3, [(1, 2, 1), (2, 1, 2)], inf_id=0), 1).verdict
        report = is_t_determined(make_code(2, 3, [(1, 1), (1, 2)], inf_id=0), 1)
        assert not report.verdict and report.witness.kind == "agreement"
