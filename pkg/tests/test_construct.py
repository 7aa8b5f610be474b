from collections import Counter

import pytest

from frameproof import (
    BASE_CODE_INFO,
    augment_infinity,
    base_code,
    default_eval_points,
    flatten_pair_alphabet,
    is_frameproof_cover,
    is_frameproof_naive,
    is_t_determined,
    make_code,
    oa_family_code,
    oa_lift,
    polynomial_lift,
    ssw_bound,
)


class TestBaseCodes:
    def test_parameters(self):
        for name, (q, length, size, c) in BASE_CODE_INFO.items():
            code = base_code(name)
            assert (code.q, code.length, code.size) == (q, length, size), name
            assert code.inf_id == 0

    def test_known_members(self):
        assert (0, 1, 1, 1) in base_code("q3").words
        assert (1, 0, 1, 2, 3) in base_code("q4").words

    def test_quaternary_groups(self):
        # fifteen words in five groups of three, grouped by infinity position
        by_inf = Counter(w.index(0) for w in base_code("q4").words)
        assert by_inf == {0: 3, 1: 3, 2: 3, 3: 3, 4: 3}

    def test_star_structure(self):
        for name in BASE_CODE_INFO:
            assert is_t_determined(base_code(name), 2).verdict, name

    def test_small_bases_frameproof(self):
        assert is_frameproof_naive(base_code("q3"), 2).verdict
        assert is_frameproof_naive(base_code("q4"), 3).verdict
        assert is_frameproof_naive(base_code("q5"), 2).verdict

    def test_unknown_name(self):
        with pytest.raises(ValueError):
            base_code("q6")


class TestEvalPoints:
    def test_with_infinity(self):
        assert default_eval_points(3, 4) == (0, 1, 2, None)

    def test_without_infinity(self):
        assert default_eval_points(5, 4) == (0, 1, 2, 3)

    def test_too_small(self):
        with pytest.raises(ValueError):
            default_eval_points(2, 4)


class TestPolynomialLift:
    def test_smallest_lift(self):
        lifted = polynomial_lift(base_code("q3"), 3, 2, 2)
        assert (lifted.q, lifted.length, lifted.size) == (7, 4, 72)
        assert lifted.size == 2 * (lifted.q - 1) ** 2
        assert is_t_determined(lifted, 2).verdict

    def test_quaternary_lift(self):
        lifted = polynomial_lift(base_code("q4"), 4, 2, 3)
        assert (lifted.q, lifted.size) == (13, 240)
        assert 3 * lifted.size == 5 * (lifted.q - 1) ** 2
        assert is_t_determined(lifted, 2).verdict

    def test_projection_recovers_parents(self):
        parent = base_code("q3")
        m = 3
        lifted = polynomial_lift(parent, m, 2, 2)
        pair = flatten_pair_alphabet(parent.q, m)

        def project(word):
            out = []
            for sym in word:
                split = pair.unflatten(sym)
                out.append(0 if split is None else split[0])
            return tuple(out)

        counts = Counter(project(w) for w in lifted.words)
        assert counts == {w: m**2 for w in parent.words}

    def test_within_cardinality_bound(self):
        lifted = polynomial_lift(base_code("q3"), 3, 2, 2)
        assert lifted.size <= ssw_bound(2, lifted.length, lifted.q)

    def test_custom_points_same_size(self):
        parent = base_code("q3")
        a = polynomial_lift(parent, 5, 2, 2, points=(0, 1, 2, 3))
        b = polynomial_lift(parent, 5, 2, 2, points=(4, 2, None, 0))
        assert a.size == b.size == 200
        assert is_t_determined(a, 2).verdict and is_t_determined(b, 2).verdict

    def test_trust_skips_revalidation(self):
        parent = base_code("q3")
        assert polynomial_lift(parent, 3, 2, 2, trust=True) == polynomial_lift(
            parent, 3, 2, 2
        )

    def test_preconditions(self):
        parent = base_code("q3")
        with pytest.raises(ValueError, match="prime power"):
            polynomial_lift(parent, 6, 2, 2)
        with pytest.raises(ValueError, match="too small"):
            polynomial_lift(parent, 2, 2, 2)
        with pytest.raises(ValueError, match="c >= t"):
            polynomial_lift(parent, 3, 3, 2)
        with pytest.raises(ValueError, match="r in"):
            polynomial_lift(parent, 3, 2, 3)  # length 4 != 3*(2-1)+r, r in {2,3}
        with pytest.raises(ValueError, match="infinity"):
            polynomial_lift(make_code(4, 3, [(1, 1, 1, 1)]), 3, 2, 2)
        with pytest.raises(ValueError, match="distinct"):
            polynomial_lift(parent, 3, 2, 2, points=(0, 0, 1, 2))
        bad = make_code(4, 3, [(1, 1, 1, 1), (1, 1, 1, 2)], inf_id=0)
        with pytest.raises(ValueError, match="determined"):
            polynomial_lift(bad, 3, 2, 2)


class TestAugment:
    def test_base_augment(self):
        bigger = augment_infinity(base_code("q3"), 2, 2)
        assert bigger.size == 9
        assert (0, 0, 0, 0) in bigger.words
        assert is_frameproof_naive(bigger, 2).verdict

    def test_lift_then_augment(self):
        lifted = polynomial_lift(base_code("q3"), 3, 2, 2)
        assert augment_infinity(lifted, 2, 2).size == 73

    def test_double_augment_rejected(self):
        bigger = augment_infinity(base_code("q3"), 2, 2)
        with pytest.raises(ValueError, match="already present|determined"):
            augment_infinity(bigger, 2, 2)
        # even with trust, the duplicate is caught
        with pytest.raises(ValueError, match="already present"):
            augment_infinity(bigger, 2, 2, trust=True)

    def test_requires_infinity(self):
        with pytest.raises(ValueError):
            augment_infinity(make_code(4, 3, [(1, 1, 1, 1)]), 2, 2)


class TestOaRecipes:
    def test_lift_from_array(self):
        code = oa_lift(4, 2, 5, 4, 3)
        assert (code.q, code.length, code.size) == (13, 5, 240)
        assert is_t_determined(code, 2).verdict

    def test_matches_plain_lift_in_size(self):
        via_oa = oa_lift(3, 2, 4, 3, 2)
        via_base = polynomial_lift(base_code("q3"), 3, 2, 2)
        assert via_oa.size == via_base.size == 72
        # word sets may differ; both must still be 2-frameproof
        assert is_frameproof_cover(via_oa, 2).verdict
        assert is_frameproof_cover(via_base, 2).verdict

    def test_wider_family(self):
        code = oa_lift(5, 2, 6, 5, 4)
        assert (code.q, code.length, code.size) == (21, 6, 600)
        assert 4 * code.size == 6 * (code.q - 1) ** 2

    def test_unsupported_parameters(self):
        with pytest.raises(ValueError, match="unsupported"):
            oa_lift(4, 3, 5, 4, 3)
        with pytest.raises(ValueError, match="unsupported"):
            oa_lift(4, 2, 6, 4, 3)

    def test_family_codes(self):
        code = oa_family_code(3, 4)
        assert (code.q, code.length, code.size) == (13, 5, 240)
        wide = oa_family_code(4, 7)
        assert (wide.q, wide.length, wide.size) == (29, 6, 1176)
        assert is_t_determined(wide, 2).verdict

    def test_family_matches_planned_size(self):
        code = oa_family_code(2, 3)
        assert (code.q, code.size) == (7, 72)
        assert is_frameproof_cover(code, 2).verdict

    def test_family_preconditions(self):
        with pytest.raises(ValueError, match="prime power"):
            oa_family_code(5, 7)  # c+1 = 6 is not a prime power
        with pytest.raises(ValueError, match="prime power"):
            oa_family_code(3, 3)  # m below c+1
