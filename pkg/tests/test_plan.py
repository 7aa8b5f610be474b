from fractions import Fraction

import pytest

from frameproof import (
    ConstructionPlan,
    achieved_rate,
    blackburn_leading,
    bound_report,
    execute_plan,
    execute_steps,
    factor_prime_powers,
    format_plan,
    is_frameproof_cover,
    is_t_determined,
    plan_c2,
    plan_c3,
    plan_code,
    ssw_bound,
)


class TestPlanning:
    def test_smallest_composed_plan(self):
        plan = plan_c2(7)
        assert plan.steps == (("base", "q3"), ("lift", 3), ("augment",))
        assert plan.expected_size == 73

    def test_five_uses_large_base(self):
        plan = plan_c2(5)
        assert plan.steps == (("base", "q5"), ("augment",))
        assert plan.expected_size == 33

    def test_prime_power_half(self):
        plan = plan_c2(19)  # (q-1)/2 = 9 = 3**2
        assert plan.steps == (("base", "q3"), ("lift", 9), ("augment",))
        assert plan.expected_size == 649

    def test_composite_half_recurses(self):
        plan = plan_c2(13)  # (q-1)/2 = 6 -> factor 3, inner target q=5
        assert plan.steps == (("base", "q5"), ("lift", 3), ("augment",))

    def test_two_level_recursion(self):
        plan = plan_c2(25)  # m=12 -> factor 3, inner q=9 -> m=4 prime power
        assert plan.steps == (("base", "q3"), ("lift", 4), ("lift", 3), ("augment",))

    def test_c3_small(self):
        assert plan_c3(4).steps == (("base", "q4"), ("augment",))
        assert plan_c3(4).expected_size == 16
        assert plan_c3(10).steps == (("base", "q10"), ("augment",))
        assert plan_c3(10).expected_size == 136

    def test_c3_lifted(self):
        plan = plan_c3(22)
        assert plan.steps == (("base", "q4"), ("lift", 7), ("augment",))
        assert plan.expected_size == 736

    def test_c3_recursive(self):
        plan = plan_c3(46)  # m=15 -> factor 5, inner q=10
        assert plan.steps == (("base", "q10"), ("lift", 5), ("augment",))

    def test_validation(self):
        with pytest.raises(ValueError):
            plan_c2(8)
        with pytest.raises(ValueError):
            plan_c2(1)
        with pytest.raises(ValueError):
            plan_c3(9)
        with pytest.raises(ValueError):
            plan_code(4, 21)

    def test_deterministic(self):
        for q in (7, 13, 25, 31):
            assert plan_c2(q) == plan_c2(q)
        assert plan_c3(22) == plan_c3(22)

    def test_bad_plans_rejected_at_construction(self):
        with pytest.raises(ValueError, match="no steps"):
            ConstructionPlan(2, 4, 7, 73, (), "c2")
        with pytest.raises(ValueError, match="prime power"):
            ConstructionPlan(
                2, 4, 13, 289, (("base", "q3"), ("lift", 6), ("augment",)), "c2"
            )
        with pytest.raises(ValueError, match="final"):
            ConstructionPlan(
                2, 4, 3, 9, (("base", "q3"), ("augment",), ("lift", 3)), "c2"
            )


class TestExecution:
    def test_targets_met(self):
        for c, q, size in ((2, 7, 73), (2, 5, 33), (2, 19, 649), (3, 4, 16), (3, 22, 736)):
            code = execute_plan(plan_code(c, q))
            assert (code.q, code.size) == (q, size)

    def test_star_structure_before_augment(self):
        plan = plan_c2(19)
        chain = execute_steps(plan.steps[:-1], plan.c)
        assert is_t_determined(chain, 2).verdict
        assert chain.size == plan.expected_size - 1

    def test_executed_code_verifies(self):
        code = execute_plan(plan_c2(9))
        assert is_frameproof_cover(code, 2).verdict

    def test_mismatch_fails_loudly(self):
        plan = ConstructionPlan(
            2, 4, 7, 99, (("base", "q3"), ("lift", 3), ("augment",)), "c2"
        )
        with pytest.raises(RuntimeError, match="expected"):
            execute_plan(plan)

    def test_empty_steps(self):
        with pytest.raises(ValueError):
            execute_steps((), 2)

    def test_format_plan_tracks_parameters(self):
        text = format_plan(plan_c2(25))
        assert "target: c=2 q=25 length=4 size=1153" in text
        assert "lift by GF(4): q=9 M=128" in text
        assert "lift by GF(3): q=25 M=1152" in text
        assert text.strip().endswith("augment infinity: q=25 M=1153")


class TestFactorization:
    def test_examples(self):
        assert factor_prime_powers(45) == ((3, 2), (5, 1))
        assert factor_prime_powers(7) == ((7, 1),)
        assert factor_prime_powers(1024) == ((2, 10),)


class TestBounds:
    def test_ssw_values(self):
        assert ssw_bound(2, 4, 7) == 96
        assert ssw_bound(3, 5, 10) == 297
        assert ssw_bound(2, 4, 3) == 16

    def test_leading_values(self):
        assert blackburn_leading(3, 5) == Fraction(5, 3)
        assert blackburn_leading(2, 4) == Fraction(2)
        assert blackburn_leading(3, 4) == Fraction(1)  # length = 1 mod c
        assert blackburn_leading(2, 6) == Fraction(2)

    def test_rates(self):
        assert achieved_rate(2, 4, 7, 73) == Fraction(73, 49)
        assert achieved_rate(3, 5, 4, 16) == Fraction(1)

    def test_rates_increase_towards_leading(self):
        previous = Fraction(0)
        for q in range(3, 32, 2):
            rate = achieved_rate(2, 4, q, 2 * (q - 1) ** 2 + 1)
            assert previous < rate < blackburn_leading(2, 4)
            previous = rate
        previous = Fraction(0)
        for q in (4, 10, 16, 22, 28, 34):
            plan = plan_c3(q)
            rate = achieved_rate(3, 5, q, plan.expected_size)
            assert previous < rate < blackburn_leading(3, 5)
            previous = rate

    def test_report_fields(self):
        report = bound_report(2, 4, 7, achieved_size=73)
        assert report.ssw == 96
        assert report.rate_upper == Fraction(96, 49)
        assert report.achieved_rate == Fraction(73, 49)
        assert bound_report(3, 5, 10).achieved_size is None

    def test_report_rejects_impossible_size(self):
        with pytest.raises(ValueError):
            bound_report(2, 4, 3, achieved_size=17)

    def test_planned_sizes_dominated(self):
        for q in range(3, 32, 2):
            plan = plan_c2(q)
            assert plan.expected_size <= ssw_bound(2, 4, q)
