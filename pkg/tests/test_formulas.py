import pytest

from akchar.combinat import list_multipartitions
from akchar.formulas import (
    CharSpec,
    bracket,
    character_value,
    coef,
    coef_first_order,
    group_character_value,
    hook_sum_rhs,
    pair_regev_rhs,
    theta,
    theta1_closed,
    theta2_closed,
    theta_j,
    wreath_hook_value,
)
from akchar.operators import char_value_oracle
from akchar.rings import (
    CycloElem,
    MultiPoly,
    TruncSeries,
    expand_at_q1,
    specialize_to_group,
)


def mp(text, m=0):
    return MultiPoly.from_text(text, m)


class TestBracket:
    def test_empty(self):
        assert bracket(0, "q") == 0
        assert bracket(0, "-q") == 0

    def test_two(self):
        assert bracket(2, "-q") == mp("1 - q")

    def test_three(self):
        assert bracket(3, "-q") == mp("1 - q + q^2")

    def test_plain_q(self):
        assert bracket(3, "q") == mp("1 + q + q^2")

    def test_bad_sign(self):
        with pytest.raises(ValueError):
            bracket(2, "+q")


class TestTheta:
    def test_identity_block(self):
        spec = CharSpec.ones(1)
        assert theta(1, 1, spec) == 2

    def test_two_block(self):
        spec = CharSpec.ones(1)
        assert theta(1, 2, spec) == mp("2 - 2*q", 1)

    def test_color_two_singleton(self):
        spec = CharSpec(2, (1, 1), (0, 0))
        assert theta(2, 1, spec) == mp("u1 + u2", 2)

    def test_range_checks(self):
        spec = CharSpec.ones(1)
        with pytest.raises(ValueError):
            theta(2, 1, spec)
        with pytest.raises(ValueError):
            theta(1, 0, spec)


class TestCharacterValue:
    def test_identity(self):
        assert character_value(((1, 1),), CharSpec.ones(1)) == 4

    def test_matches_oracle_example(self):
        value = character_value(((2,),), CharSpec.ones(1))
        assert value == mp("2 - 2*q", 1)
        assert value == char_value_oracle(((2,),), (1,), (1,))

    def test_two_colors(self):
        spec = CharSpec(2, (1, 1), (0, 0))
        assert character_value(((1,), (1,)), spec) == mp("2*u1 + 2*u2", 2)

    def test_size_checked(self):
        with pytest.raises(ValueError):
            character_value(((1,),), CharSpec.ones(1, n=2))

    @pytest.mark.parametrize("k,l", [((1,), (1,)), ((2,), (0,)), ((1, 0), (1, 1))])
    def test_oracle_equivalence_small(self, k, l):
        m = len(k)
        spec = CharSpec(m, k, l)
        for n in range(1, 4):
            for mu in list_multipartitions(m, n):
                assert character_value(mu, spec) == char_value_oracle(mu, k, l), mu


class TestGroupValue:
    def test_first_component_singleton(self):
        spec = CharSpec(2, (1, 1), (1, 1))
        assert group_character_value(((1,), ()), spec) == 4

    def test_second_component_singleton(self):
        spec = CharSpec(2, (1, 1), (1, 1))
        assert group_character_value(((), (1,)), spec) == 0

    def test_balanced_two_cycle(self):
        spec = CharSpec.ones(1)
        value = group_character_value(((2,),), spec)
        assert value == 0
        oracle = char_value_oracle(((2,),), (1,), (1,))
        assert specialize_to_group(oracle, 1) == value

    def test_specialization_commutes_small(self):
        for m, k, l in [(2, (1, 1), (1, 1)), (3, (1, 0, 1), (0, 1, 0))]:
            spec = CharSpec(m, k, l)
            for n in range(1, 4):
                for mu in list_multipartitions(m, n):
                    assert specialize_to_group(
                        char_value_oracle(mu, k, l), m
                    ) == group_character_value(mu, spec), mu


class TestSingleHookSlices:
    @pytest.mark.parametrize("i", [1, 2, 3])
    def test_theta1_at_3(self, i):
        assert theta_j(1, i, 3) == mp("1 + q^2")

    def test_theta2_examples(self):
        assert theta_j(2, 1, 3) == mp("1 - 2*q + q^2")
        assert theta_j(2, 2, 3) == mp("5 - 10*q + 5*q^2")

    @pytest.mark.parametrize("i", [1, 2, 3])
    @pytest.mark.parametrize("a", range(1, 9))
    def test_closed_forms(self, i, a):
        assert theta_j(1, i, a) == theta1_closed(a)
        if 2 <= 2 * i:
            assert theta_j(2, i, a) == theta2_closed(i, a), (i, a)

    def test_coef_at_one(self):
        for i in (1, 2, 3):
            assert coef(1, i) == 2

    @pytest.mark.parametrize("a", range(1, 9))
    def test_coef_first_color_exact(self, a):
        assert coef(a, 1) == 2 * bracket(a, "-q")

    def test_coef_2_2_mod_t2(self):
        got = expand_at_q1(coef(2, 2), 2)
        assert got == 6 * TruncSeries.t_power(0, 2)

    @pytest.mark.parametrize("a", range(1, 9))
    @pytest.mark.parametrize("i", [1, 2, 3])
    def test_coef_first_order_mod_t2(self, a, i):
        assert expand_at_q1(coef(a, i), 2) == expand_at_q1(coef_first_order(a, i), 2)

    def test_coef_reassembles_theta(self):
        for m in (1, 2, 3):
            spec = CharSpec.ones(m)
            for r in range(1, m + 1):
                for a in range(1, 5):
                    total = MultiPoly.zero(m)
                    for i in range(1, m + 1):
                        total = total + coef(a, i).embed(m) * MultiPoly.u_power(i, m, r - 1)
                    assert total == theta(r, a, spec), (m, r, a)


class TestHookSum:
    def test_single_three_cycle(self):
        got = hook_sum_rhs(((3,),), 1)
        t = TruncSeries.t_power(1, 2)
        assert got == 2 - 2 * t

    def test_identity_two(self):
        assert hook_sum_rhs(((1, 1),), 1) == TruncSeries.const(4, 1, 2)

    def test_two_color_two_cycle(self):
        got = hook_sum_rhs(((2,), ()), 2)
        assert got == 8 * TruncSeries.t_power(2, 2)
        oracle = char_value_oracle(((2,), ()), (1, 1), (1, 1))
        assert expand_at_q1(oracle, 2) == got

    def test_matches_oracle_small(self):
        for m in (1, 2):
            ones = (1,) * m
            for n in range(1, 4):
                for mu in list_multipartitions(m, n):
                    assert expand_at_q1(
                        char_value_oracle(mu, ones, ones), 2
                    ) == hook_sum_rhs(mu, m), mu


class TestWreath:
    def test_single_odd_part(self):
        assert wreath_hook_value(((3,),), 1) == 2

    def test_two_odd_parts_two_colors(self):
        assert wreath_hook_value(((3, 1), ()), 2) == 16

    def test_even_part(self):
        assert wreath_hook_value(((2,), ()), 2) == 0

    def test_occupied_later_component(self):
        assert wreath_hook_value(((), (1,)), 2) == 0

    def test_matches_group_specialization_small(self):
        for m in (1, 2):
            ones = (1,) * m
            for n in range(1, 5):
                for mu in list_multipartitions(m, n):
                    got = specialize_to_group(char_value_oracle(mu, ones, ones), m)
                    assert got == CycloElem.from_int(m, wreath_hook_value(mu, m)), mu


class TestPairFormula:
    def test_single_box(self):
        series, group = pair_regev_rhs(((1,), ()))
        assert series == TruncSeries.const(1, 2, 2)
        assert group == 2

    def test_two_boxes(self):
        series, group = pair_regev_rhs(((1, 1), ()))
        assert series == TruncSeries.const(2, 2, 2)
        assert group == 8

    def test_needs_two_components(self):
        with pytest.raises(ValueError):
            pair_regev_rhs(((1,),))
