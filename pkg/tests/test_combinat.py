import itertools

import pytest

from akchar.combinat import (
    GradedPair,
    compositions,
    count_semistandard,
    count_standard_multitableaux,
    format_multipartition,
    list_graded_pairs,
    list_hook_multipartitions,
    list_multipartitions,
    mp_length,
    mp_num_nonzero,
    mp_size,
    pair_stats,
    parse_multipartition,
    word_group,
    word_hecke,
)


def partition_count(n):
    # independent oracle: classical recurrence p(n) = sum over parts
    table = [[0] * (n + 1) for _ in range(n + 1)]
    for maxp in range(n + 1):
        table[maxp][0] = 1
    for maxp in range(1, n + 1):
        for tot in range(1, n + 1):
            table[maxp][tot] = table[maxp - 1][tot] + (
                table[maxp][tot - maxp] if tot >= maxp else 0
            )
    return table[n][n]


class TestMultipartitions:
    def test_m1_n3(self):
        assert list_multipartitions(1, 3) == [((3,),), ((2, 1),), ((1, 1, 1),)]

    def test_m2_n1(self):
        assert list_multipartitions(2, 1) == [(((1,), ())), ((), (1,))]

    def test_m2_n2_count(self):
        assert len(list_multipartitions(2, 2)) == 5

    def test_empty_size(self):
        assert list_multipartitions(3, 0) == [((), (), ())]

    @pytest.mark.parametrize("m", [1, 2, 3])
    @pytest.mark.parametrize("n", range(9))
    def test_counts_against_convolution_oracle(self, m, n):
        # number of m-multipartitions of n = sum over size splits of products
        # of single-partition counts
        expected = 0
        for split in itertools.product(range(n + 1), repeat=m):
            if sum(split) == n:
                prod = 1
                for a in split:
                    prod *= partition_count(a)
                expected += prod
        got = list_multipartitions(m, n)
        assert len(got) == expected
        assert len(set(got)) == expected

    def test_sorted_and_duplicate_free(self):
        mps = list_multipartitions(3, 4)
        assert mps == sorted(mps, reverse=True)
        assert len(set(mps)) == len(mps)


class TestGradedPairs:
    def test_a1_m1(self):
        got = list_graded_pairs(1, (1,), (1,))
        assert {(p.alpha, p.beta) for p in got} == {
            ((((1,),)), ((),)),
            (((),), (((1,),))),
        }
        assert len(got) == 2

    def test_a2_m1(self):
        got = list_graded_pairs(2, (1,), (1,))
        assert {(p.alpha, p.beta) for p in got} == {
            ((((2,),)), ((),)),
            (((),), (((2,),))),
            ((((1,),)), (((1,),))),
        }

    def test_alpha_forbidden(self):
        got = list_graded_pairs(1, (0,), (1,))
        assert [(p.alpha, p.beta) for p in got] == [(((),), ((1,),))]

    def test_empty_possible(self):
        assert list_graded_pairs(1, (0,), (0,)) == []

    def test_bounds_respected_and_duplicate_free(self):
        k, l = (2, 1), (0, 2)
        got = list_graded_pairs(3, k, l)
        seen = set()
        for p in got:
            assert (p.alpha, p.beta) not in seen
            seen.add((p.alpha, p.beta))
            assert sum(map(sum, p.alpha)) + sum(map(sum, p.beta)) == 3
            for comp, bound in zip(p.alpha + p.beta, k + l):
                assert len(comp) <= bound
                assert all(x > 0 for x in comp)

    @pytest.mark.parametrize("m", [1, 2])
    @pytest.mark.parametrize("a", [1, 2, 3])
    def test_unbounded_count_matches_enumeration_oracle(self, m, a):
        # with bounds >= a the list must realize every pair of m-tuples of
        # compositions; oracle by direct product enumeration
        def multicomps(total):
            out = []
            def rec(slot, left, acc):
                if slot == m:
                    if left == 0:
                        out.append(acc)
                    return
                for size in range(left + 1):
                    for comp in compositions(size, size):
                        rec(slot + 1, left - size, acc + (comp,))
            rec(0, total, ())
            return out

        expected = 0
        for b in range(a + 1):
            expected += len(multicomps(b)) * len(multicomps(a - b))
        got = list_graded_pairs(a, (a,) * m, (a,) * m)
        assert len(got) == expected

    def test_stats_m1(self):
        p = GradedPair(((1,),), ((1,),))
        assert pair_stats(p) == (2, 1, 1, 1)

    def test_stats_m2_spread(self):
        p = GradedPair(((1,), ()), ((), (2,)))
        assert pair_stats(p) == (2, 2, 2, 1)

    def test_stats_m2_first_component(self):
        p = GradedPair(((2, 1), ()), ((), ()))
        assert pair_stats(p) == (2, 1, 0, 0)


class TestHooks:
    def test_all_of_n3_are_11_hooks(self):
        assert list_hook_multipartitions(3, (1,), (1,)) == list_multipartitions(1, 3)

    def test_single_row_only(self):
        assert list_hook_multipartitions(3, (1,), (0,)) == [((3,),)]

    def test_m2_all_pass(self):
        got = list_hook_multipartitions(2, (1, 1), (1, 1))
        assert got == list_multipartitions(2, 2)


class TestSemistandard:
    def test_two_cells_row(self):
        assert count_semistandard(((2,),), (1,), (1,)) == 2

    def test_two_singletons(self):
        assert count_semistandard(((1,), (1,)), (1, 1), (1, 1)) == 4

    def test_square_not_a_hook(self):
        assert count_semistandard(((2, 2),), (1,), (1,)) == 0

    def test_positive_iff_hook_small(self):
        for n in range(5):
            for k1 in range(3):
                for l1 in range(3):
                    hooks = set(list_hook_multipartitions(n, (k1,), (l1,)))
                    for mu in list_multipartitions(1, n):
                        s = count_semistandard(mu, (k1,), (l1,))
                        assert (s > 0) == (mu in hooks), (mu, k1, l1, s)

    def test_power_of_two_on_single_hooks(self):
        for m in (1, 2, 3):
            ones = (1,) * m
            for n in range(1, 5):
                for mu in list_hook_multipartitions(n, ones, ones):
                    assert count_semistandard(mu, ones, ones) == 2 ** mp_num_nonzero(mu)


class TestStandardCounts:
    def test_hook_21(self):
        assert count_standard_multitableaux(((2, 1),)) == 2

    def test_two_singletons(self):
        assert count_standard_multitableaux(((1,), (1,))) == 2

    @pytest.mark.parametrize("n", range(1, 7))
    def test_single_row(self, n):
        assert count_standard_multitableaux(((n,),)) == 1

    def test_exhaustive_cross_check(self):
        def exhaustive(mu):
            # remove a corner carrying the largest label, in every way
            if mp_size(mu) == 0:
                return 1
            total = 0
            for ci, comp in enumerate(mu):
                for ri in range(len(comp)):
                    if ri == len(comp) - 1 or comp[ri + 1] < comp[ri]:
                        new = list(comp)
                        new[ri] -= 1
                        if new[ri] == 0:
                            new.pop(ri)
                        total += exhaustive(
                            mu[:ci] + (tuple(new),) + mu[ci + 1:]
                        )
            return total

        for m in (1, 2):
            for n in range(7):
                for mu in list_multipartitions(m, n):
                    assert count_standard_multitableaux(mu) == exhaustive(mu), mu


class TestWords:
    def test_group_identity_block(self):
        assert word_group(((1,), ())) == ()

    def test_group_t1(self):
        assert word_group(((), (1,))) == (("s", 0),)

    def test_group_single_transposition(self):
        assert word_group(((2,),)) == (("s", 1),)

    def test_group_t2_expansion(self):
        # one block of size 2 in component 2: t_2 then the interior s_1
        assert word_group(((), (2,))) == (
            ("s", 1), ("s", 0), ("s", 1), ("s", 1),
        )

    def test_hecke_single_braid(self):
        assert word_hecke(((2,),)) == (("g", 1),)

    def test_hecke_two_color_scalings(self):
        assert word_hecke(((), (1, 1))) == (("xi", 1, 1), ("xi", 2, 1))

    def test_hecke_first_block_silent(self):
        assert word_hecke(((1,), (1,))) == (("xi", 2, 1),)

    def test_symbol_count_invariant(self):
        for m in (1, 2, 3):
            for n in range(1, 6):
                for mu in list_multipartitions(m, n):
                    word = word_hecke(mu)
                    braids = [s for s in word if s[0] == "g"]
                    xis = [s for s in word if s[0] == "xi"]
                    assert len(braids) == n - mp_length(mu)
                    for r, comp in enumerate(mu, start=1):
                        with_power = [s for s in xis if s[2] == r - 1]
                        if r == 1:
                            continue
                        assert len(with_power) == len(comp)


class TestParsing:
    def test_round_trip(self):
        mu = ((3, 1), (), (2,))
        assert parse_multipartition(format_multipartition(mu)) == mu

    def test_malformed(self):
        with pytest.raises(ValueError):
            parse_multipartition("[[2,]]")

    def test_increasing_rejected(self):
        with pytest.raises(ValueError):
            parse_multipartition("[[1,2]]")

    def test_component_count_checked(self):
        with pytest.raises(ValueError):
            parse_multipartition("[[1]]", m=2)
