import itertools
import random

import pytest

from centroperm.perms import (
    EMPTY,
    all_permutations,
    contains,
    delete_entry,
    direct_sum,
    find_occurrence,
    flatten,
    fmt_perm,
    is_centrosymmetric,
    is_sum_indecomposable,
    parse_permutation,
    permutation,
    reverse_complement,
    skew_sum,
    sum_decompose,
)

FIG_HOST = (4, 9, 3, 1, 2, 5, 8, 7, 6)


class TestParse:
    def test_singleton(self):
        assert parse_permutation("1") == (1,)

    def test_spaced(self):
        assert parse_permutation("4 9 3 1 2 5 8 7 6") == FIG_HOST

    def test_compact_digits(self):
        assert parse_permutation("231") == (2, 3, 1)

    def test_commas(self):
        assert parse_permutation("2, 3, 1") == (2, 3, 1)

    def test_large_entries_need_separators(self):
        p = parse_permutation("10 9 8 7 6 5 4 3 2 1")
        assert p[0] == 10 and len(p) == 10

    def test_empty_text_is_empty_perm(self):
        assert parse_permutation("") == EMPTY
        assert fmt_perm(EMPTY) == ""

    def test_duplicate_names_token(self):
        with pytest.raises(ValueError, match="duplicate.*'2'"):
            parse_permutation("1 2 2")

    def test_out_of_range_names_token(self):
        with pytest.raises(ValueError, match="'3'.*out of range"):
            parse_permutation("3 1")

    def test_non_integer_names_token(self):
        with pytest.raises(ValueError, match="'x'"):
            parse_permutation("1 x 2")

    def test_round_trip(self):
        for p in all_permutations(4):
            assert parse_permutation(fmt_perm(p)) == p

    def test_validating_constructor(self):
        assert permutation([2, 3, 1]) == (2, 3, 1)
        with pytest.raises(ValueError):
            permutation([1, 1])
        with pytest.raises(ValueError):
            permutation([0, 1])


class TestReverseComplement:
    def test_monotone_fixed(self):
        assert reverse_complement((1, 2, 3)) == (1, 2, 3)

    def test_312(self):
        assert reverse_complement((3, 1, 2)) == (2, 3, 1)

    def test_2413_fixed(self):
        assert reverse_complement((2, 4, 1, 3)) == (2, 4, 1, 3)

    def test_involution_exhaustive_small(self):
        for p in all_perms():
            assert reverse_complement(reverse_complement(p)) == p

    def test_involution_sampled_large(self):
        rng = random.Random(20240917)
        for n in (8, 9, 10):
            for _ in range(40):
                p = tuple(rng.sample(range(1, n + 1), n))
                assert reverse_complement(reverse_complement(p)) == p

    def test_preserves_containment(self):
        # full product: hosts to size 7 with patterns to size 3, and all
        # pairs when both sides are at most size 5
        patterns3 = [q for k in range(4) for q in itertools.permutations(range(1, k + 1))]
        for n in range(8):
            for p in itertools.permutations(range(1, n + 1)):
                rp = reverse_complement(p)
                for q in patterns3:
                    if contains(p, q):
                        assert contains(rp, reverse_complement(q))
        perms5 = [q for k in range(6) for q in itertools.permutations(range(1, k + 1))]
        for p in perms5:
            for q in perms5:
                if contains(p, q):
                    assert contains(reverse_complement(p), reverse_complement(q))

    def test_antidistributes_over_direct_sum(self):
        perms4 = [q for k in range(5) for q in itertools.permutations(range(1, k + 1))]
        for a in perms4:
            for b in perms4:
                assert reverse_complement(direct_sum(a, b)) == direct_sum(
                    reverse_complement(b), reverse_complement(a)
                )


def all_perms(max_n: int = 6):
    for n in range(max_n + 1):
        yield from itertools.permutations(range(1, n + 1))


class TestCentrosymmetric:
    def test_examples(self):
        assert is_centrosymmetric((1, 2, 3))
        assert is_centrosymmetric((3, 4, 1, 2))
        assert not is_centrosymmetric((3, 1, 2))
        assert is_centrosymmetric(EMPTY)

    def test_odd_size_center_forced(self):
        for n in (5, 7):
            k = n // 2
            for p in itertools.permutations(range(1, n + 1)):
                if is_centrosymmetric(p):
                    assert p[k] == k + 1

    def test_matches_definition(self):
        for p in all_perms():
            assert is_centrosymmetric(p) == (reverse_complement(p) == p)


class TestContainment:
    def test_figure_host_contains_4123(self):
        assert contains(FIG_HOST, (4, 1, 2, 3))

    def test_lex_least_witness(self):
        assert find_occurrence(FIG_HOST, (4, 1, 2, 3)) == (2, 3, 6, 7)

    def test_quoted_subsequence_is_an_occurrence(self):
        # the values 9,3,5,6 (positions 2,3,6,9) are also a witness
        positions = (2, 3, 6, 9)
        values = tuple(FIG_HOST[i - 1] for i in positions)
        assert values == (9, 3, 5, 6)
        assert flatten(values) == (4, 1, 2, 3)

    def test_host_avoids_3142(self):
        assert not contains(FIG_HOST, (3, 1, 4, 2))

    def test_empty_pattern_embeds(self):
        assert contains(FIG_HOST, EMPTY)
        assert find_occurrence(FIG_HOST, EMPTY) == ()
        assert contains(EMPTY, EMPTY)

    def test_pattern_longer_than_host(self):
        assert not contains((1,), (1, 2))

    def test_witness_is_order_isomorphic(self):
        patterns = [q for k in range(4) for q in itertools.permutations(range(1, k + 1))]
        for n in range(7):
            for p in itertools.permutations(range(1, n + 1)):
                for q in patterns:
                    witness = find_occurrence(p, q)
                    if witness is not None:
                        assert len(witness) == len(q)
                        assert all(a < b for a, b in zip(witness, witness[1:]))
                        assert flatten(tuple(p[i - 1] for i in witness)) == q

    def test_matches_brute_force(self):
        perms5 = [q for k in range(6) for q in itertools.permutations(range(1, k + 1))]
        for p in perms5:
            for q in perms5:
                if len(q) > len(p):
                    continue
                brute = any(
                    flatten(tuple(p[i] for i in positions)) == q
                    for positions in itertools.combinations(range(len(p)), len(q))
                )
                assert contains(p, q) == brute


class TestSums:
    def test_direct_sum(self):
        assert direct_sum((2, 1), (1,)) == (2, 1, 3)

    def test_skew_sum(self):
        assert skew_sum((1, 2), (1, 2)) == (3, 4, 1, 2)

    def test_empty_is_identity(self):
        for p in ((1, 3, 2), EMPTY, (2, 1)):
            assert direct_sum(EMPTY, p) == p
            assert direct_sum(p, EMPTY) == p
            assert skew_sum(EMPTY, p) == p

    def test_sizes_add(self):
        assert len(direct_sum((2, 1), (1, 3, 2))) == 5
        assert len(skew_sum((2, 1), (1, 3, 2))) == 5


class TestSumDecompose:
    def test_identity_runs(self):
        assert sum_decompose((1, 2, 3)) == [(1,), (1,), (1,)]

    def test_leading_block(self):
        assert sum_decompose((2, 1, 3, 4)) == [(2, 1), (1,), (1,)]

    def test_indecomposable(self):
        assert sum_decompose((3, 1, 4, 2)) == [(3, 1, 4, 2)]

    def test_round_trip_exhaustive(self):
        for n in range(9):
            for p in itertools.permutations(range(1, n + 1)):
                rebuilt = EMPTY
                for block in sum_decompose(p):
                    assert is_sum_indecomposable(block)
                    rebuilt = direct_sum(rebuilt, block)
                assert rebuilt == p

    def test_indecomposable_examples(self):
        assert is_sum_indecomposable((1,))
        assert not is_sum_indecomposable((1, 2))
        assert is_sum_indecomposable((2, 4, 1, 3))

    def test_empty_is_domain_error(self):
        with pytest.raises(ValueError):
            is_sum_indecomposable(EMPTY)


class TestHelpers:
    def test_flatten(self):
        assert flatten((40, 10, 25)) == (3, 1, 2)
        assert flatten(()) == ()

    def test_delete_entry(self):
        assert delete_entry((3, 1, 4, 2), 2) == (3, 1, 2)
