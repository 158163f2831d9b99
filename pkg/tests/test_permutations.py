from math import factorial

from hypothesis import given, settings
from hypothesis import strategies as st

from braidedforms.permutations import (
    Partition,
    Permutation,
    all_permutations,
    shuffle_set,
    word_to_permutation,
)

perms4 = st.permutations(list(range(1, 5))).map(Permutation)


class TestPermutation:
    def test_length(self):
        assert Permutation.identity(4).length() == 0
        assert Permutation.transposition(3, 1).length() == 1
        for n in range(1, 6):
            rev = Permutation(range(n, 0, -1))
            assert rev.length() == n * (n - 1) // 2

    def test_reduced_expression_examples(self):
        assert Permutation.identity(3).reduced_expression() == ()
        assert Permutation.transposition(4, 2).reduced_expression() == (2,)
        rev3 = Permutation((3, 2, 1))
        assert len(rev3.reduced_expression()) == 3

    @settings(max_examples=60, deadline=None)
    @given(perms4)
    def test_reduced_words_multiply_back(self, p):
        for word in (p.reduced_expression(), p.reduced_expression_left()):
            assert len(word) == p.length()
            assert word_to_permutation(4, word) == p

    @settings(max_examples=60, deadline=None)
    @given(perms4, perms4)
    def test_length_subadditive(self, p, q):
        assert (p * q).length() <= p.length() + q.length()
        assert p.inverse().length() == p.length()

    @settings(max_examples=30, deadline=None)
    @given(perms4)
    def test_group_axioms(self, p):
        e = Permutation.identity(4)
        assert p * p.inverse() == e == p.inverse() * p
        assert p * e == p == e * p

    def test_all_permutations_count(self):
        for n in range(1, 6):
            assert len(list(all_permutations(n))) == factorial(n)


class TestShuffles:
    def test_cardinality_is_multinomial(self):
        for parts in [(3,), (2, 1), (1, 1, 1), (2, 2), (0, 3), (1, 2, 2)]:
            pi = Partition(parts)
            for side in ("upper", "lower"):
                assert len(shuffle_set(pi, side)) == pi.multinomial_count()

    def test_trivial_partition(self):
        assert shuffle_set(Partition([4]), "upper") == [Permutation.identity(4)]

    def test_singleton_parts_give_whole_group(self):
        got = set(shuffle_set(Partition([1, 1, 1]), "upper"))
        assert got == set(all_permutations(3))

    def test_lower_shuffles_block_monotone(self):
        pi = Partition([2, 2])
        for sigma in shuffle_set(pi, "lower"):
            for start, end in pi.blocks():
                values = [sigma(i) for i in range(start, end + 1)]
                assert values == sorted(values)

    def test_upper_shuffles_preserve_order_onto_blocks(self):
        # the inverse convention: sigma^-1 increasing on each block
        pi = Partition([2, 1, 2])
        upper = set(shuffle_set(pi, "upper"))
        lower = set(shuffle_set(pi, "lower"))
        assert {p.inverse() for p in upper} == lower
