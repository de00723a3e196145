import pytest
from hypothesis import given, strategies as st

from quasischur.combinatorics import (
    Composition,
    Partition,
    WeakComposition,
    all_permutation_words,
    composition_of_set,
    compositions_of,
    decomposition_count,
    decompositions,
    inverse_permutation,
    pad,
    partitions_of,
    rsk_insert,
    rsk_shape,
    set_of_composition,
)

compositions = st.integers(1, 7).flatmap(
    lambda n: st.sampled_from(list(compositions_of(n)))
)


class TestTypes:
    def test_composition_rejects_zero_parts(self):
        with pytest.raises(ValueError):
            Composition((2, 0, 1))

    def test_composition_rejects_empty(self):
        with pytest.raises(ValueError):
            Composition(())

    def test_weak_composition_allows_zeros(self):
        assert WeakComposition((0, 2, 0)).weight == 2

    def test_weak_composition_rejects_negative(self):
        with pytest.raises(ValueError):
            WeakComposition((1, -1))

    def test_partition_must_decrease(self):
        with pytest.raises(ValueError):
            Partition((1, 2))

    def test_empty_partition(self):
        assert Partition(()).weight == 0


class TestSetCorrespondence:
    def test_paper_example(self):
        assert set_of_composition((2, 3, 2, 1)) == {2, 5, 7}

    def test_single_part_is_empty(self):
        assert set_of_composition((5,)) == frozenset()

    def test_all_ones(self):
        assert set_of_composition((1, 1, 1)) == {1, 2}

    def test_inverse_of_paper_example(self):
        assert composition_of_set({2, 5, 7}, 8) == Composition((2, 3, 2, 1))

    def test_empty_set(self):
        assert composition_of_set(set(), 5) == Composition((5,))

    def test_full_set(self):
        assert composition_of_set({1, 2, 3}, 4) == Composition((1, 1, 1, 1))

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            composition_of_set({4}, 4)

    @given(compositions)
    def test_round_trip(self, alpha):
        n = alpha.weight
        assert composition_of_set(set_of_composition(alpha), n) == alpha

    @given(compositions)
    def test_set_size(self, alpha):
        assert len(set_of_composition(alpha)) == len(alpha) - 1

    def test_reverse_round_trip_on_subsets(self):
        n = 6
        for mask in range(1 << (n - 1)):
            s = frozenset(i + 1 for i in range(n - 1) if mask >> i & 1)
            assert set_of_composition(composition_of_set(s, n)) == s


class TestPad:
    def test_paper_example(self):
        assert pad((2, 3, 2, 1), 8) == WeakComposition((2, 3, 2, 1, 0, 0, 0, 0))

    def test_no_padding_needed(self):
        assert pad((1,), 1) == WeakComposition((1,))

    def test_two_zeros(self):
        assert pad((1, 1), 4) == WeakComposition((1, 1, 0, 0))

    def test_overflow(self):
        with pytest.raises(ValueError):
            pad((1, 1, 1), 2)


class TestDecompositions:
    def test_two_singletons(self):
        result = list(decompositions((1, 1)))
        assert result == [
            (frozenset({1}), frozenset({2})),
            (frozenset({2}), frozenset({1})),
        ]

    def test_single_block(self):
        assert list(decompositions((2,))) == [(frozenset({1, 2}),)]

    def test_333_count(self):
        assert sum(1 for _ in decompositions((3, 3, 3))) == 1680

    @pytest.mark.parametrize("n", range(1, 9))
    def test_multinomial_count(self, n):
        for mu in partitions_of(n):
            blocks = list(decompositions(mu))
            assert len(blocks) == decomposition_count(mu)
            assert len(set(blocks)) == len(blocks)

    def test_block_sizes(self):
        for blocks in decompositions((3, 2, 1)):
            assert [len(b) for b in blocks] == [3, 2, 1]
            assert frozenset().union(*blocks) == frozenset(range(1, 7))


class TestRsk:
    def test_increasing_word(self):
        p, q = rsk_insert((1, 2, 3))
        assert p == q == ((1, 2, 3),)

    def test_hand_example(self):
        p, q = rsk_insert((3, 1, 2))
        assert p == ((1, 2), (3,))
        assert rsk_shape((3, 1, 2)) == Partition((2, 1))

    def test_decreasing_word_gives_column(self):
        assert rsk_shape((2, 1)) == Partition((1, 1))

    def test_rejects_non_permutation(self):
        with pytest.raises(ValueError):
            rsk_insert((1, 1, 2))

    def test_tableaux_are_standard(self):
        for sigma in all_permutation_words(5):
            p, q = rsk_insert(sigma)
            for t in (p, q):
                for row in t:
                    assert all(row[i] < row[i + 1] for i in range(len(row) - 1))
                for i in range(len(t) - 1):
                    assert all(t[i][j] < t[i + 1][j] for j in range(len(t[i + 1])))

    @pytest.mark.parametrize("n", range(1, 7))
    def test_inverse_swaps_tableaux(self, n):
        for sigma in all_permutation_words(n):
            p, q = rsk_insert(sigma)
            pi, qi = rsk_insert(inverse_permutation(sigma))
            assert (pi, qi) == (q, p)


def test_compositions_of_counts():
    for n in range(1, 9):
        comps = list(compositions_of(n))
        assert len(comps) == 2 ** (n - 1)
        assert len(set(comps)) == len(comps)
        assert all(c.weight == n for c in comps)


def test_partitions_of_counts():
    counts = [len(list(partitions_of(n))) for n in range(9)]
    assert counts == [1, 1, 2, 3, 5, 7, 11, 15, 22]
