"""Shuffles, powers, roots, and admissibility."""

import math
from itertools import product

import pytest
from hypothesis import given, strategies as st

from noncross import (
    NoncrossingPartition,
    Partition,
    SizeMismatchError,
    consecutive_blocks,
    enumerate_k_completing,
    enumerate_ncp,
    is_admissible,
    is_admissible_tuple,
    is_k_completing,
    is_k_preserving,
    one,
    perfect_shuffle,
    power,
    root,
    shuffle_many,
    zero,
)
from noncross.oracles import fuss_catalan, interleave

from conftest import ncps


def admissible_pairs(n):
    return [
        (a, b)
        for a, b in product(enumerate_ncp(n), repeat=2)
        if is_admissible(a, b, n)
    ]


class TestShuffle:
    def test_worked_example(self):
        # The interleaving of two noncrossing operands can cross: blocks
        # {1,7,8} and {6,9} interleave in the output below.
        a = NoncrossingPartition.parse("6: 1 5 6 | 2 4 | 3")
        b = NoncrossingPartition.parse("3: 1 | 2 3")
        out = shuffle_many([a, b], 3)
        assert str(out) == "9: 1 7 8 | 2 5 | 3 | 4 | 6 9"
        assert isinstance(out, Partition)
        assert not out.is_noncrossing()
        assert not is_admissible(a, b, 3)

    def test_single_operand_is_identity(self):
        p = NoncrossingPartition.parse("4: 1 4 | 2 3")
        assert shuffle_many([p], 4) == p
        assert shuffle_many([p], 2) == p

    def test_binary_wrapper(self):
        a = NoncrossingPartition.parse("3: 1 2 | 3")
        b = NoncrossingPartition.parse("3: 1 | 2 3")
        assert perfect_shuffle(a, b, 3) == shuffle_many([a, b], 3)

    def test_operand_size_must_be_a_multiple_of_the_period(self):
        a = NoncrossingPartition.parse("3: 1 2 | 3")
        b = NoncrossingPartition.parse("4: 1 4 | 2 3")
        with pytest.raises(SizeMismatchError):
            shuffle_many([a, b], 3)

    @given(
        st.integers(1, 3).flatmap(
            lambda n: st.tuples(
                st.just(n),
                st.lists(
                    st.integers(1, 2).flatmap(
                        lambda k: st.sampled_from(enumerate_ncp(k * n))
                    ),
                    min_size=1,
                    max_size=3,
                ),
            )
        )
    )
    def test_matches_the_index_oracle(self, case):
        n, operands = case
        out = shuffle_many(operands, n)
        expected = interleave(
            [p.blocks for p in operands], [p.n for p in operands], n
        )
        assert set(out.blocks) == set(expected)


class TestPowerRoot:
    def test_power_blows_elements_into_runs(self):
        p = NoncrossingPartition.parse("3: 1 2 | 3")
        assert str(power(p, 2)) == "6: 1 2 3 4 | 5 6"
        assert power(one(3), 3) == one(9)
        assert power(zero(3), 3) == consecutive_blocks(9, 3)

    def test_power_one_is_identity(self):
        p = NoncrossingPartition.parse("4: 1 4 | 2 3")
        assert power(p, 1) == p

    @given(ncps(min_n=1, max_n=4), st.integers(1, 3), st.integers(1, 3))
    def test_power_is_multiplicative_in_the_exponent(self, p, j, k):
        assert power(power(p, j), k) == power(p, j * k)

    @given(ncps(min_n=1, max_n=4), st.integers(1, 3))
    def test_root_inverts_power(self, p, k):
        assert root(power(p, k), k) == p

    def test_root_returns_none_when_a_run_straddles_blocks(self):
        assert root(zero(9), 3) is None
        assert root(NoncrossingPartition.parse("4: 1 2 3 | 4"), 2) is None

    def test_root_of_extremes(self):
        assert root(one(9), 3) == one(3)
        assert root(consecutive_blocks(9, 3), 3) == zero(3)

    def test_root_requires_divisible_size(self):
        with pytest.raises(SizeMismatchError):
            root(one(4), 3)


class TestAdmissibility:
    def test_pair_counts(self):
        # Ordered admissible pairs, counted exhaustively: 12 of the 25 at
        # n = 3 and 55 of the 196 at n = 4.
        assert len(admissible_pairs(3)) == 12
        assert len(admissible_pairs(4)) == 55

    @pytest.mark.parametrize("n,k", [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3)])
    def test_tuple_counts_follow_the_fuss_catalan_formula(self, n, k):
        count = sum(
            1
            for t in product(enumerate_ncp(n), repeat=k)
            if is_admissible_tuple(t, n)
        )
        assert count == fuss_catalan(n, k)
        assert count == math.comb((k + 1) * n, n) // (k * n + 1)

    def test_admissible_iff_shuffle_noncrossing(self):
        for n in (2, 3):
            for a, b in product(enumerate_ncp(n), repeat=2):
                assert is_admissible(a, b, n) == shuffle_many([a, b], n).is_noncrossing()

    def test_unit_is_two_sided_admissible(self):
        for p in enumerate_ncp(4):
            assert is_admissible(zero(4), p, 4)
            assert is_admissible(p, zero(4), 4)


class TestPreservingCompleting:
    def test_preserving_means_blocks_constant_mod_k(self):
        p = NoncrossingPartition.parse("4: 1 3 | 2 | 4")
        assert is_k_preserving(p, 2)
        assert not is_k_preserving(NoncrossingPartition.parse("4: 1 2 | 3 | 4"), 2)

    def test_preserving_members_of_ncp4(self):
        found = [str(p) for p in enumerate_ncp(4) if is_k_preserving(p, 2)]
        assert found == ["4: 1 | 2 | 3 | 4", "4: 1 | 2 4 | 3", "4: 1 3 | 2 | 4"]

    def test_completing_means_join_with_runs_is_full(self):
        from noncross import NotKPreservingError, join

        for p in enumerate_ncp(4):
            if not is_k_preserving(p, 2):
                # The predicate is only defined on the k-preserving subset.
                with pytest.raises(NotKPreservingError):
                    is_k_completing(p, 2)
                continue
            expected = join(p, consecutive_blocks(4, 2)) == one(4)
            assert is_k_completing(p, 2) == expected

    def test_enumerate_k_completing(self):
        found = [str(p) for p in enumerate_k_completing(2, 2)]
        assert found == ["4: 1 | 2 4 | 3", "4: 1 3 | 2 | 4"]

    @pytest.mark.parametrize(
        "n,k,count",
        [
            # k-preserving k-completing members of NCP(kn) are counted by
            # the same Fuss-Catalan numbers as admissible (k-1)-tuples.
            (3, 2, 5),
            (3, 3, 12),
            (3, 4, 22),
            (2, 4, 4),
        ],
    )
    def test_completing_counts(self, n, k, count):
        assert len(enumerate_k_completing(n, k)) == count == fuss_catalan(n, k - 1)
