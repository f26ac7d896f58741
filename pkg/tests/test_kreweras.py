"""Kreweras complements, the partial product, and the tuple pictures."""

from itertools import product

import pytest
from hypothesis import given, strategies as st

from noncross import (
    NoncrossingPartition,
    NotAdmissibleError,
    NotDividingError,
    complete_tuple,
    completing_to_tuple,
    compose,
    compose_many,
    divides,
    enumerate_ncp,
    is_admissible,
    is_admissible_tuple,
    is_k_completing,
    is_k_preserving,
    kpreserving_to_tuple,
    kreweras,
    kreweras_order,
    multichain_to_tuple,
    one,
    relative_kreweras,
    tuple_to_completing,
    tuple_to_kpreserving,
    tuple_to_multichain,
    zero,
)

from conftest import ncps


def admissible_tuples(n, k):
    return [
        t
        for t in product(enumerate_ncp(n), repeat=k)
        if is_admissible_tuple(t, n)
    ]


class TestCompose:
    def test_worked_example(self):
        a = NoncrossingPartition.parse("3: 1 2 | 3")
        b = NoncrossingPartition.parse("3: 1 | 2 3")
        assert compose(a, b) == one(3)
        # The reversed pair shuffles with a crossing, so the product is
        # undefined there.
        assert compose(b, a) is None

    def test_unit(self):
        for p in enumerate_ncp(4):
            assert compose(zero(4), p) == p
            assert compose(p, zero(4)) == p

    def test_defined_exactly_on_admissible_pairs(self):
        for n in (2, 3):
            for a, b in product(enumerate_ncp(n), repeat=2):
                assert (compose(a, b) is not None) == is_admissible(a, b, n)

    def test_compose_many_raises_instead_of_none(self):
        a = NoncrossingPartition.parse("3: 1 2 | 3")
        b = NoncrossingPartition.parse("3: 1 | 2 3")
        assert compose_many((a, b)) == one(3)
        with pytest.raises(NotAdmissibleError):
            compose_many((b, a))

    def test_block_count_bookkeeping(self):
        # Each composition glues: the output has as many blocks as the
        # left factor, with sizes grown by the right factor's blocks.
        for a, b in admissible_tuples(4, 2):
            c = compose(a, b)
            assert len(c.blocks) == len(a.blocks) + len(b.blocks) - b.n

    @given(st.sampled_from(admissible_tuples(3, 3)))
    def test_associativity_on_admissible_triples(self, t):
        a, b, c = t
        left = compose(compose(a, b), c)
        right = compose(a, compose(b, c))
        assert left is not None and left == right == compose_many(t)


class TestKreweras:
    def test_full_table_at_n3(self):
        table = {str(p): str(kreweras(p)) for p in enumerate_ncp(3)}
        assert table == {
            "3: 1 | 2 | 3": "3: 1 2 3",
            "3: 1 | 2 3": "3: 1 3 | 2",
            "3: 1 2 | 3": "3: 1 | 2 3",
            "3: 1 2 3": "3: 1 | 2 | 3",
            "3: 1 3 | 2": "3: 1 2 | 3",
        }

    def test_extremes_swap(self):
        for n in range(7):
            assert kreweras(zero(n)) == one(n)
            assert kreweras(one(n)) == zero(n)

    @given(ncps(min_n=1, max_n=6))
    def test_complement_completes_to_the_top(self, p):
        assert compose(p, kreweras(p)) == one(p.n)

    @given(ncps(min_n=1, max_n=6))
    def test_square_is_the_backward_rotation(self, p):
        rotated = kreweras(kreweras(p))
        shift = {1: p.n}
        shift.update({x: x - 1 for x in range(2, p.n + 1)})
        expected = NoncrossingPartition(
            p.n, [tuple(shift[x] for x in b) for b in p.blocks]
        )
        assert rotated == expected

    def test_bijective(self):
        for n in range(7):
            images = {kreweras(p) for p in enumerate_ncp(n)}
            assert len(images) == len(enumerate_ncp(n))

    def test_order_antitone(self):
        for a, b in product(enumerate_ncp(4), repeat=2):
            if divides(a, b):
                assert divides(kreweras(b), kreweras(a))

    def test_measured_orders(self):
        # Order of the permutation p -> kreweras(p) on NCP(n), measured by
        # iterating; always a divisor of 2n.
        assert [kreweras_order(n) for n in range(1, 7)] == [1, 2, 6, 8, 10, 12]
        for n in range(1, 7):
            assert (2 * n) % kreweras_order(n) == 0


class TestRelativeKreweras:
    def test_worked_example(self):
        a = NoncrossingPartition.parse("4: 1 | 2 | 3 4")
        b = NoncrossingPartition.parse("4: 1 | 2 3 4")
        assert str(relative_kreweras(a, b)) == "4: 1 | 2 4 | 3"

    def test_top_recovers_the_plain_complement(self):
        for p in enumerate_ncp(4):
            assert relative_kreweras(p, one(4)) == kreweras(p)

    def test_requires_refinement(self):
        a = NoncrossingPartition.parse("4: 1 | 2 | 3 4")
        b = NoncrossingPartition.parse("4: 1 | 2 3 4")
        with pytest.raises(NotDividingError):
            relative_kreweras(b, a)

    def test_defining_equation(self):
        for a, b in product(enumerate_ncp(4), repeat=2):
            if divides(a, b):
                assert compose(a, relative_kreweras(a, b)) == b

    def test_self_complement_is_the_unit(self):
        for p in enumerate_ncp(5):
            assert relative_kreweras(p, p) == zero(5)


class TestTuplePictures:
    @pytest.mark.parametrize("n,k", [(2, 2), (2, 3), (3, 2), (3, 3)])
    def test_round_trips(self, n, k):
        for t in admissible_tuples(n, k):
            kp = tuple_to_kpreserving(t)
            assert is_k_preserving(kp, k)
            assert kpreserving_to_tuple(kp, k) == t

            chain = tuple_to_multichain(t)
            assert all(divides(x, y) for x, y in zip(chain, chain[1:]))
            assert multichain_to_tuple(chain) == t

            comp = tuple_to_completing(t)
            assert is_k_preserving(comp, k + 1) and is_k_completing(comp, k + 1)
            assert completing_to_tuple(comp, k + 1) == t

    def test_complete_tuple_appends_the_missing_factor(self):
        a = NoncrossingPartition.parse("3: 1 2 | 3")
        b = NoncrossingPartition.parse("3: 1 | 2 3")
        full = complete_tuple((a, b))
        assert full == (a, b, zero(3))
        assert compose_many(full) == one(3)

    @pytest.mark.parametrize("n,k", [(2, 2), (3, 2), (3, 3)])
    def test_complete_tuples_biject_with_one_shorter_tuples(self, n, k):
        complete = [
            t
            for t in product(enumerate_ncp(n), repeat=k)
            if is_admissible_tuple(t, n) and compose_many(t) == one(n)
        ]
        assert len(complete) == len(admissible_tuples(n, k - 1))
        key = lambda t: tuple(p.blocks for p in t)
        assert sorted((t[:-1] for t in complete), key=key) == sorted(
            (complete_tuple(s)[:-1] for s in admissible_tuples(n, k - 1)), key=key
        )

    def test_multichain_is_prefix_products(self):
        for t in admissible_tuples(3, 3):
            chain = tuple_to_multichain(t)
            assert chain[0] == t[0]
            assert chain[1] == compose(t[0], t[1])
            assert chain[2] == compose_many(t)
