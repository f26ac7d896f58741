"""Shared hypothesis strategies for noncrossing-partition tests.

Everything here samples from exhaustive enumerations (the ground sets are
Catalan-sized), so shrinking stays fast and no strategy can invent an
invalid partition.
"""

from hypothesis import HealthCheck, settings, strategies as st

from noncross import NoncrossingPartition, enumerate_ncp

settings.register_profile(
    "noncross",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("noncross")


def ncps(min_n=0, max_n=6):
    """A noncrossing partition with min_n <= n <= max_n."""
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.sampled_from(enumerate_ncp(n))
    )


def ncp_pairs(min_n=1, max_n=5):
    """Two noncrossing partitions over the same ground set."""
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.tuples(
            st.sampled_from(enumerate_ncp(n)), st.sampled_from(enumerate_ncp(n))
        )
    )


def ncp_triples(min_n=1, max_n=4):
    """Three noncrossing partitions over the same ground set."""
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.tuples(*[st.sampled_from(enumerate_ncp(n))] * 3)
    )


def raw_blocks(max_n=7):
    """An arbitrary set partition of [n] as raw blocks (crossings allowed)."""

    def build(draw_n_and_seed):
        n, seed = draw_n_and_seed
        # Assign each element a bucket label; buckets become blocks.
        labels = seed[:n]
        buckets = {}
        for x, lab in zip(range(1, n + 1), labels):
            buckets.setdefault(lab, []).append(x)
        return tuple(tuple(b) for b in sorted(buckets.values()))

    return st.tuples(
        st.integers(0, max_n),
        st.lists(st.integers(0, max_n), min_size=max_n, max_size=max_n),
    ).map(build)


def rationals():
    """Small exact rationals."""
    from fractions import Fraction

    return st.fractions(
        min_value=-4, max_value=4, max_denominator=6
    ).map(Fraction)


__all__ = ["ncps", "ncp_pairs", "ncp_triples", "raw_blocks", "rationals"]
