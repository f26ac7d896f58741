"""Brute-force reference implementations.

Everything in this module recomputes from first principles on raw block
tuples, without touching the production code paths: quadruple scans instead
of the pairwise kernel, filtered Bell-sized enumerations instead of the
Catalan recursion, bound scans instead of union-find joins, trial division
instead of coalgebra recursions.  The verify suites and the test suite
compare production output against these.

Block convention matches the rest of the package: a partition of [n] is a
tuple of tuples, each ascending, ordered by minima.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def fuss_catalan(n, k):
    """Number of k-multichains in NCP(n): binom((k+1)n, n) / (kn + 1)."""
    return comb((k + 1) * n, n) // (k * n + 1)


def crossing_by_quadruple_scan(blocks, n):
    """Direct search for a < b < c < d with a, c and b, d in two blocks."""
    owner = {}
    for idx, blk in enumerate(blocks):
        for x in blk:
            owner[x] = idx
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            if owner[b] == owner[a]:
                continue
            for c in range(b + 1, n + 1):
                if owner[c] != owner[a]:
                    continue
                for d in range(c + 1, n + 1):
                    if owner[d] == owner[b]:
                        return (a, b, c, d)
    return None


def set_partitions(n):
    """All partitions of [n] in canonical block form (Bell-many)."""

    def rec(elems):
        if not elems:
            yield []
            return
        first = elems[0]
        for sub in rec(elems[1:]):
            for i in range(len(sub)):
                yield sub[:i] + [[first] + sub[i]] + sub[i + 1 :]
            yield [[first]] + sub

    for raw in rec(list(range(1, n + 1))):
        yield tuple(tuple(sorted(blk)) for blk in sorted(raw, key=min))


def noncrossing_partitions(n):
    """NCP(n) by filtering all set partitions through the quadruple scan."""
    return [
        blocks
        for blocks in set_partitions(n)
        if crossing_by_quadruple_scan(blocks, n) is None
    ]


def refines(a_blocks, b_blocks):
    """Order oracle: every block of a inside some block of b."""
    sets = [set(blk) for blk in b_blocks]
    return all(any(set(blk) <= s for s in sets) for blk in a_blocks)


def meet_by_scan(a_blocks, b_blocks, n):
    """Greatest common refinement found by scanning the whole lattice."""
    below = [
        c
        for c in noncrossing_partitions(n)
        if refines(c, a_blocks) and refines(c, b_blocks)
    ]
    tops = [c for c in below if all(refines(d, c) for d in below)]
    assert len(tops) == 1, "meet is not unique"
    return tops[0]


def join_by_scan(a_blocks, b_blocks, n):
    """Least common coarsening found by scanning the whole lattice."""
    above = [
        c
        for c in noncrossing_partitions(n)
        if refines(a_blocks, c) and refines(b_blocks, c)
    ]
    bottoms = [c for c in above if all(refines(c, d) for d in above)]
    assert len(bottoms) == 1, "join is not unique"
    return bottoms[0]


def interleave(blocks_list, sizes, n):
    """Shuffle oracle: same round-robin layout, recomputed independently.

    sizes[i] = ground size of operand i (a multiple of n).
    """
    mults = [s // n for s in sizes]
    total = sum(mults)
    out = []
    for i, blocks in enumerate(blocks_list):
        offset = sum(mults[:i])
        for blk in blocks:
            out.append(
                tuple(((x - 1) // mults[i]) * total + offset + ((x - 1) % mults[i]) + 1 for x in blk)
            )
    return tuple(sorted(out))


def admissible(blocks_list, sizes, n):
    total = sum(sizes)
    return crossing_by_quadruple_scan(interleave(blocks_list, sizes, n), total) is None


def admissible_partners(a_blocks, n):
    """All b in NCP(n) with (a, b) admissible, by oracle shuffle and scan."""
    return [
        b
        for b in noncrossing_partitions(n)
        if admissible([a_blocks, b], [n, n], n)
    ]


def maximal_admissible_partner(a_blocks, n):
    """The complement, characterized as the coarsest admissible partner."""
    partners = admissible_partners(a_blocks, n)
    tops = [b for b in partners if all(refines(c, b) for c in partners)]
    assert len(tops) == 1, "maximal admissible partner is not unique"
    return tops[0]


@lru_cache(maxsize=None)
def moebius_ncp(n):
    """Moebius function of the coarsening order by the classical recursion,
    over the oracle enumeration: mu(a, b) = -sum of mu(a, c) over a <= c < b.

    Callers must not mutate the returned table."""
    elems = noncrossing_partitions(n)
    memo = {}

    def mu(a, b):
        if a == b:
            return 1
        key = (a, b)
        if key in memo:
            return memo[key]
        acc = 0
        for c in elems:
            if c != b and refines(a, c) and refines(c, b):
                acc -= mu(a, c)
        memo[key] = acc
        return acc

    return {
        (a, b): mu(a, b)
        for a in elems
        for b in elems
        if refines(a, b)
    }


def classical_moebius(d):
    """Number-theoretic Moebius by trial-division factorization."""
    sign = 1
    p = 2
    while p * p <= d:
        if d % p == 0:
            d //= p
            if d % p == 0:
                return 0
            sign = -sign
        else:
            p += 1
    if d > 1:
        sign = -sign
    return sign


def count_pairings(n):
    """Noncrossing partitions of [n] with all blocks of size 2, by filter."""
    return sum(
        1 for blocks in _oracle_ncp(n) if all(len(blk) == 2 for blk in blocks)
    )


@lru_cache(maxsize=None)
def pairings_by_recursion(n):
    """The same count by recursion: 1 pairs with an even position t, and the
    inside {2..t-1} and outside {t+1..n} pair off independently."""
    if n % 2:
        return 0
    if n == 0:
        return 1
    return sum(
        pairings_by_recursion(t - 2) * pairings_by_recursion(n - t)
        for t in range(2, n + 1, 2)
    )


@lru_cache(maxsize=None)
def _oracle_ncp(n):
    return tuple(noncrossing_partitions(n))


def moment_by_sum(kappa, n):
    """Free moment oracle over the filtered enumeration."""
    acc = Fraction(0)
    for blocks in _oracle_ncp(n):
        term = Fraction(1)
        for blk in blocks:
            term *= Fraction(kappa[len(blk) - 1])
        acc += term
    return acc


def cumulant_by_moebius(moments, n):
    """kappa_n = sum over NCP(n) of mu(p, full) * product of moments."""
    mu = moebius_ncp(n)
    full = (tuple(range(1, n + 1)),)
    acc = Fraction(0)
    for blocks in _oracle_ncp(n):
        term = Fraction(mu[(blocks, full)])
        for blk in blocks:
            term *= Fraction(moments[len(blk) - 1])
        acc += term
    return acc
