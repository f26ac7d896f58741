"""The noncrossing partition lattice: order, meet, join, enumeration.

The order is refinement ("a divides b" = every block of a sits inside a
block of b).  Meet is the common refinement; join is the full-partition
join followed by merging crossing block pairs to a fixed point.

enumerate_ncp(n) lists NCP(n) in lexicographic order of the canonical block
tuples; that order is part of the CLI contract.  The recursion enumerates
the block containing 1 (lexicographically over its element sets) and fills
the gaps between its elements independently, which yields the lexicographic
order directly; Bell-sized filtering never happens.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from . import backend
from .config import guard_n
from .errors import (
    CrossingBlocksError,
    EmptyBlockError,
    NotDividingError,
    OutOfRangeError,
    OverlapError,
    SizeMismatchError,
)
from .partition import NoncrossingPartition, zero, one

_CACHE_LIMIT = 9


def _require_same_n(a, b):
    if a.n != b.n:
        raise SizeMismatchError(f"partitions of [{a.n}] and [{b.n}] are not comparable")


def divides(a, b):
    """True when a refines b (a is finer, b is coarser)."""
    _require_same_n(a, b)
    owner = [0] * (a.n + 1)
    for i, blk in enumerate(b.blocks):
        for x in blk:
            owner[x] = i
    for blk in a.blocks:
        o = owner[blk[0]]
        for x in blk[1:]:
            if owner[x] != o:
                return False
    return True


def meet(a, b):
    """Greatest common refinement (the same as in the full partition lattice)."""
    _require_same_n(a, b)
    return NoncrossingPartition._from_canonical(a.n, backend.meet_blocks(a.blocks, b.blocks))


def join(a, b):
    """Least common coarsening inside the noncrossing lattice."""
    _require_same_n(a, b)
    return NoncrossingPartition._from_canonical(a.n, backend.join_blocks(a.blocks, b.blocks, a.n))


def meet_many(parts, n=None):
    parts = list(parts)
    if not parts:
        if n is None:
            raise SizeMismatchError("meet of no partitions needs an explicit n")
        return one(n)
    out = parts[0]
    for p in parts[1:]:
        out = meet(out, p)
    return out


def join_many(parts, n=None):
    parts = list(parts)
    if not parts:
        if n is None:
            raise SizeMismatchError("join of no partitions needs an explicit n")
        return zero(n)
    out = parts[0]
    for p in parts[1:]:
        out = join(out, p)
    return out


# --------------------------------------------------------------------------
# Enumeration


def _subsets_lex(items):
    """Increasing tuples over the sorted items, lexicographically."""
    yield ()
    for i in range(len(items)):
        head = (items[i],)
        for rest in _subsets_lex(items[i + 1 :]):
            yield head + rest


@lru_cache(maxsize=None)
def _blockforms(m):
    """All canonical block tuples of NCP(m), lexicographically (cached)."""
    return tuple(_iter_blockforms(m))


def _iter_blockforms(m):
    if m == 0:
        yield ()
        return
    for tail in _subsets_lex(tuple(range(2, m + 1))):
        first = (1,) + tail
        segments = []
        prev = 1
        for x in tail:
            if prev + 1 <= x - 1:
                segments.append((prev + 1, x - 1))
            prev = x
        if prev + 1 <= m:
            segments.append((prev + 1, m))
        choices = [_blockforms(hi - lo + 1) for lo, hi in segments]
        for combo in product(*choices):
            blocks = [first]
            for (lo, _hi), sub in zip(segments, combo):
                off = lo - 1
                blocks.extend(tuple(x + off for x in blk) for blk in sub)
            yield tuple(blocks)


def iter_ncp(n):
    """Stream NCP(n) in lexicographic order without materializing the list."""
    guard_n(n)
    for bf in _iter_blockforms(n):
        yield NoncrossingPartition._from_canonical(n, bf)


@lru_cache(maxsize=None)
def _cached_ncp(n):
    return tuple(iter_ncp(n))


def enumerate_ncp(n):
    """NCP(n) as a fresh list, lexicographic on canonical blocks."""
    guard_n(n)
    if n <= _CACHE_LIMIT:
        return list(_cached_ncp(n))
    return list(iter_ncp(n))


def count_ncp(n):
    """|NCP(n)| without enumerating (Catalan number); no size cap."""
    from math import comb

    if n < 0:
        raise OutOfRangeError(f"counting needs a ground set size >= 0, got {n}")
    return comb(2 * n, n) // (n + 1)


# --------------------------------------------------------------------------
# Intervals


@dataclass(frozen=True)
class Interval:
    """A pair lower | upper in the coarsening order."""

    lower: NoncrossingPartition
    upper: NoncrossingPartition

    def __post_init__(self):
        _require_same_n(self.lower, self.upper)
        if not divides(self.lower, self.upper):
            raise NotDividingError(f"{self.lower} does not refine {self.upper}")

    @property
    def n(self):
        return self.lower.n

    def __str__(self):
        return f"[{self.lower} ; {self.upper}]"


def interval_elements(iv):
    """All c with iv.lower | c | iv.upper, in enumeration order."""
    return [c for c in enumerate_ncp(iv.n) if divides(iv.lower, c) and divides(c, iv.upper)]


# --------------------------------------------------------------------------
# The sublattice of partitions containing fixed blocks


@dataclass(frozen=True)
class RelativeSublattice:
    """Structure of {p in NCP(n) : p contains the fixed blocks}.

    free is the set of elements lying in no fixed block and nested inside
    none; gaps maps (block index, gap index) to the elements whose innermost
    enclosing gap is the given one.  Members decompose as one noncrossing
    partition of free plus one of each gap set, so the member count is the
    product of the Catalan numbers of those sizes.
    """

    n: int
    fixed: tuple
    free: tuple
    gaps: tuple  # ((block_index, gap_index, elements), ...)
    bottom: NoncrossingPartition
    top: NoncrossingPartition


def relative_sublattice(n, fixed_blocks):
    """Validate the fixed blocks and enumerate the members.

    Returns (RelativeSublattice, members); members are in enumeration order
    of their canonical blocks.
    """
    fixed = []
    seen = set()
    for raw in fixed_blocks:
        blk = tuple(sorted(raw))
        if not blk:
            raise EmptyBlockError("empty fixed block")
        for x in blk:
            if not 1 <= x <= n:
                raise OutOfRangeError(f"element {x} outside 1..{n}")
            if x in seen:
                raise OverlapError(f"element {x} appears in two fixed blocks")
            seen.add(x)
        fixed.append(blk)
    fixed.sort()
    for i in range(len(fixed)):
        for j in range(i + 1, len(fixed)):
            if backend.blocks_cross(fixed[i], fixed[j]):
                raise CrossingBlocksError(
                    f"fixed blocks {fixed[i]} and {fixed[j]} cross"
                )
    fixed = tuple(fixed)

    # innermost enclosing gap of each free element; ties cannot happen since
    # enclosing gaps of mutually noncrossing blocks are nested
    free = []
    gap_elems = {}
    for x in range(1, n + 1):
        if x in seen:
            continue
        best = None
        for bi, blk in enumerate(fixed):
            for gi in range(len(blk) - 1):
                if blk[gi] < x < blk[gi + 1]:
                    if best is None or blk[gi] > fixed[best[0]][best[1]]:
                        best = (bi, gi)
        if best is None:
            free.append(x)
        else:
            gap_elems.setdefault(best, []).append(x)
    free = tuple(free)
    gaps = tuple(
        (bi, gi, tuple(gap_elems[(bi, gi)])) for bi, gi in sorted(gap_elems)
    )

    cells = [free] + [elems for _bi, _gi, elems in gaps]
    cells = [c for c in cells if c]
    member_list = []
    for combo in product(*(_blockforms(len(c)) for c in cells)):
        blocks = list(fixed)
        for cell, sub in zip(cells, combo):
            blocks.extend(tuple(cell[x - 1] for x in blk) for blk in sub)
        blocks.sort()
        member_list.append(NoncrossingPartition(n, blocks))
    member_list.sort(key=lambda p: p.blocks)

    bottom = NoncrossingPartition(n, list(fixed) + [(x,) for c in cells for x in c])
    top = NoncrossingPartition(n, list(fixed) + [c for c in cells])
    data = RelativeSublattice(n=n, fixed=fixed, free=free, gaps=gaps, bottom=bottom, top=top)
    return data, member_list
