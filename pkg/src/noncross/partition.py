"""Set partitions of [n] = {1, ..., n} with a noncrossing refinement type.

Canonical form everywhere: each block ascending, blocks ordered by their
minima.  Two partitions are equal iff they have the same n and the same
canonical blocks; the class of the object never enters equality.

The text literal is ``"4: 1 4 | 2 3"`` (size, colon, blocks separated by
pipes).  The empty partition of [0] is written ``"0:"`` and is the unit for
concatenation.
"""

from . import backend
from .errors import (
    CrossingError,
    EmptyBlockError,
    NotACoverError,
    OutOfRangeError,
    OverlapError,
    ParseError,
    SizeMismatchError,
)


class Partition:
    """A set partition of [n], stored canonically."""

    __slots__ = ("n", "blocks")

    def __init__(self, n, blocks):
        if not isinstance(n, int) or n < 0:
            raise OutOfRangeError(f"ground-set size must be a nonnegative integer, got {n!r}")
        seen = set()
        canon = []
        for raw in blocks:
            blk = sorted(raw)
            if not blk:
                raise EmptyBlockError("empty block")
            for x in blk:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise OutOfRangeError(f"element {x!r} is not an integer")
                if not 1 <= x <= n:
                    raise OutOfRangeError(f"element {x} outside 1..{n}")
                if x in seen:
                    raise OverlapError(f"element {x} appears twice")
                seen.add(x)
            canon.append(tuple(blk))
        if len(seen) != n:
            missing = min(set(range(1, n + 1)) - seen)
            raise NotACoverError(f"element {missing} is not covered")
        canon.sort()
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "blocks", tuple(canon))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def _from_canonical(cls, n, blocks):
        """Trusted constructor for blocks already known canonical and valid."""
        self = object.__new__(cls)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "blocks", blocks)
        return self

    @classmethod
    def parse(cls, text):
        """Parse the literal format, e.g. '4: 1 4 | 2 3'."""
        n, blocks = _parse_literal(text)
        return cls(n, blocks)

    @classmethod
    def from_json(cls, obj):
        """Build from a dict of the form {'n': 4, 'blocks': [[1, 4], [2, 3]]}."""
        if not isinstance(obj, dict) or set(obj) != {"n", "blocks"}:
            raise ParseError("expected an object with exactly the keys 'n' and 'blocks'")
        return cls(obj["n"], obj["blocks"])

    def to_json(self):
        return {"n": self.n, "blocks": [list(b) for b in self.blocks]}

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.n == other.n and self.blocks == other.blocks

    def __hash__(self):
        return hash((self.n, self.blocks))

    def __str__(self):
        if not self.blocks:
            return f"{self.n}:"
        return f"{self.n}: " + " | ".join(" ".join(str(x) for x in b) for b in self.blocks)

    def __repr__(self):
        return f"{type(self).__name__}.parse({str(self)!r})"

    def block_index_of(self, x):
        """Index (into .blocks) of the block containing x."""
        for i, blk in enumerate(self.blocks):
            if x in blk:
                return i
        raise OutOfRangeError(f"element {x} outside 1..{self.n}")

    def block_of(self, x):
        return self.blocks[self.block_index_of(x)]

    def block_sizes(self):
        return tuple(len(b) for b in self.blocks)

    def is_noncrossing(self):
        return backend.is_noncrossing(self.blocks)

    def to_noncrossing(self):
        """The same partition as a NoncrossingPartition; CrossingError if it crosses."""
        if not self.is_noncrossing():
            raise CrossingError(f"{self} has a crossing")
        return NoncrossingPartition._from_canonical(self.n, self.blocks)


class NoncrossingPartition(Partition):
    """A partition with no a < b < c < d where a, c and b, d lie in two blocks."""

    __slots__ = ()

    def __init__(self, n, blocks):
        super().__init__(n, blocks)
        if not backend.is_noncrossing(self.blocks):
            raise CrossingError(f"{self} has a crossing")


def zero(n):
    """The all-singletons partition, minimum of the lattice and compose unit."""
    return NoncrossingPartition._from_canonical(n, tuple((i,) for i in range(1, n + 1)))


def one(n):
    """The one-block partition, maximum of the lattice."""
    if n == 0:
        return empty()
    return NoncrossingPartition._from_canonical(n, (tuple(range(1, n + 1)),))


def empty():
    """The partition of [0]; unit for concat."""
    return NoncrossingPartition._from_canonical(0, ())


def translate(p, offset):
    """Blocks of p shifted onto {1 + offset, ..., n + offset} (raw tuples)."""
    return tuple(tuple(x + offset for x in blk) for blk in p.blocks)


def standardize(blocks):
    """Transport blocks over an arbitrary ground set along the unique
    increasing bijection onto [m]; the ground set is the union of the blocks."""
    support = sorted(x for blk in blocks for x in blk)
    rank = {x: i + 1 for i, x in enumerate(support)}
    if len(rank) != len(support):
        raise OverlapError("blocks overlap")
    return NoncrossingPartition(len(support), [[rank[x] for x in blk] for blk in blocks])


def transport(p, ground):
    """Inverse of standardize: place a partition of [m] onto the m given
    ground elements (strictly increasing).  Returns raw block tuples."""
    ground = tuple(ground)
    if len(ground) != p.n:
        raise SizeMismatchError(f"ground set of size {len(ground)} for a partition of [{p.n}]")
    if any(ground[i] >= ground[i + 1] for i in range(len(ground) - 1)):
        raise SizeMismatchError("ground set must be strictly increasing")
    return tuple(tuple(ground[x - 1] for x in blk) for blk in p.blocks)


def concat(a, b):
    """Place b after a: blocks of a, then blocks of b shifted by a.n."""
    blocks = a.blocks + translate(b, a.n)
    cls = (
        NoncrossingPartition
        if isinstance(a, NoncrossingPartition) and isinstance(b, NoncrossingPartition)
        else Partition
    )
    return cls._from_canonical(a.n + b.n, blocks)


def concat_many(parts):
    out = empty()
    for p in parts:
        out = concat(out, p)
    return out


def block_nested(p, i, j):
    """True when block i sits strictly inside the span of block j."""
    bi, bj = p.blocks[i], p.blocks[j]
    return bj[0] < bi[0] and bi[-1] < bj[-1]


def irreducible_components(p):
    """Split into irreducible factors, left to right.

    Each component is a pair (ground, blocks): the ground is a run of
    consecutive integers, its first block is the maximal block spanning it.
    Noncrossing input only; a crossing partition has no such decomposition.
    """
    if isinstance(p, Partition) and not p.is_noncrossing():
        raise CrossingError(f"{p} has a crossing")
    comps = []
    cur_blocks = None
    cur_end = 0
    for blk in p.blocks:
        if cur_blocks is not None and blk[0] < cur_end:
            cur_blocks.append(blk)
        else:
            if cur_blocks is not None:
                comps.append((cur_start, cur_end, cur_blocks))
            cur_blocks = [blk]
            cur_start, cur_end = blk[0], blk[-1]
    if cur_blocks is not None:
        comps.append((cur_start, cur_end, cur_blocks))
    return [(tuple(range(lo, hi + 1)), tuple(blocks)) for lo, hi, blocks in comps]


def is_irreducible(p):
    """True when 1 and n share a block (single concat factor); false for [0]."""
    if p.n == 0:
        return False
    return p.n in p.block_of(1)


def _parse_literal(text):
    m = len(text)

    def skip_ws(i):
        while i < m and text[i].isspace():
            i += 1
        return i

    def read_int(i):
        j = i
        while j < m and text[j].isdigit():
            j += 1
        if j == i:
            raise ParseError("expected an integer", i)
        return int(text[i:j]), j

    i = skip_ws(0)
    n, i = read_int(i)
    i = skip_ws(i)
    if i >= m or text[i] != ":":
        raise ParseError("expected ':' after the size", i)
    i += 1
    blocks = []
    current = []
    while True:
        i = skip_ws(i)
        if i >= m:
            break
        c = text[i]
        if c == "|":
            if not current:
                raise ParseError("empty block", i)
            blocks.append(current)
            current = []
            i += 1
        elif c.isdigit():
            v, i = read_int(i)
            current.append(v)
        else:
            raise ParseError(f"unexpected character {c!r}", i)
    if current:
        blocks.append(current)
    elif blocks:
        raise ParseError("empty block after trailing '|'", m)
    return n, blocks
