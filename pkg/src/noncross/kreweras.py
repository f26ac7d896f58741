"""Composition of noncrossing partitions and Kreweras complements.

compose(a, b) shuffles a and b alternately over [2n], joins with the
consecutive pairs {{1,2}, {3,4}, ...} and takes the square root of the
result; it is defined exactly when (a, b) is admissible and makes NCP(n) a
partial monoid with unit the all-singletons partition.

kreweras(a) is the unique b with compose(a, b) equal to the full partition:
i < j share a block of kreweras(a) iff {i+1, ..., j} is a union of blocks
of a.  relative_kreweras(a, b) solves compose(a, x) = b for a refining b,
blockwise.  The maps at the bottom convert between the five equivalent
pictures of a k-fold composition: admissible k-tuples, k-preserving
partitions of [kn], multichains, complete (k+1)-tuples and (k+1)-completing
partitions of [(k+1)n].
"""

from functools import lru_cache

from .config import guard_n
from .errors import (
    InternalInvariantError,
    NotAdmissibleError,
    NotAMultichainError,
    NotCompleteError,
    NotCompletingError,
    NotDividingError,
    NotKPreservingError,
    SizeMismatchError,
)
from .lattice import divides, enumerate_ncp, join
from .partition import NoncrossingPartition, one, standardize, transport, zero
from .shuffle import (
    consecutive_blocks,
    is_admissible_tuple,
    is_k_completing,
    is_k_preserving,
    residue_classes,
    root,
    shuffle_many,
)


def compose(a, b):
    """Product of the partial monoid; None when (a, b) is not admissible."""
    if a.n != b.n:
        raise SizeMismatchError(f"compose over [{a.n}] and [{b.n}]")
    n = a.n
    if n == 0:
        return a
    if not is_admissible_tuple((a, b), n):
        return None
    return _compose_admissible((a, b), n)


def _compose_admissible(parts, n):
    if n == 0:
        return parts[0]
    k = len(parts)
    sh = shuffle_many(parts, n).to_noncrossing()
    joined = join(sh, consecutive_blocks(k * n, k))
    out = root(joined, k)
    if out is None:
        raise InternalInvariantError("join with consecutive blocks lost a run")
    return out


def compose_many(parts):
    """Product of an admissible tuple, via one shuffle and one join."""
    parts = ensure_admissible_tuple(parts)
    return _compose_admissible(parts, parts[0].n)


def compose_fold(parts):
    """Same product, folded pairwise left to right (slow path, kept for checks)."""
    parts = ensure_admissible_tuple(parts)
    out = parts[0]
    for p in parts[1:]:
        out = compose(out, p)
        if out is None:
            raise InternalInvariantError("admissible tuple with an undefined prefix product")
    return out


@lru_cache(maxsize=None)
def compose_table(n):
    """{(a, b): a*b} over all admissible pairs of NCP(n).  Do not mutate."""
    elems = enumerate_ncp(n)
    table = {}
    for a in elems:
        for b in elems:
            c = compose(a, b)
            if c is not None:
                table[(a, b)] = c
    return table


def kreweras(a):
    """The complement: join i to j when {i+1, ..., j} is a union of blocks."""
    n = a.n
    bmin = [0] * (n + 1)
    bmax = [0] * (n + 1)
    for blk in a.blocks:
        lo, hi = blk[0], blk[-1]
        for x in blk:
            bmin[x] = lo
            bmax[x] = hi
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(1, n):
        hi = 0
        for j in range(i + 1, n + 1):
            if bmin[j] <= i:
                break
            if bmax[j] > hi:
                hi = bmax[j]
            if hi <= j:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
    groups = {}
    for x in range(1, n + 1):
        groups.setdefault(find(x), []).append(x)
    out = NoncrossingPartition(n, groups.values())
    if __debug__ and n:
        if compose(a, out) != one(n):
            raise InternalInvariantError(f"complement of {a} failed its defining equation")
    return out


def relative_kreweras(a, b):
    """The unique c with compose(a, c) = b, for a refining b.

    Computed blockwise: inside each block of b, complement the partition
    induced by a (transported to a standard ground set and back).
    """
    if not divides(a, b):
        raise NotDividingError(f"{a} does not refine {b}")
    inner = {blk[0]: [] for blk in b.blocks}
    owner = {}
    for blk in b.blocks:
        for x in blk:
            owner[x] = blk[0]
    for blk in a.blocks:
        inner[owner[blk[0]]].append(blk)
    out_blocks = []
    for blk in b.blocks:
        comp = kreweras(standardize(inner[blk[0]]))
        out_blocks.extend(transport(comp, blk))
    out = NoncrossingPartition(a.n, out_blocks)
    if __debug__:
        if compose(a, out) != b:
            raise InternalInvariantError(f"relative complement of {a} in {b} failed its equation")
    return out


def kreweras_order(n):
    """Order of the complement as a permutation of NCP(n) (measured, not assumed)."""
    guard_n(n)
    from math import lcm

    order = 1
    seen = set()
    for start in enumerate_ncp(n):
        if start in seen:
            continue
        length = 0
        p = start
        while True:
            seen.add(p)
            p = kreweras(p)
            length += 1
            if p == start:
                break
        order = lcm(order, length)
    return order


# --------------------------------------------------------------------------
# Validation helpers for the bijection maps


def ensure_admissible_tuple(parts):
    parts = tuple(parts)
    if not parts:
        raise SizeMismatchError("empty operand tuple")
    n = parts[0].n
    if any(p.n != n for p in parts):
        raise SizeMismatchError("operands live over different ground sets")
    if n and not is_admissible_tuple(parts, n):
        raise NotAdmissibleError(
            "tuple is not admissible: " + " , ".join(str(p) for p in parts)
        )
    return parts


def ensure_multichain(chain):
    chain = tuple(chain)
    if not chain:
        raise SizeMismatchError("empty chain")
    n = chain[0].n
    if any(p.n != n for p in chain):
        raise SizeMismatchError("chain entries live over different ground sets")
    for x, y in zip(chain, chain[1:]):
        if not divides(x, y):
            raise NotAMultichainError(f"{x} does not refine {y}")
    return chain


# --------------------------------------------------------------------------
# The five equivalent pictures of a k-fold composition


def tuple_to_kpreserving(parts):
    """Shuffle an admissible k-tuple into a k-preserving partition of [kn]."""
    parts = ensure_admissible_tuple(parts)
    return shuffle_many(parts, parts[0].n).to_noncrossing()


def kpreserving_to_tuple(a, k):
    """Split a k-preserving partition of [kn] into its k operands."""
    if not is_k_preserving(a, k):
        raise NotKPreservingError(f"{a} is not {k}-preserving")
    classes = residue_classes(a.n, k)
    owner = {}
    for ci, cls in enumerate(classes):
        for x in cls:
            owner[x] = ci
    per_class = [[] for _ in classes]
    for blk in a.blocks:
        per_class[owner[blk[0]]].append(blk)
    return tuple(standardize(blocks) for blocks in per_class)


def tuple_to_multichain(parts):
    """Prefix products a1 | a1*a2 | ... of an admissible tuple."""
    parts = ensure_admissible_tuple(parts)
    chain = [parts[0]]
    for p in parts[1:]:
        nxt = compose(chain[-1], p)
        if nxt is None:
            raise InternalInvariantError("admissible tuple with an undefined prefix product")
        chain.append(nxt)
    return tuple(chain)


def multichain_to_tuple(chain):
    """Inverse of tuple_to_multichain: successive relative complements."""
    chain = ensure_multichain(chain)
    parts = [chain[0]]
    for prev, cur in zip(chain, chain[1:]):
        parts.append(relative_kreweras(prev, cur))
    return tuple(parts)


def complete_tuple(parts):
    """Append the complement of the product; the result composes to 1_n."""
    parts = ensure_admissible_tuple(parts)
    full = compose_many(parts)
    ext = parts + (kreweras(full),)
    if __debug__:
        if parts[0].n and not is_admissible_tuple(ext, parts[0].n):
            raise InternalInvariantError("completed tuple is not admissible")
    return ext


def ensure_complete_tuple(parts):
    parts = ensure_admissible_tuple(parts)
    if compose_many(parts) != one(parts[0].n):
        raise NotCompleteError("tuple does not compose to the full partition")
    return parts


def tuple_to_completing(parts):
    """Shuffle the completed (k+1)-tuple into a (k+1)-completing partition."""
    return tuple_to_kpreserving(complete_tuple(parts))


def completing_to_tuple(a, parts_count):
    """Inverse of tuple_to_completing; parts_count is k+1."""
    if parts_count < 2:
        raise SizeMismatchError("a completing partition splits into at least 2 operands")
    if not is_k_preserving(a, parts_count):
        raise NotKPreservingError(f"{a} is not {parts_count}-preserving")
    if not is_k_completing(a, parts_count):
        raise NotCompletingError(f"{a} is not {parts_count}-completing")
    ops = kpreserving_to_tuple(a, parts_count)
    if __debug__:
        if ops[-1] != kreweras(compose_many(ops[:-1])):
            raise InternalInvariantError("completing partition whose last operand is not the complement")
    return ops[:-1]
