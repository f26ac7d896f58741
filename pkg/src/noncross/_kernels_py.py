"""Pure-Python kernels on raw block tuples.

These are the inner loops of everything else: crossing detection, common
refinement, and the lattice join (full-partition join plus noncrossing
closure).  _kernels_c.pyx is a compiled twin with the same signatures and
the same outputs; backend.py picks one at import time.

Blocks are tuples of sorted ints; a partition is a tuple of blocks sorted by
their minima.  All functions return canonical forms and never validate:
callers own validation.
"""

from bisect import bisect_left


def blocks_cross(a, b):
    """True when two disjoint sorted blocks interleave.

    No crossing iff one block sits inside a single gap of the other (the
    unbounded outer gaps count).
    """
    g = bisect_left(a, b[0])
    inside = True
    for x in b:
        if bisect_left(a, x) != g:
            inside = False
            break
    if inside:
        return False
    g = bisect_left(b, a[0])
    for x in a:
        if bisect_left(b, x) != g:
            return True
    return False


def is_noncrossing(blocks):
    """Pairwise crossing scan over all block pairs."""
    k = len(blocks)
    for i in range(k):
        bi = blocks[i]
        if len(bi) == 1:
            continue
        for j in range(i + 1, k):
            bj = blocks[j]
            if len(bj) > 1 and blocks_cross(bi, bj):
                return False
    return True


def meet_blocks(a, b):
    """Common refinement, canonical block order."""
    ida = {}
    for i, blk in enumerate(a):
        for x in blk:
            ida[x] = i
    idb = {}
    for i, blk in enumerate(b):
        for x in blk:
            idb[x] = i
    groups = {}
    for x in sorted(ida):
        groups.setdefault((ida[x], idb[x]), []).append(x)
    return tuple(tuple(g) for g in groups.values())


def join_blocks(a, b, n):
    """Join in the noncrossing lattice.

    Union-find gives the join in the full partition lattice; crossing block
    pairs are then merged to a fixed point.  Each merge drops the block
    count, so the closure terminates.
    """
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for blocks in (a, b):
        for blk in blocks:
            r = find(blk[0])
            for x in blk[1:]:
                rx = find(x)
                if rx != r:
                    if rx < r:
                        r, rx = rx, r
                    parent[rx] = r
    groups = {}
    for x in range(1, n + 1):
        groups.setdefault(find(x), []).append(x)
    merged = sorted(groups.values())
    changed = True
    while changed:
        changed = False
        k = len(merged)
        for i in range(k):
            for j in range(i + 1, k):
                if blocks_cross(merged[i], merged[j]):
                    merged[i] = sorted(merged[i] + merged[j])
                    del merged[j]
                    changed = True
                    break
            if changed:
                break
    return tuple(tuple(blk) for blk in merged)
