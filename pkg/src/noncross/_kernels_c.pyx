# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of _kernels_py.

Same signatures, same canonical outputs, same non-validating contract.  The
algorithms are identical; only the loop bookkeeping is typed.  backend.py
falls back to the pure module when this one is not built.
"""


cdef Py_ssize_t _gap(seq, long x):
    # leftmost insertion point of x in the sorted sequence seq
    cdef Py_ssize_t lo = 0, hi = len(seq), mid
    while lo < hi:
        mid = (lo + hi) // 2
        if <long> seq[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    return lo


cpdef bint blocks_cross(a, b):
    """True when two disjoint sorted blocks interleave.

    No crossing iff one block sits inside a single gap of the other (the
    unbounded outer gaps count).
    """
    cdef Py_ssize_t g
    cdef bint inside = True
    g = _gap(a, <long> b[0])
    for x in b:
        if _gap(a, <long> x) != g:
            inside = False
            break
    if inside:
        return False
    g = _gap(b, <long> a[0])
    for x in a:
        if _gap(b, <long> x) != g:
            return True
    return False


cpdef bint is_noncrossing(blocks):
    """Pairwise crossing scan over all block pairs."""
    cdef Py_ssize_t k = len(blocks), i, j
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
    cdef dict ida = {}, idb = {}, groups = {}
    cdef Py_ssize_t i
    for i, blk in enumerate(a):
        for x in blk:
            ida[x] = i
    for i, blk in enumerate(b):
        for x in blk:
            idb[x] = i
    for x in sorted(ida):
        key = (ida[x], idb[x])
        if key in groups:
            groups[key].append(x)
        else:
            groups[key] = [x]
    return tuple(tuple(g) for g in groups.values())


def join_blocks(a, b, long n):
    """Join in the noncrossing lattice.

    Union-find gives the join in the full partition lattice; crossing block
    pairs are then merged to a fixed point.  Each merge drops the block
    count, so the closure terminates.
    """
    cdef list parent = list(range(n + 1))
    cdef long x, r, rx
    cdef Py_ssize_t i, j, k
    cdef bint changed

    for blocks in (a, b):
        for blk in blocks:
            r = _find(parent, <long> blk[0])
            for xo in blk[1:]:
                rx = _find(parent, <long> xo)
                if rx != r:
                    if rx < r:
                        r, rx = rx, r
                    parent[rx] = r
    cdef dict groups = {}
    for x in range(1, n + 1):
        r = _find(parent, x)
        if r in groups:
            groups[r].append(x)
        else:
            groups[r] = [x]
    cdef list merged = sorted(groups.values())
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


cdef long _find(list parent, long x):
    while <long> parent[x] != x:
        parent[x] = parent[<long> parent[x]]
        x = <long> parent[x]
    return x
