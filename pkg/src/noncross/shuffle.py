"""Power maps, roots, perfect shuffles, admissibility.

Everything here views a partition of [kn] as n rounds of k seats.  The
shuffle of partitions of [k_1 n], ..., [k_m n] interleaves the rounds: the
element a*k_i + j of operand i (0 <= a < n, 1 <= j <= k_i) lands at
a*(k_1 + ... + k_m) + (k_1 + ... + k_{i-1}) + j.  The result can cross;
the operands are admissible when it does not.

The p-th power replaces each element by a run of p consecutive elements in
the same block; the p-th root contracts runs and exists iff every run lies
inside one block.
"""

from .config import guard_n
from .errors import NotKPreservingError, SizeMismatchError
from .lattice import join
from .partition import NoncrossingPartition, Partition, one

__all__ = [
    "power",
    "root",
    "shuffle_many",
    "perfect_shuffle",
    "is_admissible",
    "is_admissible_tuple",
    "consecutive_blocks",
    "is_k_preserving",
    "is_k_completing",
    "enumerate_k_completing",
    "residue_classes",
]


def power(p, exp):
    """Replace element i by the run {(i-1)*exp + 1, ..., i*exp}, same block."""
    if not isinstance(exp, int) or exp < 1:
        raise SizeMismatchError(f"exponent must be a positive integer, got {exp!r}")
    blocks = tuple(
        tuple(x for e in blk for x in range((e - 1) * exp + 1, e * exp + 1))
        for blk in p.blocks
    )
    return type(p)._from_canonical(p.n * exp, blocks)


def root(a, exp):
    """Inverse of power: contract runs of exp consecutive elements.

    Returns None when some run straddles two blocks (no root exists).
    """
    if not isinstance(exp, int) or exp < 1:
        raise SizeMismatchError(f"exponent must be a positive integer, got {exp!r}")
    if a.n % exp:
        raise SizeMismatchError(f"partition of [{a.n}] has no {exp}-th root candidate")
    owner = [0] * (a.n + 1)
    for i, blk in enumerate(a.blocks):
        for x in blk:
            owner[x] = i
    m = a.n // exp
    contracted = {}
    for i in range(1, m + 1):
        run = range((i - 1) * exp + 1, i * exp + 1)
        o = owner[run[0]]
        if any(owner[x] != o for x in run):
            return None
        contracted.setdefault(o, []).append(i)
    blocks = tuple(tuple(blk) for blk in sorted(contracted.values()))
    return type(a)._from_canonical(m, blocks)


def _multipliers(operands, n):
    if n < 1:
        raise SizeMismatchError(f"period must be a positive integer, got {n!r}")
    mults = []
    for p in operands:
        if p.n == 0 or p.n % n:
            raise SizeMismatchError(
                f"operand of size {p.n} is not a nonzero multiple of the period {n}"
            )
        mults.append(p.n // n)
    return mults


def _interleaved_blocks(operands, n):
    """Raw canonical blocks of the shuffle; crossing not checked."""
    mults = _multipliers(operands, n)
    total = sum(mults)
    blocks = []
    offset = 0
    for p, k in zip(operands, mults):
        for blk in p.blocks:
            blocks.append(
                tuple((x - 1) // k * total + offset + (x - 1) % k + 1 for x in blk)
            )
        offset += k
    blocks.sort()
    return tuple(blocks)


def shuffle_many(operands, n):
    """Interleave any number of operands over a common period n.

    The result is a plain Partition: it may cross.  Use to_noncrossing()
    or is_admissible_tuple when the noncrossing refinement is wanted.
    """
    operands = list(operands)
    if not operands:
        raise SizeMismatchError("shuffle of no operands")
    blocks = _interleaved_blocks(operands, n)
    total = sum(p.n for p in operands)
    return Partition._from_canonical(total, blocks)


def perfect_shuffle(a, b, n):
    """Binary shuffle of a over [kn] with b over [ln]."""
    return shuffle_many((a, b), n)


def is_admissible(a, b, n):
    """True when the shuffle of a and b over period n is noncrossing."""
    return is_admissible_tuple((a, b), n)


def is_admissible_tuple(operands, n):
    from . import backend

    return backend.is_noncrossing(_interleaved_blocks(list(operands), n))


def consecutive_blocks(total, k):
    """{{1..k}, {k+1..2k}, ...} as a partition of [total]."""
    if k < 1 or total % k:
        raise SizeMismatchError(f"[{total}] does not split into blocks of {k}")
    blocks = tuple(tuple(range(i, i + k)) for i in range(1, total + 1, k))
    return NoncrossingPartition._from_canonical(total, blocks)


def residue_classes(total, k):
    """{{1, k+1, ...}, ..., {k, 2k, ...}}: the classes constant modulo k."""
    if k < 1 or total % k:
        raise SizeMismatchError(f"[{total}] has no residue classes modulo {k}")
    return tuple(tuple(range(j, total + 1, k)) for j in range(1, k + 1))


def is_k_preserving(a, k):
    """True when every block of a is constant modulo k."""
    if k < 1 or a.n % k:
        raise SizeMismatchError(f"partition of [{a.n}] cannot be {k}-preserving")
    for blk in a.blocks:
        r = blk[0] % k
        for x in blk[1:]:
            if x % k != r:
                return False
    return True


def is_k_completing(a, k):
    """True when the join with the consecutive k-blocks is the full partition.

    Requires a k-preserving input.
    """
    if not is_k_preserving(a, k):
        raise NotKPreservingError(f"{a} is not {k}-preserving")
    return join(a, consecutive_blocks(a.n, k)) == one(a.n)


def enumerate_k_completing(n, k):
    """All k-preserving, k-completing members of NCP(kn), by full scan."""
    from .lattice import iter_ncp

    guard_n(k * n)
    out = []
    for p in iter_ncp(k * n):
        if is_k_preserving(p, k) and is_k_completing(p, k):
            out.append(p)
    return out
