"""Compare the compiled kernels against the pure-Python fallback.

Times the raw kernel functions on the workloads that dominate `noncross
verify`: crossing scans over all set partitions, and meet/join sweeps over
all pairs of noncrossing partitions.

Usage: python3 benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import time

from noncross import _kernels_py as pure
from noncross import enumerate_ncp
from noncross.oracles import set_partitions

try:
    from noncross import _kernels_c as compiled
except ImportError:
    compiled = None


def workload_crossing_scan(kernels):
    hits = 0
    for blocks in ALL_PARTITIONS:
        if kernels.is_noncrossing(blocks):
            hits += 1
    return hits


def workload_meet(kernels):
    total = 0
    for a in NCP_BLOCKS:
        for b in NCP_BLOCKS:
            total += len(kernels.meet_blocks(a, b))
    return total


def workload_join(kernels):
    total = 0
    for a in NCP_BLOCKS:
        for b in NCP_BLOCKS:
            total += len(kernels.join_blocks(a, b, JOIN_N))
    return total


WORKLOADS = [
    ("crossing scan, set partitions of [9]", workload_crossing_scan),
    ("meet, all pairs of NCP(6)", workload_meet),
    ("join + closure, all pairs of NCP(6)", workload_join),
]

JOIN_N = 6
ALL_PARTITIONS = None
NCP_BLOCKS = None


def best_of(fn, kernels, repeat):
    checksum = fn(kernels)  # warm-up; also the cross-backend checksum
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn(kernels)
        best = min(best, time.perf_counter() - start)
    return best, checksum


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3, help="timing repeats (best of)")
    args = parser.parse_args()

    global ALL_PARTITIONS, NCP_BLOCKS
    ALL_PARTITIONS = list(set_partitions(9))
    NCP_BLOCKS = [p.blocks for p in enumerate_ncp(JOIN_N)]

    if compiled is None:
        print("compiled kernels are not built; timing the fallback only")

    print(f"{'workload':<40} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for label, fn in WORKLOADS:
        t_pure, check_pure = best_of(fn, pure, args.repeat)
        if compiled is None:
            print(f"{label:<40} {t_pure * 1e3:>8.1f}ms {'-':>10} {'-':>8}")
            continue
        t_comp, check_comp = best_of(fn, compiled, args.repeat)
        if check_pure != check_comp:
            raise SystemExit(f"backends disagree on {label!r}: {check_pure} != {check_comp}")
        print(
            f"{label:<40} {t_pure * 1e3:>8.1f}ms {t_comp * 1e3:>8.1f}ms "
            f"{t_pure / t_comp:>7.1f}x"
        )


if __name__ == "__main__":
    main()
