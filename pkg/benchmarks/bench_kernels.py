"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]
"""
from __future__ import annotations

import argparse
import timeit

from ecensus import _pykernels, kernels

CASES = [
    ("census2 tau=i t=200", "census2_classes", (0, 1, 1, 1, 200, 0, 201)),
    ("census2 (1,2,3) t=150", "census2_classes", (1, 6, 1, 2, 150, 0, 151)),
    ("census3 tau=i t=14", "census3_classes", (0, 1, 1, 1, 1, 14, 0, 15)),
    ("census3 (1,1,1) t=12", "census3_classes", (1, 1, 1, 2, 1, 12, 0, 13)),
    ("oracle g=2 B=6", "oracle_scan", (0, 1, 1, 2, 6, (1, 1), 10, -6, 6)),
    ("oracle g=3 B=2", "oracle_scan", (1, 1, 1, 3, 2, (1, 1, 1), 5, -2, 2)),
]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    ck = kernels._ckernels
    if ck is None:
        print("compiled extension not available; only the Python backend can be timed")
    print(f"{'case':<26}{'python [s]':>12}{'cython [s]':>12}{'speedup':>10}")
    for label, name, call_args in CASES:
        py = min(timeit.repeat(lambda: getattr(_pykernels, name)(*call_args), number=1, repeat=args.repeat))
        if ck is None:
            print(f"{label:<26}{py:>12.4f}{'-':>12}{'-':>10}")
            continue
        fast = getattr(ck, name)
        assert list(map(tuple, fast(*call_args))) == list(map(tuple, getattr(_pykernels, name)(*call_args)))
        cy = min(timeit.repeat(lambda: fast(*call_args), number=1, repeat=args.repeat))
        print(f"{label:<26}{py:>12.4f}{cy:>12.4f}{py / cy:>9.1f}x")


if __name__ == "__main__":
    main()
