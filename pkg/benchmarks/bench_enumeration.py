"""Compare the compiled and pure-Python genus-tree kernels.

    python benchmarks/bench_enumeration.py [--max-genus 20] [--repeat 3]
"""

import argparse
import time

from weierloci import _kernels
from weierloci._kernels import _pytree

try:
    from weierloci._kernels import _tree
except ImportError:
    _tree = None


def best_time(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-genus", type=int, default=20)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"selected backend: {_kernels.BACKEND}")
    if _tree is None:
        print("compiled kernel not built; only the fallback is timed")
    print(f"{'genus':>5} {'count':>9} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for g in range(10, args.max_genus + 1, 2):
        tp, cp = best_time(lambda: _pytree.count_tree((), g), args.repeat)
        if _tree is not None:
            tc, cc = best_time(lambda: _tree.count_tree((), g), args.repeat)
            assert cc == cp, "kernels disagree"
            print(f"{g:>5} {cp[g]:>9} {tp:>10.4f} {tc:>10.4f} {tp / tc:>7.1f}x")
        else:
            print(f"{g:>5} {cp[g]:>9} {tp:>10.4f} {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
