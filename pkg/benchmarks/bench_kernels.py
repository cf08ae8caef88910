"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--n 5] [--repeat 3]
"""

import argparse
import time

from sigmaset import kernels
from sigmaset.spaces import integer_space, naturals, power_set


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=5, help="benchmark on 3^{1..n}")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    space = integer_space(naturals(args.n))
    elems = space.mask_array
    k = len(elems)
    # 3^A has a witness almost at once; a power set is associative and is
    # scanned in full
    subsets = kernels.to_array(power_set(naturals(min(args.n + 2, 8))))
    cases = {
        f"fuse_grid {k}x{k}": lambda impl: kernels.fuse_grid(elems, elems, impl),
        f"pair_scan {k}^2": lambda impl: kernels.pair_scan(elems, impl),
        f"inverse_scan {k}^2": lambda impl: kernels.inverse_scan(elems, 0, impl),
        f"assoc_scan {len(subsets)}^3 (associative, full)": lambda impl: kernels.assoc_scan(
            subsets, 1, len(subsets) ** 3, impl
        ),
    }
    impls = kernels.available()
    print(f"selected backend: {kernels.BACKEND}")
    print(f"{'kernel':<40} " + " ".join(f"{name:>10}" for name in impls) + "   speedup")
    for label, fn in cases.items():
        timings = {name: best_of(lambda: fn(impl), args.repeat) for name, impl in impls.items()}
        line = f"{label:<40} " + " ".join(f"{t * 1e3:>8.1f}ms" for t in timings.values())
        if "cython" in timings:
            line += f"   x{timings['python'] / timings['cython']:.0f}"
        print(line)


if __name__ == "__main__":
    main()
