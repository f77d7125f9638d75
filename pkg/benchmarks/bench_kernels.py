"""Benchmark the numba kernels against their pure-numpy fallbacks.

Run:  python3 benchmarks/bench_kernels.py

Times BFS, the stabilizer brute force, and the unit-multiplier scan on a
large instance of the prime-power family and on the degree-12 classes of
Z_6253.  The numba path is skipped when numba is unavailable or disabled
via FROBCIRC_NO_NUMBA=1.
"""

import time

import numpy as np

from frobcirc import _kernels, build_gamma, enumerate_classes, factorize
from frobcirc.gamma import gamma_fixed_points

REPEATS = 5


def bench(label, fn, *args):
    fn(*args)  # warm up (includes JIT compilation)
    times = []
    for _ in range(REPEATS):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    print(f"  {label:<28s} {min(times) * 1e3:9.3f} ms")
    return min(times)


def main():
    spec, g = build_gamma(7, 4, 0)  # 2401 vertices, degree 686
    blocked = np.zeros(g.n, dtype=np.bool_)
    removed = np.zeros(g.n, dtype=np.bool_)
    removed[list(gamma_fixed_points(spec))] = True
    conn = np.array(g.conn, dtype=np.int64)
    sub = np.array(g.conn, dtype=np.int64)

    f = factorize(6253)
    classes = enumerate_classes(f, 12)
    c1 = np.array(classes[0].subgroup, dtype=np.int64)
    c2 = np.array(classes[1].subgroup, dtype=np.int64)

    pairs = [("numpy", _kernels._bfs_numpy, _kernels._semiregular_numpy, _kernels._multiplier_numpy)]
    if _kernels.HAVE_NUMBA:
        pairs.append(
            ("numba", _kernels.bfs_distances, _kernels.semiregular_scan, _kernels.multiplier_scan)
        )
    else:
        print("numba unavailable or disabled; benchmarking numpy path only")

    for name, bfs, semi, mult in pairs:
        print(f"[{name}]")
        bench(f"bfs Gamma(2401,0)", bfs, g.n, conn, 0, blocked)
        bench(f"bfs Gamma(2401,0) - F", bfs, g.n, conn, 1, removed)
        bench(f"stabilizer scan (d=686)", semi, g.n, sub)
        bench(f"multiplier scan n=6253", mult, 6253, c1, c2)


if __name__ == "__main__":
    main()
