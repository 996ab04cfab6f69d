"""Compare the numba and numpy crossbar kernels on the MNIST-sized workload.

    python benchmarks/bench_kernels.py [--images 10000] [--repeat 5]

Runs the batched predict (corrected currents + tolerant argmax) for a 380x10
crossbar and, when numba is available, checks both paths give identical
decisions.
"""

import argparse
import time

import numpy as np

from mtjxbar import _kernels as k


def timeit(fn, repeat):
    fn()  # warm-up / JIT
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--images", type=int, default=10000)
    ap.add_argument("--rows", type=int, default=380)
    ap.add_argument("--cols", type=int, default=10)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--density", type=float, default=0.15, help="fraction of active input pixels")
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    volts = (rng.random((args.images, args.rows)) < args.density).astype(np.float64)
    g = np.where(rng.integers(0, 2, (args.rows, args.cols)), 1.88, 1.0) * rng.lognormal(0, 0.05, (args.rows, args.cols))
    s, atol = 1.44, k.tie_atol(1.44, 1.0)

    t_np = timeit(lambda: k.numpy_predict(volts, g, s, atol), args.repeat)
    print(f"numpy : {t_np * 1e3:8.2f} ms  ({args.images} x {args.rows} x {args.cols})")
    if k.numba_predict is None:
        print("numba : unavailable (disabled via MTJXBAR_DISABLE_NUMBA or not installed)")
        return
    t_nb = timeit(lambda: k.numba_predict(volts, g, s, atol), args.repeat)
    same = np.array_equal(k.numba_predict(volts, g, s, atol), k.numpy_predict(volts, g, s, atol))
    print(f"numba : {t_nb * 1e3:8.2f} ms  speedup {t_np / t_nb:5.2f}x  identical decisions: {same}")


if __name__ == "__main__":
    main()
