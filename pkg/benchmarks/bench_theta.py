"""Time the numba theta kernel against the numpy fallback.

    python3 benchmarks/bench_theta.py --points 20000 --repeat 5
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from burniat.numeric._kernels import NUMBA_AVAILABLE, _theta_sum_numba, _theta_sum_numpy


def best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--points", type=int, default=20_000)
    ap.add_argument("--n-max", type=int, default=8)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    rng = np.random.default_rng(args.seed)
    tau = 0.3 + 1.2j
    z = rng.random(args.points) + rng.random(args.points) * tau
    call = lambda f: f(0.5, 0.0, tau, z, args.n_max)  # noqa: E731

    t_np = best_of(lambda: call(_theta_sum_numpy), args.repeat)
    print(f"numpy : {t_np * 1e3:8.2f} ms  ({args.points} points, n_max={args.n_max})")
    if not NUMBA_AVAILABLE or _theta_sum_numba is None:
        print("numba : not installed")
        return
    call(_theta_sum_numba)  # compile outside the timed region
    t_nb = best_of(lambda: call(_theta_sum_numba), args.repeat)
    diff = float(np.max(np.abs(call(_theta_sum_numba)[0] - call(_theta_sum_numpy)[0])))
    print(f"numba : {t_nb * 1e3:8.2f} ms  speedup {t_np / t_nb:5.1f}x  max |diff| {diff:.2e}")


if __name__ == "__main__":
    main()
