"""Time the oracle kernels with numba on and off.

Each backend runs in its own interpreter because the switch
(SCHURBOUNDS_DISABLE_NUMBA) is read at import time.

    python benchmarks/bench_kernels.py --repeat 5
"""
import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
import numpy as np
from schurbounds import _accel, _kernels

repeat, rows, n = map(int, sys.argv[1:4])
rng = np.random.default_rng(0)
lo = np.sort(rng.integers(0, 4, n))[::-1].astype(float)
hi = lo + rng.integers(1, 6, n)
hi = np.sort(hi)[::-1]
total = float(lo.sum() + hi.sum()) / 2
uniforms = rng.random((rows, n))

def best(fn):
    fn()  # warm-up, includes compilation
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)

samples = _kernels.fill_box_samples(lo, hi, total, uniforms)
top = samples.max(axis=0)
ilo, ihi = np.array([2, 2, 2, 1, 1, 0, 0]), np.array([9, 9, 8, 8, 6, 6, 5])
out = {
    "numba": _accel.USE_NUMBA,
    "fill": best(lambda: _kernels.fill_box_samples(lo, hi, total, uniforms)),
    "dominance": best(lambda: _kernels.prefix_dominance(samples, samples[::-1], 1e-9)),
    "enumerate": best(lambda: _kernels.enumerate_box_integer(ilo, ihi, 30)),
}
print(json.dumps(out))
"""


def run(disable: bool, args) -> dict:
    env = dict(os.environ)
    env.pop("SCHURBOUNDS_DISABLE_NUMBA", None)
    if disable:
        env["SCHURBOUNDS_DISABLE_NUMBA"] = "1"
    proc = subprocess.run(
        [sys.executable, "-c", WORKER, str(args.repeat), str(args.rows), str(args.n)],
        env=env, capture_output=True, text=True, check=True,
    )
    return json.loads(proc.stdout)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--rows", type=int, default=20000, help="sample rows for fill/dominance")
    p.add_argument("--n", type=int, default=12, help="vector length for fill/dominance")
    args = p.parse_args(argv)

    fast, slow = run(False, args), run(True, args)
    if not fast["numba"]:
        print("numba is not installed; both runs used the numpy path")
    print(f"{'kernel':<10} {'numba [ms]':>11} {'numpy [ms]':>11} {'speedup':>8}")
    for key in ("fill", "dominance", "enumerate"):
        a, b = fast[key] * 1e3, slow[key] * 1e3
        print(f"{key:<10} {a:>11.2f} {b:>11.2f} {b / a:>7.1f}x")


if __name__ == "__main__":
    main()
