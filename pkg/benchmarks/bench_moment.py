"""Compare the compiled and NumPy moment kernels.

Reports per-call time of the objective on catalog algebras, the maximum
disagreement between the two kernels, and wall time of a full descent.

    python3 benchmarks/bench_moment.py [--repeat 20000]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from nilrad import _kernels, _moment_py
from nilrad.catalog import b12, g_alpha, m2, witt
from nilrad.convex_cert import alpha_set
from nilrad.soliton_numeric import _Objective, minimize_moment_norm


def per_call(fn, args, repeat: int) -> float:
    t = time.perf_counter()
    for _ in range(repeat):
        fn(*args)
    return (time.perf_counter() - t) / repeat


def descent_time(alg, kernel) -> float:
    saved = _kernels.objective
    _kernels.objective = kernel
    try:
        t = time.perf_counter()
        minimize_moment_norm(alg, max_iter=20_000)
        return time.perf_counter() - t
    finally:
        _kernels.objective = saved


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=20_000)
    args = ap.parse_args()
    try:
        from nilrad import _moment_ext
    except ImportError:
        print("compiled kernel not built; run `pip install -e . --no-build-isolation`")
        return
    rng = np.random.default_rng(0)
    print(f"{'algebra':10s} {'N':>3s} {'numpy us':>9s} {'cython us':>10s} {'speedup':>8s} "
          f"{'max diff':>9s} {'descent np':>11s} {'descent cy':>11s}")
    for alg in (witt(8), g_alpha(11, 0), b12("+"), m2(8)):
        S = alpha_set(alg)
        obj = _Objective(alg, S)
        x = rng.uniform(-1, 1, alg.dim)
        call = (obj.beta, obj.logw0, x)
        t_py = per_call(_moment_py.objective, call, args.repeat)
        t_cy = per_call(_moment_ext.objective, call, args.repeat)
        a, b = _moment_py.objective(*call), _moment_ext.objective(*call)
        diff = max(abs(a[0] - b[0]), float(np.max(np.abs(a[1] - b[1]))))
        d_py = descent_time(alg, _moment_py.objective)
        d_cy = descent_time(alg, _moment_ext.objective)
        print(f"{alg.name:10s} {S.N:3d} {t_py * 1e6:9.2f} {t_cy * 1e6:10.2f} {t_py / t_cy:7.1f}x "
              f"{diff:9.1e} {d_py:10.3f}s {d_cy:10.3f}s")


if __name__ == "__main__":
    main()
