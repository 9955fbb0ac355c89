"""Time the numba kernels against the pure-numpy fallbacks.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

import numpy as np

from lrbquiver import _kernels, braid_arrangement, free_lrb
from lrbquiver.lattice import support_of
from lrbquiver.quiver import _witnesses


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def arrow_jobs(S):
    L, supp = support_of(S)
    jobs = []
    for X in range(L.size):
        members = np.asarray(supp.members[X], dtype=np.int64)
        for Y in range(L.size):
            if L.leq[Y, X] and X != Y:
                y = supp.members[Y][0]
                jobs.append((members, _witnesses(S, L, supp, X, y).astype(np.int64), np.int64(y)))
    return jobs


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    bands = {"free5": free_lrb(5), "braid5": braid_arrangement(5)}
    rng = np.random.default_rng(0)
    rows = []
    for name, S in bands.items():
        m = S.mult
        seeds = [np.unique(rng.integers(0, S.size, size=4)).astype(np.int64) for _ in range(50)]
        jobs = arrow_jobs(S)
        cases = {
            "associativity": (lambda f: f(m), _kernels.assoc_witness_numba, _kernels.assoc_witness_numpy),
            "closure x50": (lambda f: [f(m, s) for s in seeds], _kernels.closure_numba, _kernels.closure_numpy),
            f"arrow classes x{len(jobs)}": (
                lambda f: [f(m, a, w, y) for a, w, y in jobs],
                _kernels.arrow_classes_numba,
                _kernels.arrow_classes_numpy,
            ),
        }
        for label, (call, fast, slow) in cases.items():
            call(fast)  # compile
            t_fast = best_of(lambda: call(fast), args.repeat)
            t_slow = best_of(lambda: call(slow), args.repeat)
            rows.append((name, S.size, label, t_fast, t_slow))

    print(f"{'band':<8}{'size':>6}  {'kernel':<22}{'numba s':>10}{'numpy s':>10}{'speedup':>9}")
    for name, size, label, t_fast, t_slow in rows:
        print(f"{name:<8}{size:>6}  {label:<22}{t_fast:>10.4f}{t_slow:>10.4f}{t_slow / t_fast:>8.1f}x")


if __name__ == "__main__":
    main()
