"""Benchmark the numba-jitted hot kernels against the pure-numpy fallback.

Run both paths:

    python benchmarks/bench_kernels.py
    MALMSTEN_NO_NUMBA=1 python benchmarks/bench_kernels.py

The kernels here dominate closed-form evaluation: the Euler-Maclaurin
Hurwitz core (dozens of complex powers per call, called q times per Lerch
decomposition) and the Lerch power series (thousands of terms near the
unit circle).
"""

import os
import time

from malmsten import USE_NUMBA
from malmsten import kernels
from malmsten.specfun import _bern_fac_array  # noqa: the benchmark ties to impl


def bench(label, fn, repeat):
    fn()  # warmup (jit compile on the numba path)
    t0 = time.perf_counter()
    for _ in range(repeat):
        out = fn()
    dt = (time.perf_counter() - t0) / repeat
    print(f"{label:44s} {dt * 1e6:10.1f} us/call   (result {out:.6g})")
    return dt


def main():
    mode = "numba" if USE_NUMBA else "numpy fallback"
    print(f"kernel path: {mode} (MALMSTEN_NO_NUMBA="
          f"{os.environ.get('MALMSTEN_NO_NUMBA', '')!r})")
    kernels.warmup()
    bern = _bern_fac_array()

    def hurwitz_call():
        acc = 0j
        for a in (0.25, 0.5, 0.75, 1.25):
            acc += kernels.hurwitz_em_core(2.5 + 2j, a + 0j, 25, 12, bern)
        return acc

    def lerch_mid():
        v, _ = kernels.lerch_series_core(0.72 + 0.3j, -2.0 + 0j, 0.5 + 0j,
                                         1e-15, 100000)
        return v

    def lerch_near_circle():
        v, _ = kernels.lerch_series_core(0.995 + 0j, 1.5 + 0j, 1.0 + 0j,
                                         1e-15, 400000)
        return v

    bench("hurwitz Euler-Maclaurin core (4 calls)", hurwitz_call, 2000)
    bench("lerch series, |z| = 0.78", lerch_mid, 2000)
    bench("lerch series, |z| = 0.995 (~15k terms)", lerch_near_circle, 50)


if __name__ == "__main__":
    main()
