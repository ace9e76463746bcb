"""Time the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Prints one row per (kernel, size) with the best-of-N wall time for each
backend and the speedup.  Exits with status 1 if the extension is not built.
Spectral analysis is not timed: both backends use numpy's FFT for it.
"""

import argparse
import sys
import timeit

import numpy as np

from wirtlab._backend import get_backend


def cases(rng):
    for deg, n in [(8, 256), (32, 4096), (128, 65536)]:
        a, b = rng.normal(size=deg), rng.normal(size=deg)
        t = 2 * np.pi * np.arange(n) / n
        yield f"eval_trig deg={deg} n={n}", "eval_trig", (0.1, a, b, t)
    for n in [128, 256, 512]:
        t = 2 * np.pi * np.arange(n) / n
        r = 1 + 0.3 * np.cos(5 * t)
        # simple polygon: the scan cannot exit early
        yield f"any_crossing n={n}", "any_crossing", (r * np.cos(t), r * np.sin(t), 1e-12)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args(argv)
    try:
        cy = get_backend("cython")
    except ImportError:
        print("compiled extension not built; run `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1
    py = get_backend("python")
    rng = np.random.default_rng(0)
    print(f"{'case':32s} {'cython [ms]':>12s} {'python [ms]':>12s} {'speedup':>8s}")
    for label, name, call_args in cases(rng):
        times = []
        for mod in (cy, py):
            fn = getattr(mod, name)
            number = max(1, int(0.05 / max(timeit.timeit(lambda: fn(*call_args), number=1), 1e-6)))
            best = min(timeit.repeat(lambda: fn(*call_args), number=number, repeat=args.repeat)) / number
            times.append(best * 1e3)
        print(f"{label:32s} {times[0]:12.4f} {times[1]:12.4f} {times[1] / times[0]:8.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
