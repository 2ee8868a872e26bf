"""Benchmark the compiled kernel against the pure-Python fallback on the
workloads that dominate real runs: exchange products, exact division, and
full mutation sequences.

Usage: python benchmarks/bench_kernel.py [--repeat N]
"""

import argparse
import random
import time

from superquiver.kernel import pykernel

try:
    from superquiver.kernel import _ckernel
except ImportError:
    _ckernel = None


def dense_poly_map(rng, n, odd_bits, terms):
    out = {}
    while sum(len(b) for b in out.values()) < terms:
        mask = rng.getrandbits(odd_bits)
        exp = tuple(rng.randrange(-6, 7) for _ in range(n))
        out.setdefault(mask, {})[exp] = rng.randrange(-99, 100) or 1
    return out


def bench_mul(kernel, rng, repeat):
    a = dense_poly_map(rng, 4, 4, 220)
    b = dense_poly_map(rng, 4, 4, 220)
    start = time.perf_counter()
    for _ in range(repeat):
        kernel.mul_maps(a, b)
    return time.perf_counter() - start


def bench_div(kernel, rng, repeat):
    r = dense_poly_map(rng, 3, 0, 150)
    q = dense_poly_map(rng, 3, 0, 40)
    p = {}
    kernel.block_addmul(p, r.get(0, {}), q.get(0, {}), 1)
    start = time.perf_counter()
    for _ in range(repeat):
        kernel.exact_div_blocks(p, q.get(0, {}))
    return time.perf_counter() - start


def bench_mutations(backend_env, repeat):
    """End-to-end: a Laurent sweep slice in a subprocess pinned to a backend."""
    import os
    import subprocess
    import sys

    code = (
        "from superquiver.verify import verify_laurent;"
        f"r = verify_laurent(120, rng_seed=3, jobs=1);"
        "print(r.elapsed)"
    )
    env = dict(os.environ)
    env["SUPERQUIVER_PURE"] = backend_env
    best = None
    for _ in range(repeat):
        out = subprocess.run(
            [sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True
        )
        elapsed = float(out.stdout.strip().splitlines()[-1])
        best = elapsed if best is None else min(best, elapsed)
    return best


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    if _ckernel is None:
        print("compiled kernel not built; showing pure-Python numbers only")
    backends = [("python", pykernel)] + ([("cython", _ckernel)] if _ckernel else [])

    print(f"{'workload':<28}" + "".join(f"{name:>12}" for name, _ in backends) + f"{'speedup':>10}")
    for label, fn in (("mul 220x220 terms", bench_mul), ("exact_div 6000/40 terms", bench_div)):
        times = []
        for _, kernel in backends:
            rng = random.Random(12345)
            times.append(fn(kernel, rng, args.repeat))
        row = f"{label:<28}" + "".join(f"{t:>11.3f}s" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:>9.2f}x"
        print(row)

    times = []
    for name in ("1", "0") if _ckernel else ("1",):
        times.append(bench_mutations(name, max(1, args.repeat // 2)))
    row = f"{'mutation sweep (120 seeds)':<28}" + "".join(f"{t:>11.3f}s" for t in times)
    if len(times) == 2:
        row += f"{times[0] / times[1]:>9.2f}x"
    print(row)


if __name__ == "__main__":
    main()
