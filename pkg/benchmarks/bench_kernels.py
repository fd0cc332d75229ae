"""Time the numba kernels against their numpy/Python counterparts.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--json out.json]

Each pair is run on the same inputs; outputs are compared before timing so a
speedup is never reported for a kernel that disagrees.
"""
import argparse
import json
import time

import numpy as np

from mvcodec import kernels


def _best(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def _cases(rng):
    # conv-sized im2col: a 64x64 RGB batch through a 5x5 stride-2 layer
    xp = rng.normal(size=(8, 3, 67, 67))
    ho = wo = 32
    cols = kernels.im2col_numpy(xp, 5, 2, ho, wo)
    yield "im2col", (kernels.im2col_numpy, kernels.im2col_numba), (xp, 5, 2, ho, wo)
    yield "col2im", (kernels.col2im_numpy, kernels.col2im_numba), (cols, xp.shape, 5, 2, ho, wo)

    # latent-sized range coding: 128 x 4 x 4 symbols per image, 16 images
    pmf = rng.dirichlet(np.ones(257), size=64)
    cdf = kernels.quantize_pmf_numpy(pmf)
    n = 16 * 128 * 16
    tab = rng.integers(0, 64, n)
    raw = rng.integers(-140, 140, n)
    idx = np.where((raw < -127) | (raw > 128), 256, raw + 127)
    data = kernels.range_encode_python(idx, raw, cdf, tab, 256)
    yield "range_encode", (kernels.range_encode_python, kernels.range_encode_numba), (idx, raw, cdf, tab, 256)
    yield "range_decode", (kernels.range_decode_python, kernels.range_decode_numba), (data, n, cdf, tab, 256)

    yield "quantize_pmf", (kernels.quantize_pmf_numpy, kernels.quantize_pmf_numba), (rng.dirichlet(np.ones(257), size=2048),)
    yield "pairwise_mad", (kernels.pairwise_mad_numpy, kernels.pairwise_mad_numba), (rng.normal(size=(128, 256)),)


def _same(a, b):
    if isinstance(a, tuple):
        return all(_same(x, y) for x, y in zip(a, b))
    if isinstance(a, bytes):
        return a == b
    if isinstance(a, (int, np.integer)):
        return a == b
    return np.allclose(a, b, rtol=0, atol=1e-10)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", help="also write the results here")
    args = p.parse_args(argv)

    rows = []
    for name, (slow, fast), inputs in _cases(np.random.default_rng(args.seed)):
        ref = slow(*inputs)
        out = fast(*inputs)  # first call also triggers compilation
        if not _same(ref, out):
            raise SystemExit(f"{name}: numba and numpy results differ")
        t_np = _best(lambda: slow(*inputs), args.repeat)
        t_nb = _best(lambda: fast(*inputs), args.repeat)
        rows.append({"kernel": name, "numpy_s": t_np, "numba_s": t_nb, "speedup": t_np / t_nb})

    print(f"{'kernel':<14}{'numpy ms':>11}{'numba ms':>11}{'speedup':>9}")
    for r in rows:
        print(f"{r['kernel']:<14}{1e3 * r['numpy_s']:>11.2f}{1e3 * r['numba_s']:>11.2f}{r['speedup']:>8.1f}x")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=1)


if __name__ == "__main__":
    main()
