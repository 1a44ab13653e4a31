"""Compare the numba kernels with their numpy fallbacks.

    python3 benchmarks/bench_kernels.py [--repeat N]

Set MEDANON_DISABLE_NUMBA=1 to see the pure-python cost of the un-jitted
kernels (slow; use a small --repeat).
"""

import argparse
import time

import numpy as np

from medanon import _accel, metrics, phantom, risk


def timeit(fn, repeat):
    fn()  # warm-up / compile
    t = time.perf_counter()
    for _ in range(repeat):
        fn()
    return (time.perf_counter() - t) / repeat


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=50)
    ap.add_argument("--res", type=int, default=64)
    args = ap.parse_args()

    rec = phantom.generate_patient(0, 3)
    ident = np.asarray(rec.identity_params)
    lesions = np.array([[0, -0.3, 0.1, 0.12, 0.4], [2, 0.3, -0.2, 0.14, 0.35]])
    pose = np.array([0.02, -0.01, 0.03, 1.0])
    res = args.res

    def render_kernel():
        out = np.empty((res, res))
        mask = np.empty((res, res))
        phantom._render_kernel(ident, lesions, pose, res, out, mask)
        return out

    img = np.random.default_rng(0).random((res, res))
    taps = metrics.gaussian_window(11, 1.5)

    def filt_kernel():
        out = np.empty((res - 10, res - 10))
        metrics._valid_sep_kernel(img, taps, out)
        return out

    emb = np.random.default_rng(1).standard_normal((320, 64))
    dist = np.ascontiguousarray(risk.cosine_distance_matrix(emb, emb[::-1]))

    def rank_kernel():
        out = np.empty(len(dist), dtype=np.int64)
        risk._diag_ranks_kernel(dist, out)
        return out

    cases = [
        ("phantom render", render_kernel, lambda: phantom._render_numpy(ident, lesions, pose, res)[0]),
        ("ssim valid filter", filt_kernel, lambda: metrics._valid_sep_numpy(img, taps)),
        ("paired ranks (320)", rank_kernel, lambda: risk._diag_ranks_numpy(dist)),
    ]
    print(f"backend: {_accel.backend()}  repeat={args.repeat}")
    print(f"{'kernel':<20} {'jit [ms]':>10} {'numpy [ms]':>11} {'speedup':>8} {'max|diff|':>10}")
    for name, a, b in cases:
        ta, tb = timeit(a, args.repeat), timeit(b, args.repeat)
        diff = float(np.max(np.abs(np.asarray(a(), dtype=float) - np.asarray(b(), dtype=float))))
        print(f"{name:<20} {ta * 1e3:10.3f} {tb * 1e3:11.3f} {tb / ta:8.2f} {diff:10.2e}")


if __name__ == "__main__":
    main()
