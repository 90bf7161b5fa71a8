"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py --users 2000 --items 1500 --repeat 3

Each kernel runs on identical inputs under every available back-end; the
outputs are checked for exact equality before timings are reported.
"""
import argparse
import time

import numpy as np

from cfoutliers import kernels
from cfoutliers.distance import _item_major, build_distance_matrix
from cfoutliers.synthetic import synthetic_ratings


def best_of(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def same(a, b):
    if isinstance(a, tuple):
        return all(same(x, y) for x, y in zip(a, b))
    if isinstance(a, np.ndarray):
        return np.array_equal(a, b)
    return a == b


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--users", type=int, default=2000)
    ap.add_argument("--items", type=int, default=1500)
    ap.add_argument("--ratings-per-user", type=int, default=80)
    ap.add_argument("--pam-k", type=int, default=30)
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    ds = synthetic_ratings(args.users, args.items, args.users * args.ratings_per_user,
                           rng_seed=args.seed, min_per_user=min(20, args.ratings_per_user))
    indptr, users, ratings = _item_major(ds)
    D = build_distance_matrix(ds).submatrix(np.arange(ds.n_users), 1.0)
    backends = kernels.available_backends()
    print(f"{ds.n_users} users, {ds.n_items} items, {ds.n_ratings} ratings; "
          f"back-ends: {', '.join(backends)}; selected: {kernels.BACKEND}")

    cases = {
        "pair_rating_stats": lambda be: be.pair_rating_stats(indptr, users, ratings, ds.n_users,
                                                             threads=args.threads),
        f"pam_build(k={args.pam_k})": lambda be: be.pam_build(D, args.pam_k),
        f"pam_swap_step(k={args.pam_k})": lambda be: be.pam_swap_step(D, medoids),
        "diana_splinter": lambda be: be.diana_splinter(D),
    }
    medoids = backends["numpy"].pam_build(D, args.pam_k)

    print(f"{'kernel':<24}" + "".join(f"{name:>12}" for name in backends) + f"{'speedup':>10}")
    for label, case in cases.items():
        times, outs = [], []
        for be in backends.values():
            t, out = best_of(lambda: case(be), args.repeat)
            times.append(t)
            outs.append(out)
        if not all(same(outs[0], o) for o in outs[1:]):
            raise SystemExit(f"{label}: back-ends disagree")
        speed = f"{times[0] / times[-1]:9.1f}x" if len(times) > 1 else ""
        print(f"{label:<24}" + "".join(f"{t:11.3f}s" for t in times) + speed)


if __name__ == "__main__":
    main()
