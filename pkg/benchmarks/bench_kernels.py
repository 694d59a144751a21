"""Time each hot kernel under the numba and numpy backends.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--threads N]

Each row reports the best wall time of ``--repeat`` runs after one warm-up
call (so numba compilation is excluded) and checks that both backends
return identical integer histograms.
"""
import argparse
import time

import numpy as np

from ringfourier import kernels, make_ring, paraboloid, probe_frequency, set_threads, use_backend
from ringfourier.characters import pairing_matrix, trace_frequency
from ringfourier.fourier import frequency_ranks
from ringfourier.ncpoly import graph_values


def graph_case(spec, d):
    R = make_ring(spec)
    y = graph_values(paraboloid(d), 0, R, d)
    ranks, W = frequency_ranks(R, d), pairing_matrix(R)
    return f"graph {spec} d={d}", lambda: kernels.graph_histograms(y, ranks, W, R.size, R.exponent)


def direct_case(spec, d, n):
    R = make_ring(spec)
    elems = np.random.default_rng(0).integers(0, R.size, size=(n, d))
    ranks, W = frequency_ranks(R, d), pairing_matrix(R)
    return f"direct {spec} d={d} N={n}", lambda: kernels.direct_histograms(elems, ranks, W, R.exponent)


def diff_case(spec, d, n):
    R = make_ring(spec)
    rng = np.random.default_rng(1)
    E = rng.integers(0, R.size, size=(n, d))
    V = np.unique(rng.integers(0, R.size**d, size=R.size ** (d - 1)))
    sub = R.add_table[:, R.neg_table]
    return f"difference {spec} d={d} |E|={n}", lambda: kernels.difference_pairs(E, V, sub, R.size, R.size**d)


def probe_case(spec, d):
    R = make_ring(spec)
    E = R.unit_matrix(1, 1)
    freq = trace_frequency(R, (E,) * d)
    return f"probe {spec} d={d}", lambda: probe_frequency(paraboloid(d), 0, R, d, freq)


CASES = [
    lambda: graph_case("gf(27)", 3),
    lambda: graph_case("mat(2,gf(3))", 2),
    lambda: direct_case("zmod(12)", 3, 2000),
    lambda: diff_case("gf(23)", 2, 3000),
    lambda: probe_case("mat(4,gf(2))", 2),
    lambda: probe_case("mat(2,gf(5))", 3),
    lambda: probe_case("mat(3,gf(3))", 2),
]


def best_of(fn, repeat):
    fn()
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--threads", type=int, default=0)
    args = ap.parse_args()
    if args.threads:
        set_threads(args.threads)
    print(f"{'kernel':36s} {'numba s':>10s} {'numpy s':>10s} {'speedup':>8s}  same")
    for make in CASES:
        name, fn = make()
        results = {}
        for backend in ("numba", "numpy"):
            with use_backend(backend):
                results[backend] = best_of(fn, args.repeat)
        (tn, a), (tp, b) = results["numba"], results["numpy"]
        same = np.array_equal(np.asarray(a), np.asarray(b))
        print(f"{name:36s} {tn:10.4f} {tp:10.4f} {tp / tn:8.1f}  {same}")


if __name__ == "__main__":
    main()
