"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 3]

Each workload runs on both backends; results are checked for equality
before timings are reported.
"""
import argparse
import random
import time

from symf import kernels
from symf.schur_weyl import commutant, index_word, polarized_generators
from symf.truncation import _basis_poly


def rref_random(seed=1, nrows=400, ncols=400, density=0.004):
    rng = random.Random(seed)
    rows = []
    for _ in range(nrows):
        rows.append({c: rng.choice((-1, 1)) for c in range(ncols) if rng.random() < density})
    return lambda: kernels.rref(rows, ncols)


def rref_commutant_systems(N=3, n=4):
    """Every elimination the commutant computation performs, replayed."""
    recorded = []
    real = kernels.rref

    def spy(rows, ncols):
        rows = list(rows)
        recorded.append((rows, ncols))
        return real(rows, ncols)

    kernels.rref = spy
    try:
        commutant(N, n)
    finally:
        kernels.rref = real
    return lambda: [kernels.rref(rows, ncols) for rows, ncols in recorded]


def commutator_systems(N=3, n=4):
    """Commutators of the weight-preserving unit matrices with every generator."""
    D = N ** n
    weight = [tuple(sorted(index_word(i, N, n))) for i in range(D)]
    basis = [{a * D + b: 1} for a in range(D) for b in range(D) if weight[a] == weight[b]]
    ops = [[(a, b, g) for (a, b), g in op.matrix.items()] for op in polarized_generators(N, n)]
    return lambda: [kernels.commutator_system(basis, items, D) for items in ops]


def commutant_run(N=3, n=4):
    return lambda: commutant(N, n).dimension


def poly_products(N=5, d=5):
    polys = [dict(_basis_poly("s", lam, N)) for lam in [(d,), (d - 2, 2), (d - 3, 2, 1)]]

    def run():
        return [kernels.poly_mul(a, b, N) for a in polys for b in polys]
    return run


WORKLOADS = [
    ("rref: random sparse 400x400", rref_random),
    ("rref: commutant N=3 n=4 systems", rref_commutant_systems),
    ("commutators: N=3 n=4, all generators", commutator_systems),
    ("poly_mul: Schur polys N=5 deg 5", poly_products),
    ("commutant N=3 n=4 end to end", commutant_run),
]


def timed(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not kernels.compiled_available():
        print("compiled kernels not built; only the Python backend is timed")
    backends = ["python"] + (["cython"] if kernels.compiled_available() else [])
    print("%-40s %12s %12s %8s" % ("workload", "python [s]", "cython [s]", "speedup"))
    for name, make in WORKLOADS:
        fn = make()
        times = {}
        results = {}
        for b in backends:
            old = kernels.use_backend(b)
            try:
                times[b], results[b] = timed(fn, args.repeat)
            finally:
                kernels.use_backend(old)
        if len(results) == 2 and results["python"] != results["cython"]:
            raise SystemExit("backends disagree on %s" % name)
        py = times["python"]
        cy = times.get("cython")
        print("%-40s %12.4f %12s %8s" % (
            name, py, "-" if cy is None else "%.4f" % cy,
            "-" if cy is None else "%.1fx" % (py / cy)))


if __name__ == "__main__":
    main()
