"""Compare the compiled and pure-Python F_p rank kernels on real coboundary matrices.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--quick]

Both backends must return the same rank; the script exits nonzero otherwise.
"""

import argparse
import sys
import time

from lieposet import (
    ADJOINT,
    TRIVIAL,
    available_backends,
    build_algebra,
    chain,
    complex_for,
    parse_field,
    rank,
    sphere,
    use_backend,
)

CASES = [
    # (label, poset, module, weight_zero, degree)
    ("chain:5 trivial d^4", chain(5), TRIVIAL, False, 4),
    ("sphere:1 adjoint d^3", sphere(1), ADJOINT, False, 3),
    ("sphere:2 adjoint d^2", sphere(2), ADJOINT, False, 2),
    ("sphere:2 adjoint d^3", sphere(2), ADJOINT, False, 3),
    ("sphere:2 adjoint wz d^4", sphere(2), ADJOINT, True, 4),
]
SLOW = [("sphere:2 adjoint d^4", sphere(2), ADJOINT, False, 4)]


def best_of(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="skip the 10^5-row matrix")
    ap.add_argument("--field", default="fp:7")
    args = ap.parse_args(argv)
    field = parse_field(args.field)
    backends = available_backends()
    if "cython" not in backends:
        print("compiled kernel not built; only the Python backend is available")

    cases = CASES + ([] if args.quick else SLOW)
    print(f"{'case':<26}{'shape':>16}{'nnz':>10}{'rank':>8}" + "".join(f"{b:>10}" for b in backends) + "   speedup")
    status = 0
    for label, P, kind, wz, n in cases:
        alg = build_algebra(P, field)
        M = complex_for(alg, kind, wz).coboundary_matrix(n)
        times, ranks = {}, {}
        for b in backends:
            with use_backend(b):
                times[b], ranks[b] = best_of(lambda: rank(M), args.repeat)
        if len(set(ranks.values())) != 1:
            print(f"rank mismatch on {label}: {ranks}", file=sys.stderr)
            status = 1
        r = ranks["python"]
        nnz = sum(len(row) for row in M.rows)
        speed = f"{times['python'] / times['cython']:8.1f}x" if "cython" in times else "       -"
        print(
            f"{label:<26}{f'{M.nrows}x{M.ncols}':>16}{nnz:>10}{r:>8}"
            + "".join(f"{times[b]:>9.3f}s" for b in backends)
            + "  " + speed
        )
    return status


if __name__ == "__main__":
    sys.exit(main())
