"""Time the leader-profile kernel: compiled extension against the pure-Python fallback.

    python3 benchmarks/bench_oracle.py [--nmax 11] [--repeat 3]
"""
import argparse
import timeit

from lahkit import _kernels_py
from lahkit._backend import compiled_available

WEIGHTINGS = {"lists": _kernels_py.LISTS, "cycles": _kernels_py.CYCLES, "sets": _kernels_py.SETS}


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--nmin", type=int, default=8)
    parser.add_argument("--nmax", type=int, default=11)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if not compiled_available():
        raise SystemExit("compiled kernel not built; reinstall without LAHKIT_NO_EXTENSION")
    from lahkit import _kernels

    print(f"{'n':>3} {'k':>3} {'weighting':<8} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for n in range(args.nmin, args.nmax + 1):
        k = (n + 1) // 2
        for name, w in WEIGHTINGS.items():
            assert _kernels.leader_profile(n, k, w, 0) == _kernels_py.leader_profile(n, k, w, 0)
            py = best(lambda: _kernels_py.leader_profile(n, k, w, 0), args.repeat)
            c = best(lambda: _kernels.leader_profile(n, k, w, 0), args.repeat)
            print(f"{n:>3} {k:>3} {name:<8} {py:>10.4f} {c:>11.5f} {py / c:>7.0f}x")


if __name__ == "__main__":
    main()
