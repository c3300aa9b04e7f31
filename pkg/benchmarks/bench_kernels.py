"""Time the compiled kernels against the pure-Python ones on identical inputs.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import sys
import timeit

from aacm import _pykernels
from aacm.arith import is_squarefree

try:
    from aacm import _ckernels
except ImportError:
    _ckernels = None


def cases():
    # (name, callable taking the backend module)
    ds = [d for d in range(4_000_000, 4_002_000) if is_squarefree(d)]

    def cf(m):
        for d in ds:
            m.cf_unit_mod(d, d * d, 10**8)

    def bern(m):
        m.bernoulli_table_mod_p(2001, 2003)

    def kron(m):
        m.kronecker_table(4 * 4099215, 200_000)

    table_py = _pykernels.kronecker_table(1720, 1720)
    table_c = _ckernels.kronecker_table(1720, 1720) if _ckernels else None

    def fermat(m):
        table = table_c if m is _ckernels else table_py
        for _ in range(200):
            m.fermat_quotient_sum(table, 43, 1720)

    return [
        (f"cf_unit_mod x{len(ds)} (d ~ 4e6)", cf),
        ("bernoulli_table_mod_p (p = 2003)", bern),
        ("kronecker_table (D = 16396860, 2e5 entries)", kron),
        ("fermat_quotient_sum x200 (D = 1720, p = 43)", fermat),
    ]


def best(fn, module, repeat: int) -> float:
    return min(timeit.repeat(lambda: fn(module), number=1, repeat=repeat))


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled extension not built; only the Python kernels are available", file=sys.stderr)
    print(f"{'kernel':48} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, fn in cases():
        t_py = best(fn, _pykernels, args.repeat)
        if _ckernels is None:
            print(f"{name:48} {t_py:10.4f} {'-':>10} {'-':>8}")
            continue
        t_c = best(fn, _ckernels, args.repeat)
        print(f"{name:48} {t_py:10.4f} {t_c:10.4f} {t_py / t_c:8.1f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
