"""Compare the compiled polynomial kernel with the pure-Python fallback.

Times kadd and kmul on dense random Laurent polynomials and a small
end-to-end Macdonald computation routed through whichever kernel the
package selected at import.

Usage: python3 benchmarks/bench_poly.py [--terms N] [--rounds N]
"""

import argparse
import random
import time

from ncmac import _poly_kernel_py
from ncmac import rings

try:
    from ncmac import _poly_kernel
except ImportError:
    _poly_kernel = None


def random_terms(rng, n_terms, n_vars=3, max_exp=6):
    out = {}
    while len(out) < n_terms:
        exps = tuple(rng.randint(-max_exp, max_exp) for _ in range(n_vars))
        out[exps] = rng.randint(-50, 50) or 1
    return out


def bench(kernel, a, b, rounds):
    t0 = time.perf_counter()
    for _ in range(rounds):
        kernel.kadd(a, b)
    t_add = (time.perf_counter() - t0) / rounds
    t0 = time.perf_counter()
    for _ in range(rounds):
        kernel.kmul(a, b)
    t_mul = (time.perf_counter() - t0) / rounds
    return t_add, t_mul


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--terms", type=int, default=400)
    ap.add_argument("--rounds", type=int, default=20)
    args = ap.parse_args()

    rng = random.Random(0)
    a = random_terms(rng, args.terms)
    b = random_terms(rng, args.terms)

    print("active kernel: %s" % rings.KERNEL_IMPLEMENTATION)
    print("operands: %d x %d terms, %d rounds" % (len(a), len(b),
                                                  args.rounds))
    py_add, py_mul = bench(_poly_kernel_py, a, b, args.rounds)
    print("python  kadd %8.3f ms   kmul %8.3f ms" % (py_add * 1e3,
                                                     py_mul * 1e3))
    if _poly_kernel is not None:
        cy_add, cy_mul = bench(_poly_kernel, a, b, args.rounds)
        print("cython  kadd %8.3f ms   kmul %8.3f ms" % (cy_add * 1e3,
                                                         cy_mul * 1e3))
        print("speedup kadd %7.2fx    kmul %7.2fx" % (py_add / cy_add,
                                                      py_mul / cy_mul))
    else:
        print("compiled kernel not available; skipping comparison")

    from ncmac.macdonald import tildeH_sym
    t0 = time.perf_counter()
    tildeH_sym((3, 2, 1), multi_t=True).to_basis("s")
    print("tildeH_(3,2,1) multi-t Schur expansion: %.2f s (%s kernel)"
          % (time.perf_counter() - t0, rings.KERNEL_IMPLEMENTATION))


if __name__ == "__main__":
    main()
