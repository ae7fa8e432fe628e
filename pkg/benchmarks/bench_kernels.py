"""Compare the compiled and pure-Python multiplication kernels on the
workloads that dominate real runs: dense-ish graded products ([n]-series
assembly) and bounded products (series truncation)."""

import random
import time

from cubalg import kernels
from cubalg._kernels_py import mul_terms as py_mul
from cubalg._kernels_py import mul_terms_bounded as py_mul_bounded


def random_terms(rng, nvars, nterms, emax, cmax):
    out = {}
    while len(out) < nterms:
        m = tuple(rng.randrange(emax + 1) for _ in range(nvars))
        out[m] = rng.randrange(1, cmax)
    return out


def bench(fn, a, b, extra, reps):
    t0 = time.perf_counter()
    for _ in range(reps):
        result = fn(a, b, *extra)
    return (time.perf_counter() - t0) / reps, result


def main():
    rng = random.Random(17)
    print("kernel backend in use: %s" % kernels.BACKEND)
    cases = [
        ("small dense (6 vars, 40x40 terms)", 6, 40, 3, 1000, 50),
        ("medium (8 vars, 200x200 terms)", 8, 200, 4, 10 ** 6, 10),
        ("large sparse (10 vars, 600x600 terms)", 10, 600, 5, 10 ** 9, 3),
    ]
    for label, nvars, nterms, emax, cmax, reps in cases:
        a = random_terms(rng, nvars, nterms, emax, cmax)
        b = random_terms(rng, nvars, nterms, emax, cmax)
        for modulus in (0, 2):
            t_py, r_py = bench(py_mul, a, b, (modulus,), reps)
            t_k, r_k = bench(kernels.mul_terms, a, b, (modulus,), reps)
            assert r_py == r_k, "kernel mismatch"
            print("%-42s mod %-2s  python %8.3f ms   active %8.3f ms"
                  % (label, modulus or "0", t_py * 1e3, t_k * 1e3))
        indices = tuple(range(min(2, nvars)))
        bound = emax
        t_py, r_py = bench(py_mul_bounded, a, b, (0, indices, bound), reps)
        t_k, r_k = bench(kernels.mul_terms_bounded, a, b,
                         (0, indices, bound), reps)
        assert r_py == r_k, "bounded kernel mismatch"
        print("%-42s bounded %8.3f ms vs %8.3f ms"
              % (label, t_py * 1e3, t_k * 1e3))


if __name__ == "__main__":
    main()
