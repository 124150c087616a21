"""Compare the compiled and pure-Python exact kernels.

    python benchmarks/bench_kernels.py [--repeat 5]

Each workload is what the library actually feeds the kernels: inverting
1sigma1(1; m+1; t) for Bernoulli numbers, a Cauchy product of two
exp_d series, and the explicit composition sum at the cap.
"""
import argparse
import timeit
from fractions import Fraction
from types import SimpleNamespace

from sdcalc import _pykernels
from sdcalc.bernoulli import COMPOSITION_CAP
from sdcalc.combinatorics import sd_pochhammer
from sdcalc.series import exp_d_series, one_sigma_one_tail

try:
    from sdcalc import _ckernels
except ImportError:
    _ckernels = None


def _naive_inverse(a, order):
    b = [1 / Fraction(a[0])]
    for n in range(1, order + 1):
        b.append(-b[0] * sum(a[k] * b[n - k] for k in range(1, n + 1)))
    return b


def _naive_mul(a, b, order):
    return [sum((a[k] * b[n - k] for k in range(n + 1)), Fraction(0)) for n in range(order + 1)]


def _naive_compositions(dens, n):
    def walk(rem, acc):
        if rem == 0:
            return acc
        return sum((walk(rem - k, -acc / dens[k]) for k in range(1, rem + 1)), Fraction(0))
    return walk(n, Fraction(1))


# plain Fraction arithmetic, the baseline both kernels improve on
naive = SimpleNamespace(series_inverse=_naive_inverse, series_mul=_naive_mul,
                        composition_sum=_naive_compositions)


def workloads():
    sigma = one_sigma_one_tail(3, 2, 120).coeffs
    e = exp_d_series(4, 150)
    ex = [c * 3**n for n, c in enumerate(e.coeffs)]
    n = COMPOSITION_CAP
    dens = [1] + [sd_pochhammer(3, 2, k) for k in range(1, n + 1)]
    return {
        "series_inverse d=3 m=2 N=120": lambda k: k.series_inverse(sigma, 120),
        "series_mul d=4 N=150": lambda k: k.series_mul(e.coeffs, ex, 150),
        f"composition_sum d=3 m=1 n={n}": lambda k: k.composition_sum(dens, n),
    }


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; only the Python timings are shown")
    print(f"{'workload':34s} {'Fraction [s]':>12s} {'python [s]':>11s} "
          f"{'cython [s]':>11s} {'cy/py':>7s}")
    for name, job in workloads().items():
        expected = job(naive)
        base = min(timeit.repeat(lambda: job(naive), number=1, repeat=args.repeat))
        if job(_pykernels) != expected:
            raise SystemExit(f"python kernel disagrees on {name}")
        py = min(timeit.repeat(lambda: job(_pykernels), number=1, repeat=args.repeat))
        if _ckernels is None:
            print(f"{name:34s} {base:12.4f} {py:11.4f}")
            continue
        if job(_ckernels) != expected:
            raise SystemExit(f"compiled kernel disagrees on {name}")
        cy = min(timeit.repeat(lambda: job(_ckernels), number=1, repeat=args.repeat))
        print(f"{name:34s} {base:12.4f} {py:11.4f} {cy:11.4f} {py / cy:6.2f}x")


if __name__ == "__main__":
    main()
