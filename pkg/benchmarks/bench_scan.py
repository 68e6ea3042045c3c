"""Time the lattice-shell scan with the pure-Python and compiled kernels.

Two rows per case: the integer kernel alone, and the full scan including
the exact decoding of hits into Fraction vectors.

    python3 benchmarks/bench_scan.py [--repeat 3]
"""
import argparse
import time
from fractions import Fraction

from laplace_spectra.latticescan import available_backends, integer_problem, run_kernel, scan
from laplace_spectra.rootsystem import lattice_from_spec, system_from_spec

CASES = [
    ("A2", "weight", Fraction(600)),
    ("B2", "weight", Fraction(800)),
    ("G2", "weight", Fraction(1400)),
    ("A3", "weight", Fraction(120)),
    ("B3", "weight", Fraction(120)),
    ("A4", "weight", Fraction(40)),
]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t)
    return min(times), result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = available_backends()
    print(f"backends: {', '.join(backends)}")
    print(f"{'system':<8}{'stage':>8}{'cutoff':>8}{'scanned':>10}{'hits':>8}" +
          "".join(f"{b + ' s':>12}" for b in backends) + f"{'speedup':>10}")
    for name, lattice, cutoff in CASES:
        rs = system_from_spec(name)
        lat = lattice_from_spec(rs, lattice)
        problem = integer_problem(rs, lat, cutoff)
        stages = {
            "kernel": lambda b: run_kernel(problem, False, b),
            "scan": lambda b: scan(rs, lat, cutoff, exact=False, backend=b),
        }
        for stage, fn in stages.items():
            timings, results = {}, {}
            for b in backends:
                timings[b], results[b] = best_of(lambda: fn(b), args.repeat)
            if stage == "kernel":
                hits, scanned = results["python"][0], results["python"][1]
                if "compiled" in results:
                    assert results["compiled"][2] == "compiled", "int64 guard fell back"
                    assert results["compiled"][:2] == (hits, scanned)
            else:
                if "compiled" in results:
                    assert results["python"].points == results["compiled"].points
            speedup = (f"{timings['python'] / timings['compiled']:.1f}x"
                       if "compiled" in timings else "-")
            print(f"{name:<8}{stage:>8}{str(cutoff):>8}{scanned:>10}{len(hits):>8}" +
                  "".join(f"{timings[b]:>12.4f}" for b in backends) + f"{speedup:>10}")


if __name__ == "__main__":
    main()
