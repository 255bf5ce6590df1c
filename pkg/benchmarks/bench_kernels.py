"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--length N] [--repeat R]

Inputs are long repetition-free prefixes, so every detector has to scan
the whole word.  Without the compiled extension only the Python column
is printed.
"""

import argparse
import timeit

from powerfree import kernels
from powerfree.constructions import fy_stream, gw_stream


def cases(n):
    gw = gw_stream().prefix(n).data
    fy = fy_stream().prefix(n).data
    return [
        ("cube scan, g(w)", lambda k: k.find_repetition(gw, 3, 1, False)),
        ("overlap scan, g(w)", lambda k: k.find_repetition(gw, 2, 1, True)),
        ("square scan, f(y)", lambda k: k.find_repetition(fy, 2, 1, False)),
        ("square runs <= 108, g(w)", lambda k: k.square_runs(gw, 108)),
        ("max exponent, g(w)", lambda k: k.max_repetition(gw)),
    ]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--length", type=int, default=100_000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    backends = kernels.available_backends()
    names = sorted(backends, key=lambda b: b != "python")
    print(f"input length {args.length}, best of {args.repeat}")
    print(f"{'kernel':<26}" + "".join(f"{b:>12}" for b in names) + ("     speedup" if len(names) > 1 else ""))
    for label, run in cases(args.length):
        times = []
        for b in names:
            k = backends[b]
            times.append(min(timeit.repeat(lambda: run(k), number=1, repeat=args.repeat)))
        row = f"{label:<26}" + "".join(f"{t:>11.4f}s" for t in times)
        if len(times) > 1:
            row += f"{times[0] / times[1]:>11.1f}x"
        print(row, flush=True)


if __name__ == "__main__":
    main()
