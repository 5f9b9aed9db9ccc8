"""Exhaustive Mahler-measure minimum over small integer coefficient boxes."""

import argparse
import time

from polysym.mahler import family_search


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--degrees", type=int, nargs="+", default=[4, 6, 8, 10, 12])
    ap.add_argument("--height", type=int, default=1)
    ap.add_argument("--constraint", choices=["psr", "non-sr", "none"], default="psr")
    ap.add_argument("--chunks", type=int, default=1)
    args = ap.parse_args()

    print(f"{'deg':>4} {'examined':>9} {'M=1':>6} {'min M > 1':>16}  argmin")
    for n in args.degrees:
        t = time.perf_counter()
        r = family_search(n, args.height, args.constraint, chunks=args.chunks)
        m = "-" if r.minimum_measure_above_one is None else f"{r.minimum_measure_above_one:.12f}"
        arg = "; ".join(str(list(a)) for a in r.argmin)
        print(f"{n:>4} {r.candidates_examined:>9} {r.measure_one_count:>6} {m:>16}  {arg}  ({time.perf_counter() - t:.2f}s)")


if __name__ == "__main__":
    main()
