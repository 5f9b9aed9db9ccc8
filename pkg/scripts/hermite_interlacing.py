"""Mobius images of the Hermite polynomials: circle distance and interlacing."""

import argparse

import numpy as np

from polysym.catalog import circle_arguments, hermite, interlaces
from polysym.mobius import transform_T
from polysym.roots import find_roots


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=25)
    args = ap.parse_args()

    prev = None
    print(f"{'n':>3} {'max ||z|-1|':>12} {'interlaces T_(n-1)':>19}  first arguments")
    for n in range(1, args.n_max + 1):
        t = transform_T(hermite(n)).poly
        dev = float(np.max(np.abs(np.abs(find_roots(t).values()) - 1)))
        inter = "" if prev is None else str(interlaces(t, prev))
        args_ = np.round(circle_arguments(t)[:4], 4).tolist()
        print(f"{n:>3} {dev:12.2e} {inter:>19}  {args_}")
        prev = t


if __name__ == "__main__":
    main()
