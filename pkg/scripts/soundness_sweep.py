"""Run the criteria battery on random polynomials and report referee incidents."""

import argparse
import time
from collections import Counter

import numpy as np

from polysym.criteria import battery
from polysym.sampling import sweep_polynomial


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-n", "--count", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=8)
    ap.add_argument("--max-degree", type=int, default=10)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    fired: Counter = Counter()
    incidents = []
    t = time.perf_counter()
    for i in range(args.count):
        p = sweep_polynomial(rng, args.max_degree)
        rep = battery(p)
        fired.update(rep.fired)
        if rep.incidents:
            incidents.append((i, p, rep.incidents))
    print(f"{args.count} polynomials in {time.perf_counter() - t:.1f}s, {len(incidents)} incidents")
    for name, k in sorted(fired.items(), key=lambda x: -x[1]):
        print(f"  {name:24s} fired {k}")
    for i, p, inc in incidents:
        print(f"  #{i}: {', '.join(inc)}  coeffs={p.coeffs.tolist()}")


if __name__ == "__main__":
    main()
