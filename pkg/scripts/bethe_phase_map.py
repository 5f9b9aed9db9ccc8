"""Phase map of the two-magnon Bethe polynomials over (L, a, delta).

Prints one row per L with the on-circle count at each delta and lists every
point where the critical-value prediction disagrees with the root oracle.
"""

import argparse
import time

from polysym.bethe import delta_grid, phase_sweep


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--L-min", type=int, default=3)
    ap.add_argument("--L-max", type=int, default=10)
    ap.add_argument("--step", type=float, default=0.1)
    ap.add_argument("--delta-max", type=float, default=3.0)
    args = ap.parse_args()

    t = time.perf_counter()
    deltas = delta_grid(-args.delta_max, args.delta_max, args.step)
    verdicts = phase_sweep(range(args.L_min, args.L_max + 1), deltas)
    by_key: dict[tuple[int, int], list] = {}
    for v in verdicts:
        by_key.setdefault((v.L, v.a), []).append(v)
    for (L, a), row in sorted(by_key.items()):
        cells = "".join("o" if v.off_circle == 0 else ("2" if v.off_circle == 2 else "x") for v in row)
        print(f"L={L:2d} a={a:2d} {cells}")
    bad = [v for v in verdicts if v.agrees is False]
    checked = sum(v.agrees is not None for v in verdicts)
    print(f"\n{len(verdicts)} instances, {checked} with a prediction, {len(bad)} disagreements, "
          f"{time.perf_counter() - t:.1f}s")
    for v in bad:
        print(f"  L={v.L} a={v.a} delta={v.delta:+.1f} predicted {v.predicted}, observed {v.observed}")
    print("legend: o all on circle, 2 all but two, x other")


if __name__ == "__main__":
    main()
