#!/usr/bin/env python3
"""How close each output bit stays to its input bit as n grows.

For each even n, prints the worst per-bit disagreement probability and its
sqrt(n) scaling.  The scaling column should stay below 0.4 (it creeps toward
0.5 * sqrt(2/pi) ~ 0.3989 from below).

    python scripts/flip_probability_scaling.py --max-n 24
"""

import argparse
import math

from cubeball.analysis import flip_probability_exact


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--min-n", type=int, default=4)
    parser.add_argument("--max-n", type=int, default=20)
    args = parser.parse_args()

    print(f"{'n':>4} {'worst_i':>8} {'probability':>16} {'p*sqrt(n)':>12}")
    for n in range(args.min_n, args.max_n + 1, 2):
        probs = {i: flip_probability_exact(n, i) for i in range(1, n + 1)}
        worst_i, worst = max(probs.items(), key=lambda kv: (kv[1], -kv[0]))
        print(
            f"{n:>4} {worst_i:>8} {str(worst):>16} "
            f"{float(worst) * math.sqrt(n):>12.6f}"
        )


if __name__ == "__main__":
    main()
