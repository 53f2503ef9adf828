#!/usr/bin/env python3
"""Tabulate the quasi-exponent report for every preset in the zoo.

Usage:
    python scripts/qexp_zoo.py [--max-dim N]
"""

import argparse

from hopfqexp.presets import ZOO, get_preset
from hopfqexp.qexp import quasi_exponent


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-dim", type=int, default=None)
    args = parser.parse_args()

    header = f"{'preset':<36} {'dim':>4} {'qexp':>5} {'exponent':>9} " \
             f"{'s2':>3} {'index':>6}"
    print(header)
    print("-" * len(header))
    for name in ZOO:
        H = get_preset(name)
        if args.max_dim is not None and H.dim > args.max_dim:
            continue
        rep = quasi_exponent(H)
        print(f"{name:<36} {H.dim:>4} {rep.qexp:>5} {rep.exponent!s:>9} "
              f"{rep.s2_order:>3} {rep.unipotency_index:>6}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
