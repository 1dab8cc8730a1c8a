"""Number of 2-blocks of SL_n(eta q) and SU_n(q) for small n and q, as a table."""

import argparse

from slblocks.descent import sl_two_block_inventory
from slblocks.params import GroundParams


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--qs", type=int, nargs="+", default=[3, 5, 7, 9, 11, 13])
    ap.add_argument("--n-max", type=int, default=5)
    args = ap.parse_args()

    ns = range(2, args.n_max + 1)
    print("q    eta  " + "  ".join(f"n={n:<4}" for n in ns))
    for q in args.qs:
        for eta in (1, -1):
            params = GroundParams.from_q(q, eta, 2)
            totals = [sl_two_block_inventory(n, params).total_sl_blocks for n in ns]
            print(f"{q:<4} {eta:+d}   " + "  ".join(f"{t:<6}" for t in totals))


if __name__ == "__main__":
    main()
