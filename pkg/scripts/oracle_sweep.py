"""Run the randomized closed-form vs axiom-oracle comparison over several seeds.

    python scripts/oracle_sweep.py --seeds 10 -n 1000
"""

import argparse
import time

from gwzero.randomized import oracle_sweep


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seeds", type=int, default=5)
    ap.add_argument("-n", type=int, default=1000)
    ap.add_argument("--first-seed", type=int, default=0)
    args = ap.parse_args()

    bad = 0
    for seed in range(args.first_seed, args.first_seed + args.seeds):
        t = time.perf_counter()
        r = oracle_sweep(args.n, seed)
        dt = time.perf_counter() - t
        bad += not r.ok
        print(f"seed {seed:>4}: {r.total} queries, {r.compared} compared, {r.nonzero} nonzero, "
              f"{len(r.disagreements)} disagreements, {r.peel_failures} peel-order failures ({dt:.2f}s)")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
