#!/usr/bin/env python3
"""Run every oracle check and print one line each, with timings."""
import argparse
import sys
import time

from polity.oracle import CATALOG, OracleBounds, verify_proposition


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-base", type=int, default=3)
    p.add_argument("--max-ground", type=int, default=3)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args(argv)
    bounds = OracleBounds(args.max_base, args.max_ground, args.trials, args.seed)
    failed = 0
    for cid in CATALOG:
        t0 = time.perf_counter()
        r = verify_proposition(cid, bounds)
        dt = time.perf_counter() - t0
        failed += not r.passed
        print(f"{'PASS' if r.passed else 'FAIL'} {cid:<17} {r.instances:>10} instances "
              f"({r.exhaustive} exhaustive, {r.sampled} sampled) {dt:6.2f}s")
        if not r.passed:
            print(f"     counterexample: {r.counterexample}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
