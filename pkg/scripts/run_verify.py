"""Run every property suite over several fields and seeds and print a summary table.

    python3 scripts/run_verify.py --seeds 0 1 2 --fields q gf:2 gf:5 --trials 100
"""

import argparse
import time

from leavitt_lab import Field
from leavitt_lab.harness import SUITES, SuiteConfig, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--fields", nargs="+", default=["q", "gf:2", "gf:5"])
    ap.add_argument("--seeds", nargs="+", type=int, default=[0, 1])
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--order", type=int, default=16)
    args = ap.parse_args()

    bad = 0
    for text in args.fields:
        field = Field.parse(text)
        for seed in args.seeds:
            cfg = SuiteConfig(field, args.order, seed, args.trials)
            for name in SUITES:
                start = time.perf_counter()
                rep = run_suite(name, cfg)
                status = "PASS" if rep.passed else "FAIL"
                print(f"{status} {str(field):<6} seed={seed:<3} {name:<20} trials={rep.trials:<6} "
                      f"{time.perf_counter() - start:6.2f}s")
                for f in rep.failures:
                    print(f"    trial {f.trial}: {f.message}\n    rerun: {f.command}")
                bad += not rep.passed
    print(f"{bad} failing suite runs")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
