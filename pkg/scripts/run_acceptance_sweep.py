"""Run the full oracle suite and write a timed JSON report.

    python scripts/run_acceptance_sweep.py --jobs 4 --out sweep.json
"""

import argparse
import json
import time

from slblocks.oracles import run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--suite", choices=("core", "full"), default="full")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--seeds", type=int, default=50)
    ap.add_argument("--out", default=None)
    args = ap.parse_args()

    start = time.perf_counter()
    reports = run_suite(args.suite, range(args.seeds), args.jobs)
    elapsed = time.perf_counter() - start
    for r in reports:
        status = "ok  " if r.passed else "FAIL"
        print(f"{status} {r.name:<18} cases={r.cases:<8} {r.details}")
        if not r.passed:
            print(f"     {r.counterexample}")
    print(f"{len(reports)} checks in {elapsed:.1f}s")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump({"suite": args.suite, "seconds": round(elapsed, 2), "checks": [r.to_dict() for r in reports]}, fh, indent=2)


if __name__ == "__main__":
    main()
