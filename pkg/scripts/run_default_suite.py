"""Run the default verification suite and print the report table.

    python scripts/run_default_suite.py [--jobs N] [--report out.json]
"""

import argparse
import json
import sys
import time

from curvehilb.verify import all_passed, default_suite, render_table, run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--report")
    args = ap.parse_args()

    start = time.perf_counter()
    reports = run_suite(default_suite(), workers=args.jobs)
    print(render_table(reports))
    print(f"total {time.perf_counter() - start:.2f}s")
    if args.report:
        with open(args.report, "w") as fh:
            json.dump([r.to_json() for r in reports], fh, indent=2)
    return 0 if all_passed(reports) else 2


if __name__ == "__main__":
    sys.exit(main())
