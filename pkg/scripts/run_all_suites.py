"""Run every reproduction suite and the randomized property suites.

    python scripts/run_all_suites.py [--cases 10000] [--seed 0] [--json]

Exit status is 0 when everything passes and 2 otherwise.
"""

import argparse
import json
import sys

from weylnichols.verify import PROPERTY_SUITES, run_suite


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--cases", type=int, default=10**4)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    results = run_suite("all") + [suite(args.cases, args.seed) for suite in PROPERTY_SUITES]
    if args.json:
        print(json.dumps([r.to_json() for r in results], indent=2))
    else:
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.seconds:.2f}s)")
            for line in r.lines:
                print(f"    {line}")
    return 0 if all(r.passed for r in results) else 2


if __name__ == "__main__":
    sys.exit(main())
