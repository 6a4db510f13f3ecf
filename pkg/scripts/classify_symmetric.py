"""Replay every claim on S3..S6 and write the JSON report.

    python scripts/classify_symmetric.py --targets S3,S4,S5,S6 --out report.json
"""

import argparse
import sys
import time

from gcgraph.classify import render_reports, reports_to_json, verify_paper


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--targets", default="S3,S4,S5,S6")
    ap.add_argument("--out", default=None)
    args = ap.parse_args()
    t0 = time.perf_counter()
    reports = verify_paper([t.strip() for t in args.targets.split(",")])
    print(render_reports(reports))
    print(f"elapsed {time.perf_counter() - t0:.1f}s")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(reports_to_json(reports))
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
