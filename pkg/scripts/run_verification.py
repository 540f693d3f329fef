#!/usr/bin/env python3
"""Run every verification check and write a markdown report (default: verification.md)."""

import argparse
import sys
import time

from crossratio.checks import FAIL, FLAGGED, PASS, ordered_ids, run
from crossratio.cli import _fmt_value


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-o", "--output", default="verification.md")
    args = ap.parse_args()
    t0 = time.perf_counter()
    rows, counts = [], {PASS: 0, FAIL: 0, FLAGGED: 0}
    for r in run(ordered_ids()):
        counts[r.status] += 1
        rows.append("| %s | %s | %s | `%s` | `%s` | %d |" % (
            r.id, r.status, r.provenance, _fmt_value(r.expected), _fmt_value(r.computed), r.ms))
        print("%-28s %s" % (r.id, r.status), flush=True)
    with open(args.output, "w", encoding="utf-8") as f:
        f.write("| id | status | provenance | expected | computed | ms |\n|---|---|---|---|---|---|\n")
        f.write("\n".join(rows) + "\n\n")
        f.write("%d pass, %d fail, %d flagged; %.1f s\n"
                % (counts[PASS], counts[FAIL], counts[FLAGGED], time.perf_counter() - t0))
    print("report written to", args.output)
    return 1 if counts[FAIL] else 0


if __name__ == "__main__":
    sys.exit(main())
