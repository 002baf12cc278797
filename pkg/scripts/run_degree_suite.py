"""Verify the degree formula on every pair of the fixed suite.

Prints one row per pair (predicted, fitted, geometric, period, seconds) and
optionally writes the full reports as JSON lines.

    python3 scripts/run_degree_suite.py [--json out.jsonl] [--methods kostant bz]
"""

import argparse
import json
import sys
import time

from kostka_degree.stretch import verify_pair
from kostka_degree.suite import DEGREE_SUITE


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--json", help="write one JSON report per line to this file")
    ap.add_argument("--methods", nargs="+", default=["auto"], help="samplers to run and cross-check")
    ap.add_argument("--no-geometric", action="store_true", help="skip the affine-hull computation")
    args = ap.parse_args(argv)

    sink = open(args.json, "w") if args.json else None
    bad = 0
    t_all = time.time()
    print(f"{'pair':<28}{'pred':>6}{'fit':>6}{'geo':>7}{'per':>5}{'sec':>8}  ok")
    for p in DEGREE_SUITE:
        rs, lam, mu = p.build()
        t0 = time.time()
        rep = verify_pair(rs, lam, mu, methods=tuple(args.methods), geometric=not args.no_geometric)
        dt = time.time() - t0
        fit = rep.fitted.degree if rep.fitted is not None else "-"
        per = rep.fitted.period if rep.fitted is not None else "-"
        geo = "-" if rep.geometric_dimension is None else rep.geometric_dimension
        bad += not rep.ok
        print(f"{p.name:<28}{rep.predicted!s:>6}{fit!s:>6}{geo!s:>7}{per!s:>5}{dt:>8.1f}  {rep.ok}")
        if sink:
            sink.write(json.dumps({"pair": p.name, **rep.to_json()}, sort_keys=True) + "\n")
    if sink:
        sink.close()
    print(f"{len(DEGREE_SUITE) - bad}/{len(DEGREE_SUITE)} pairs ok in {time.time() - t_all:.1f}s")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
