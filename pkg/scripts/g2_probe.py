"""Compare the degree formula with fitted degrees for a few G2 pairs.

G2 quasi-polynomials have period up to 6, so the sampling budget is larger
than the classical default and longer trial periods are allowed.
"""

import argparse
import sys

from kostka_degree.stretch import predicted_degree, verify_pair
from kostka_degree.suite import G2_PROBE

PERIODS = (1, 2, 3, 4, 6, 12)


def budget(pred):
    return max(36, 6 * (pred + 3))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--show-branches", action="store_true")
    args = ap.parse_args(argv)
    mismatches = 0
    for p in G2_PROBE:
        rs, lam, mu = p.build()
        pred = predicted_degree(rs, lam, mu)
        rep = verify_pair(rs, lam, mu, n_max=budget(pred), methods=("kostant",), trial_periods=PERIODS)
        q = rep.fitted
        deg = q.degree if q is not None else None
        mismatches += deg != pred
        print(f"{p.name:<20} predicted {pred}  fitted {deg}  period {q.period if q else '-'}  n_max {rep.n_max}")
        if args.show_branches and q is not None:
            for i, b in enumerate(q.branches):
                print(f"    N = {i} mod {q.period}: {[str(c) for c in b]}")
    print(f"{len(G2_PROBE) - mismatches}/{len(G2_PROBE)} agree")
    return 0


if __name__ == "__main__":
    sys.exit(main())
