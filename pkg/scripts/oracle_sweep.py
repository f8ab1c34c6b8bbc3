"""Brute-force cross-check of membership and coset predictions, with timing.

    python3 scripts/oracle_sweep.py --sigma-max 65
"""

import argparse
import sys
import time

from shiftcsl.gaussian import GaussianRational
from shiftcsl.oracle import agreement_sweep

STANDARD = ["0", "1/2", "1/2+1/2i", "1/3", "1/3+1/3i", "1/5", "2/5", "1/5+1/5i",
            "2/5+2/5i", "2/5+1/5i"]


def parse(text: str) -> GaussianRational:
    re, _, im = text.partition("+")
    return GaussianRational.from_parts(re, im.rstrip("i") or 0)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sigma-max", type=int, default=65)
    ap.add_argument("--radius", type=int, default=None, help="fixed window radius (default 3 * index)")
    args = ap.parse_args()

    total, failures = time.perf_counter(), 0
    for text in STANDARD:
        x = parse(text)
        t0 = time.perf_counter()
        rows = agreement_sweep(x, args.sigma_max, args.radius)
        bad = [r for r in rows if not r.ok]
        failures += len(bad)
        members = sum(r.analytic for r in rows)
        print(f"{str(x):>10}: {len(rows)} isometries, {members:>3} members, "
              f"{len(bad)} disagreements, {time.perf_counter() - t0:5.2f} s")
        for r in bad:
            print(f"    {r.isometry}: analytic={r.analytic} oracle={r.oracle} coset={r.coset_ok}")
    print(f"total {time.perf_counter() - total:.2f} s")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
