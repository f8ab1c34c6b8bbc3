"""Enumerate the counting functions of the worked shifts and diff them against
their Euler-product closed forms.

    python3 scripts/reproduce_examples.py --limit 250
"""

import argparse
import sys

from shiftcsl.gaussian import GaussianRational
from shiftcsl.series import PHI, compare_enumeration_to_series, euler_coefficients
from shiftcsl.shifted import count_fx, group_structure

SHIFTS = [
    ("1/2", "1/2"),
    ("1/2", "0"),
    ("1/3", "0"),
    ("1/3", "1/3"),
    ("1/5", "0"),
    ("2/5", "0"),
    ("1/5", "1/5"),
    ("2/5", "2/5"),
    ("2/5", "1/5"),
]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--limit", type=int, default=250)
    ap.add_argument("--show", type=int, default=75, help="print rows with m up to this")
    args = ap.parse_args()

    phi = euler_coefficients(PHI, args.limit)
    ok = True
    for re, im in SHIFTS:
        x = GaussianRational.from_parts(re, im)
        report = compare_enumeration_to_series(x, args.limit)
        st = group_structure(x)
        verdict = "group" if st.is_group else "not a group"
        if st.note != verdict:
            verdict += f"; {st.note}"
        print(f"x = {x}  [{report.label}]  OC(x+G): {verdict}")
        print(f"   {'m':>4} {'f':>3} {'f_x':>4} {'fhat_x':>6} {'Fhat_x':>6}")
        for m in range(1, min(args.show, args.limit) + 1):
            c = count_fx(x, m)
            if c.Fhat_x or phi[m]:
                print(f"   {m:>4} {phi[m]:>3} {c.f_x:>4} {c.fhat_x:>6} {c.Fhat_x:>6}")
        status = "matches" if report.ok else f"{len(report.mismatches)} mismatches"
        print(f"   closed form through m = {args.limit}: {status}\n")
        ok &= report.ok
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
