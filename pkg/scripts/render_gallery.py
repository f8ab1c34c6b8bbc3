"""Write one SVG per worked shift, each with a low-index member isometry.

    python3 scripts/render_gallery.py --out gallery/
"""

import argparse
import pathlib
import sys

from shiftcsl.coincidence import isometries_up_to
from shiftcsl.gaussian import GaussianRational
from shiftcsl.render import render_svg
from shiftcsl.shifted import oc_membership

SHIFTS = {
    "half-half": ("1/2", "1/2"),
    "half": ("1/2", "0"),
    "third": ("1/3", "0"),
    "fifth": ("1/5", "0"),
    "two-fifths-one-fifth": ("2/5", "1/5"),
}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=pathlib.Path, default=pathlib.Path("gallery"))
    ap.add_argument("--radius", type=int, default=6)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    for name, (re, im) in SHIFTS.items():
        x = GaussianRational.from_parts(re, im)
        S = next(S for S in isometries_up_to(100) if S.sigma > 1 and oc_membership(x, S))
        path = args.out / f"{name}.svg"
        path.write_text(render_svg(x, S, args.radius), encoding="utf-8")
        print(f"{path}: x = {x}, {S}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
