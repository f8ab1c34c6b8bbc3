"""SVG pictures of a shifted lattice, its rotated copy and their coincidence coset."""

from __future__ import annotations

from fractions import Fraction
from math import ceil

from .coincidence import Isometry, apply
from .gaussian import GaussianInt, GaussianRational
from .oracle import Window, brute_force_intersection
from .shifted import reduce_shift, shifted_csl

SCALE = 40  # pixels per lattice unit
INSET = 160  # side of the fundamental-domain inset, pixels


def _num(v) -> str:
    s = f"{float(v):.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def _xy(w: GaussianRational) -> tuple[str, str]:
    return _num(w.re * SCALE), _num(-w.im * SCALE)


def _dots(points, r: float, cls: str) -> list[str]:
    out = []
    for w in sorted(points, key=GaussianRational.sort_key):
        cx, cy = _xy(w)
        out.append(f'    <circle class="{cls}" cx="{cx}" cy="{cy}" r="{_num(r)}"/>')
    return out


def render_svg(x, S: Isometry, radius: int) -> str:
    """Layers ``lattice`` (x + Z[i]), ``rotated`` (S(x + Z[i])) and ``csl``
    (their intersection, from the brute-force oracle), plus an inset showing
    where x falls in the fundamental triangle."""
    x = GaussianRational.coerce(x)
    bound = Fraction(radius) + Fraction(1, 2)

    def visible(w: GaussianRational) -> bool:
        return abs(w.re) <= bound and abs(w.im) <= bound

    lattice = [x + GaussianInt(a, b) for a in range(-radius - 1, radius + 2)
               for b in range(-radius - 1, radius + 2)]
    lattice = [w for w in lattice if visible(w)]
    reach = ceil(radius * 1.5) + 2
    rotated = [apply(S, x + GaussianInt(a, b)) for a in range(-reach, reach + 1)
               for b in range(-reach, reach + 1)]
    rotated = [w for w in rotated if visible(w)]
    coincident = [w for w in brute_force_intersection(x, S, Window(radius)) if visible(w)]

    c = shifted_csl(x, S)
    corner = x + c.t
    cell = [corner, corner + c.z, corner + c.z + GaussianInt(0, 1) * c.z,
            corner + GaussianInt(0, 1) * c.z]

    half = (radius + 1) * SCALE
    width = 2 * half + INSET + 20
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{2 * half}" viewBox="{-half} {-half} {width} {2 * half}">',
        f"  <title>x = {x}, {S}, index {S.sigma}</title>",
        "  <style>.lat{fill:#9aa5b1}.rot{fill:none;stroke:#d9480f;stroke-width:1.5}"
        ".hit{fill:#1864ab}.cell{fill:#1864ab;fill-opacity:0.12;stroke:#1864ab}</style>",
        f'  <rect x="{-half}" y="{-half}" width="{2 * half}" height="{2 * half}" '
        'fill="white" stroke="#ced4da"/>',
        '  <g id="lattice">',
        *_dots(lattice, 3, "lat"),
        "  </g>",
        '  <g id="rotated">',
        *_dots(rotated, 6, "rot"),
        "  </g>",
        '  <g id="csl">',
        '    <polygon class="cell" points="'
        + " ".join(",".join(_xy(w)) for w in cell) + '"/>',
        *_dots(coincident, 4.5, "hit"),
        "  </g>",
        *_inset(x, half),
        "</svg>",
    ]
    return "\n".join(lines) + "\n"


def _inset(x: GaussianRational, half: int) -> list[str]:
    xr, _ = reduce_shift(x)
    s = 2 * (INSET - 20)  # pixels per unit; the triangle spans half a unit
    ox, oy = half + 10, -half + INSET - 10

    def pt(a, b) -> str:
        return f"{_num(ox + a * s)},{_num(oy - b * s)}"

    h = Fraction(1, 2)
    return [
        '  <g id="fundamental-domain">',
        f'    <rect x="{half + 5}" y="{-half + 5}" width="{INSET}" height="{INSET}" '
        'fill="white" stroke="#ced4da"/>',
        f'    <polygon points="{pt(0, 0)} {pt(h, 0)} {pt(h, h)}" fill="none" stroke="black"/>',
        f'    <circle cx="{_num(ox + xr.re * s)}" cy="{_num(oy - xr.im * s)}" r="4" fill="#d9480f"/>',
        f'    <text x="{half + 10}" y="{-half + 20}" font-size="11">x\' = {xr}</text>',
        "  </g>",
    ]
