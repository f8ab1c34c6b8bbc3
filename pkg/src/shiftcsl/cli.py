"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 parse error,
3 unsupported input (irrational shift where an exact one is needed),
4 isometry is not a coincidence isometry of the shifted lattice.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Any

from .coincidence import Isometry, compose, isometries, make_isometry
from .gaussian import GaussianInt, GaussianRational, factor
from .oracle import agreement_sweep
from .render import render_svg
from .shifted import (
    AIrrBRat,
    ARatBIrr,
    BothIrrDependent,
    BothIrrIndependent,
    Shift,
    count_fx,
    group_structure,
    irrational_oc_group,
    oc_membership,
    shifted_csl,
)

SCHEMA_VERSION = "1"

EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_UNSUPPORTED = 3
EXIT_NOT_MEMBER = 4


class CLIError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+)?")
_PAIR = re.compile(r"([+-]?\d+)/(\d+)")


def _fraction(text: str) -> Fraction:
    if not _RATIONAL.fullmatch(text):
        raise CLIError(f"cannot parse rational number {text!r}", EXIT_PARSE)
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise CLIError(f"zero denominator in {text!r}", EXIT_PARSE) from None


def parse_rational_shift(text: str) -> GaussianRational:
    """Parse ``a/b+c/d i`` style literals (either part optional, ``*`` allowed)."""
    s = text.replace(" ", "").replace("*", "")
    if not s:
        raise CLIError("empty number literal", EXIT_PARSE)
    if s.endswith("i"):
        body = s[:-1]
        cut = max(body.rfind("+"), body.rfind("-"))
        re_txt, im_txt = (body[:cut], body[cut:]) if cut > 0 else ("", body)
        im = {"": 1, "+": 1, "-": -1}.get(im_txt)
        if im is None:
            im = _fraction(im_txt)
    else:
        re_txt, im = s, 0
    real = _fraction(re_txt) if re_txt else 0
    return GaussianRational.from_parts(real, im)


def parse_gaussian_int(text: str) -> GaussianInt:
    w = parse_rational_shift(text)
    if not w.is_integral():
        raise CLIError(f"{text!r} is not a Gaussian integer", EXIT_PARSE)
    return w.num


def parse_shift(text: str) -> Shift:
    """Rational literal, or one of ``irr-a b=<q>``, ``irr-b a=<q>``, ``indep``,
    ``dep <p1>/<q1> <p2>/<q2>``."""
    words = text.split()
    if not words:
        raise CLIError("empty shift", EXIT_PARSE)
    head = words[0]
    if head == "indep" and len(words) == 1:
        return BothIrrIndependent()
    if head in ("irr-a", "irr-b") and len(words) == 2:
        key, _, value = words[1].partition("=")
        if head == "irr-a" and key == "b":
            return AIrrBRat(_fraction(value))
        if head == "irr-b" and key == "a":
            return ARatBIrr(_fraction(value))
        raise CLIError(f"expected '{head} {'b' if head == 'irr-a' else 'a'}=<rational>'", EXIT_PARSE)
    if head == "dep":
        pairs = [_PAIR.fullmatch(w) for w in words[1:]]
        if len(pairs) != 2 or not all(pairs):
            raise CLIError("expected 'dep <p1>/<q1> <p2>/<q2>'", EXIT_PARSE)
        (p1, q1), (p2, q2) = (tuple(int(g) for g in m.groups()) for m in pairs)
        try:
            return BothIrrDependent(p1, q1, p2, q2)
        except ValueError as e:
            raise CLIError(f"malformed descriptor: {e}", EXIT_PARSE) from None
    return parse_rational_shift(text)


def describe_shift(x: Shift) -> str:
    if isinstance(x, GaussianRational):
        return str(x)
    if isinstance(x, AIrrBRat):
        return f"irr-a b={x.b}"
    if isinstance(x, ARatBIrr):
        return f"irr-b a={x.a}"
    if isinstance(x, BothIrrIndependent):
        return "indep"
    return f"dep {x.p1}/{x.q1} {x.p2}/{x.q2}"


def _rational_only(x: Shift) -> GaussianRational:
    if not isinstance(x, GaussianRational):
        raise CLIError(
            f"irrational shift '{describe_shift(x)}' is not supported here", EXIT_UNSUPPORTED
        )
    return x


# -- JSON helpers: integers travel as decimal strings --------------------------


def _gi(z: GaussianInt) -> dict[str, str]:
    return {"re": str(z.re), "im": str(z.im)}


def _iso(S: Isometry) -> dict[str, Any]:
    return {
        "label": str(S),
        "z": _gi(S.z),
        "eps": _gi(S.eps),
        "reflected": S.reflected,
        "sigma": str(S.sigma),
    }


def _document(command: str, inputs: dict[str, Any], results: Any) -> str:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": results,
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _table(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h)
              for i, h in enumerate(header)]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    out = [fmt.format(*header).rstrip(), fmt.format(*("-" * w for w in widths))]
    out += [fmt.format(*r).rstrip() for r in rows]
    return "\n".join(out) + "\n"


# -- commands ------------------------------------------------------------------


def cmd_factor(args) -> str:
    z = parse_gaussian_int(args.z)
    if not z:
        raise CLIError("cannot factor 0", EXIT_PARSE)
    fac = factor(z)
    if args.format == "json":
        results = {
            "unit": _gi(fac.unit),
            "factors": [
                {"prime": _gi(p), "exponent": str(e), "norm": str(p.norm())}
                for p, e in fac.factors
            ],
            "norm": str(z.norm()),
        }
        return _document("factor", {"z": str(z)}, results)
    rows = [[str(p), str(e), str(p.norm())] for p, e in fac.factors]
    return f"{z} = {fac}\n" + _table(["prime", "exp", "norm"], rows)


def _rotation_rows(x: Shift | None, m: int) -> list[tuple[Isometry, GaussianInt | None]]:
    if x is None:
        return [(S, None) for S in isometries(m)]
    if not isinstance(x, GaussianRational):
        group = sorted(irrational_oc_group(x), key=Isometry.sort_key)
        return [(S, None) for S in group if S.sigma == m]
    return [(S, shifted_csl(x, S).t) for S in isometries(m) if oc_membership(x, S)]


def cmd_rotations(args) -> str:
    if args.sigma < 1:
        raise CLIError("--sigma must be positive", EXIT_PARSE)
    x = parse_shift(" ".join(args.shift)) if args.shift else None
    rows = _rotation_rows(x, args.sigma)
    inputs = {"sigma": str(args.sigma), "shift": describe_shift(x) if x is not None else None}
    if args.format == "json":
        results = []
        for S, t in rows:
            entry = _iso(S)
            if t is not None:
                entry["t"] = _gi(t)
            results.append(entry)
        return _document("rotations", inputs, results)
    header = ["isometry", "z", "eps", "kind"] + (["t"] if isinstance(x, GaussianRational) else [])
    body = []
    for S, t in rows:
        r = [str(S), str(S.z), str(S.eps), "reflection" if S.reflected else "rotation"]
        if isinstance(x, GaussianRational):
            r.append(str(t))
        body.append(r)
    n_rot = sum(not S.reflected for S, _ in rows)
    summary = f"{n_rot} rotations, {len(rows) - n_rot} reflections of index {args.sigma}\n"
    return summary + _table(header, body)


def cmd_count(args) -> str:
    if args.limit < 1:
        raise CLIError("--limit must be positive", EXIT_PARSE)
    x = _rational_only(parse_shift(" ".join(args.shift)))
    counts = [count_fx(x, m) for m in range(1, args.limit + 1)]
    if args.nonzero:
        counts = [c for c in counts if c.Fhat_x]
    inputs = {"shift": describe_shift(x), "limit": str(args.limit)}
    if args.format == "json":
        results = [
            {"m": str(c.m), "f_x": str(c.f_x), "fhat_x": str(c.fhat_x),
             "Fhat_x": str(c.Fhat_x), "cosets_x": str(c.cosets_x)}
            for c in counts
        ]
        return _document("count", inputs, results)
    rows = [[str(c.m), str(c.f_x), str(c.fhat_x), str(c.Fhat_x), str(c.cosets_x)] for c in counts]
    return _table(["m", "f_x", "fhat_x", "Fhat_x", "cosets_x"], rows)


def cmd_structure(args) -> str:
    x = parse_shift(" ".join(args.shift))
    st = group_structure(x, args.bound)
    inputs = {"shift": describe_shift(x), "bound": str(args.bound)}
    if args.format == "json":
        results = {
            "is_group": st.is_group,
            "bounded": st.bounded,
            "note": st.note,
            "generator": _iso(st.generator) if st.generator else None,
            "witness": [_iso(T) for T in st.witness] if st.witness else None,
        }
        if not isinstance(x, GaussianRational):
            results["group"] = [_iso(S) for S in st.members]
        return _document("structure", inputs, results)
    verdict = "group" if st.is_group else "not a group"
    if st.bounded:
        verdict += f" (bounded verdict, index <= {args.bound})"
    lines = [f"shift: {describe_shift(x)}", f"verdict: {verdict}", f"note: {st.note}"]
    if st.generator:
        lines.append(f"generator: <{st.generator}>")
    if st.witness:
        T1, T2 = st.witness
        lines.append(f"witness: T1 = {T1}, T2 = {T2}, T1*T2 = {compose(T1, T2)} not in OC(x+G)")
    if not isinstance(x, GaussianRational):
        lines.append("OC(x+G) = {" + ", ".join(str(S) for S in st.members) + "}")
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> tuple[str, int]:
    x = _rational_only(parse_shift(" ".join(args.shift)))
    rows = agreement_sweep(x, args.sigma_max, args.radius)
    bad = [r for r in rows if not r.ok]
    inputs = {"shift": describe_shift(x), "sigma_max": str(args.sigma_max),
              "radius": str(args.radius) if args.radius else None}
    code = EXIT_MISMATCH if bad else 0
    if args.format == "json":
        results = {
            "checked": str(len(rows)),
            "members": str(sum(r.analytic for r in rows)),
            "mismatches": [
                {**_iso(r.isometry), "analytic": r.analytic, "oracle": r.oracle,
                 "coset_ok": r.coset_ok}
                for r in bad
            ],
            "pass": not bad,
        }
        return _document("verify", inputs, results), code
    lines = [
        f"shift {x}: {len(rows)} isometries with index <= {args.sigma_max}, "
        f"{sum(r.analytic for r in rows)} members",
    ]
    for r in bad:
        lines.append(f"MISMATCH {r.isometry}: analytic={r.analytic} oracle={r.oracle} coset_ok={r.coset_ok}")
    lines.append("PASS" if not bad else f"FAIL ({len(bad)} mismatches)")
    return "\n".join(lines) + "\n", code


def cmd_render(args) -> str:
    if args.format == "json":
        raise CLIError("render only produces SVG", EXIT_PARSE)
    if args.radius < 1:
        raise CLIError("--radius must be positive", EXIT_PARSE)
    x = _rational_only(parse_shift(" ".join(args.shift)))
    z = parse_gaussian_int(args.numerator)
    eps = parse_gaussian_int(args.eps)
    if not eps.is_unit():
        raise CLIError(f"--eps {args.eps} is not a unit", EXIT_PARSE)
    if not z:
        raise CLIError("--numerator must be nonzero", EXIT_PARSE)
    S = make_isometry(z, eps, args.reflect)
    if not oc_membership(x, S):
        raise CLIError(f"{S} is not a coincidence isometry of {x} + Z[i]", EXIT_NOT_MEMBER)
    return render_svg(x, S, args.radius)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["table", "json"], default=argparse.SUPPRESS)
    common.add_argument("--output", "-o", metavar="FILE", default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(
        prog="shiftcsl",
        description="Coincidence isometries and CSLs of shifted square lattices.",
    )
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.add_argument("--output", "-o", metavar="FILE", default=None)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("factor", parents=[common], help="factor a Gaussian integer")
    s.add_argument("z")
    s.set_defaults(func=cmd_factor)

    s = sub.add_parser("rotations", parents=[common], help="list coincidence isometries of index m")
    s.add_argument("--sigma", type=int, required=True)
    s.add_argument("--shift", nargs="+")
    s.set_defaults(func=cmd_rotations)

    s = sub.add_parser("count", parents=[common], help="tabulate f_x, fhat_x, Fhat_x")
    s.add_argument("--shift", nargs="+", required=True)
    s.add_argument("--limit", type=int, default=100)
    s.add_argument("--nonzero", action="store_true", help="only rows with some isometry")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("structure", parents=[common], help="is OC(x+Z[i]) a group?")
    s.add_argument("--shift", nargs="+", required=True)
    s.add_argument("--bound", type=int, default=100)
    s.set_defaults(func=cmd_structure)

    s = sub.add_parser("verify", parents=[common], help="cross-check against the brute-force oracle")
    s.add_argument("--shift", nargs="+", required=True)
    s.add_argument("--sigma-max", type=int, default=65)
    s.add_argument("--radius", type=int, default=None)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("render", parents=[common], help="draw an SVG of the coincidence")
    s.add_argument("--shift", nargs="+", required=True)
    s.add_argument("--numerator", default="1")
    s.add_argument("--eps", default="1")
    s.add_argument("--reflect", action="store_true")
    s.add_argument("--radius", type=int, default=6)
    s.set_defaults(func=cmd_render)
    return p


_NEGATIVE_LITERAL = re.compile(r"-[\di]")


def _fold_shift_words(argv: list[str]) -> list[str]:
    """Join the words after ``--shift`` into one token.

    argparse would read words like ``-2/1``, ``-1/2-1/2i`` or ``-i`` as
    options. Other negative literals get a trailing space, which argparse
    takes as the mark of a plain value; the number parsers ignore spaces.
    """
    out, k = [], 0
    while k < len(argv):
        tok = argv[k]
        if tok != "--shift":
            out.append(tok + " " if _NEGATIVE_LITERAL.match(tok) else tok)
            k += 1
            continue
        words = []
        k += 1
        while k < len(argv) and not argv[k].startswith("--") and argv[k] not in ("-o", "-h"):
            words.append(argv[k])
            k += 1
        out.append("--shift=" + " ".join(words))
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    args = parser.parse_args(_fold_shift_words(argv))
    try:
        out = args.func(args)
    except CLIError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    code = 0
    if isinstance(out, tuple):
        out, code = out
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
