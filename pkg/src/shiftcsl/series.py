"""Dirichlet-series coefficients from Euler products, and checks against enumeration.

Local factors are given as explicit coefficient sequences in ``p^-s``; only
geometric-type factors occur here, so integer convolution is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable, Sequence

from sympy import primerange

from .gaussian import GaussianRational
from .shifted import count_fx, reduce_shift


# Local factor coefficients, indexed by the power k of t = p^-s.


def one_plus_over_one_minus(k: int) -> int:
    """(1 + t) / (1 - t) = 1 + 2t + 2t^2 + ..."""
    return 1 if k == 0 else 2


def geometric(k: int) -> int:
    """1 / (1 - t)."""
    return 1


def one_plus_three_over_one_minus(k: int) -> int:
    """(1 + 3t) / (1 - t) = 1 + 4t + 4t^2 + ..."""
    return 1 if k == 0 else 4


def trivial(k: int) -> int:
    return 1 if k == 0 else 0


@dataclass(frozen=True)
class LocalFactorSpec:
    """Per-prime local factors; ``rule(p)`` gives the coefficient function of p."""

    name: str
    rule: Callable[[int], Callable[[int], int]]

    def coefficients(self, p: int, limit: int) -> list[int]:
        seq = self.rule(p)
        out, pk = [], 1
        while pk <= limit:
            out.append(seq(len(out)))
            pk *= p
        if out[0] != 1:
            raise ValueError(f"local factor at {p} must have constant term 1")
        return out


def split_primes_spec(
    name: str = "Phi", overrides: dict[int, Callable[[int], int]] | None = None
) -> LocalFactorSpec:
    """(1+p^-s)/(1-p^-s) at every p = 1 mod 4, with optional per-prime overrides."""
    overrides = dict(overrides or {})

    def rule(p: int) -> Callable[[int], int]:
        if p in overrides:
            return overrides[p]
        return one_plus_over_one_minus if p % 4 == 1 else trivial

    return LocalFactorSpec(name, rule)


PHI = split_primes_spec("Phi")
PHI_WITHOUT_5 = split_primes_spec("Phi without 5", {5: trivial})
PHI_X_TWO_FIFTHS = split_primes_spec("Phi_x (x=2/5+i/5)", {5: geometric})
PSI_X_TWO_FIFTHS = split_primes_spec("Psi_x (x=2/5+i/5)", {5: one_plus_three_over_one_minus})
ONES = LocalFactorSpec("1", lambda p: trivial)


@dataclass(frozen=True)
class CoefficientTable:
    limit: int
    values: dict[int, int]

    def __getitem__(self, m: int) -> int:
        return self.values[m]

    def nonzero(self) -> dict[int, int]:
        return {m: v for m, v in self.values.items() if v}


def euler_coefficients(spec: LocalFactorSpec, limit: int) -> CoefficientTable:
    if limit < 1:
        raise ValueError("limit must be positive")
    vals = [0] * (limit + 1)
    vals[1] = 1
    for p in primerange(2, limit + 1):
        local = spec.coefficients(p, limit)
        # before this step vals vanishes on multiples of p
        for k in range(len(local) - 1, 0, -1):
            c = local[k]
            if not c:
                continue
            pk = p**k
            for m in range(1, limit // pk + 1):
                if m % p and vals[m]:
                    vals[m * pk] += c * vals[m]
    return CoefficientTable(limit, {m: vals[m] for m in range(1, limit + 1)})


def table_from(values: Sequence[int] | dict[int, int], limit: int | None = None) -> CoefficientTable:
    if not isinstance(values, dict):
        values = {m: v for m, v in enumerate(values, start=1)}
    return CoefficientTable(limit or max(values), dict(values))


def verify_multiplicative(table: CoefficientTable) -> bool:
    v = table.values
    if v.get(1) != 1:
        return False
    for m in range(2, table.limit + 1):
        for n in range(m, table.limit // m + 1):
            if gcd(m, n) == 1 and v[m * n] != v[m] * v[n]:
                return False
    return True


@dataclass(frozen=True)
class ClosedForm:
    """Generating functions of one shift class: each column is ``scale * product``."""

    label: str
    columns: dict[str, tuple[LocalFactorSpec, int]]


def closed_form(x) -> ClosedForm | None:
    """Known generating functions for x, looked up through its reduced shift class."""
    xr, _ = reduce_shift(x)
    key = (xr.re, xr.im)
    h, t, v = Fraction(1, 2), Fraction(1, 3), Fraction(1, 5)

    def cf(label, f, fhat, Fhat):
        return ClosedForm(label, {"f_x": f, "fhat_x": fhat, "Fhat_x": Fhat})

    if key in ((0, 0), (h, h)):
        return cf("OC(x+G) = OC(G)", (PHI, 1), (PHI, 4), (PHI, 8))
    if key == (h, 0):
        return cf("rotations with eps = +-1", (PHI, 1), (PHI, 2), (PHI, 4))
    if key in ((t, 0), (t, t)):
        return cf("denominator 3", (PHI, 1), (PHI, 1), (PHI, 2))
    if key in ((v, 0), (2 * v, 0), (v, v), (2 * v, 2 * v)):
        return cf("denominator 5 on the triangle edges", (PHI_WITHOUT_5, 1), (PHI_WITHOUT_5, 1), (PHI_WITHOUT_5, 2))
    if key == (2 * v, v):
        return cf("denominator 1+2i", (PHI_X_TWO_FIFTHS, 1), (PHI_WITHOUT_5, 1), (PSI_X_TWO_FIFTHS, 1))
    return None


@dataclass
class ComparisonReport:
    x: GaussianRational
    limit: int
    label: str | None
    mismatches: list[tuple[int, str, int, int]] = field(default_factory=list)

    @property
    def known(self) -> bool:
        return self.label is not None

    @property
    def ok(self) -> bool:
        return self.known and not self.mismatches


def compare_enumeration_to_series(x, limit: int) -> ComparisonReport:
    """Enumerate the counting functions of x up to ``limit`` and diff them
    against the closed-form coefficients. Mismatches are ``(m, column,
    enumerated, expected)``."""
    x = GaussianRational.coerce(x)
    form = closed_form(x)
    if form is None:
        return ComparisonReport(x, limit, None)
    expected = {
        col: (euler_coefficients(spec, limit), scale)
        for col, (spec, scale) in form.columns.items()
    }
    report = ComparisonReport(x, limit, form.label)
    for m in range(1, limit + 1):
        counts = count_fx(x, m)
        for col, (table, scale) in expected.items():
            got, want = getattr(counts, col), scale * table[m]
            if got != want:
                report.mismatches.append((m, col, got, want))
    return report
