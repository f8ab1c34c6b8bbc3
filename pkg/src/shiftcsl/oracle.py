"""Brute-force geometry of shifted-lattice intersections.

The intersection and coset checks never use the divisibility criteria from
:mod:`shiftcsl.shifted`; only :func:`agreement_sweep` consults them, to put
the two answers side by side. A point ``y = x + g`` of the window is kept when ``S^-1(y) - x`` is a Gaussian
integer, which is the definition of ``y`` lying in ``S(x + Z[i])``. The test is
evaluated for the whole window at once on integer arrays after clearing
denominators, so it stays exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

import numpy as np

from .coincidence import Isometry, isometries_up_to
from .gaussian import GaussianInt, GaussianRational
from .shifted import ShiftedCSL, oc_membership, shifted_csl


class WindowTooSmallError(ValueError):
    """The window does not show two independent directions of the intersection."""


@dataclass(frozen=True)
class Window:
    radius: int

    def __post_init__(self):
        if self.radius < 1:
            raise ValueError("window radius must be at least 1")

    @classmethod
    def for_sigma(cls, sigma: int) -> Window:
        return cls(3 * sigma)

    def grid(self) -> tuple[np.ndarray, np.ndarray]:
        """Real and imaginary parts of every window offset, ordered by (re, im)."""
        r = np.arange(-self.radius, self.radius + 1, dtype=np.int64)
        re, im = np.meshgrid(r, r, indexing="ij")
        return re.ravel(), im.ravel()


def _over_integer(w: GaussianRational) -> tuple[GaussianInt, int]:
    return w.num * w.den.conj(), w.den.norm()


def _inverse_affine(x: GaussianRational, S: Isometry):
    """Coefficients with ``S^-1(x + g) - x = A*g' + B``; g' is g or conj(g)."""
    c = GaussianRational(S.eps * S.z, S.z.conj())
    inv_c = 1 / c
    if S.reflected:
        return inv_c.conj(), (x * inv_c).conj() - x
    return inv_c, x * inv_c - x


def membership_mask(x, S: Isometry, window: Window) -> np.ndarray:
    x = GaussianRational.coerce(x)
    A, B = _inverse_affine(x, S)
    (an, ad), (bn, bd) = _over_integer(A), _over_integer(B)
    L = lcm(ad, bd)
    an, bn = an * (L // ad), bn * (L // bd)
    gre, gim = window.grid()
    if S.reflected:
        gim = -gim
    val_re = an.re * gre - an.im * gim + bn.re
    val_im = an.re * gim + an.im * gre + bn.im
    return (val_re % L == 0) & (val_im % L == 0)


def intersection_offsets(x, S: Isometry, window: Window) -> np.ndarray:
    """Offsets g (as an (n, 2) array) with x + g in the intersection."""
    gre, gim = window.grid()
    mask = membership_mask(x, S, window)
    return np.stack([gre[mask], gim[mask]], axis=1)


def brute_force_intersection(x, S: Isometry, window: Window) -> list[GaussianRational]:
    x = GaussianRational.coerce(x)
    return [
        x + GaussianInt(int(a), int(b)) for a, b in intersection_offsets(x, S, window)
    ]


@dataclass(frozen=True)
class Coset:
    """``origin + L`` with L in Hermite normal form, rows (a, 0) and (b, d)."""

    origin: tuple[int, int]
    a: int
    b: int
    d: int

    @property
    def index(self) -> int:
        return self.a * self.d

    def mask(self, window: Window) -> np.ndarray:
        gre, gim = window.grid()
        du, dv = gre - self.origin[0], gim - self.origin[1]
        on_rows = dv % self.d == 0
        return on_rows & ((du - self.b * (dv // self.d)) % self.a == 0)


def _insert(basis: tuple[int, int, int], u: int, v: int) -> tuple[int, int, int]:
    a, b, d = basis
    while v:
        if d == 0:
            b, d, u, v = u, v, 0, 0
            break
        q = v // d
        u, v = u - q * b, v - q * d
        if v:
            (b, d), (u, v) = (u, v), (b, d)
    a = gcd(a, u)
    if d < 0:
        b, d = -b, -d
    if a:
        b %= a
    return a, b, d


def detect_coset(offsets: np.ndarray, window: Window) -> Coset | None:
    """The coset of a rank-2 lattice whose window trace is exactly ``offsets``.

    Returns None when the points are not such a coset. Raises
    WindowTooSmallError when they span fewer than two directions.
    """
    if len(offsets) == 0:
        return None
    u0, v0 = (int(c) for c in offsets[0])
    basis = (0, 0, 0)
    sample = list(offsets[1:33]) + list(offsets[-32:])
    for u, v in sample:
        basis = _insert(basis, int(u) - u0, int(v) - v0)
    gre, gim = window.grid()
    observed = np.zeros(gre.shape, dtype=bool)
    side = 2 * window.radius + 1
    observed[(offsets[:, 0] + window.radius) * side + offsets[:, 1] + window.radius] = True
    while True:
        a, b, d = basis
        if a == 0 or d == 0:
            raise WindowTooSmallError(
                f"intersection spans fewer than two directions in radius {window.radius}"
            )
        predicted = Coset((u0, v0), a, b, d).mask(window)
        if np.any(predicted & ~observed):
            return None
        missing = np.flatnonzero(observed & ~predicted)
        if len(missing) == 0:
            return Coset((u0, v0), a, b, d)
        k = missing[0]
        basis = _insert(basis, int(gre[k]) - u0, int(gim[k]) - v0)


def verify_membership(x, S: Isometry, window: Window) -> bool:
    """True iff the intersection is non-empty and forms one lattice coset in the window."""
    offsets = intersection_offsets(x, S, window)
    if len(offsets) == 0:
        return False
    return detect_coset(offsets, window) is not None


def verify_coset(c: ShiftedCSL, window: Window) -> bool:
    """Exact equality of the brute-force intersection with ``x + t + (z)`` in the window."""
    if c.isometry is None:
        raise ValueError("the CSL does not record the isometry that produced it")
    observed = membership_mask(c.x, c.isometry, window)
    gre, gim = window.grid()
    n = c.z.norm()
    du, dv = gre - c.t.re, gim - c.t.im
    # (g - t) * conj(z) must vanish modulo N(z)
    pre = du * c.z.re + dv * c.z.im
    pim = dv * c.z.re - du * c.z.im
    predicted = (pre % n == 0) & (pim % n == 0)
    return bool(np.array_equal(observed, predicted))


@dataclass(frozen=True)
class SweepRow:
    isometry: Isometry
    analytic: bool
    oracle: bool
    coset_ok: bool | None  # None for non-members

    @property
    def ok(self) -> bool:
        return self.analytic == self.oracle and self.coset_ok is not False


def agreement_sweep(x, sigma_max: int, radius: int | None = None) -> list[SweepRow]:
    """Compare oracle and analytic membership for every isometry with index <= sigma_max.

    The window radius defaults to 3 * index per isometry.
    """
    x = GaussianRational.coerce(x)
    rows = []
    for S in isometries_up_to(sigma_max):
        w = Window(radius) if radius else Window.for_sigma(S.sigma)
        analytic = oc_membership(x, S)
        oracle = verify_membership(x, S, w)
        coset_ok = verify_coset(shifted_csl(x, S), w) if analytic else None
        rows.append(SweepRow(S, analytic, oracle, coset_ok))
    return rows
