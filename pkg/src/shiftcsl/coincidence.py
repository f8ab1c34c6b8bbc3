"""Coincidence rotations and reflections of the square lattice Z[i].

A rotation is multiplication by ``eps * z / conj(z)`` where ``z`` is a
canonical Gaussian integer coprime to its conjugate and ``eps`` a unit.
A reflection is that rotation applied after complex conjugation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Mapping

from sympy import factorint

from .gaussian import (
    ONE,
    UNITS,
    GaussianInt,
    GaussianRational,
    IntLike,
    canonical_associate,
    divides,
    exact_div,
    gcd,
    split_prime,
    unit_index,
)


@dataclass(frozen=True)
class Isometry:
    z: GaussianInt
    eps: GaussianInt = ONE
    reflected: bool = False

    def __post_init__(self):
        if not self.eps.is_unit():
            raise ValueError(f"eps={self.eps} is not a unit")
        w, _ = canonical_associate(self.z)
        if w != self.z:
            raise ValueError(f"numerator {self.z} is not canonical; use make_isometry")

    @property
    def sigma(self) -> int:
        return self.z.norm()

    def sort_key(self) -> tuple:
        return (self.sigma, self.z.re, self.z.im, unit_index(self.eps), self.reflected)

    def __str__(self) -> str:
        s = f"R({self.z}, {self.eps})"
        return s + "T_r" if self.reflected else s


@dataclass(frozen=True)
class CSL:
    """The principal ideal ``(generator)``, a sublattice of index ``norm(generator)``."""

    generator: GaussianInt

    @property
    def index(self) -> int:
        return self.generator.norm()

    def basis(self) -> tuple[GaussianInt, GaussianInt]:
        g = self.generator
        return g, GaussianInt(0, 1) * g

    def __contains__(self, w: IntLike) -> bool:
        return divides(self.generator, w)


def make_isometry(z: IntLike, eps: IntLike = ONE, reflected: bool = False) -> Isometry:
    """Normalise the multiplier ``eps * z / conj(z)`` into canonical form.

    Any common factor of ``z`` and ``conj(z)`` is cancelled and ``z`` is moved to
    its canonical associate; the unit absorbs whatever that changes.
    """
    h = GaussianInt.coerce(z)
    eps = GaussianInt.coerce(eps)
    if not h:
        raise ValueError("numerator must be nonzero")
    g = gcd(h, h.conj())
    v = exact_div(g.conj(), g)
    k = exact_div(h, g)
    w, u = canonical_associate(k)
    return Isometry(w, eps * v.conj() * u.conj() * u.conj(), reflected)


IDENTITY = Isometry(ONE, ONE, False)
CONJUGATION = Isometry(ONE, ONE, True)  # T_r, reflection in the real axis


def point_group() -> list[Isometry]:
    """The 8 symmetries of the square lattice fixing the origin."""
    return [Isometry(ONE, u, r) for r in (False, True) for u in UNITS]


def isometry_from_exponents(
    exps: Mapping[int, int], eps: IntLike = ONE, reflected: bool = False
) -> Isometry:
    z = ONE
    for p, n in exps.items():
        omega = split_prime(p)
        if n > 0:
            z = z * omega**n
        elif n < 0:
            z = z * omega.conj() ** (-n)
    return make_isometry(z, eps, reflected)


def sigma(R: Isometry) -> int:
    return R.z.norm()


def csl(R: Isometry) -> CSL:
    return CSL(R.z)


def multiplier(R: Isometry) -> GaussianRational:
    return GaussianRational(R.eps * R.z, R.z.conj())


def apply(R: Isometry, w) -> GaussianRational:
    w = GaussianRational.coerce(w)
    if R.reflected:
        w = w.conj()
    return multiplier(R) * w


def compose(R1: Isometry, R2: Isometry) -> Isometry:
    """The map ``R1 o R2`` (apply R2 first)."""
    z2, e2 = R2.z, R2.eps
    if R1.reflected:
        # conjugation in R1 turns R2's multiplier into its conjugate
        z2, e2 = z2.conj(), e2.conj()
    g = gcd(R1.z, z2.conj())
    h1 = exact_div(R1.z, g)
    h2 = exact_div(z2, g.conj())
    return make_isometry(h1 * h2, R1.eps * e2, R1.reflected != R2.reflected)


def inverse(R: Isometry) -> Isometry:
    if R.reflected:
        return R
    return make_isometry(R.z.conj(), R.eps.conj())


def _prime_powers(m: int) -> dict[int, int] | None:
    """Factorisation of m if every prime factor is 1 mod 4, else None."""
    fac = factorint(m)
    if any(p % 4 != 1 for p in fac):
        return None
    return fac


def enumerate_numerators(m: int) -> list[GaussianInt]:
    """Every canonical primitive numerator of norm m, sorted."""
    if m < 1:
        raise ValueError("m must be positive")
    fac = _prime_powers(m)
    if fac is None:
        return []
    choices = []
    for p, e in sorted(fac.items()):
        omega = split_prime(p)
        choices.append((omega**e, omega.conj() ** e))
    out = set()
    for pick in product(*choices):
        z = ONE
        for w in pick:
            z = z * w
        out.add(canonical_associate(z)[0])
    return sorted(out, key=GaussianInt.sort_key)


def f(m: int) -> int:
    """Number of CSLs of Z[i] with index m."""
    if m < 1:
        raise ValueError("m must be positive")
    fac = _prime_powers(m)
    return 0 if fac is None else 2 ** len(fac)


def f_hat(m: int) -> int:
    """Number of coincidence rotations of Z[i] with index m."""
    return 4 * f(m)


def isometries(m: int, *, reflections: bool = True) -> Iterator[Isometry]:
    """All coincidence isometries of Z[i] of index m, in table order."""
    flags = (False, True) if reflections else (False,)
    for z in enumerate_numerators(m):
        for u in UNITS:
            for r in flags:
                yield Isometry(z, u, r)


def isometries_up_to(bound: int, *, reflections: bool = True) -> Iterator[Isometry]:
    for m in range(1, bound + 1):
        yield from isometries(m, reflections=reflections)
