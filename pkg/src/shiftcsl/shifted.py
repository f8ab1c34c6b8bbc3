"""Coincidence isometries and CSLs of a shifted square lattice x + Z[i].

Rational shifts are handled exactly through divisibility tests on the reduced
denominator of x. Shifts with an irrational coordinate are described only by
the rationality relations between their coordinates (see the ``*Irr*``
classes), since those relations alone decide the answer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Optional, Union

from .coincidence import (
    CONJUGATION,
    IDENTITY,
    Isometry,
    apply,
    compose,
    inverse,
    isometries,
    isometries_up_to,
    make_isometry,
    point_group,
)
from .gaussian import (
    ONE,
    UNITS,
    GaussianInt,
    GaussianRational,
    divides,
    extended_gcd,
    reduce_mod,
)


class NotACoincidenceError(ValueError):
    """The isometry is not a coincidence isometry of the shifted lattice."""


@dataclass(frozen=True)
class AIrrBRat:
    """x = a + bi with a irrational and b rational."""

    b: Fraction


@dataclass(frozen=True)
class ARatBIrr:
    """x = a + bi with a rational and b irrational."""

    a: Fraction


@dataclass(frozen=True)
class BothIrrIndependent:
    """a and b irrational and linearly independent over Q (together with 1)."""


@dataclass(frozen=True)
class BothIrrDependent:
    """a and b irrational with ``a = p1/q1 + (p2/q2) * b``."""

    p1: int
    q1: int
    p2: int
    q2: int

    def __post_init__(self):
        if self.q1 < 1 or self.q2 < 1:
            raise ValueError("denominators must be positive")
        if math.gcd(self.p1, self.q1) != 1 or math.gcd(self.p2, self.q2) != 1:
            raise ValueError("fractions p1/q1 and p2/q2 must be reduced")
        if self.p2 == 0:
            raise ValueError("p2 = 0 would make a rational")


IrrationalShift = Union[AIrrBRat, ARatBIrr, BothIrrIndependent, BothIrrDependent]
Shift = Union[GaussianRational, IrrationalShift]


@dataclass(frozen=True)
class ShiftedCSL:
    """The coset ``x + t + (z)`` cut out of x + Z[i] by a coincidence isometry."""

    x: GaussianRational
    t: GaussianInt
    z: GaussianInt
    isometry: Optional[Isometry] = field(default=None, compare=False)

    @property
    def index(self) -> int:
        return self.z.norm()

    def key(self) -> tuple[GaussianInt, GaussianInt]:
        """Identifies the point set: same ideal and same coset of it."""
        return (self.z, reduce_mod(self.t, self.z))


@dataclass(frozen=True)
class OCStructure:
    is_group: bool
    generator: Optional[Isometry] = None
    note: str = ""
    bounded: bool = False
    witness: Optional[tuple[Isometry, Isometry]] = None
    members: tuple[Isometry, ...] = field(default=(), compare=False)


def _half_integer(c: Fraction) -> bool:
    return (2 * c).denominator == 1


def reduce_shift(x) -> tuple[GaussianRational, Isometry]:
    """Move x into the triangle 0 <= b <= a <= 1/2.

    Returns ``(x', Q)`` with Q in the point group and ``x == Q x' (mod Z[i])``.
    """
    x = GaussianRational.coerce(x)
    for Q in point_group():
        y = apply(inverse(Q), x)
        a = y.re - math.ceil(y.re - Fraction(1, 2))
        b = y.im - math.ceil(y.im - Fraction(1, 2))
        if 0 <= b <= a <= Fraction(1, 2):
            return GaussianRational.from_parts(a, b), Q
    raise AssertionError(f"no point-group image of {x} reached the fundamental triangle")


def eps_z_minus_conj(z: GaussianInt, eps: GaussianInt) -> GaussianInt:
    """``eps*z - conj(z)`` through its closed form for each unit."""
    a, b = z.re, z.im
    if eps == UNITS[0]:
        return GaussianInt(0, 2 * b)
    if eps == UNITS[2]:
        return GaussianInt(-2 * a, 0)
    one_minus_i = GaussianInt(1, -1)
    if eps == UNITS[1]:
        return -(a + b) * one_minus_i
    if eps == UNITS[3]:
        return -(a - b) * (UNITS[1] * one_minus_i)
    raise ValueError(f"{eps} is not a unit")


def is_coincidence_rotation(x, R: Isometry) -> bool:
    if R.reflected:
        raise ValueError("expected a rotation")
    x = GaussianRational.coerce(x)
    return divides(x.den, eps_z_minus_conj(R.z, R.eps))


def is_coincidence_reflection(x, T: Isometry) -> bool:
    if not T.reflected:
        raise ValueError("expected a reflection")
    x = GaussianRational.coerce(x)
    return _reflection_defect(x, T).is_integral()


def _reflection_defect(x: GaussianRational, T: Isometry) -> GaussianRational:
    return T.eps * T.z * x.conj() - T.z.conj() * x


def _rotation_defect(x: GaussianRational, R: Isometry) -> GaussianRational:
    return eps_z_minus_conj(R.z, R.eps) * x


def irrational_oc_group(x: IrrationalShift) -> list[Isometry]:
    """The coincidence isometries of x + Z[i] when x has an irrational coordinate."""
    if isinstance(x, AIrrBRat):
        return [IDENTITY, CONJUGATION] if _half_integer(Fraction(x.b)) else [IDENTITY]
    if isinstance(x, ARatBIrr):
        if _half_integer(Fraction(x.a)):
            return [IDENTITY, Isometry(ONE, -ONE, True)]
        return [IDENTITY]
    if isinstance(x, BothIrrIndependent):
        return [IDENTITY]
    if isinstance(x, BothIrrDependent):
        p1, q1, p2, q2 = x.p1, x.q1, x.p2, x.q2
        if (p2 * q2) % 2 == 0:
            if (2 * q2) % q1 == 0:
                return [IDENTITY, make_isometry(GaussianInt(p2, q2), ONE, True)]
            return [IDENTITY]
        if q2 % q1 == 0:
            z = GaussianInt((p2 + q2) // 2, -((p2 - q2) // 2))
            return [IDENTITY, make_isometry(z, UNITS[1], True)]
        return [IDENTITY]
    raise TypeError(f"not an irrational shift descriptor: {x!r}")


def oc_membership(x: Shift, S: Isometry) -> bool:
    if isinstance(x, (AIrrBRat, ARatBIrr, BothIrrIndependent, BothIrrDependent)):
        return S in irrational_oc_group(x)
    x = GaussianRational.coerce(x)
    if S.reflected:
        return is_coincidence_reflection(x, S)
    return is_coincidence_rotation(x, S)


def translation_vector(x, R: Isometry) -> GaussianInt:
    """t with ``(x + Z[i]) & R(x + Z[i]) == x + t + (z)``, reduced modulo (z).

    Solves ``conj(z)*t + eps*z*s = c`` where ``c/conj(z) = Rx - x``.
    """
    x = GaussianRational.coerce(x)
    defect = _reflection_defect(x, R) if R.reflected else _rotation_defect(x, R)
    if not defect.is_integral():
        raise NotACoincidenceError(f"{R} is not a coincidence isometry of {x} + Z[i]")
    c = defect.as_integer()
    g, u, _ = extended_gcd(R.z.conj(), R.eps * R.z)
    # gcd(z, conj(z)) is a unit, so g == 1 after canonicalisation
    assert g == ONE
    return reduce_mod(u * c, R.z)


def shifted_csl(x, R: Isometry) -> ShiftedCSL:
    x = GaussianRational.coerce(x)
    return ShiftedCSL(x, translation_vector(x, R), R.z, R)


def socx_equals_soc(x) -> bool:
    """True iff x = (m + ni)/2 with m, n odd."""
    x = GaussianRational.coerce(x)
    return x.re.denominator == 2 and x.im.denominator == 2


_SURVIVING_REFLECTIONS = (
    # (test on (a, b), unit of the surviving point-group reflection R(1, eps)T_r)
    (lambda a, b: _half_integer(b), UNITS[0]),
    (lambda a, b: _half_integer(a), UNITS[2]),
    (lambda a, b: (a - b).denominator == 1, UNITS[1]),
    (lambda a, b: (a + b).denominator == 1, UNITS[3]),
)


def point_group_reflection(x) -> Optional[Isometry]:
    """A reflection of the point group fixing x + Z[i] setwise, if one exists."""
    x = GaussianRational.coerce(x)
    a, b = x.re, x.im
    for test, eps in _SURVIVING_REFLECTIONS:
        if test(a, b):
            return Isometry(ONE, eps, True)
    return None


def member_isometries(x, m: int) -> list[Isometry]:
    """Coincidence isometries of x + Z[i] with index m, in table order."""
    x = GaussianRational.coerce(x)
    return [S for S in isometries(m) if oc_membership(x, S)]


def group_structure(x: Shift, bound: int = 100) -> OCStructure:
    """Decide whether OC(x + Z[i]) is a group.

    A surviving point-group reflection settles it (semidirect product).
    Otherwise pairs of member reflections with index <= bound are searched for
    one whose product is not a member rotation; if none turns up the verdict
    holds only up to ``bound`` and is marked as such.
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    if isinstance(x, (AIrrBRat, ARatBIrr, BothIrrIndependent, BothIrrDependent)):
        group = irrational_oc_group(x)
        gen = group[1] if len(group) > 1 else None
        note = f"irrational shift: OC has {len(group)} element(s)"
        return OCStructure(True, gen, note, members=tuple(group))

    x = GaussianRational.coerce(x)
    T = point_group_reflection(x)
    if T is not None:
        if x.is_integral() or socx_equals_soc(x):
            note = "OC(x+G) = OC(G)"
        else:
            note = f"OC(x+G) = SOC(x+G) x| <{T}>"
        return OCStructure(True, T, note)

    reflections = [
        S for S in isometries_up_to(bound) if S.reflected and oc_membership(x, S)
    ]
    for T1, T2 in combinations_with_replacement(reflections, 2):
        for A, B in ((T1, T2), (T2, T1)):
            if not oc_membership(x, compose(A, B)):
                return OCStructure(
                    False,
                    note="not a group",
                    witness=(A, B),
                    members=tuple(reflections),
                )
    return OCStructure(
        True,
        note=f"no violation among reflections with index <= {bound} (bounded verdict)",
        bounded=True,
        members=tuple(reflections),
    )


@dataclass(frozen=True)
class Counts:
    m: int
    f_x: int  # distinct coincidence lattices (z)
    fhat_x: int  # coincidence rotations
    Fhat_x: int  # rotations and reflections
    cosets_x: int  # distinct intersection point sets x + t + (z)


def count_fx(x, m: int) -> Counts:
    """Counting functions of x + Z[i] at index m.

    ``f_x`` counts the distinct lattices (z) that occur, which is what the
    known generating functions enumerate. Different member
    isometries with the same (z) can still cut out different cosets (for
    x = 2/5 + i/5 the four reflections with z = 2+i give four), so the number
    of distinct point sets is reported separately as ``cosets_x``.
    """
    if m < 1:
        raise ValueError("m must be positive")
    x = GaussianRational.coerce(x)
    rotations = reflections = 0
    lattices = set()
    cosets = set()
    for S in member_isometries(x, m):
        if S.reflected:
            reflections += 1
        else:
            rotations += 1
        lattices.add(S.z)
        cosets.add(shifted_csl(x, S).key())
    return Counts(m, len(lattices), rotations, rotations + reflections, len(cosets))


def conjugate(Q: Isometry, S: Isometry) -> Isometry:
    """``Q S Q^-1``."""
    return compose(compose(Q, S), inverse(Q))
