"""Exact arithmetic in the Gaussian integers Z[i] and the Gaussian rationals Q(i).

Everything here works on Python ints, so there is no overflow at any size.
Nonzero values are normalised to a *canonical associate*: the one of
``z, iz, -z, -iz`` with ``re > 0`` and ``im >= 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as igcd
from math import isqrt
from typing import Union

from sympy import factorint, isprime

IntLike = Union[int, "GaussianInt"]


@dataclass(frozen=True)
class GaussianInt:
    re: int = 0
    im: int = 0

    @classmethod
    def coerce(cls, value: IntLike) -> GaussianInt:
        if isinstance(value, GaussianInt):
            return value
        if isinstance(value, int):
            return cls(value, 0)
        raise TypeError(f"cannot interpret {value!r} as a Gaussian integer")

    def __add__(self, other: IntLike) -> GaussianInt:
        if not isinstance(other, (int, GaussianInt)):
            return NotImplemented
        o = GaussianInt.coerce(other)
        return GaussianInt(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: IntLike) -> GaussianInt:
        if not isinstance(other, (int, GaussianInt)):
            return NotImplemented
        o = GaussianInt.coerce(other)
        return GaussianInt(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: IntLike) -> GaussianInt:
        return GaussianInt.coerce(other) - self

    def __mul__(self, other: IntLike) -> GaussianInt:
        if not isinstance(other, (int, GaussianInt)):
            return NotImplemented
        o = GaussianInt.coerce(other)
        return GaussianInt(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __neg__(self) -> GaussianInt:
        return GaussianInt(-self.re, -self.im)

    def __pow__(self, n: int) -> GaussianInt:
        if n < 0:
            raise ValueError("negative powers are not Gaussian integers")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self) -> bool:
        return bool(self.re or self.im)

    def __truediv__(self, other: IntLike) -> GaussianRational:
        return GaussianRational(self, GaussianInt.coerce(other))

    def __divmod__(self, other: IntLike) -> tuple[GaussianInt, GaussianInt]:
        d = GaussianInt.coerce(other)
        n = d.norm()
        if n == 0:
            raise ZeroDivisionError("Gaussian division by zero")
        num = self * d.conj()
        q = GaussianInt(_round_half_even(num.re, n), _round_half_even(num.im, n))
        return q, self - q * d

    def __floordiv__(self, other: IntLike) -> GaussianInt:
        return divmod(self, other)[0]

    def __mod__(self, other: IntLike) -> GaussianInt:
        return divmod(self, other)[1]

    def conj(self) -> GaussianInt:
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def is_unit(self) -> bool:
        return self.norm() == 1

    def sort_key(self) -> tuple[int, int, int]:
        return (self.norm(), self.re, self.im)

    def __str__(self) -> str:
        return format_gaussian(self.re, self.im)

    def __repr__(self) -> str:
        return f"GaussianInt({self.re}, {self.im})"


ZERO = GaussianInt(0, 0)
ONE = GaussianInt(1, 0)
I = GaussianInt(0, 1)
UNITS: tuple[GaussianInt, ...] = (ONE, I, -ONE, -I)


def unit_index(u: GaussianInt) -> int:
    """Exponent k with ``u == i**k``."""
    try:
        return UNITS.index(u)
    except ValueError:
        raise ValueError(f"{u} is not a unit") from None


def _round_half_even(a: int, n: int) -> int:
    """Nearest integer to a/n (n > 0), ties to the even neighbour."""
    q, r = divmod(a, n)
    if 2 * r > n or (2 * r == n and q % 2):
        q += 1
    return q


def _round_half_up(a: int, n: int) -> int:
    """floor(a/n + 1/2) for n > 0; commutes with integer translation."""
    return (2 * a + n) // (2 * n)


def format_gaussian(re, im) -> str:
    if im == 0:
        return str(re)
    if im == 1:
        im_part = "i"
    elif im == -1:
        im_part = "-i"
    else:
        im_part = f"{im}i"
    if re == 0:
        return im_part
    sign = "" if im_part.startswith("-") else "+"
    return f"{re}{sign}{im_part}"


def norm(z: IntLike) -> int:
    return GaussianInt.coerce(z).norm()


def canonical_associate(z: IntLike) -> tuple[GaussianInt, GaussianInt]:
    """Return ``(w, u)`` with ``w == u * z``, ``w.re > 0`` and ``w.im >= 0``."""
    z = GaussianInt.coerce(z)
    if not z:
        raise ValueError("zero has no canonical associate")
    for u in UNITS:
        w = u * z
        if w.re > 0 and w.im >= 0:
            return w, u
    raise AssertionError("unreachable: some associate lies in the canonical quadrant")


def canonical(z: IntLike) -> GaussianInt:
    return canonical_associate(z)[0]


def divides(d: IntLike, z: IntLike) -> bool:
    d, z = GaussianInt.coerce(d), GaussianInt.coerce(z)
    n = d.norm()
    if n == 0:
        raise ZeroDivisionError("divisibility by zero is undefined")
    w = z * d.conj()
    return w.re % n == 0 and w.im % n == 0


def exact_div(z: IntLike, d: IntLike) -> GaussianInt:
    """z / d, which must be a Gaussian integer."""
    q, r = divmod(GaussianInt.coerce(z), d)
    if r:
        raise ValueError(f"{d} does not divide {z}")
    return q


def gcd(z: IntLike, w: IntLike) -> GaussianInt:
    a, b = GaussianInt.coerce(z), GaussianInt.coerce(w)
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    while b:
        a, b = b, a % b
    return canonical(a)


def extended_gcd(
    z: IntLike, w: IntLike
) -> tuple[GaussianInt, GaussianInt, GaussianInt]:
    """Return ``(g, u, v)`` with ``u*z + v*w == g == gcd(z, w)``."""
    z, w = GaussianInt.coerce(z), GaussianInt.coerce(w)
    if not z and not w:
        raise ValueError("gcd(0, 0) is undefined")
    if z and divides(z, w):
        g, unit = canonical_associate(z)
        return g, unit, ZERO
    r0, s0, t0 = z, ONE, ZERO
    r1, s1, t1 = w, ZERO, ONE
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    g, unit = canonical_associate(r0)
    return g, unit * s0, unit * t0


def split_prime(p: int) -> GaussianInt:
    """Gaussian prime ``a + bi`` (a > b > 0) of norm p, for a prime p = 1 mod 4."""
    if p % 4 != 1 or not isprime(p):
        raise ValueError(f"{p} is not a rational prime congruent to 1 mod 4")
    for a in range(isqrt((p + 1) // 2), isqrt(p) + 1):
        b2 = p - a * a
        b = isqrt(b2)
        if b * b == b2 and a > b:
            return GaussianInt(a, b)
    raise AssertionError(f"no two-square decomposition found for {p}")


@dataclass(frozen=True)
class Factorization:
    unit: GaussianInt
    factors: tuple[tuple[GaussianInt, int], ...]

    def expand(self) -> GaussianInt:
        out = self.unit
        for prime, e in self.factors:
            out = out * prime**e
        return out

    def __str__(self) -> str:
        parts = []
        for prime, e in self.factors:
            s = f"({prime})"
            parts.append(s if e == 1 else f"{s}^{e}")
        body = "".join(parts) or "1"
        return body if self.unit == ONE else f"{self.unit}*{body}"


def _split_exponent(z: GaussianInt, prime: GaussianInt) -> tuple[GaussianInt, int]:
    e = 0
    while True:
        q, r = divmod(z, prime)
        if r:
            return z, e
        z, e = q, e + 1


def factor(z: IntLike) -> Factorization:
    """Complete prime factorisation, lifted from the rational factorisation of the norm."""
    z = GaussianInt.coerce(z)
    if not z:
        raise ValueError("cannot factor zero")
    rest = z
    factors: list[tuple[GaussianInt, int]] = []
    for p, e in factorint(z.norm()).items():
        if p == 2:
            prime = GaussianInt(1, 1)
            rest, k = _split_exponent(rest, prime)
            factors.append((prime, k))
        elif p % 4 == 3:
            prime = GaussianInt(p, 0)
            rest, k = _split_exponent(rest, prime)
            factors.append((prime, k))
        else:
            omega = split_prime(p)
            for prime in (omega, canonical(omega.conj())):
                rest, k = _split_exponent(rest, prime)
                if k:
                    factors.append((prime, k))
    if not rest.is_unit():
        raise AssertionError(f"incomplete factorisation of {z}")
    factors.sort(key=lambda pe: pe[0].sort_key())
    return Factorization(rest, tuple(factors))


class GaussianRational:
    """Reduced quotient ``num / den`` with a canonical denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: IntLike, den: IntLike = 1):
        num, den = GaussianInt.coerce(num), GaussianInt.coerce(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            num, den = ZERO, ONE
        else:
            g = gcd(num, den)
            num, den = exact_div(num, g), exact_div(den, g)
            den, u = canonical_associate(den)
            num = num * u
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def from_parts(cls, re, im=0) -> GaussianRational:
        """Build ``re + im*i`` from two rationals (ints, Fractions or strings)."""
        re, im = Fraction(re), Fraction(im)
        d = re.denominator * im.denominator // igcd(re.denominator, im.denominator)
        num = GaussianInt(int(re * d), int(im * d))
        return cls(num, d)

    @classmethod
    def coerce(cls, value) -> GaussianRational:
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, GaussianInt)):
            return cls(value)
        if isinstance(value, Fraction):
            return cls.from_parts(value)
        raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")

    def _split(self) -> tuple[GaussianInt, int]:
        """Numerator over a positive rational-integer denominator."""
        return self.num * self.den.conj(), self.den.norm()

    @property
    def re(self) -> Fraction:
        n, d = self._split()
        return Fraction(n.re, d)

    @property
    def im(self) -> Fraction:
        n, d = self._split()
        return Fraction(n.im, d)

    def is_integral(self) -> bool:
        return self.den == ONE

    def as_integer(self) -> GaussianInt:
        if not self.is_integral():
            raise ValueError(f"{self} is not a Gaussian integer")
        return self.num

    def conj(self) -> GaussianRational:
        return GaussianRational(self.num.conj(), self.den.conj())

    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.num, self.den)

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError("division by zero")
        return GaussianRational(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, GaussianInt)):
            other = GaussianRational(other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def sort_key(self) -> tuple[Fraction, Fraction]:
        return (self.re, self.im)

    def __str__(self) -> str:
        re, im = self.re, self.im
        if im == 0:
            return str(re)
        im_part = f"{im}i" if im.denominator == 1 and abs(im) != 1 else (
            "i" if im == 1 else "-i" if im == -1 else f"{im}i"
        )
        if re == 0:
            return im_part
        return f"{re}{'' if im_part.startswith('-') else '+'}{im_part}"

    def __repr__(self) -> str:
        return f"GaussianRational({self.num!r}, {self.den!r})"


def reduce_mod(t: IntLike, z: IntLike) -> GaussianInt:
    """Representative of ``t + (z)`` with ``t/z`` in the box ``[-1/2, 1/2)^2``.

    Unlike the Euclidean remainder this is translation-equivariant, so two
    elements of the same coset always map to the same representative.
    """
    t, z = GaussianInt.coerce(t), GaussianInt.coerce(z)
    n = z.norm()
    if n == 0:
        raise ZeroDivisionError("reduction modulo zero")
    w = t * z.conj()
    q = GaussianInt(_round_half_up(w.re, n), _round_half_up(w.im, n))
    return t - q * z
