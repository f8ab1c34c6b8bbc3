from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from shiftcsl.gaussian import (
    I,
    ONE,
    UNITS,
    GaussianInt,
    GaussianRational,
    canonical,
    canonical_associate,
    divides,
    extended_gcd,
    factor,
    gcd,
    norm,
    reduce_mod,
    split_prime,
)

from conftest import gaussian_ints, gaussian_rationals, nonzero_gaussian_ints

G = GaussianInt


def brute_common_divisor_norm(z, w):
    """Largest norm of a common divisor, found by scanning every candidate."""
    bound = max(z.norm(), w.norm())
    best = 0
    r = int(bound**0.5) + 1
    for a in range(0, r + 1):
        for b in range(0, r + 1):
            d = G(a, b)
            if d and divides(d, z) and divides(d, w):
                best = max(best, d.norm())
    return best


def test_norm_examples():
    assert norm(0) == 0
    assert norm(G(2, 1)) == 5
    assert G(2, 1) * G(3, 2) == G(4, 7)
    assert norm(G(4, 7)) == 65 == 5 * 13


@pytest.mark.parametrize(
    "z, w, u",
    [(G(-2, -1), G(2, 1), -ONE), (I, ONE, -I), (G(1, -2), G(2, 1), I)],
)
def test_canonical_associate_examples(z, w, u):
    assert canonical_associate(z) == (w, u)


def test_canonical_associate_rejects_zero():
    with pytest.raises(ValueError):
        canonical_associate(0)


def test_gcd_examples():
    assert gcd(5, G(2, 1)) == G(2, 1)
    assert gcd(G(-3, 7), 0) == canonical(G(-3, 7))
    with pytest.raises(ValueError):
        gcd(0, 0)


def test_gcd_of_conjugate_squares_is_one():
    # 3+4i = (2+i)^2 and 4+3i = i(2-i)^2 share no prime, despite equal norms.
    assert brute_common_divisor_norm(G(3, 4), G(4, 3)) == 1
    assert gcd(G(3, 4), G(4, 3)) == ONE


def test_extended_gcd_examples():
    w = G(7, -3)
    assert extended_gcd(1, w) == (ONE, ONE, G(0))
    g, u, v = extended_gcd(G(2, 1), G(2, -1))
    assert g == ONE and u * G(2, 1) + v * G(2, -1) == ONE
    z = G(-4, 5)
    g, u, v = extended_gcd(z, z)
    assert (g, v) == (canonical(z), G(0)) and u.is_unit() and u * z == g
    with pytest.raises(ValueError):
        extended_gcd(0, 0)


def test_split_prime_examples():
    assert split_prime(5) == G(2, 1)
    assert split_prime(13) == G(3, 2)
    for bad in (7, 3, 2, 21, 25):
        with pytest.raises(ValueError):
            split_prime(bad)


@pytest.mark.parametrize("p", [5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97, 101, 9973])
def test_split_prime_against_search(p):
    w = split_prime(p)
    found = sorted((a, b) for a in range(1, p) for b in range(1, a) if a * a + b * b == p)
    assert found == [(w.re, w.im)]
    assert canonical(w.conj()) != w


def test_factor_examples():
    f1 = factor(1)
    assert f1.unit == ONE and f1.factors == ()
    f5 = factor(5)
    assert [p for p, _ in f5.factors] == [G(1, 2), G(2, 1)]
    assert f5.expand() == G(5)
    f = factor(G(4, 7))
    assert sorted(p.norm() for p, _ in f.factors) == [5, 13]
    for p in (G(2, 1), G(2, -1), G(3, 2), G(3, -2)):
        # the trial division the factorisation must agree with
        assert divides(p, G(4, 7)) == any(canonical(p) == q for q, _ in f.factors)
    with pytest.raises(ValueError):
        factor(0)


def test_factor_inert_and_ramified():
    f = factor(G(0, 18))  # 18i = i * (1+i)^2 * (-i) * 9 ...
    assert f.expand() == G(0, 18)
    assert dict((p, e) for p, e in f.factors) == {G(1, 1): 2, G(3): 2}


def test_divides_examples():
    assert divides(G(1, -1), 2)
    assert divides(G(1, 2), 5)
    assert not divides(3, G(2, 1))
    with pytest.raises(ZeroDivisionError):
        divides(0, 5)


def test_divmod_remainder_is_small_with_even_ties():
    q, r = divmod(G(1), G(2))  # 1/2 ties to the even neighbour 0
    assert (q, r) == (G(0), G(1))
    q, r = divmod(G(3), G(2))  # 3/2 ties to 2
    assert (q, r) == (G(2), G(-1))


def test_gaussian_rational_reduction():
    x = GaussianRational(G(0, 1), G(1, 2))
    assert x == GaussianRational.from_parts(Fraction(2, 5), Fraction(1, 5))
    assert (x.num, x.den) == (G(0, 1), G(1, 2))
    half = GaussianRational(1, 2)
    assert half.den == G(2) and half.re == Fraction(1, 2)
    y = GaussianRational(G(1), G(1, -1))  # 1/(1-i) = (1+i)/2
    assert (y.re, y.im) == (Fraction(1, 2), Fraction(1, 2))
    assert y.den == G(1, 1)


# -- properties ----------------------------------------------------------------


@given(gaussian_ints(), gaussian_ints())
def test_norm_multiplicative(z, w):
    assert norm(z * w) == norm(z) * norm(w)
    assert (norm(z) == 0) == (not z)


@given(gaussian_ints(), gaussian_ints())
def test_gcd_divides_both_and_bezout(z, w):
    if not z and not w:
        return
    g = gcd(z, w)
    assert divides(g, z) and divides(g, w)
    g2, u, v = extended_gcd(z, w)
    assert g2 == g
    assert u * z + v * w == g


@settings(max_examples=60)
@given(gaussian_ints(30), gaussian_ints(30))
def test_gcd_norm_against_brute_force(z, w):
    if not z and not w:
        return
    if not z or not w:
        return
    assert gcd(z, w).norm() == brute_common_divisor_norm(z, w)


@given(nonzero_gaussian_ints())
def test_factor_reconstructs(z):
    f = factor(z)
    assert f.expand() == z
    assert f.unit.is_unit()
    for p, e in f.factors:
        assert e >= 1 and canonical(p) == p
        n = p.norm()
        root = int(round(n**0.5))
        assert (
            n == 2
            or (n % 4 == 1 and all(n % d for d in range(2, int(n**0.5) + 1)))
            or (root * root == n and root % 4 == 3)
        )
    keys = [p.sort_key() for p, _ in f.factors]
    assert keys == sorted(keys)


@given(nonzero_gaussian_ints(), st.sampled_from(UNITS))
def test_canonical_idempotent_and_orbit_constant(z, u):
    w, _ = canonical_associate(z)
    assert canonical(w) == w
    assert canonical(u * z) == w
    assert w.re > 0 and w.im >= 0


@given(gaussian_rationals())
def test_rational_rereduction_is_identity(x):
    assert GaussianRational(x.num, x.den) == x
    assert gcd(x.num, x.den) == ONE or not x.num


@given(gaussian_rationals(), gaussian_rationals())
def test_rational_field_ops(x, y):
    assert (x + y) - y == x
    if y.num:
        assert (x * y) / y == x
    assert x.conj().conj() == x
    assert (x.re, x.im) == (x.conj().re, -x.conj().im)


@given(gaussian_ints(), nonzero_gaussian_ints(50), gaussian_ints(50))
def test_reduce_mod_is_a_coset_invariant(t, z, k):
    r = reduce_mod(t, z)
    assert divides(z, t - r)
    assert reduce_mod(t + k * z, z) == r
