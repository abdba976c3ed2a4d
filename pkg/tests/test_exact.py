from fractions import Fraction
from math import isqrt, prod

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from minram.errors import InputError, ParseError, UndefinedInputError, ZeroPolynomialError
from minram.exact.finite_fields import (
    factor_degrees,
    factor_mod,
    factor_mod_with_unit,
    is_irreducible_mod,
    is_squarefree_mod,
    roots_in_field,
)
from minram.exact.integers import (
    DETERMINISTIC_LIMIT,
    Primality,
    factor_integer,
    is_probable_prime,
    is_square,
    is_squarefree_int,
    primes_up_to,
    valuation,
)
from minram.exact.poly import Poly, parse_poly
from minram.exact.resultants import discriminant, resultant, sylvester_resultant
from minram.exact.rings import GF, PolyRing
from minram.exact.sturm import sturm_count


def naive_is_prime(n):
    return n > 1 and all(n % d for d in range(2, isqrt(n) + 1))


small_polys = st.lists(st.integers(-20, 20), min_size=2, max_size=7).filter(lambda c: c[-1] != 0)


# -- integers -----------------------------------------------------------------------


def test_primes_up_to_matches_trial_division():
    assert list(primes_up_to(500)) == [n for n in range(501) if naive_is_prime(n)]
    assert primes_up_to(1) == ()


@given(st.integers(2, 200_000))
def test_primality_matches_trial_division(n):
    assert is_probable_prime(n).is_prime_like == naive_is_prime(n)


@pytest.mark.parametrize("n", [561, 1105, 1729, 2465, 3215031751, 3825123056546413051])
def test_strong_pseudoprimes_and_carmichaels_are_composite(n):
    assert is_probable_prime(n) is Primality.COMPOSITE


def test_primality_levels():
    assert is_probable_prime(2**61 - 1) is Primality.PRIME
    big = 2**89 - 1
    assert big > DETERMINISTIC_LIMIT
    assert is_probable_prime(big) is Primality.PROBABLE_PRIME
    assert is_probable_prime(big * (2**61 - 1)) is Primality.COMPOSITE
    with pytest.raises(InputError):
        is_probable_prime(1)


@given(st.integers(1, 10**12))
def test_factorization_multiplies_back(n):
    fac = factor_integer(n)
    assert fac.complete
    assert prod(p**e for p, e in fac.primes.items()) == n
    assert all(naive_is_prime(p) for p in fac.primes if p < 10**6)


def test_factor_zero_rejected_and_helpers():
    with pytest.raises(InputError):
        factor_integer(0)
    assert is_square(144) and not is_square(145) and not is_square(-4)
    assert is_squarefree_int(30) and not is_squarefree_int(12)
    assert valuation(48, 2) == 4 and valuation(7, 3) == 0


# -- polynomials and resultants -------------------------------------------------------


def test_poly_basics():
    f = Poly([28, -15, 1])
    assert str(f) == "X^2 - 15*X + 28"
    assert f(4) == -16 and f(0) == 28
    assert Poly([1, 2, 0, 0]).degree == 1
    q, r = Poly([-1, 0, 0, 1]).divmod(Poly([-1, 1]))
    assert q == Poly([1, 1, 1]) and r.is_zero()


@given(small_polys)
def test_parse_poly_roundtrip(coeffs):
    f = Poly(coeffs)
    assert parse_poly(f.to_string()) == f


@pytest.mark.parametrize("text", ["", "X^2 +", "X Y", "X + Y", "*X"])
def test_parse_poly_errors(text):
    with pytest.raises(ParseError):
        parse_poly(text)


@pytest.mark.parametrize("coeffs,disc", [
    ([28, -15, 1], 113),       # X^2 - 15X + 28
    ([1, 0, 0, 0, 1], 256),    # X^4 + 1
    ([-1, -1, 0, 1], -23),     # X^3 - X - 1
    ([-1, -1, 0, 0, 0, 1], 2869),
    ([-2, 0, 0, 1], -108),     # X^3 - 2
])
def test_discriminant_values(coeffs, disc):
    assert discriminant(Poly(coeffs)) == disc


@given(small_polys, small_polys)
def test_resultant_matches_sylvester_determinant(a, b):
    f, g = Poly(a), Poly(b)
    assert resultant(f, g) == sylvester_resultant(f, g)
    sign = -1 if (f.degree * g.degree) % 2 else 1
    assert resultant(g, f) == sign * resultant(f, g)


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=4), st.lists(st.integers(-6, 6), min_size=1, max_size=4))
def test_resultant_is_product_of_root_differences(r1, r2):
    f, g = Poly.from_roots(r1), Poly.from_roots(r2)
    assert resultant(f, g) == prod(a - b for a in r1 for b in r2)


@given(st.lists(st.integers(-8, 8), min_size=2, max_size=5))
def test_discriminant_of_split_polynomial(roots):
    f = Poly.from_roots(roots)
    expected = prod((roots[i] - roots[j]) ** 2 for i in range(len(roots)) for j in range(i + 1, len(roots)))
    assert discriminant(f) == expected


def test_discriminant_over_F2T_is_one():
    F2 = GF(2)
    R = PolyRing(F2, "T")
    T = Poly((0, 1), F2)
    one, zero = R.one, R.zero
    f = Poly([one, zero, zero, zero, zero, T, zero, zero, zero, one], R)
    d = discriminant(f)
    assert d.degree == 0 and d.coeffs[0] == 1


def test_resultant_undefined():
    with pytest.raises(UndefinedInputError):
        resultant(Poly([]), Poly([]))
    with pytest.raises(UndefinedInputError):
        discriminant(Poly([3]))


# -- Sturm ---------------------------------------------------------------------------


@given(st.sets(st.integers(-30, 30), min_size=1, max_size=6), st.integers(0, 2))
def test_sturm_counts_distinct_real_roots(roots, pairs):
    f = Poly.from_roots(sorted(roots))
    for k in range(pairs):
        f = f * Poly([k + 1, 0, 1])  # X^2 + k + 1 has no real roots
    assert sturm_count(f) == len(roots)
    assert sturm_count(f, 0, 30) == sum(1 for r in roots if 0 < r <= 30)


def test_sturm_interval_and_repeated_roots():
    f = Poly.from_roots([1, 1, 2])
    assert sturm_count(f) == 2
    assert sturm_count(Poly([-2, 0, 1]), Fraction(1), Fraction(3, 2)) == 1
    assert sturm_count(Poly([5])) == 0


# -- finite fields -----------------------------------------------------------------------


@given(small_polys, st.sampled_from([2, 3, 5, 7, 11]))
def test_factor_mod_multiplies_back(coeffs, p):
    f = Poly(coeffs).reduce_mod(p)
    assume(not f.is_zero() and f.degree >= 1)
    F = GF(p)
    fp = Poly([F.convert(c) for c in f.coeffs], F)
    unit, factors = factor_mod_with_unit(fp)
    out = Poly([unit], F)
    for g, e in factors:
        assert is_irreducible_mod(g)
        assert g.lc == 1
        out = out * g**e
    assert out == fp


@given(st.lists(st.tuples(st.integers(0, 1), st.integers(0, 1)), min_size=2, max_size=6))
def test_factor_over_GF4_multiplies_back(pairs):
    F = GF(2, 2)
    coeffs = [tuple(p) for p in pairs] + [F.one]
    f = Poly(coeffs, F)
    unit, factors = factor_mod_with_unit(f)
    out = Poly([unit], F)
    for g, e in factors:
        assert is_irreducible_mod(g)
        out = out * g**e
    assert out == f


def test_factor_degrees_and_roots():
    assert factor_degrees(Poly([1, 0, 0, 0, 1]), 3) == [2, 2]
    assert factor_degrees(Poly([-1, -1, 0, 0, 0, 1]), 2) == [3, 2]
    assert factor_mod(Poly([-1, 0, 1]), 5) == [(Poly([4, 1], GF(5)), 1), (Poly([1, 1], GF(5)), 1)] or \
        sorted(g.coeffs for g, _ in factor_mod(Poly([-1, 0, 1]), 5)) == [(1, 1), (4, 1)]
    F4 = GF(2, 2)
    assert len(roots_in_field(Poly([1, 1, 1]), F4)) == 2


def test_squarefree_mod():
    assert is_squarefree_mod(Poly([-2, -3, 1]), 2)
    assert not is_squarefree_mod(Poly([2, 0, 1]), 2)
    with pytest.raises(ZeroPolynomialError):
        is_squarefree_mod(Poly([2, 4]), 2)
