"""Factorization over finite fields.

Squarefree split, distinct-degree split, then Cantor-Zassenhaus equal-degree
splitting (trace map in characteristic 2). The randomized step draws from a
``random.Random(seed)`` so results are reproducible; the returned
factorization is sorted canonically and therefore seed-independent anyway.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import product

from ..errors import UndefinedInputError, ZeroPolynomialError
from .poly import Poly
from .rings import GF, PrimeField, Ring


def _as_field_poly(f: Poly, field) -> Poly:
    if isinstance(field, int):
        field = GF(field)
    if f.ring == field:
        return f
    return Poly([field.convert(c) for c in f.coeffs], field)


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Monic squarefree factors ``[(g, e)]`` with f = lc * prod g^e."""
    F = f.ring
    p = F.characteristic
    f = f.monic()
    out: list[tuple[Poly, int]] = []
    if f.degree <= 0:
        return out
    df = f.derivative()
    if df.is_zero():
        root = _pth_root(f)
        return [(g, e * p) for g, e in squarefree_decomposition(root)]
    c = f.gcd(df)
    w = f // c
    i = 1
    while w.degree > 0:
        y = w.gcd(c)
        z = w // y
        if z.degree > 0:
            out.append((z.monic(), i))
        i += 1
        w = y
        c = c // y
    if c.degree > 0:
        root = _pth_root(c.monic())
        out += [(g, e * p) for g, e in squarefree_decomposition(root)]
    return out


def _pth_root(f: Poly) -> Poly:
    F = f.ring
    p = F.characteristic
    return Poly._raw([F.pth_root(f.coeffs[i]) for i in range(0, len(f.coeffs), p)], F)


def distinct_degree(f: Poly) -> list[tuple[Poly, int]]:
    """Split a monic squarefree f into products of irreducibles of equal degree."""
    F = f.ring
    q = F.size
    X = Poly.x(F)
    out = []
    h = X
    d = 0
    rest = f
    while rest.degree >= 2 * (d + 1):
        d += 1
        h = h.powmod(q, rest)
        g = rest.gcd(h - X)
        if g.degree > 0:
            out.append((g, d))
            rest = rest // g
            h = h % rest
    if rest.degree > 0:
        out.append((rest.monic(), rest.degree))
    return out


def _trace_map(a: Poly, f: Poly, k: int) -> Poly:
    # a + a^2 + a^4 + ... + a^(2^(k-1)) mod f
    t = a % f
    acc = t
    for _ in range(k - 1):
        t = (t * t) % f
        acc = acc + t
    return acc


def equal_degree(f: Poly, d: int, rng: random.Random) -> list[Poly]:
    """Split a monic squarefree product of degree-d irreducibles."""
    if f.degree == d:
        return [f]
    F = f.ring
    q = F.size
    n = f.degree
    while True:
        a = Poly._raw([F.random_element(rng) for _ in range(n)], F)
        if a.degree < 1:
            continue
        g = f.gcd(a)
        if 0 < g.degree < n:
            break
        if F.characteristic == 2:
            b = _trace_map(a, f, F.degree * d)
        else:
            b = a.powmod((q**d - 1) // 2, f) - Poly._raw((F.one,), F)
        g = f.gcd(b)
        if 0 < g.degree < n:
            break
    return equal_degree(g, d, rng) + equal_degree(f // g, d, rng)


def sort_key(g: Poly):
    return (g.degree, tuple(g.ring.sort_key(c) for c in reversed(g.coeffs)))


def factor_mod(f: Poly, field=None, seed: int = 0) -> list[tuple[Poly, int]]:
    """Complete factorization of ``f`` over a finite field.

    ``field`` is a prime (for Z/p), a field object, or ``None`` when ``f`` is
    already over a finite field. Returns monic irreducible factors with
    multiplicities, sorted by degree then coefficients. The leading
    coefficient is dropped; see :func:`factor_mod_with_unit`.
    """
    return factor_mod_with_unit(f, field, seed)[1]


def factor_mod_with_unit(f: Poly, field=None, seed: int = 0):
    if field is not None:
        f = _as_field_poly(f, field)
    if not f.ring.is_field or not f.ring.characteristic:
        raise UndefinedInputError("factor_mod needs a finite field")
    if f.is_zero():
        raise UndefinedInputError("cannot factor the zero polynomial")
    rng = random.Random(seed)
    unit = f.lc
    out: dict[Poly, int] = {}
    for g, e in squarefree_decomposition(f):
        for h, d in distinct_degree(g):
            for irr in equal_degree(h, d, rng):
                out[irr] = out.get(irr, 0) + e
    return unit, sorted(out.items(), key=lambda kv: sort_key(kv[0]))


def factor_degrees(f: Poly, field=None, seed: int = 0) -> list[int]:
    """Degrees of irreducible factors with multiplicity, sorted descending.

    For a squarefree f this is the Frobenius cycle type.
    """
    degs = []
    for g, e in factor_mod(f, field, seed):
        degs += [g.degree] * e
    return sorted(degs, reverse=True)


def is_squarefree_mod(f: Poly, field) -> bool:
    """True iff gcd(f mod p, f' mod p) is constant.

    Raises :class:`ZeroPolynomialError` when f vanishes identically mod p,
    which is a different answer from ``False``.
    """
    g = _as_field_poly(f, field)
    if g.is_zero():
        raise ZeroPolynomialError(f"polynomial is identically zero over {g.ring}")
    if g.degree == 0:
        return True
    return g.gcd(g.derivative()).degree == 0


def is_irreducible_mod(f: Poly, field=None) -> bool:
    """Rabin-style test: irreducible iff distinct-degree split is a single block."""
    if field is not None:
        f = _as_field_poly(f, field)
    if f.degree <= 0:
        return False
    if f.degree == 1:
        return True
    f = f.monic()
    if f.gcd(f.derivative()).degree > 0:
        return False
    blocks = distinct_degree(f)
    return len(blocks) == 1 and blocks[0][1] == f.degree


@lru_cache(maxsize=None)
def first_irreducible(p: int, k: int) -> tuple[int, ...]:
    """First monic irreducible of degree k over F_p (lexicographic on low coefficients)."""
    F = PrimeField(p)
    for low in product(range(p), repeat=k):
        coeffs = tuple(reversed(low)) + (1,)
        if coeffs[0] == 0:
            continue
        if is_irreducible_mod(Poly(coeffs, F)):
            return coeffs
    raise AssertionError("no irreducible polynomial found")  # unreachable


def roots_in_field(f: Poly, field: Ring | None = None) -> list:
    """Roots by exhaustive evaluation; for small fields and tests only."""
    if field is not None:
        f = _as_field_poly(f, field)
    F = f.ring
    return [a for a in F.elements() if F.is_zero(f(a))]
