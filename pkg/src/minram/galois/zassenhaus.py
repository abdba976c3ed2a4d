"""Irreducibility and factorization over Q.

A modular witness is tried first: if ``f mod p`` is irreducible for a prime
``p`` not dividing ``lc(f) * disc(f)``, then ``f`` is irreducible. Otherwise
the Zassenhaus algorithm runs: factor modulo a good prime, Hensel-lift
quadratically past a coefficient bound, and recombine subsets of the lifted
factors by trial division.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import isqrt

from ..errors import InputError, UndefinedInputError
from ..exact.finite_fields import factor_mod_with_unit, is_irreducible_mod
from ..exact.integers import iter_primes
from ..exact.poly import Poly, content_and_primitive, gcd_zz, primitive_part_zz, to_qq
from ..exact.rings import GF, ZZ

FAST_PATH_PRIMES = 16
CHOICE_PRIMES = 12


@dataclass
class IrreducibilityCertificate:
    """Proof that ``f`` is irreducible over Q.

    ``method`` is ``"mod-p"`` (``prime`` is the witness) or
    ``"zassenhaus-complete"`` (``prime``, ``precision`` and the number of
    modular factors describe the exhausted recombination).
    """

    method: str
    prime: int
    precision: int = 1
    modular_factors: int = 1
    irreducible: bool = field(default=True, init=False)

    def verify(self, f: Poly) -> bool:
        f = _check_input(f)
        if f.degree == 1:
            return True
        p = self.prime
        if f.lc % p == 0:
            return False
        if self.method == "mod-p":
            return is_irreducible_mod(f, p)
        if self.method == "zassenhaus-complete":
            _, prim = content_and_primitive(f)
            if gcd_zz(prim, prim.derivative()).degree > 0:
                return False
            return len(_zassenhaus(prim, p)) == 1
        return False

    def to_json(self):
        return {"method": self.method, "prime": str(self.prime),
                "precision": self.precision, "modular_factors": self.modular_factors}


@dataclass
class QFactorization:
    """``f = content * prod(g**e)`` with primitive irreducible ``g`` (lc > 0)."""

    content: int
    factors: list
    irreducible: bool = field(default=False, init=False)

    def expand(self) -> Poly:
        out = Poly([self.content])
        for g, e in self.factors:
            out = out * g ** e
        return out

    def to_json(self):
        return {"content": str(self.content),
                "factors": [{"coeffs": [str(c) for c in g.coeffs], "multiplicity": e}
                            for g, e in self.factors]}


def _check_input(f: Poly) -> Poly:
    if f.ring is not ZZ:
        f = Poly(f.coeffs, ZZ)
    if f.is_zero() or f.degree < 1:
        raise UndefinedInputError("irreducibility is undefined for zero or constant polynomials")
    return f


def _good_primes(f: Poly, count: int):
    """First ``count`` primes p with p not dividing lc(f) and f squarefree mod p."""
    out = []
    for p in iter_primes():
        if f.lc % p == 0:
            continue
        fp = f.reduce_mod(p)
        if fp.gcd(fp.derivative()).degree > 0:
            continue
        out.append(p)
        if len(out) == count:
            return out
    return out


def _mod(f: Poly, m: int) -> Poly:
    return Poly([c % m for c in f.coeffs], ZZ)


def _symmetric(f: Poly, m: int) -> Poly:
    half = m // 2
    return Poly([(c % m) - m if c % m > half else c % m for c in f.coeffs], ZZ)


def _divmod_monic(a: Poly, b: Poly, m: int):
    q, r = a.divmod(b)
    return _mod(q, m), _mod(r, m)


def _hensel_step(f, g, h, s, t, m):
    """One quadratic step: f = g h, s g + t h = 1 mod m  ->  the same mod m^2."""
    m2 = m * m
    e = _mod(f - g * h, m2)
    q, r = _divmod_monic(_mod(s * e, m2), h, m2)
    g1 = _mod(g + t * e + q * g, m2)
    h1 = _mod(h + r, m2)
    b = _mod(s * g1 + t * h1 - Poly([1]), m2)
    c, d = _divmod_monic(_mod(s * b, m2), h1, m2)
    s1 = _mod(s - d, m2)
    t1 = _mod(t - t * b - c * g1, m2)
    return g1, h1, s1, t1


def _lift_tree(f: Poly, factors: list[Poly], p: int, target: int) -> list[Poly]:
    """Lift ``f = lc * prod(factors) mod p`` to monic factors modulo ``target``.

    ``factors`` are monic integer polynomials; the result is reduced modulo
    the first power ``p^(2^j)`` that is at least ``target``.
    """
    if len(factors) == 1:
        M = p
        while M < target:
            M *= M
        inv = pow(f.lc, -1, M)
        return [_mod(f.scale(inv), M)]
    k = len(factors) // 2
    Fp = GF(p)
    g0 = Poly([f.lc], ZZ)
    for a in factors[:k]:
        g0 = g0 * a
    h0 = Poly([1], ZZ)
    for a in factors[k:]:
        h0 = h0 * a
    g0, h0 = _mod(g0, p), _mod(h0, p)
    one, s0, t0 = g0.change_ring(Fp).xgcd(h0.change_ring(Fp))
    if one.degree != 0:
        raise AssertionError("modular factors are not coprime")
    g, h = g0, h0
    s = Poly([c % p for c in s0.coeffs], ZZ)
    t = Poly([c % p for c in t0.coeffs], ZZ)
    m = p
    while m < target:
        g, h, s, t = _hensel_step(f, g, h, s, t, m)
        m *= m
    return _lift_tree(g, factors[:k], p, target) + _lift_tree(h, factors[k:], p, target)


def coefficient_bound(f: Poly) -> int:
    """Bound on |coefficients| of any integer factor of ``f`` (Mignotte-style)."""
    norm = isqrt(sum(c * c for c in f.coeffs)) + 1
    return (2 ** f.degree) * norm


def _zassenhaus(f: Poly, p: int) -> list[Poly]:
    """Irreducible factors of a primitive squarefree ``f`` using the prime ``p``."""
    unit, mod_factors = factor_mod_with_unit(f, p)
    if len(mod_factors) == 1:
        return [f]
    lifts = [Poly([c % p for c in g.coeffs], ZZ) for g, _ in mod_factors]
    target = 2 * abs(f.lc) * coefficient_bound(f) + 1
    lifted = _lift_tree(f, lifts, p, target)
    M = p
    while M < target:
        M *= M
    found = []
    rest = f
    remaining = list(lifted)
    size = 1
    while 2 * size <= len(remaining):
        hit = None
        for subset in combinations(range(len(remaining)), size):
            lc = rest.lc
            # constant-term test before the full product
            c0 = lc
            for i in subset:
                c0 = (c0 * remaining[i].coeffs[0]) % M
            c0 = c0 - M if c0 > M // 2 else c0
            # the test says nothing when X divides the remaining cofactor
            if rest.coeffs[0] and (c0 == 0 or (lc * rest.coeffs[0]) % c0):
                continue
            cand = Poly([lc], ZZ)
            for i in subset:
                cand = _mod(cand * remaining[i], M)
            cand = primitive_part_zz(_symmetric(cand, M))
            try:
                quo = rest.exquo(cand)
            except ArithmeticError:
                continue
            hit = (subset, cand, quo)
            break
        if hit is None:
            size += 1
            continue
        subset, cand, quo = hit
        found.append(cand)
        rest = quo
        remaining = [g for i, g in enumerate(remaining) if i not in subset]
    found.append(primitive_part_zz(rest))
    return found


def _squarefree_decomposition_zz(f: Poly):
    """Yun's algorithm over Q, returning primitive integer parts."""
    from ..exact.poly import qq_to_zz_primitive

    F = to_qq(f)
    out = []
    df = F.derivative()
    c = F.gcd(df)
    w = F // c
    y = df // c
    z = y - w.derivative()
    i = 1
    while w.degree > 0:
        g = w.gcd(z)
        w = w // g
        y = z // g
        z = y - w.derivative()
        if g.degree > 0:
            out.append((qq_to_zz_primitive(g), i))
        i += 1
    return out


def _fast_witness(f: Poly):
    for p in _good_primes(f, FAST_PATH_PRIMES):
        if is_irreducible_mod(f, p):
            return p
    return None


def _best_prime(f: Poly) -> tuple[int, int]:
    best = None
    for p in _good_primes(f, CHOICE_PRIMES):
        r = len(factor_mod_with_unit(f, p)[1])
        if best is None or r < best[1]:
            best = (p, r)
    return best


def factor_over_Z(f: Poly) -> QFactorization:
    """Complete factorization into primitive irreducibles (lc > 0)."""
    f = _check_input(f)
    content, prim = content_and_primitive(f)
    if prim.lc < 0:
        content, prim = -content, -prim
    factors = []
    for g, e in _squarefree_decomposition_zz(prim):
        if g.degree == 1:
            factors.append((g, e))
            continue
        if _fast_witness(g) is not None:
            factors.append((g, e))
            continue
        p, _ = _best_prime(g)
        for h in _zassenhaus(g, p):
            factors.append((h, e))
    return _assemble(f, content, factors)


def _assemble(f: Poly, content: int, factors) -> QFactorization:
    """Normalize factor signs to lc > 0 and fix the sign of the content from lc(f)."""
    normed = sorted(((g if g.lc > 0 else -g, e) for g, e in factors),
                    key=lambda ge: (ge[0].degree, ge[0].coeffs, ge[1]))
    content = abs(content) if f.lc > 0 else -abs(content)
    out = QFactorization(content, normed)
    if out.expand() != f:
        raise AssertionError("factorization does not multiply back to f")
    return out


def irreducible_over_Q(f: Poly):
    """IrreducibilityCertificate if ``f`` is irreducible, else its QFactorization."""
    f = _check_input(f)
    _, prim = content_and_primitive(f)
    if prim.degree == 1:
        return IrreducibilityCertificate("mod-p", _good_primes(prim, 1)[0])
    if gcd_zz(prim, prim.derivative()).degree > 0:
        return factor_over_Z(f)
    p = _fast_witness(prim)
    if p is not None:
        return IrreducibilityCertificate("mod-p", p)
    p, r = _best_prime(prim)
    parts = _zassenhaus(prim, p)
    if len(parts) == 1:
        precision, M = 1, p
        target = 2 * abs(prim.lc) * coefficient_bound(prim) + 1
        while M < target:
            M *= M
            precision *= 2
        return IrreducibilityCertificate("zassenhaus-complete", p, precision, r)
    # prim is squarefree here, so the modular recombination is already complete
    return _assemble(f, f.content(), [(g, 1) for g in parts])


def is_irreducible_over_Q(f: Poly) -> bool:
    return irreducible_over_Q(f).irreducible


def rational_roots(f: Poly) -> list:
    """Rational roots of an integer polynomial (independent check for degree <= 3)."""
    from fractions import Fraction

    f = _check_input(f)
    if f.coeffs[0] == 0:
        k = next(i for i, c in enumerate(f.coeffs) if c)
        return sorted({Fraction(0)} | set(rational_roots(Poly(f.coeffs[k:]))))
    a0, an = abs(f.coeffs[0]), abs(f.lc)
    if a0 > 10**12 or an > 10**12:
        raise InputError("rational root search limited to small coefficients")

    def divisors(n):
        ds = set()
        for d in range(1, isqrt(n) + 1):
            if n % d == 0:
                ds |= {d, n // d}
        return ds

    roots = set()
    for num in divisors(a0):
        for den in divisors(an):
            for s in (1, -1):
                x = Fraction(s * num, den)
                if to_qq(f)(x) == 0:
                    roots.add(x)
    return sorted(roots)
