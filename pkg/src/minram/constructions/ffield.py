"""The family X^n + T X^(n-4) + 1 over F_q(T), q a power of 2.

For 9 <= n = 1 mod 8 the discriminant in F_q[T] is a nonzero constant, so
no finite place of F_q(T) ramifies and the splitting field is ramified
only over T = infinity. The Galois group is checked for consistency with
A_n by factoring specializations T -> gamma over F_q, F_{q^2} and F_{q^3}:
every observed cycle type must be an even permutation.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field

from ..errors import InputError, PreconditionError, UnsupportedError
from ..exact.finite_fields import factor_degrees, factor_mod
from ..exact.integers import factor_integer
from ..exact.poly import Poly
from ..exact.resultants import discriminant
from ..exact.rings import GF, PolyRing
from ..galois.certify import EVIDENCE_ONLY, is_even_type

DEFAULT_SAMPLES = 200
EXTENSION_DEGREES = (1, 2, 3)


def _two_power(q: int) -> int:
    if q < 2:
        raise InputError(f"q = {q} is not a prime power")
    fac = factor_integer(q)
    if len(fac.primes) != 1 or not fac.complete:
        raise InputError(f"q = {q} is not a prime power")
    ((p, k),) = fac.primes.items()
    if p != 2:
        raise UnsupportedError(f"q = {q} is odd; only characteristic 2 is constructed")
    return k


def check_parameters(n: int, q: int) -> int:
    """Validate (n, q) and return k with q = 2^k."""
    k = _two_power(q)
    if n < 9 or n % 8 != 1:
        raise PreconditionError(f"n = {n} must satisfy n >= 9 and n = 1 mod 8")
    return k


def family_poly(n: int, k: int) -> Poly:
    """f as a polynomial in X whose coefficients lie in F_q[T]."""
    Fq = GF(2, k)
    R = PolyRing(Fq, "T")
    zero, one = R.zero, R.one
    T = Poly((Fq.zero, Fq.one), Fq)
    coeffs = [zero] * (n + 1)
    coeffs[n] = one
    coeffs[n - 4] = T
    coeffs[0] = one
    return Poly(coeffs, R)


def specialize(n: int, gamma, field_) -> Poly:
    coeffs = [field_.zero] * (n + 1)
    coeffs[n] = field_.one
    coeffs[n - 4] = gamma
    coeffs[0] = field_.one
    return Poly(coeffs, field_)


@dataclass
class FfieldInstance:
    q: int
    n: int
    disc: Poly
    candidates: list
    evidence: dict = field(default_factory=dict)

    @property
    def k(self):
        return _two_power(self.q)

    @property
    def disc_constant(self) -> bool:
        return self.disc.degree == 0

    def ramification_statement(self) -> str:
        if self.disc_constant:
            return "no finite ramified place; Ram is contained in {T = infinity}"
        return "finite ramification possible only at the listed irreducible factors of disc"

    def verify(self) -> bool:
        check_parameters(self.n, self.q)
        f = family_poly(self.n, self.k)
        disc = discriminant(f)
        if disc != self.disc or disc.is_zero():
            return False
        cands = [] if disc.degree == 0 else [g for g, _ in factor_mod(disc)]
        if cands != self.candidates:
            return False
        again = sample_cycle_types(self.n, self.k, disc, self.evidence["samples"], self.evidence["seed"])
        return again == self.evidence and again["all_even"]

    def to_json(self):
        Fq = GF(2, self.k)
        poly = lambda g: {"coeffs": [Fq.to_json(c) for c in g.coeffs]}
        return {
            "q": self.q,
            "n": self.n,
            "f": f"X^{self.n} + T*X^{self.n - 4} + 1",
            "disc": poly(self.disc),
            "finite_candidates": [poly(g) for g in self.candidates],
            "ramification": self.ramification_statement(),
            "evidence": self.evidence,
            # even cycle types are consistent with A_n but certify nothing in characteristic 2
            "galois": EVIDENCE_ONLY,
        }


def _prime_field_bits(disc: Poly) -> list[int]:
    """Coefficients of disc as 0/1; f is defined over F_2, hence so is disc."""
    bits = []
    for c in disc.coeffs:
        if isinstance(c, int):
            bits.append(c % 2)
        elif any(c[1:]):
            raise AssertionError("disc has a coefficient outside F_2")
        else:
            bits.append(c[0])
    return bits


def sample_cycle_types(n: int, k: int, disc: Poly, samples: int, seed: int) -> dict:
    """Cycle types of f(X, gamma) for gamma drawn from F_q, F_{q^2}, F_{q^3}.

    The extension degree cycles through 1, 2, 3; points where disc vanishes
    are skipped and redrawn.
    """
    rng = random.Random(seed)
    bits = _prime_field_bits(disc)
    types = Counter()
    points = set()
    skipped = 0
    for i in range(samples):
        j = EXTENSION_DEGREES[i % len(EXTENSION_DEGREES)]
        F = GF(2, k * j)
        d = Poly([F.convert(b) for b in bits], F)
        while True:
            gamma = F.random_element(rng)
            if not F.is_zero(d(gamma)):
                break
            skipped += 1
        points.add((k * j, gamma))
        types[tuple(factor_degrees(specialize(n, gamma, F)))] += 1
    return {
        "samples": samples,
        "seed": seed,
        "distinct_points": len(points),
        "skipped_disc_roots": skipped,
        "cycle_types": {" ".join(map(str, t)): c for t, c in sorted(types.items())},
        "all_even": all(is_even_type(t) for t in types),
    }


def function_field_family(n: int, q: int, samples: int = DEFAULT_SAMPLES, seed: int = 0) -> FfieldInstance:
    k = check_parameters(n, q)
    if samples < 1:
        raise InputError("samples must be positive")
    f = family_poly(n, k)
    disc = discriminant(f)
    if disc.is_zero():
        raise PreconditionError("f is inseparable over F_q(T)")
    cands = [] if disc.degree == 0 else [g for g, _ in factor_mod(disc)]
    evidence = sample_cycle_types(n, k, disc, samples, seed)
    return FfieldInstance(q, n, disc, cands, evidence)
