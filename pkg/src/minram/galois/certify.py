"""Galois-group certificates for S_n and A_n from Frobenius cycle types.

For a prime p not dividing lc(f) * disc(f), the degrees of the irreducible
factors of f mod p form the cycle type of a Frobenius element. With f
irreducible (so the group is transitive) the following are sound:

* a cycle type ``(n-1, 1)``, or one containing a prime cycle length
  ``p > n/2``, makes the group primitive (and is trivial for prime ``n``);
* a type with exactly one 2-cycle and only odd cycles otherwise powers to a
  transposition; primitive plus a transposition gives S_n;
* a type with one 3-cycle and no other cycle length divisible by 3 powers
  to a 3-cycle; primitive plus a 3-cycle contains A_n.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from ..errors import PreconditionError, UndefinedInputError
from ..exact.finite_fields import factor_degrees
from ..exact.integers import is_prime, is_square, iter_primes
from ..exact.poly import Poly
from ..exact.resultants import discriminant
from ..exact.rings import ZZ
from .zassenhaus import irreducible_over_Q

DEFAULT_PRIME_BUDGET = 10_000
# enough to see every cycle type of a small group many times over
SQUARE_DISC_PRIME_CAP = 400

CERTIFIED_SN = "certified-sn"
CERTIFIED_SUBSET_AN = "certified-subset-an"
EVIDENCE_ONLY = "evidence-only"
NOT_SN = "not-sn"


def is_primitivity_witness(ctype, n) -> bool:
    if is_prime(n):
        return True
    if sorted(ctype) == sorted([n - 1, 1]):
        return True
    return any(c > n / 2 and is_prime(c) for c in ctype)


def is_transposition_witness(ctype) -> bool:
    twos = sum(1 for c in ctype if c == 2)
    return twos == 1 and all(c == 2 or c % 2 == 1 for c in ctype)


def is_three_cycle_witness(ctype) -> bool:
    threes = sum(1 for c in ctype if c == 3)
    return threes == 1 and all(c == 3 or c % 3 for c in ctype)


def is_even_type(ctype) -> bool:
    return sum(c - 1 for c in ctype) % 2 == 0


@dataclass
class GaloisCertificate:
    status: str
    degree: int
    disc: int
    disc_square: bool
    witnesses: list = field(default_factory=list)
    irreducibility: object = None
    observed: dict = field(default_factory=dict)
    primes_scanned: int = 0

    @property
    def subset_an(self) -> bool:
        return self.disc_square

    def to_json(self):
        irr = self.irreducibility
        return {
            "status": self.status,
            "degree": self.degree,
            "disc": str(self.disc),
            "disc_square": self.disc_square,
            "witnesses": [{"prime": str(p), "cycle_type": list(t), "role": role}
                          for p, t, role in self.witnesses],
            "irreducibility": irr.to_json() if irr is not None else None,
            "observed_types": {" ".join(map(str, k)): v for k, v in sorted(self.observed.items())},
            "primes_scanned": self.primes_scanned,
        }

    def verify(self, f: Poly) -> bool:
        """Recompute every claim from f and the stored witnesses."""
        f = Poly(f.coeffs, ZZ)
        n = f.degree
        if n != self.degree or discriminant(f) != self.disc:
            return False
        if _square_disc(self.disc) != self.disc_square:
            return False
        for p, t, role in self.witnesses:
            if (f.lc * self.disc) % p == 0:
                return False
            if tuple(factor_degrees(f, p)) != tuple(t):
                return False
        roles = {role for _, _, role in self.witnesses}
        if is_prime(n):
            roles.add("primitive")
        irreducible = self.irreducibility is not None and getattr(self.irreducibility, "irreducible", False)
        if irreducible and not self.irreducibility.verify(f):
            return False
        if self.status == CERTIFIED_SN:
            return (irreducible and not self.disc_square
                    and (n == 2 or {"primitive", "transposition"} <= roles))
        if self.status == CERTIFIED_SUBSET_AN:
            return irreducible and self.disc_square and (n <= 3 or {"primitive", "three-cycle"} <= roles)
        if self.status == NOT_SN:
            return self.disc_square or not irreducible
        return self.status == EVIDENCE_ONLY


def _square_disc(d: int) -> bool:
    return d > 0 and is_square(d)


def galois_certify(f: Poly, seed: int = 0, prime_budget: int = DEFAULT_PRIME_BUDGET) -> GaloisCertificate:
    """Certify Gal(f/Q) = S_n (or containment in A_n) with witness primes.

    Witness primes are scanned in increasing order, skipping divisors of
    lc(f) * disc(f); the first prime of each witness kind is recorded.
    """
    f = Poly(f.coeffs, ZZ)
    n = f.degree
    if n < 1:
        raise UndefinedInputError("Galois group of a constant polynomial")
    disc = discriminant(f) if n >= 2 else 1
    if disc == 0:
        raise PreconditionError("polynomial is not squarefree (disc = 0)")
    irr = irreducible_over_Q(f)
    square = _square_disc(disc)
    cert = GaloisCertificate(EVIDENCE_ONLY, n, disc, square, irreducibility=irr)
    if n == 1:
        cert.status = CERTIFIED_SN
        return cert
    if not irr.irreducible:
        cert.status = NOT_SN
        return cert
    if n == 2 and not square:
        cert.status = CERTIFIED_SN
        return cert
    if n <= 3 and square:
        cert.status = CERTIFIED_SUBSET_AN
        return cert

    need = {"primitive", "three-cycle"} if square else {"primitive", "transposition"}
    if is_prime(n):
        need.discard("primitive")
    have = set()
    observed = Counter()
    budget = min(prime_budget, SQUARE_DISC_PRIME_CAP) if square else prime_budget
    bad = abs(f.lc * disc)
    scanned = 0
    for p in iter_primes():
        if scanned >= budget or not (need - have):
            break
        if bad % p == 0:
            continue
        scanned += 1
        t = tuple(factor_degrees(f, p, seed))
        observed[t] += 1
        roles = []
        if "primitive" in need and is_primitivity_witness(t, n):
            roles.append("primitive")
        if "transposition" in need and is_transposition_witness(t):
            roles.append("transposition")
        if "three-cycle" in need and is_three_cycle_witness(t):
            roles.append("three-cycle")
        for role in roles:
            if role not in have:
                have.add(role)
                cert.witnesses.append((p, t, role))
    cert.observed = dict(observed)
    cert.primes_scanned = scanned
    if not (need - have):
        cert.status = CERTIFIED_SUBSET_AN if square else CERTIFIED_SN
    elif square:
        cert.status = NOT_SN
    return cert
