"""Prime triples (p, q, r) with r = n^n p + (n-1)^(n-1) q.

For such a triple the trinomial f = X^n - X^(n-1) - p/q has discriminant
supported on p, q and r, so its splitting field is unramified outside
{p, q, r, infinity}. Galois and ramification certificates are computed on
the monic integral model g(Y) = q^n f(Y/q) = Y^n - q Y^(n-1) - p q^(n-1),
which defines the same stem field.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from ..errors import InputError, NotFoundError, PreconditionError, VerificationError
from ..exact.integers import Primality, is_probable_prime, primes_up_to
from ..exact.poly import Poly
from ..exact.resultants import discriminant
from ..galois import CERTIFIED_SN, GaloisCertificate, RamificationReport, galois_certify, ramified_primes

DEFAULT_P_MAX = 1000
DEFAULT_Q_MAX = 1000
CHUNK = 64


def relation_r(n: int, p: int, q: int) -> int:
    return n ** n * p + (n - 1) ** (n - 1) * q


def cleared_poly(n: int, p: int, q: int) -> Poly:
    """q X^n - q X^(n-1) - p, the trinomial with denominators cleared."""
    coeffs = [0] * (n + 1)
    coeffs[n] = q
    coeffs[n - 1] -= q
    coeffs[0] -= p
    return Poly(coeffs)


def integral_model(n: int, p: int, q: int) -> Poly:
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    coeffs[n - 1] -= q
    coeffs[0] -= p * q ** (n - 1)
    return Poly(coeffs)


@dataclass
class BmsTriple:
    n: int
    p: int
    q: int
    r: int
    r_primality: str
    cleared: Poly
    model: Poly
    galois: GaloisCertificate
    ramification: RamificationReport
    stats: dict = field(default_factory=dict)

    @property
    def triple(self):
        return (self.p, self.q, self.r)

    def verify(self) -> bool:
        n, p, q, r = self.n, self.p, self.q, self.r
        if r != relation_r(n, p, q):
            return False
        if is_probable_prime(p) is not Primality.PRIME or is_probable_prime(q) is not Primality.PRIME:
            return False
        level = is_probable_prime(r)
        if level.value != self.r_primality or not level.is_prime_like:
            return False
        if self.cleared != cleared_poly(n, p, q) or self.model != integral_model(n, p, q):
            return False
        if self.galois.status != CERTIFIED_SN or not self.galois.verify(self.model):
            return False
        rep = ramified_primes(self.model)
        disc = discriminant(self.model)
        if any(disc % x for x in rep.ramified):
            return False
        return set(rep.ramified) <= {p, q, r} and rep.ramified == self.ramification.ramified

    def to_json(self):
        return {
            "n": self.n,
            "p": str(self.p),
            "q": str(self.q),
            "r": str(self.r),
            "r_primality": self.r_primality,
            "f_cleared": {"coeffs": [str(c) for c in self.cleared.coeffs]},
            "integral_model": {"coeffs": [str(c) for c in self.model.coeffs]},
            "galois": self.galois.to_json(),
            "ramification": self.ramification.to_json(),
            "ram_bound": [str(self.p), str(self.q), str(self.r), "inf"],
            "stats": self.stats,
        }


def _r_candidate(args):
    n, p, q, require_proven = args
    r = relation_r(n, p, q)
    level = is_probable_prime(r)
    if not level.is_prime_like:
        return None
    if require_proven and level is not Primality.PRIME:
        return "unproven"
    return level


def _certify(n, p, q, seed, prime_budget):
    g = integral_model(n, p, q)
    cert = galois_certify(g, seed=seed, prime_budget=prime_budget)
    if cert.status != CERTIFIED_SN:
        return cert, None, "galois"
    rep = ramified_primes(g, check_irreducible=False)
    if not set(rep.ramified) <= {p, q, relation_r(n, p, q)}:
        return cert, rep, "ramified-outside-triple"
    return cert, rep, None


def bms_search(n: int, p_max: int = DEFAULT_P_MAX, q_max: int = DEFAULT_Q_MAX,
               require_proven: bool = False, seed: int = 0, prime_budget: int = 10_000,
               threads: int = 1, accept=None, accept_name: str = "extra-check") -> BmsTriple:
    """First certified triple, scanning primes p ascending and then q ascending.

    ``accept``, if given, is an additional predicate on the certified triple,
    applied in the same scan order.
    """
    if n < 2:
        raise PreconditionError("n must be at least 2")
    if threads < 1:
        raise InputError("threads must be positive")
    pairs = [(p, q) for p in primes_up_to(p_max) for q in primes_up_to(q_max)]
    stats = {"pairs_scanned": 0, "r_prime": 0, "rejected": {}}
    if not pairs:
        raise NotFoundError(f"no prime pairs with p <= {p_max}, q <= {q_max}", stats, stage="bms_search")
    pool = ThreadPoolExecutor(threads) if threads > 1 else None
    try:
        for lo in range(0, len(pairs), CHUNK):
            chunk = pairs[lo:lo + CHUNK]
            args = [(n, p, q, require_proven) for p, q in chunk]
            levels = list(pool.map(_r_candidate, args)) if pool else [_r_candidate(x) for x in args]
            for (p, q), level in zip(chunk, levels):
                stats["pairs_scanned"] += 1
                if level is None:
                    continue
                if level == "unproven":
                    stats["rejected"]["unproven-prime"] = stats["rejected"].get("unproven-prime", 0) + 1
                    continue
                stats["r_prime"] += 1
                cert, rep, why = _certify(n, p, q, seed, prime_budget)
                if why is not None:
                    stats["rejected"][why] = stats["rejected"].get(why, 0) + 1
                    continue
                triple = BmsTriple(n, p, q, relation_r(n, p, q), level.value, cleared_poly(n, p, q),
                                   integral_model(n, p, q), cert, rep, stats)
                if accept is not None and not accept(triple):
                    stats["rejected"][accept_name] = stats["rejected"].get(accept_name, 0) + 1
                    continue
                if not triple.verify():
                    raise VerificationError("BMS triple failed re-verification")
                return triple
    finally:
        if pool:
            pool.shutdown()
    raise NotFoundError(f"no certified triple with p <= {p_max}, q <= {q_max}", stats, stage="bms_search")
