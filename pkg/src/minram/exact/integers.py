"""Integer utilities: sieving, primality classification, factorization."""

from __future__ import annotations

import enum
import math
import random
from functools import lru_cache

from ..errors import InputError, ResourceError

# Strong-pseudoprime tests to the first twelve prime bases are exact below
# this bound (Sorenson and Webster, 2015).
DETERMINISTIC_LIMIT = 318665857834031151167461
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class Primality(str, enum.Enum):
    COMPOSITE = "composite"
    PRIME = "prime"
    PROBABLE_PRIME = "probable-prime"

    @property
    def is_prime_like(self):
        return self is not Primality.COMPOSITE


@lru_cache(maxsize=8)
def primes_up_to(bound: int) -> tuple[int, ...]:
    if bound < 2:
        return ()
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, bound + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def iter_primes(start: int = 2):
    """Yield primes >= start in increasing order, without an upper bound."""
    bound = 1024
    lo = start
    while True:
        while bound < lo:
            bound *= 2
        for p in primes_up_to(bound):
            if p >= lo:
                yield p
        lo = bound + 1
        bound *= 2


def _strong_probable_prime(n, a):
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a, n):
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_probable_prime(n):
    # Selfridge parameter choice: first D in 5, -7, 9, -11, ... with (D/n) = -1.
    if is_square(n):
        return False
    D = 5
    while True:
        j = _jacobi(D, n)
        if j == -1:
            break
        if j == 0 and abs(D) != n:
            return False
        D = -D - 2 if D > 0 else -D + 2
    P, Q = 1, (1 - D) // 4
    d = n + 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # Binary ladder for U_d, V_d.
    U, V, Qk = 0, 2, 1
    inv2 = (n + 1) // 2
    for bit in bin(d)[2:]:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = (P * U + V) * inv2 % n, (D * U + P * V) * inv2 % n
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if V == 0:
            return True
    return False


def is_probable_prime(n: int) -> Primality:
    """Classify ``n > 1`` as composite, prime or probable-prime.

    Below ``DETERMINISTIC_LIMIT`` the answer is exact (Miller-Rabin with the
    first twelve prime bases). Above it a Baillie-PSW test is used and a
    pass is reported as ``PROBABLE_PRIME``, never as ``PRIME``.
    """
    n = int(n)
    if n <= 1:
        raise InputError(f"primality is only defined for n > 1, got {n}")
    for p in _MR_BASES:
        if n == p:
            return Primality.PRIME
        if n % p == 0:
            return Primality.COMPOSITE
    if n < DETERMINISTIC_LIMIT:
        if all(_strong_probable_prime(n, a) for a in _MR_BASES):
            return Primality.PRIME
        return Primality.COMPOSITE
    if not _strong_probable_prime(n, 2):
        return Primality.COMPOSITE
    if not _strong_lucas_probable_prime(n):
        return Primality.COMPOSITE
    return Primality.PROBABLE_PRIME


def is_prime(n: int) -> bool:
    return n > 1 and is_probable_prime(n).is_prime_like


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def is_squarefree_int(n: int) -> bool:
    """True iff no square of a prime divides n (n != 0); uses full factorization."""
    fac = factor_integer(n)
    if not fac.complete:
        raise ResourceError(f"could not factor {n} to decide squarefreeness")
    return all(e == 1 for e in fac.primes.values())


def next_prime(n: int) -> int:
    n = max(n + 1, 2)
    while not is_prime(n):
        n += 1
    return n


def _pollard_brent(n, rng, max_iter):
    if n % 2 == 0:
        return 2
    y, c, m = rng.randrange(1, n), rng.randrange(1, n), 64
    g = r = q = 1
    x = ys = y
    steps = 0
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        r *= 2
        steps += r
        if steps > max_iter:
            return None
    if g == n:
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
    return g if g != n else None


class Factorization:
    """Prime factorization of an integer, possibly with an unfactored part.

    ``primes`` maps each found prime to its exponent together with the
    primality level it was established at. ``cofactors`` lists the
    composite leftovers that could not be split within budget.
    """

    def __init__(self, n, primes, levels, cofactors):
        self.n = n
        self.primes = dict(sorted(primes.items()))
        self.levels = levels
        self.cofactors = sorted(cofactors)

    @property
    def complete(self):
        return not self.cofactors

    def __repr__(self):
        parts = [f"{p}^{e}" if e > 1 else str(p) for p, e in self.primes.items()]
        parts += [f"[{c}]" for c in self.cofactors]
        return f"Factorization({self.n} = {' * '.join(parts) or '1'})"


def factor_integer(n: int, trial_bound: int = 10**6, rho_iterations: int = 200_000,
                   seed: int = 0) -> Factorization:
    """Factor ``|n|`` by trial division up to ``trial_bound`` and Pollard-Brent.

    The sign of ``n`` is ignored. Composite pieces that survive the rho budget
    are returned in ``cofactors`` rather than guessed at.
    """
    n = abs(int(n))
    if n == 0:
        raise InputError("cannot factor zero")
    primes: dict[int, int] = {}
    levels: dict[int, Primality] = {}
    m = n
    for p in primes_up_to(trial_bound):
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            primes[p] = e
            levels[p] = Primality.PRIME
    cofactors = []
    rng = random.Random(seed)
    stack = [m] if m > 1 else []
    while stack:
        x = stack.pop()
        level = is_probable_prime(x)
        if level.is_prime_like:
            primes[x] = primes.get(x, 0) + 1
            levels[x] = level
            continue
        if is_square(x):
            r = math.isqrt(x)
            stack += [r, r]
            continue
        d = None
        for _ in range(3):
            d = _pollard_brent(x, rng, rho_iterations)
            if d:
                break
        if not d:
            cofactors.append(x)
            continue
        stack += [d, x // d]
    return Factorization(n, primes, levels, cofactors)


def prime_product_up_to(bound: int) -> int:
    return math.prod(primes_up_to(bound))


def valuation(n: int, p: int) -> int:
    if n == 0:
        raise InputError("valuation of zero is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v
