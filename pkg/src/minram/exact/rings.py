"""Coefficient rings for :class:`~minram.exact.poly.Poly`.

A ring object knows how to add, multiply and (exactly) divide its elements
and how to coerce Python integers into itself. Elements are plain Python
values: ``int`` for ZZ and Z/p, ``Fraction`` for QQ, tuples of residues for
F_{p^k} and :class:`Poly` for polynomial rings. Keeping elements native keeps
the hot integer paths close to bare arithmetic.
"""

from __future__ import annotations

import operator
from fractions import Fraction
from functools import lru_cache

from ..errors import InputError


class Ring:
    is_field = False
    characteristic = 0

    add = staticmethod(operator.add)
    sub = staticmethod(operator.sub)
    mul = staticmethod(operator.mul)
    neg = staticmethod(operator.neg)

    def is_zero(self, a):
        return a == 0

    def eq(self, a, b):
        return a == b

    def power(self, a, e):
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def sort_key(self, a):
        return a

    def __repr__(self):
        return self.name


class IntegerRing(Ring):
    name = "ZZ"
    zero = 0
    one = 1

    def convert(self, x):
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise InputError(f"{x} is not an integer")
            return x.numerator
        return int(x)

    def exquo(self, a, b):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError(f"{b} does not divide {a}")
        return q

    def to_json(self, a):
        return a


class RationalField(Ring):
    name = "QQ"
    is_field = True
    zero = Fraction(0)
    one = Fraction(1)

    def convert(self, x):
        return Fraction(x)

    def exquo(self, a, b):
        return Fraction(a) / b

    def inv(self, a):
        return 1 / Fraction(a)

    def to_json(self, a):
        return str(a)


ZZ = IntegerRing()
QQ = RationalField()


class PrimeField(Ring):
    """Z/p with elements stored as ints in ``range(p)``."""

    is_field = True
    degree = 1
    zero = 0
    one = 1

    def __init__(self, p: int):
        self.p = p
        self.characteristic = p
        self.size = p
        self.name = f"GF({p})"

    def convert(self, x):
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def add(self, a, b):
        s = a + b
        return s - self.p if s >= self.p else s

    def sub(self, a, b):
        s = a - b
        return s + self.p if s < 0 else s

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def exquo(self, a, b):
        return a * self.inv(b) % self.p

    def power(self, a, e):
        return pow(a, e, self.p)

    def elements(self):
        return range(self.p)

    def random_element(self, rng):
        return rng.randrange(self.p)

    def pth_root(self, a):
        return a

    def to_json(self, a):
        return a

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


class ExtensionField(Ring):
    """F_{p^k} as F_p[y]/(m(y)); elements are length-k residue tuples."""

    is_field = True

    def __init__(self, p: int, modulus: tuple[int, ...]):
        # modulus: monic irreducible over F_p, coefficients lowest first.
        self.p = p
        self.characteristic = p
        self.modulus = tuple(c % p for c in modulus)
        self.degree = len(modulus) - 1
        if self.degree < 2 or self.modulus[-1] != 1:
            raise InputError("extension modulus must be monic of degree >= 2")
        self.size = p ** self.degree
        self.zero = (0,) * self.degree
        self.one = (1,) + (0,) * (self.degree - 1)
        self.name = f"GF({p}^{self.degree})"

    def convert(self, x):
        if isinstance(x, tuple):
            return x
        return (PrimeField(self.p).convert(x),) + (0,) * (self.degree - 1)

    def is_zero(self, a):
        return not any(a)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def mul(self, a, b):
        p, k, m = self.p, self.degree, self.modulus
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i] % p
            if c:
                for j in range(k):
                    prod[i - k + j] -= c * m[j]
        return tuple(c % p for c in prod[:k])

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        return self.power(a, self.size - 2)

    def exquo(self, a, b):
        return self.mul(a, self.inv(b))

    def elements(self):
        from itertools import product

        for digits in product(range(self.p), repeat=self.degree):
            yield tuple(reversed(digits))

    def random_element(self, rng):
        return tuple(rng.randrange(self.p) for _ in range(self.degree))

    def pth_root(self, a):
        return self.power(a, self.size // self.p)

    def generator(self):
        """The class of y, i.e. a root of the modulus."""
        return (0, 1) + (0,) * (self.degree - 2)

    def to_json(self, a):
        return list(a)

    def __eq__(self, other):
        return (isinstance(other, ExtensionField) and other.p == self.p
                and other.modulus == self.modulus)

    def __hash__(self):
        return hash(("GF", self.p, self.modulus))


class PolyRing(Ring):
    """Univariate polynomial ring over ``base``; elements are Poly objects."""

    def __init__(self, base: Ring, var: str = "T"):
        self.base = base
        self.var = var
        self.characteristic = base.characteristic
        self.name = f"{base.name}[{var}]"

    @property
    def zero(self):
        from .poly import Poly

        return Poly((), self.base)

    @property
    def one(self):
        from .poly import Poly

        return Poly((self.base.one,), self.base)

    def convert(self, x):
        from .poly import Poly

        if isinstance(x, Poly):
            return x
        return Poly((self.base.convert(x),), self.base)

    def is_zero(self, a):
        return a.is_zero()

    def exquo(self, a, b):
        return a.exquo(b)

    def sort_key(self, a):
        return (a.degree, tuple(self.base.sort_key(c) for c in a.coeffs))

    def to_json(self, a):
        return {"coeffs": [self.base.to_json(c) for c in a.coeffs]}

    def __eq__(self, other):
        return isinstance(other, PolyRing) and other.base == self.base

    def __hash__(self):
        return hash(("Poly", self.base))


@lru_cache(maxsize=None)
def GF(p: int, k: int = 1):
    """Finite field of order p**k with a deterministic defining modulus.

    For ``k > 1`` the modulus is the first monic irreducible of degree k in
    the ordering used by :func:`minram.exact.finite_fields.first_irreducible`.
    """
    from .integers import is_prime

    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    if k < 1:
        raise InputError("extension degree must be >= 1")
    if k == 1:
        return PrimeField(p)
    from .finite_fields import first_irreducible

    return ExtensionField(p, first_irreducible(p, k))


def field_of_order(q: int):
    from .integers import factor_integer

    fac = factor_integer(q)
    if len(fac.primes) != 1 or not fac.complete:
        raise InputError(f"{q} is not a prime power")
    ((p, k),) = fac.primes.items()
    return GF(p, k)
