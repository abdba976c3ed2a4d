"""Dense univariate polynomials over a pluggable coefficient ring."""

from __future__ import annotations

import re
from fractions import Fraction

from ..errors import ParseError, UndefinedInputError
from .rings import QQ, ZZ, PolyRing, Ring


class Poly:
    """Immutable dense polynomial, coefficients stored lowest degree first.

    >>> Poly([28, -15, 1])
    Poly(X^2 - 15*X + 28)
    """

    __slots__ = ("ring", "coeffs")

    def __init__(self, coeffs=(), ring: Ring = ZZ):
        cs = [ring.convert(c) for c in coeffs]
        while cs and ring.is_zero(cs[-1]):
            cs.pop()
        self.ring = ring
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, coeffs, ring):
        # coeffs already normalized ring elements (trailing zeros allowed)
        cs = list(coeffs)
        while cs and ring.is_zero(cs[-1]):
            cs.pop()
        obj = object.__new__(cls)
        obj.ring = ring
        obj.coeffs = tuple(cs)
        return obj

    @classmethod
    def monomial(cls, degree, coeff=1, ring=ZZ):
        return cls._raw([ring.zero] * degree + [ring.convert(coeff)], ring)

    @classmethod
    def x(cls, ring=ZZ):
        return cls.monomial(1, 1, ring)

    @classmethod
    def from_roots(cls, roots, ring=ZZ):
        f = cls((1,), ring)
        for r in roots:
            f = f * cls((ring.neg(ring.convert(r)), ring.one), ring)
        return f

    # -- basic accessors -------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        if not self.coeffs:
            return self.ring.zero
        return self.coeffs[-1]

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ring.zero

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    def is_monic(self):
        return bool(self.coeffs) and self.ring.eq(self.coeffs[-1], self.ring.one)

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            if len(self.coeffs) != len(other.coeffs):
                return False
            eq = self.ring.eq
            return all(eq(a, b) for a, b in zip(self.coeffs, other.coeffs))
        try:
            return self == self._coerce(other)
        except (TypeError, ValueError, ArithmeticError):
            return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        return Poly._raw((self.ring.convert(other),), self.ring)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        R = self.ring
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = R.add(out[i], c)
        return Poly._raw(out, R)

    __radd__ = __add__

    def __neg__(self):
        R = self.ring
        return Poly._raw([R.neg(c) for c in self.coeffs], R)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        R = self.ring
        if not isinstance(other, Poly):
            c = R.convert(other)
            return Poly._raw([R.mul(a, c) for a in self.coeffs], R)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw((), R)
        out = [R.zero] * (len(a) + len(b) - 1)
        add, mul, is_zero = R.add, R.mul, R.is_zero
        for i, x in enumerate(a):
            if is_zero(x):
                continue
            for j, y in enumerate(b):
                out[i + j] = add(out[i + j], mul(x, y))
        return Poly._raw(out, R)

    __rmul__ = __mul__

    def scale(self, c):
        R = self.ring
        return Poly._raw([R.mul(a, c) for a in self.coeffs], R)

    def __pow__(self, e: int):
        result = Poly._raw((self.ring.one,), self.ring)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift_degree(self, k):
        """Multiply by X^k."""
        if not self.coeffs:
            return self
        return Poly._raw([self.ring.zero] * k + list(self.coeffs), self.ring)

    def __call__(self, x):
        """Evaluate by Horner's rule; ``x`` may live in any compatible ring."""
        if not self.coeffs:
            return self.ring.zero
        acc = self.coeffs[-1]
        if isinstance(x, Poly):
            acc = x._coerce(acc) if not isinstance(acc, Poly) else acc
            for c in reversed(self.coeffs[:-1]):
                acc = acc * x + c
            return acc
        R = self.ring
        if isinstance(R, PolyRing):
            for c in reversed(self.coeffs[:-1]):
                acc = acc * x + c
            return acc
        x = R.convert(x)
        add, mul = R.add, R.mul
        for c in reversed(self.coeffs[:-1]):
            acc = add(mul(acc, x), c)
        return acc

    def compose(self, g: "Poly") -> "Poly":
        acc = Poly._raw((), g.ring)
        for c in reversed(self.coeffs):
            acc = acc * g + Poly._raw((c,), g.ring)
        return acc

    def taylor_shift(self, c) -> "Poly":
        """f(X + c)."""
        R = self.ring
        return self.compose(Poly._raw((R.convert(c), R.one), R))

    def derivative(self) -> "Poly":
        R = self.ring
        return Poly._raw([R.mul(R.convert(i), c) for i, c in enumerate(self.coeffs)][1:], R)

    def reverse(self) -> "Poly":
        return Poly._raw(list(reversed(self.coeffs)), self.ring)

    def map(self, fn, ring: Ring) -> "Poly":
        return Poly([fn(c) for c in self.coeffs], ring)

    def change_ring(self, ring: Ring) -> "Poly":
        return Poly([ring.convert(c) for c in self.coeffs], ring)

    # -- division --------------------------------------------------------

    def divmod(self, other: "Poly"):
        """Euclidean division; needs an invertible leading coefficient."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        R = self.ring
        rem = list(self.coeffs)
        db = other.degree
        inv = R.inv(other.lc) if R.is_field else None
        q = [R.zero] * max(len(rem) - db, 0)
        b = other.coeffs
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if R.is_zero(c):
                continue
            c = R.mul(c, inv) if inv is not None else R.exquo(c, other.lc)
            q[k - db] = c
            for j in range(db + 1):
                rem[k - db + j] = R.sub(rem[k - db + j], R.mul(c, b[j]))
        return Poly._raw(q, R), Poly._raw(rem[:db] if db > 0 else [], R)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exquo(self, other: "Poly") -> "Poly":
        """Exact quotient; raises ArithmeticError if ``other`` does not divide."""
        if not isinstance(other, Poly):
            R = self.ring
            c = R.convert(other)
            return Poly._raw([R.exquo(a, c) for a in self.coeffs], R)
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def prem(self, other: "Poly") -> "Poly":
        """Pseudo-remainder lc(other)^(deg self - deg other + 1) * self mod other."""
        R = self.ring
        db = other.degree
        if db < 0:
            raise ZeroDivisionError("pseudo-remainder by zero")
        rem = list(self.coeffs)
        delta = len(rem) - 1 - db
        if delta < 0:
            return self
        lb = other.lc
        b = other.coeffs
        steps = 0
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            rem = [R.mul(x, lb) for x in rem]
            steps += 1
            if not R.is_zero(c):
                for j in range(db + 1):
                    rem[k - db + j] = R.sub(rem[k - db + j], R.mul(c, b[j]))
            rem.pop()
        for _ in range(delta + 1 - steps):
            rem = [R.mul(x, lb) for x in rem]
        return Poly._raw(rem, R)

    # -- field-only helpers -----------------------------------------------

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(self.ring.inv(self.lc))

    def gcd(self, other: "Poly") -> "Poly":
        """Monic gcd over a field."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def xgcd(self, other: "Poly"):
        """(g, s, t) with s*self + t*other = g monic, over a field."""
        R = self.ring
        one = Poly._raw((R.one,), R)
        zero = Poly._raw((), R)
        r0, r1, s0, s1, t0, t1 = self, other, one, zero, zero, one
        while not r1.is_zero():
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if r0.is_zero():
            return r0, s0, t0
        inv = R.inv(r0.lc)
        return r0.scale(inv), s0.scale(inv), t0.scale(inv)

    def powmod(self, e: int, modulus: "Poly") -> "Poly":
        R = self.ring
        result = Poly._raw((R.one,), R)
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            e >>= 1
            if e:
                base = (base * base) % modulus
        return result

    # -- integer helpers --------------------------------------------------

    def content(self):
        from math import gcd

        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def height(self) -> int:
        return max((abs(c) for c in self.coeffs), default=0)

    def reduce_mod(self, p) -> "Poly":
        from .rings import GF

        return Poly([c % p for c in self.coeffs], GF(p))

    def lift_symmetric(self, m: int | None = None) -> "Poly":
        """Lift a Z/m polynomial to ZZ with coefficients in (-m/2, m/2]."""
        m = m or self.ring.p
        out = []
        for c in self.coeffs:
            c %= m
            out.append(c - m if c > m // 2 else c)
        return Poly(out, ZZ)

    # -- display ----------------------------------------------------------

    def to_string(self, var="X"):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if self.ring.is_zero(c):
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if isinstance(c, Poly):
                cs = c.to_string(self.ring.var if isinstance(self.ring, PolyRing) else "T")
                cs = cs if len(c.coeffs) <= 1 or not mono else f"({cs})"
                if mono and cs == "1":
                    terms.append(mono)
                else:
                    terms.append(f"{cs}*{mono}" if mono else cs)
                continue
            if isinstance(c, tuple):
                cs = "[" + ",".join(map(str, c)) + "]"
                terms.append(f"{cs}*{mono}" if mono else cs)
                continue
            neg = c < 0 if isinstance(c, (int, Fraction)) else False
            a = -c if neg else c
            if mono:
                body = mono if a == 1 else f"{a}*{mono}"
            else:
                body = str(a)
            terms.append(("-" if neg else "+", body))
        out = ""
        for t in terms:
            if isinstance(t, tuple):
                sign, body = t
                if not out:
                    out = ("-" if sign == "-" else "") + body
                else:
                    out += f" {sign} {body}"
            else:
                out = t if not out else f"{out} + {t}"
        return out

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        suffix = "" if self.ring is ZZ else f", {self.ring!r}"
        return f"Poly({self.to_string()}{suffix})"


def poly_zz(coeffs) -> Poly:
    return Poly(coeffs, ZZ)


def primitive_part_zz(f: Poly) -> Poly:
    c = f.content()
    if c == 0:
        raise UndefinedInputError("zero polynomial has no primitive part")
    if f.lc < 0:
        c = -c
    return f.exquo(c)


def content_and_primitive(f: Poly):
    """Return ``(content, primitive)`` with content > 0 and f = content * primitive."""
    if f.ring is not ZZ:
        raise UndefinedInputError("content is defined here for integer polynomials")
    if f.is_zero():
        raise UndefinedInputError("zero polynomial has no content")
    c = f.content()
    return c, f.exquo(c)


def to_qq(f: Poly) -> Poly:
    return Poly(f.coeffs, QQ)


def qq_to_zz_primitive(f: Poly) -> Poly:
    """Scale a rational polynomial to a primitive integer polynomial with lc > 0."""
    from math import lcm

    den = 1
    for c in f.coeffs:
        den = lcm(den, Fraction(c).denominator)
    g = Poly([int(Fraction(c) * den) for c in f.coeffs], ZZ)
    return primitive_part_zz(g)


def gcd_zz(f: Poly, g: Poly) -> Poly:
    """Primitive gcd of integer polynomials (computed over QQ, lc > 0)."""
    if f.is_zero() and g.is_zero():
        return Poly((), ZZ)
    h = to_qq(f).gcd(to_qq(g))
    return qq_to_zz_primitive(h)


def squarefree_part_zz(f: Poly) -> Poly:
    g = gcd_zz(f, f.derivative())
    if g.degree <= 0:
        return primitive_part_zz(f)
    return qq_to_zz_primitive(to_qq(f) // to_qq(g))


_TERM = re.compile(r"\s*([+-])?\s*(\d+)?\s*(\*?\s*([A-Za-z])\s*(?:(?:\^|\*\*)\s*(\d+))?)?\s*")


def parse_poly(text: str) -> Poly:
    """Integer polynomial in one variable, e.g. ``"X^5 - X - 1"`` or ``"2*x**3 + 7"``."""
    s = text.strip()
    if not s:
        raise ParseError("empty polynomial", offset=0)
    coeffs: dict[int, int] = {}
    var = None
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        sign, num, mono, name, exp = m.groups()
        if m.end() == pos or (num is None and mono is None):
            raise ParseError(f"unexpected {s[pos]!r}", offset=pos)
        if sign is None and not first:
            raise ParseError("expected '+' or '-' between terms", offset=pos)
        if mono is not None:
            if var is not None and name != var:
                raise ParseError(f"second variable {name!r}", offset=m.start(4))
            var = name
            if num is None and mono.lstrip().startswith("*"):
                raise ParseError("'*' without a coefficient", offset=pos)
        c = int(num) if num is not None else 1
        e = (int(exp) if exp is not None else 1) if mono is not None else 0
        coeffs[e] = coeffs.get(e, 0) + (-c if sign == "-" else c)
        pos = m.end()
        first = False
    out = [0] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c
    return Poly(out, ZZ)
