"""Ramified primes of a stem field Q[X]/(f) and the status of the infinite place.

Only primes dividing disc(f) can ramify. Each such prime is classified by
the first criterion that decides it:

* Dedekind's criterion: if Z[x] is p-maximal then v_p(disc K) = v_p(disc f) > 0;
* odd valuation of disc(f): disc(f) = [O_K : Z[x]]^2 disc(K), so p | disc(K);
* a Newton polygon of f(X + c) at p with a slope of denominator e > 1
  forces ramification index divisible by e;
* ``unramified_outside``: an integer N such that every prime not dividing N
  is already known to be unramified in a field containing this one.

Anything else is reported as undecided. The stem field and its Galois
closure have the same ramified primes, so the report covers both.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from ..errors import InputError, PreconditionError
from ..exact.finite_fields import factor_mod
from ..exact.integers import factor_integer, valuation
from ..exact.poly import Poly
from ..exact.resultants import discriminant
from ..exact.rings import ZZ
from ..exact.sturm import sturm_count
from .zassenhaus import irreducible_over_Q

RAMIFIED = "ramified"
UNRAMIFIED = "unramified"
UNDECIDED = "undecided"

STEM_NOTE = ("ramification of the stem field and of its Galois closure agree, "
             "so this classification applies to both")


@dataclass(frozen=True)
class InfiniteStatus:
    real_roots: int
    complex_pairs: int

    @property
    def all_real(self) -> bool:
        return self.complex_pairs == 0

    def __str__(self):
        return "all-real" if self.all_real else f"{self.complex_pairs} complex pair(s)"

    def to_json(self):
        return {"status": "all-real" if self.all_real else "complex",
                "real_roots": self.real_roots, "complex_pairs": self.complex_pairs}


@dataclass
class PlaceStatus:
    prime: int
    status: str
    reason: str
    valuation: int = 0

    def to_json(self):
        return {"prime": str(self.prime), "status": self.status,
                "reason": self.reason, "disc_valuation": self.valuation}


@dataclass
class RamificationReport:
    disc: int
    places: list
    infinite: InfiniteStatus
    cofactors: list = field(default_factory=list)
    note: str = STEM_NOTE

    @property
    def partial(self) -> bool:
        return any(status != UNRAMIFIED for _, status in self.cofactors)

    def primes_with(self, status):
        return [pl.prime for pl in self.places if pl.status == status]

    @property
    def ramified(self):
        return self.primes_with(RAMIFIED)

    @property
    def undecided(self):
        return self.primes_with(UNDECIDED)

    def to_json(self):
        return {
            "disc": str(self.disc),
            "finite": [pl.to_json() for pl in self.places],
            "infinite": self.infinite.to_json(),
            "unfactored_cofactors": [{"value": str(c), "status": s} for c, s in self.cofactors],
            "partial": self.partial,
            "note": self.note,
        }


def infinite_place_status(f: Poly) -> InfiniteStatus:
    f = Poly(f.coeffs, ZZ)
    if f.degree < 1:
        raise InputError("constant polynomial")
    if f.degree >= 2 and discriminant(f) == 0:
        raise PreconditionError("polynomial is not squarefree (disc = 0)")
    r = sturm_count(f)
    return InfiniteStatus(r, (f.degree - r) // 2)


def _lift(g: Poly) -> Poly:
    return Poly([int(c) for c in g.coeffs], ZZ)


def dedekind_p_maximal(f: Poly, p: int) -> bool:
    """Dedekind's criterion for a monic integer ``f`` at the prime ``p``."""
    factors = factor_mod(f, p)
    g = Poly([1], ZZ)
    h = Poly([1], ZZ)
    for gi, e in factors:
        lift = _lift(gi)
        g = g * lift
        h = h * lift ** (e - 1)
    F = (f - g * h).exquo(p)
    Fp = F.reduce_mod(p)
    if Fp.is_zero():
        # F = 0 mod p: p-maximal only if there is no repeated factor at all
        return all(e == 1 for _, e in factors)
    common = Fp.gcd(g.reduce_mod(p)).gcd(h.reduce_mod(p))
    return common.degree == 0


def newton_polygon_slopes(f: Poly, p: int):
    """Slopes (as Fractions) of the lower convex hull of (i, v_p(a_i))."""
    pts = [(i, valuation(c, p)) for i, c in enumerate(f.coeffs) if c != 0]
    hull = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    return [Fraction(y2 - y1, x2 - x1) for (x1, y1), (x2, y2) in zip(hull, hull[1:])]


def newton_ramified(f: Poly, p: int) -> int | None:
    """A shift c such that f(X + c) has a fractional slope at p, else None."""
    for g, e in factor_mod(f, p):
        if e < 2 or g.degree != 1:
            continue
        c = (-int(g.coeffs[0])) % p
        shifted = f.taylor_shift(c)
        if any(s.denominator > 1 for s in newton_polygon_slopes(shifted, p)):
            return c
    return None


def classify_prime(f: Poly, p: int, v: int, unramified_outside: int | None = None) -> PlaceStatus:
    if unramified_outside is not None and unramified_outside % p != 0:
        return PlaceStatus(p, UNRAMIFIED, "unramified-in-overfield", v)
    fp = f.reduce_mod(p)
    if fp.gcd(fp.derivative()).degree == 0:
        return PlaceStatus(p, UNRAMIFIED, "squarefree-mod-p", v)
    if dedekind_p_maximal(f, p):
        return PlaceStatus(p, RAMIFIED, "dedekind-p-maximal", v)
    if v % 2 == 1:
        return PlaceStatus(p, RAMIFIED, "odd-disc-valuation", v)
    c = newton_ramified(f, p)
    if c is not None:
        return PlaceStatus(p, RAMIFIED, f"newton-polygon-shift-{c}", v)
    return PlaceStatus(p, UNDECIDED, "dedekind-not-p-maximal", v)


def ramified_primes(f: Poly, factor_bound: int = 10**6, unramified_outside: int | None = None,
                    check_irreducible: bool = True) -> RamificationReport:
    """Classify every prime dividing disc(f) for monic irreducible ``f``."""
    f = Poly(f.coeffs, ZZ)
    if f.degree < 1 or f.lc != 1:
        raise PreconditionError("ramified_primes needs a monic polynomial of degree >= 1")
    if check_irreducible and not irreducible_over_Q(f).irreducible:
        raise PreconditionError("ramified_primes needs an irreducible polynomial")
    disc = discriminant(f) if f.degree >= 2 else 1
    infinite = infinite_place_status(f)
    places = []
    cofactors = []
    if abs(disc) > 1:
        fac = factor_integer(disc, trial_bound=factor_bound)
        for p, e in fac.primes.items():
            places.append(classify_prime(f, p, e, unramified_outside))
        for c in fac.cofactors:
            if unramified_outside is not None and gcd(c, unramified_outside) == 1:
                cofactors.append((c, UNRAMIFIED))
            else:
                cofactors.append((c, UNDECIDED))
    return RamificationReport(disc, places, infinite, cofactors)


def transposition_inertia_check(f: Poly, r: int) -> bool:
    """f mod r has exactly one repeated factor, linear and of multiplicity 2."""
    f = Poly(f.coeffs, ZZ)
    if f.degree < 2:
        raise InputError("need degree >= 2")
    if f.lc % r == 0:
        raise InputError(f"{r} divides the leading coefficient")
    if discriminant(f) % r != 0:
        raise InputError(f"{r} does not divide disc(f); nothing to check")
    repeated = [(g, e) for g, e in factor_mod(f, r) if e > 1]
    return len(repeated) == 1 and repeated[0][0].degree == 1 and repeated[0][1] == 2
