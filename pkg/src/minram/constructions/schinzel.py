"""Schinzel-style search for S_n-polynomials ramified at a single finite prime.

With ``c_i`` the coefficients of ``prod_{i=1..n} (X - i)`` and ``P`` the
product of the primes up to ``d n (n-1)``, the family is

    f(X; a, T) = X^n + sum_i c_i (T^i + a_i) X^(n-i) + P alpha a_n

and ``H(a, T)`` is the norm of ``disc_X f`` down to Z[T]. A value ``t`` with
``H(a, t)`` prime gives a polynomial whose splitting field can ramify at one
finite prime only; the search then certifies the Galois group, the
ramification and the real-rootedness for that specialization.

Base field Q (d = 1, alpha = 1) is fully supported. A number field base is
accepted only with ``experimental=True``: H is computed by interpolation of
norms and the per-t certificates are evidence only.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, prod

from ..errors import DegeneracyError, InputError, NotFoundError, PreconditionError, VerificationError
from ..exact.finite_fields import is_squarefree_mod
from ..exact.integers import Primality, is_probable_prime, is_squarefree_int, prime_product_up_to, primes_up_to
from ..exact.poly import Poly, gcd_zz
from ..exact.resultants import discriminant, resultant
from ..exact.rings import ZZ, PolyRing
from ..galois import (
    CERTIFIED_SN,
    GaloisCertificate,
    RamificationReport,
    galois_certify,
    irreducible_over_Q,
    ramified_primes,
)

ZZ_T = PolyRing(ZZ, "T")
ZZ_Y = PolyRing(ZZ, "Y")

DEFAULT_BOX = 2
DEFAULT_T_MAX = 10**5
CHUNK = 256


@dataclass(frozen=True)
class Base:
    """Number field Q(alpha) given by the monic minimal polynomial of alpha."""

    minpoly: Poly

    @property
    def degree(self) -> int:
        return self.minpoly.degree

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    def to_json(self):
        return {"d": self.degree, "minpoly": {"coeffs": [str(c) for c in self.minpoly.coeffs]}}


QQ_BASE = Base(Poly([-1, 1]))


def make_base(minpoly=None, experimental=False) -> Base:
    if minpoly is None:
        return QQ_BASE
    m = minpoly if isinstance(minpoly, Poly) else Poly(list(minpoly))
    if m.degree < 1 or m.lc != 1:
        raise InputError("minimal polynomial must be monic of degree >= 1")
    if m.degree == 1:
        return Base(Poly([-1, 1]))
    if not experimental:
        raise InputError("number-field bases (d > 1) need the experimental flag")
    if not irreducible_over_Q(m).irreducible:
        raise InputError("minimal polynomial is reducible over Q")
    return Base(m)


def build_c_and_P(n: int, d: int = 1):
    if n < 2 or d < 1:
        raise PreconditionError("need n >= 2 and d >= 1")
    roots = Poly.from_roots(range(1, n + 1))
    c = tuple(roots.coeff(n - i) for i in range(1, n + 1))
    return c, prime_product_up_to(d * n * (n - 1))


def _check_a(n, a):
    a = tuple(int(x) for x in a)
    if len(a) != n:
        raise InputError(f"coefficient vector has length {len(a)}, expected {n}")
    return a


def build_f(n: int, a, base: Base = QQ_BASE) -> Poly:
    """f(X; a, T) as a polynomial in X over Z[T] (d = 1) or Z[Y][T] with Y = alpha."""
    a = _check_a(n, a)
    c, P = build_c_and_P(n, base.degree)
    T = Poly.x(ZZ)
    coeffs = [None] * (n + 1)
    coeffs[n] = Poly([1])
    for i in range(1, n + 1):
        coeffs[n - i] = (T ** i + a[i - 1]).scale(c[i - 1])
    if base.is_rational:
        coeffs[0] = coeffs[0] + P * a[n - 1]
        return Poly(coeffs, ZZ_T)
    # coefficients in Z[T][Y]: only the constant term involves alpha
    ring = PolyRing(ZZ_T, "Y")
    out = [Poly([cf], ZZ_T) for cf in coeffs]
    out[0] = Poly([coeffs[0], Poly([P * a[n - 1]])], ZZ_T)
    return Poly(out, ring)


def specialize(n: int, a, t: int, base: Base = QQ_BASE) -> Poly:
    """f(X; a, t): integer polynomial for d = 1, coefficients in Z[Y] otherwise."""
    a = _check_a(n, a)
    c, P = build_c_and_P(n, base.degree)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    for i in range(1, n + 1):
        coeffs[n - i] = c[i - 1] * (t ** i + a[i - 1])
    if base.is_rational:
        coeffs[0] += P * a[n - 1]
        return Poly(coeffs, ZZ)
    out = [Poly([x]) for x in coeffs]
    out[0] = Poly([coeffs[0], P * a[n - 1]])
    return Poly(out, ZZ_Y)


def norm_of_disc(n: int, a, t: int, base: Base = QQ_BASE) -> int:
    """N_{F/Q}(disc_X f(X; a, t)), computed directly at the integer t."""
    f = specialize(n, a, t, base)
    D = discriminant(f)
    if base.is_rational:
        return D
    m = Poly(base.minpoly.coeffs, ZZ)
    return resultant(m, D if D.degree >= 0 else Poly([0]))


def expected_H_shape(n: int, d: int = 1):
    """(deg_T H, leading coefficient) predicted by the weighted homogeneity of D."""
    lc = prod((k - i) ** (2 * d) for i in range(1, n + 1) for k in range(i + 1, n + 1))
    return d * n * (n - 1), lc


def _interpolate(xs, ys) -> Poly:
    """Newton interpolation over Q, returned as an integer polynomial if integral."""
    k = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, k):
        for i in range(k - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    out = [Fraction(0)] * k
    basis = [Fraction(1)]
    for j in range(k):
        for i, b in enumerate(basis):
            out[i] += coef[j] * b
        nxt = [Fraction(0)] * (len(basis) + 1)
        for i, b in enumerate(basis):
            nxt[i + 1] += b
            nxt[i] -= xs[j] * b
        basis = nxt
    if any(x.denominator != 1 for x in out):
        raise VerificationError("interpolated H(a, T) is not integral")
    return Poly([int(x) for x in out])


def compute_H(n: int, a, base: Base = QQ_BASE) -> Poly:
    """H(a, T) in Z[T], with its degree and leading coefficient checked."""
    a = _check_a(n, a)
    deg, lc = expected_H_shape(n, base.degree)
    if base.is_rational:
        H = discriminant(build_f(n, a, base))
        H = Poly(H.coeffs, ZZ)
    else:
        xs = list(range(deg + 1))
        H = _interpolate(xs, [norm_of_disc(n, a, t, base) for t in xs])
    if H.is_zero():
        raise DegeneracyError("disc_X f vanishes identically for this a")
    if H.degree != deg or H.lc != lc:
        raise VerificationError(
            f"H(a, T) has degree {H.degree} and leading coefficient {H.lc}, expected {deg} and {lc}")
    return H


# -- selection of a -----------------------------------------------------------


@lru_cache(maxsize=None)
def _residue_attainable(n: int, p: int) -> bool:
    """Can some a make X^n + sum c_i a_i X^(n-i) separable modulo p?"""
    c, _ = build_c_and_P(n)
    if p >= n:
        return True  # a = (1, ..., 1) gives prod (X - i), separable for p >= n
    for res in itertools.product(range(p), repeat=n):
        coeffs = [0] * (n + 1)
        coeffs[n] = 1
        for i in range(1, n + 1):
            coeffs[n - i] = c[i - 1] * res[i - 1]
        f0 = Poly(coeffs)
        if is_squarefree_mod(f0, p):
            return True
    return False


def local_obstructions(n: int, d: int = 1):
    """Primes dividing H(a, t) for every a and every t.

    Where c_i = 0 mod p the coefficient of X^(n-i) is 0 mod p for all a and t,
    so if no choice of the remaining residues is separable mod p, then p
    divides disc_X f(X; a, t) identically. These are exactly the primes at
    which the separability condition on a cannot be met.
    """
    return [p for p in primes_up_to(d * n * (n - 1)) if not _residue_attainable(n, p)]


def _f_at_zero_mod_P(n, a):
    c, _ = build_c_and_P(n)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    for i in range(1, n + 1):
        coeffs[n - i] = c[i - 1] * a[i - 1]
    return Poly(coeffs)


def fixed_prime_divisors(H: Poly, bound: int | None = None):
    """Primes p <= bound such that p | H(t) for every integer t."""
    bound = bound if bound is not None else max(H.degree, 2)
    out = []
    for p in primes_up_to(bound):
        if all(H(t) % p == 0 for t in range(p)):
            out.append(p)
    return out


@dataclass
class ASelection:
    a: tuple
    H: Poly
    checks: dict
    stats: dict = field(default_factory=dict)

    def to_json(self):
        return {"a": list(self.a), "H": {"coeffs": [str(c) for c in self.H.coeffs]},
                "checks": self.checks}


def check_a(n: int, a, base: Base = QQ_BASE):
    """Check separability mod the small primes, content 1, no fixed prime divisor,
    squarefreeness and irreducibility of H(a, T).

    Returns ``(ok, checks, H_or_None, reason)``.
    """
    a = _check_a(n, a)
    c, P = build_c_and_P(n, base.degree)
    checks = {}
    f0 = _f_at_zero_mod_P(n, a)
    separable = {}
    fallback = []
    for p in primes_up_to(base.degree * n * (n - 1)):
        if _residue_attainable(n, p):
            ok = is_squarefree_mod(f0, p)
            separable[str(p)] = ok
            if not ok:
                checks["separable_mod_P"] = separable
                return False, checks, None, "not-separable-mod-P"
        else:
            fallback.append(p)
    checks["separable_mod_P"] = separable
    checks["separability_unattainable_at"] = [str(p) for p in fallback]
    try:
        H = compute_H(n, a, base)
    except DegeneracyError:
        return False, checks, None, "degenerate"
    content = 0
    for x in H.coeffs:
        content = gcd(content, x)
    checks["content"] = str(content)
    if content != 1:
        return False, checks, H, "H-content"
    fixed = fixed_prime_divisors(H)
    checks["fixed_prime_divisors"] = [str(p) for p in fixed]
    if fixed:
        return False, checks, H, "fixed-prime-divisor"
    squarefree = gcd_zz(H, H.derivative()).degree == 0
    checks["H_not_square"] = squarefree
    if not squarefree:
        return False, checks, H, "H-square-factor"
    irr = irreducible_over_Q(H)
    checks["H_irreducible"] = irr.irreducible
    if not irr.irreducible:
        return False, checks, H, "H-reducible"
    checks["H_irreducibility"] = irr.to_json()
    return True, checks, H, None


def box_order(n: int, box: int):
    """All a in [-box, box]^n, lexicographic on (|a_1|, ..., |a_n|, signs)."""
    vals = range(-box, box + 1)
    return sorted(itertools.product(vals, repeat=n),
                  key=lambda a: (tuple(abs(x) for x in a), tuple(x < 0 for x in a)))


def select_a(n: int, base: Base = QQ_BASE, box: int = DEFAULT_BOX, override=None) -> ASelection:
    """First a in the box ordering passing every check (or the checked override)."""
    if box < 0:
        raise InputError("box size must be non-negative")
    stats = {"tried": 0}
    blocked = local_obstructions(n, base.degree)
    if blocked:
        stats["local_obstructions"] = blocked
        raise NotFoundError(
            f"no admissible a: H(a, t) is divisible by {blocked} for every a and t, "
            "so it is never prime", stats, stage="select_a")
    candidates = [tuple(override)] if override is not None else box_order(n, box)
    for a in candidates:
        stats["tried"] += 1
        ok, checks, H, reason = check_a(n, a, base)
        if ok:
            return ASelection(tuple(a), H, checks, stats)
        stats[reason] = stats.get(reason, 0) + 1
        if override is not None:
            raise NotFoundError(f"a = {list(a)} rejected: {reason}", stats, stage="select_a")
    raise NotFoundError(f"no admissible a in the box [-{box}, {box}]^{n}", stats, stage="select_a")


# -- the t search --------------------------------------------------------------


@dataclass
class SchinzelInstance:
    n: int
    base: Base
    a: tuple
    t: int
    f: Poly
    H_value: int
    H_poly: Poly
    c: tuple
    P: int
    primality: str
    galois: GaloisCertificate | None
    ramification: RamificationReport | None
    modulus: tuple | None = None
    stats: dict = field(default_factory=dict)
    experimental: bool = False

    def to_json(self):
        return {
            "n": self.n,
            "base": self.base.to_json(),
            "a": list(self.a),
            "t": self.t,
            "f": {"coeffs": [str(c) for c in self.f.coeffs]} if self.base.is_rational
                 else {"coeffs": [{"coeffs": [str(x) for x in c.coeffs]} for c in self.f.coeffs]},
            "H_value": str(self.H_value),
            "H": {"coeffs": [str(c) for c in self.H_poly.coeffs]},
            "c": [str(x) for x in self.c],
            "P": str(self.P),
            "primality": self.primality,
            "galois": self.galois.to_json() if self.galois else None,
            "ramification": self.ramification.to_json() if self.ramification else None,
            "modulus": list(self.modulus) if self.modulus else None,
            "experimental": self.experimental,
            "stats": self.stats,
        }


def _evaluate(H: Poly, t: int) -> int:
    acc = 0
    for c in reversed(H.coeffs):
        acc = acc * t + c
    return acc


def _prime_candidate(args):
    H, t, require_proven = args
    h = _evaluate(H, t)
    if abs(h) < 2:
        return None
    level = is_probable_prime(abs(h))
    if not level.is_prime_like:
        return None
    if require_proven and level is not Primality.PRIME:
        return ("unproven", h, level)
    return ("prime", h, level)


def _certify_candidate(n, a, t, h, base, seed, prime_budget):
    f = specialize(n, a, t, base)
    if not base.is_rational:
        return f, None, None, None
    g = galois_certify(f, seed=seed, prime_budget=prime_budget)
    if g.status != CERTIFIED_SN:
        return f, g, None, "galois"
    rep = ramified_primes(f)
    if not rep.infinite.all_real:
        return f, g, rep, "not-all-real"
    if rep.ramified != [abs(h)] or rep.undecided or rep.partial:
        return f, g, rep, "ramification"
    return f, g, rep, None


def schinzel_search(n: int, a=None, base: Base = QQ_BASE, t_min: int = 1, t_max: int = DEFAULT_T_MAX,
                    modulus=None, require_proven: bool = False, box: int = DEFAULT_BOX,
                    seed: int = 0, prime_budget: int = 10_000, threads: int = 1) -> SchinzelInstance:
    """Smallest accepted t in [t_min, t_max] (restricted to t = u mod v if given)."""
    if n < 2:
        raise PreconditionError("n must be at least 2")
    if threads < 1:
        raise InputError("threads must be positive")
    sel = select_a(n, base, box=box, override=a)
    a, H = sel.a, sel.H
    c, P = build_c_and_P(n, base.degree)
    stats = {"t_scanned": 0, "H_prime": 0, "rejected": {}}
    if modulus is not None:
        u, v = modulus
        if v < 1 or (v > 1 and gcd(u, v) != 1):
            raise InputError("modulus needs v >= 1 and gcd(u, v) = 1")
        start = t_min + ((u - t_min) % v)
        ts = range(start, t_max + 1, v)
    else:
        ts = range(t_min, t_max + 1)
    if len(ts) == 0:
        raise NotFoundError("empty t range", stats, stage="schinzel_search")

    pool = ThreadPoolExecutor(threads) if threads > 1 else None
    try:
        for lo in range(0, len(ts), CHUNK):
            chunk = ts[lo:lo + CHUNK]
            args = [(H, t, require_proven) for t in chunk]
            results = list(pool.map(_prime_candidate, args)) if pool else [_prime_candidate(x) for x in args]
            for t, res in zip(chunk, results):
                stats["t_scanned"] += 1
                if res is None:
                    continue
                kind, h, level = res
                if kind == "unproven":
                    stats["rejected"]["unproven-prime"] = stats["rejected"].get("unproven-prime", 0) + 1
                    continue
                stats["H_prime"] += 1
                f, g, rep, why = _certify_candidate(n, a, t, h, base, seed, prime_budget)
                if why is not None:
                    stats["rejected"][why] = stats["rejected"].get(why, 0) + 1
                    continue
                inst = SchinzelInstance(n, base, a, t, f, h, H, c, P, level.value, g, rep,
                                        tuple(modulus) if modulus else None, stats,
                                        experimental=not base.is_rational)
                if not verify_instance(inst):
                    raise VerificationError("Schinzel instance failed re-verification")
                return inst
    finally:
        if pool:
            pool.shutdown()
    raise NotFoundError(f"no accepted t in [{t_min}, {t_max}]", stats, stage="schinzel_search")


def verify_instance(inst: SchinzelInstance) -> bool:
    """Independent recomputation of every claim in a Schinzel instance."""
    n, a, t, base = inst.n, inst.a, inst.t, inst.base
    c, P = build_c_and_P(n, base.degree)
    if (c, P) != (tuple(inst.c), inst.P):
        return False
    if specialize(n, a, t, base) != inst.f:
        return False
    H = compute_H(n, a, base)
    if H != inst.H_poly:
        return False
    if H(t) != inst.H_value or norm_of_disc(n, a, t, base) != inst.H_value:
        return False
    level = is_probable_prime(abs(inst.H_value))
    if level.value != inst.primality or not level.is_prime_like:
        return False
    if inst.modulus:
        u, v = inst.modulus
        if (t - u) % v:
            return False
    if not base.is_rational:
        return True
    if inst.galois is None or inst.galois.status != CERTIFIED_SN or not inst.galois.verify(inst.f):
        return False
    rep = ramified_primes(inst.f)
    return rep.ramified == [abs(inst.H_value)] and not rep.undecided and rep.infinite.all_real


# -- Hilbert moduli --------------------------------------------------------------


@dataclass
class HilbertModulus:
    v: int
    U: tuple
    confidence: dict = field(default_factory=dict)

    def to_json(self):
        return {"v": self.v, "U": list(self.U),
                "confidence": {str(u): c for u, c in self.confidence.items()}}


def residue_set(n: int, a, v: int, base: Base = QQ_BASE, samples: int = 8,
                threshold: float = 0.5, seed: int = 0) -> HilbertModulus:
    """Admissible residues u mod v; v = 1 gives the sentinel U = {0}."""
    if v < 1:
        raise InputError("v must be positive")
    if v == 1:
        return HilbertModulus(1, (0,), {0: 1.0})
    if not is_squarefree_int(v):
        raise InputError(f"v = {v} is not squarefree")
    H = compute_H(n, a, base)
    U = []
    confidence = {}
    for u in range(v):
        if gcd(u, v) != 1 or H(u) % v == 0:
            continue
        good = 0
        for s in range(1, samples + 1):
            f = specialize(n, a, u + v * s, base)
            try:
                ok = galois_certify(f, seed=seed, prime_budget=200).status == CERTIFIED_SN
            except PreconditionError:
                ok = False
            good += ok
        frac = good / samples
        confidence[u] = frac
        if frac >= threshold:
            U.append(u)
    return HilbertModulus(v, tuple(U), confidence)


def hilbert_modulus(n: int, a, v_candidates, base: Base = QQ_BASE, samples: int = 8,
                    seed: int = 0) -> HilbertModulus:
    """First candidate v (in the given order) whose residue set is nonempty."""
    tried = []
    for v in v_candidates:
        hm = residue_set(n, a, v, base, samples=samples, seed=seed)
        tried.append(v)
        if hm.U:
            return hm
    raise NotFoundError("no candidate modulus admits a residue", {"tried": tried},
                        stage="hilbert_modulus")
