"""End-to-end realization of a finite group G as Aut(K/F).

A subgroup H of Gamma = S_n or A_n with N_Gamma(H)/H isomorphic to G is
paired with a Gamma-extension L/F from one of the constructive pipelines.
Then K = L^H has [K:F] = [Gamma:H], Aut(K/F) = N_Gamma(H)/H and every
place ramified in K is ramified in L. When H is a point stabilizer or the
alternating group on n - 1 points, K gets an explicit defining polynomial
with its own irreducibility and ramification certificates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial

from ..errors import InputError, NotFoundError, PreconditionError
from ..exact.poly import Poly
from ..exact.resultants import discriminant, resultant
from ..exact.rings import ZZ, PolyRing
from ..galois import RamificationReport, irreducible_over_Q, ramified_primes
from ..permgroup import GroupSpec, PermGroup, format_perms, parse_cycles
from ..permgroup.abstract import is_isomorphic, quotient
from ..permgroup.nq import NQHit, ambient, find_normalizer_quotient, verify_hit
from ..permgroup.perm import sign
from ..permgroup.search import normalizer
from .bms import bms_search
from .ffield import function_field_family
from .schinzel import schinzel_search

STRATEGIES = ("schinzel", "bms", "ffield")
DEFAULT_N_MAX = 7
FFIELD_DEGREES = (9,)


def _base_for(strategy, base):
    if strategy not in STRATEGIES:
        raise InputError(f"unknown strategy {strategy!r}")
    expected = "Fq(T)" if strategy == "ffield" else "Q"
    if base is None:
        return expected
    if base != expected:
        raise InputError(f"strategy {strategy} needs base {expected}, got {base}")
    return base


@dataclass
class FieldSource:
    """The Gamma-extension L/F: its stem polynomial and a ramification bound."""

    strategy: str
    n: int
    stem: object
    ram_bound: list
    record: object = None

    def verify(self) -> bool:
        if self.record is None:
            return self.n == 1
        if self.strategy == "schinzel":
            from .schinzel import verify_instance

            return verify_instance(self.record)
        return self.record.verify()

    def to_json(self):
        out = {"strategy": self.strategy, "n": self.n, "ram_bound": self.ram_bound}
        if isinstance(self.stem, Poly):
            out["stem"] = {"coeffs": [str(c) for c in self.stem.coeffs]}
        elif self.stem is not None:
            out["stem"] = self.stem
        if self.record is not None:
            out["record"] = self.record.to_json()
        return out


def _ram_bound_over_Q(rep: RamificationReport):
    places = [str(p) for p in rep.ramified + rep.undecided]
    places += [str(c) for c, status in rep.cofactors if status != "unramified"]
    if not rep.infinite.all_real:
        places.append("inf")
    return places


def _field_source(strategy, n, q, seed, prime_budget, p_max, q_max, t_max, threads) -> FieldSource:
    if n == 1:
        return FieldSource(strategy, 1, None, [])
    if strategy == "bms":
        t = bms_search(n, p_max, q_max, seed=seed, prime_budget=prime_budget, threads=threads)
        return FieldSource(strategy, n, t.model, _ram_bound_over_Q(t.ramification), t)
    if strategy == "schinzel":
        inst = schinzel_search(n, t_max=t_max, seed=seed, prime_budget=prime_budget, threads=threads)
        return FieldSource(strategy, n, inst.f, _ram_bound_over_Q(inst.ramification), inst)
    inst = function_field_family(n, q, seed=seed)
    bound = ["T=inf"] if inst.disc_constant else ["T=inf"] + [str(g) for g in inst.candidates]
    return FieldSource(strategy, n, inst.to_json()["f"], bound, inst)


def _moved_points(H: PermGroup):
    return {i for g in H.gens for i in range(H.degree) if g[i] != i}


def k_polynomial_kind(H: PermGroup, kind: str, n: int):
    """'stem' if H is a point stabilizer, 'alt-stem' if H = A_{n-1}, else None."""
    if n < 2:
        return None
    fixes_point = len(_moved_points(H)) <= n - 1
    if not fixes_point:
        return None
    if kind == "S" and H.order() == factorial(n - 1):
        return "stem"
    if kind == "A" and H.order() == factorial(n - 1) // 2:
        return "stem"
    if kind == "S" and n >= 3 and H.order() == factorial(n - 1) // 2 and all(sign(g) == 1 for g in H.gens):
        return "alt-stem"
    return None


def alt_stem_polynomial(f: Poly) -> Poly:
    """Res_Y(f(Y), (X - Y)^2 - disc f), whose roots are alpha_i +- sqrt(disc f)."""
    f = Poly(f.coeffs, ZZ)
    D = discriminant(f)
    R = PolyRing(ZZ, "X")
    X = Poly((0, 1), ZZ)
    # (X - Y)^2 - D as a polynomial in Y with coefficients in Z[X]
    h = Poly((X * X - Poly((D,), ZZ), Poly((0, -2), ZZ), Poly((1,), ZZ)), R)
    F = Poly(tuple(Poly((c,), ZZ) for c in f.coeffs), R)
    g = resultant(F, h)
    return Poly(g.coeffs, ZZ)


@dataclass
class KPolynomial:
    kind: str
    poly: Poly
    irreducibility: object
    ramification: RamificationReport

    def to_json(self):
        return {"kind": self.kind,
                "poly": {"coeffs": [str(c) for c in self.poly.coeffs]},
                "degree": self.poly.degree,
                "irreducibility": self.irreducibility.to_json(),
                "ramification": self.ramification.to_json()}


def _k_polynomial(kind, stem: Poly) -> KPolynomial:
    if kind == "stem":
        g = Poly(stem.coeffs, ZZ)
        rep = ramified_primes(g)
    else:
        g = alt_stem_polynomial(stem)
        if g.degree != 2 * stem.degree:
            raise AssertionError("resultant has the wrong degree")
        # K lies inside the splitting field of the stem, which is unramified outside disc(stem)
        rep = ramified_primes(g, unramified_outside=abs(discriminant(stem)), check_irreducible=False)
    irr = irreducible_over_Q(g)
    if not irr.irreducible:
        raise PreconditionError(f"the {kind} K-polynomial is reducible")
    return KPolynomial(kind, g, irr, rep)


@dataclass
class RealizationCertificate:
    target: str
    target_abstract: object
    hit: NQHit
    source: FieldSource
    base: str
    k_poly: KPolynomial | None = None
    notes: list = field(default_factory=list)

    @property
    def n(self):
        return self.hit.n

    @property
    def degree(self):
        return self.hit.index

    def statement(self) -> str:
        h = format_perms(self.hit.H.gens) if self.hit.H.gens else "1"
        return (f"K = L^H with L the {self.hit.kind}{self.n}-extension of {self.base} from the "
                f"{self.source.strategy} pipeline and H = <{h}>; [K:{self.base}] = {self.degree}, "
                f"Aut(K/{self.base}) = N(H)/H = {self.target}, and K is unramified outside "
                f"{{{', '.join(map(str, self.source.ram_bound))}}}")

    def verify(self) -> bool:
        if not verify_hit(self.target_abstract, self.hit.to_json()):
            return False
        if not self.source.verify():
            return False
        if self.k_poly is None:
            return True
        kp = self.k_poly
        if not kp.irreducibility.verify(kp.poly):
            return False
        expect = (Poly(self.source.stem.coeffs, ZZ) if kp.kind == "stem"
                  else alt_stem_polynomial(self.source.stem))
        if expect != kp.poly:
            return False
        allowed = set(self.source.ram_bound)
        return all(str(p) in allowed for p in kp.ramification.ramified)

    def to_json(self):
        return {
            "target": self.target,
            "base": self.base,
            "n": self.n,
            "gamma": f"{self.hit.kind}{self.n}",
            "quotient": self.hit.to_json(),
            "degree": str(self.degree),
            "l_source": self.source.to_json(),
            "ram_bound": self.source.ram_bound,
            "k_polynomial": self.k_poly.to_json() if self.k_poly else None,
            "statement": self.statement(),
            "notes": self.notes,
        }


def _override_hit(A, kind, n, H_text) -> NQHit:
    gens = [] if H_text in ("", "()") else parse_cycles(H_text, n)[0]
    if gens and len(gens[0]) != n:
        raise InputError(f"H generators act on {len(gens[0])} points, expected {n}")
    Gam = ambient(kind, n)
    H = PermGroup(gens, n)
    if not Gam.contains_group(H):
        raise InputError(f"H is not a subgroup of {kind}{n}")
    N = normalizer(Gam, H, None)
    Q = quotient(N, H)
    phi = is_isomorphic(Q, A)
    if phi is None:
        raise InputError(f"the given H has N(H)/H of order {N.order() // H.order()}, "
                         "not isomorphic to the target")
    return NQHit(n, kind, H, N, phi, method="override", quotient_reps=Q.reps)


def realize(G: GroupSpec, strategy: str = "bms", base: str | None = None, n: int | None = None,
            H: str | None = None, n_max: int = DEFAULT_N_MAX, q: int = 2, seed: int = 0,
            prime_budget: int = 10_000, p_max: int = 1000, q_max: int = 1000,
            t_max: int = 10**5, threads: int = 1) -> RealizationCertificate:
    base = _base_for(strategy, base)
    A = G.abstract()
    kind = "A" if strategy == "ffield" else "S"
    if H is not None and n is None:
        raise InputError("an H override needs n as well")

    if A.order == 1 and n is None:
        hit = _override_hit(A, kind, 1, "()")
        hits = [hit]
    elif H is not None:
        hits = [_override_hit(A, kind, n, H)]
    else:
        if n is not None:
            ns = [n]
        elif strategy == "ffield":
            ns = list(FFIELD_DEGREES)
        else:
            ns = list(range(2, n_max + 1))
        search_ns = sorted(set(range(2, max(ns) + 1))) if strategy == "ffield" else ns
        # hits are ordered by (n, index), so the first degree with a hit decides
        found = find_normalizer_quotient(A, search_ns, kinds=("S", kind), threads=threads,
                                         first_only=strategy != "ffield")
        hits = [h for h in found if h.kind == kind and h.n in ns]
        if not hits:
            raise NotFoundError(f"no (Gamma, H) with N(H)/H = {G.describe()} for n in {ns}",
                                {"n_range": ns, "complete": found.complete}, stage="group-search")

    failures = {}
    for hit in hits:
        if hit.n in failures:
            continue
        try:
            source = _field_source(strategy, hit.n, q, seed, prime_budget, p_max, q_max, t_max, threads)
        except NotFoundError as exc:
            failures[hit.n] = str(exc)
            continue
        cert = RealizationCertificate(G.describe(), A, hit, source, base)
        if base == "Q" and hit.n >= 2:
            kk = k_polynomial_kind(hit.H, hit.kind, hit.n)
            if kk is not None:
                cert.k_poly = _k_polynomial(kk, source.stem)
        if failures:
            cert.notes.append({"skipped_degrees": failures})
        return cert
    raise NotFoundError("no degree admits a field from the chosen pipeline",
                        {"failures": failures}, stage="field-search")
