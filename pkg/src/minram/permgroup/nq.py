"""Search for subgroups H of S_n / A_n with N(H)/H isomorphic to a target G."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from ..errors import InputError, PreconditionError, ResourceError
from .abstract import AbstractGroup, is_isomorphic, quotient, verify_isomorphism
from .catalog import GroupSpec
from .chain import PermGroup, alternating_group, symmetric_group
from .perm import format_perms
from .search import normalizer, normalizer_exhaustive, subgroups_up_to_conjugacy

DEFAULT_N_MAX = 10
ENUMERATION_DEGREE = 7
ENUMERATION_BUDGET = 5040
EXHAUSTIVE_ORACLE_DEGREE = 8


def ambient(kind: str, n: int) -> PermGroup:
    if kind == "S":
        return symmetric_group(n)
    if kind == "A":
        return alternating_group(n)
    raise InputError(f"unknown ambient kind {kind!r}")


@dataclass
class NQHit:
    n: int
    kind: str
    H: PermGroup
    N: PermGroup
    witness: list
    method: str = "enumerated"
    oracle_checked: bool = False
    quotient_reps: list = field(default_factory=list)

    @property
    def index(self):
        return ambient(self.kind, self.n).order() // self.H.order()

    def sort_key(self):
        return (self.n, self.index, 0 if self.kind == "S" else 1, sorted(self.H.gens))

    def to_json(self):
        return {
            "n": self.n,
            "gamma": f"{self.kind}{self.n}",
            "H": format_perms(self.H.gens) if self.H.gens else "()",
            "H_order": str(self.H.order()),
            "N_order": str(self.N.order()),
            "index": str(self.index),
            "method": self.method,
            "oracle_checked": self.oracle_checked,
            "quotient_reps": [format_perms([r]) for r in self.quotient_reps],
            "witness": list(self.witness),
        }


class NQResult(list):
    complete = True
    notes: list


@lru_cache(maxsize=32)
def _classes(kind, n, budget):
    G = ambient(kind, n)
    reps = subgroups_up_to_conjugacy(G, budget=budget)
    out = []
    for H in reps:
        N = normalizer(G, H, None)
        out.append((H, N))
    return tuple(out)


def _quotient_data(N, H):
    Q = quotient(N, H)
    return Q


def _check_hit(target: AbstractGroup, kind, n, H, N, method):
    if N.order() // H.order() != target.order:
        return None
    Q = _quotient_data(N, H)
    phi = is_isomorphic(Q, target)
    if phi is None:
        return None
    return NQHit(n, kind, H, N, phi, method=method, quotient_reps=Q.reps)


def _lifted_candidates(kind, n, small_hits):
    """H = K x S_{n-m} (intersected with A_n for kind A) from degree-m hits."""
    seen = set()
    for hit in small_hits:
        m = hit.n
        if hit.kind != "S" or m >= n:
            continue
        if kind == "A" and n - m < 2:
            continue
        gens = [tuple(g) + tuple(range(m, n)) for g in hit.H.gens]
        rest = list(range(m, n))
        if len(rest) >= 2:
            t = list(range(n))
            t[rest[0]], t[rest[1]] = rest[1], rest[0]
            gens.append(tuple(t))
        if len(rest) >= 3:
            c = list(range(n))
            for a, b in zip(rest, rest[1:] + rest[:1]):
                c[a] = b
            gens.append(tuple(c))
        H = PermGroup(gens, n)
        if kind == "A":
            H = _intersect_alternating(H)
        key = (tuple(sorted(H.gens)), H.order())
        if key in seen:
            continue
        seen.add(key)
        yield H


def _intersect_alternating(H: PermGroup) -> PermGroup:
    from .perm import mul, sign

    n = H.degree
    even = [g for g in H.gens if sign(g) == 1]
    odd = [g for g in H.gens if sign(g) == -1]
    if not odd:
        return H
    t = odd[0]
    # Schreier generators of the index-2 subgroup
    gens = list(even)
    gens += [mul(t, g) for g in odd]
    gens += [mul(mul(t, g), t) for g in even]
    gens.append(mul(t, t))
    from .perm import is_identity

    return PermGroup([g for g in gens if not is_identity(g)], n)


def find_normalizer_quotient(G: GroupSpec | AbstractGroup, n_range, kinds=("S", "A"),
                             enumeration_degree=ENUMERATION_DEGREE,
                             budget=ENUMERATION_BUDGET, degree_bound=12,
                             first_only=False, threads=1) -> NQResult:
    """All (n, Gamma, H) in range with N_Gamma(H)/H isomorphic to G.

    Degrees whose ambient order fits ``budget`` are searched exhaustively
    over subgroup classes. Larger degrees (up to ``degree_bound``) only try
    subgroups lifted from smaller-degree hits; such results are marked
    ``method="lifted"`` and the result is flagged incomplete. Every hit of
    degree <= 8 is re-checked against the exhaustive normalizer oracle.
    """
    target = G if isinstance(G, AbstractGroup) else G.abstract()
    ns = sorted(set(n_range))
    if not ns:
        raise InputError("empty n range")
    kinds = [k for k in ("S", "A") if k in kinds]
    if not kinds:
        raise InputError("no ambient kinds selected")
    result = NQResult()
    result.notes = []
    small_hits = []
    for n in ns:
        if n < 1:
            continue
        for kind in kinds:
            Gam = ambient(kind, n)
            hits = []
            if n <= enumeration_degree and Gam.order() <= budget:
                pairs = _classes(kind, n, budget)
                cands = [(H, N) for H, N in pairs if N.order() // H.order() == target.order]
                if threads > 1:
                    with ThreadPoolExecutor(threads) as pool:
                        found = list(pool.map(
                            lambda hn: _check_hit(target, kind, n, hn[0], hn[1], "enumerated"),
                            cands))
                else:
                    found = [_check_hit(target, kind, n, H, N, "enumerated") for H, N in cands]
                hits = [h for h in found if h is not None]
            elif n <= degree_bound:
                result.complete = False
                result.notes.append(f"{kind}{n}: lifted candidates only (not exhaustive)")
                for H in _lifted_candidates(kind, n, small_hits):
                    N = normalizer(Gam, H, degree_bound)
                    hit = _check_hit(target, kind, n, H, N, "lifted")
                    if hit is not None:
                        hits.append(hit)
            else:
                result.complete = False
                result.notes.append(f"{kind}{n}: beyond degree bound {degree_bound}, skipped")
                continue
            for hit in hits:
                if n <= EXHAUSTIVE_ORACLE_DEGREE:
                    oracle = normalizer_exhaustive(Gam, hit.H)
                    if oracle.order() != hit.N.order() or not oracle.contains_group(hit.N):
                        raise AssertionError("normalizer disagrees with exhaustive oracle")
                    hit.oracle_checked = True
            result.extend(hits)
            if kind == "S":
                small_hits.extend(hits)
        if first_only and result:
            break
    result.sort(key=NQHit.sort_key)
    return result


def special_case_An_minus_1(n: int):
    """H = A_{n-1} on points 0..n-2 inside S_n; returns (H, N, quotient, witness)."""
    if n < 5:
        raise PreconditionError("the A_{n-1} special case needs n >= 5")
    gens = [tuple(g) + (n - 1,) for g in alternating_group(n - 1).gens]
    H = PermGroup(gens, n)
    N = normalizer(symmetric_group(n), H, None)
    Q = quotient(N, H)
    C2 = GroupSpec.named("C2").abstract()
    phi = is_isomorphic(Q, C2)
    if phi is None or not verify_isomorphism(Q, C2, phi):
        raise AssertionError("N(A_{n-1})/A_{n-1} is not C2")
    return H, N, Q, phi


def verify_hit(target: AbstractGroup, hit_json) -> bool:
    """Recompute N(H)/H from a serialized hit and check the stored witness."""
    from .perm import parse_cycles

    n = hit_json["n"]
    kind = hit_json["gamma"][0]
    Gam = ambient(kind, n)
    gens = [] if hit_json["H"] == "()" else parse_cycles(hit_json["H"], n)[0]
    H = PermGroup(gens, n)
    if not Gam.contains_group(H):
        return False
    N = normalizer(Gam, H, None)
    if str(N.order()) != hit_json["N_order"]:
        return False
    Q = quotient(N, H)
    phi = hit_json["witness"]
    if Q.order != target.order:
        return False
    if [format_perms([r]) for r in Q.reps] != hit_json["quotient_reps"]:
        return False
    return verify_isomorphism(Q, target, phi)


def resource_guard(n, kind, budget):
    if ambient(kind, n).order() > budget:
        raise ResourceError(f"{kind}{n} exceeds enumeration budget {budget}")
