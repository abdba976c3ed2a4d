"""Re-verification of CLI records from their payloads alone.

Nothing is searched again: each check recomputes the certificate at the
recorded point (the t, the triple, the subgroup, ...) and compares it with
the stored JSON.
"""

from __future__ import annotations

from .errors import MinramError
from .exact.poly import Poly
from .exact.rings import ZZ


def _poly(obj) -> Poly:
    return Poly([int(c) for c in obj["coeffs"]], ZZ)


def _group(text):
    from .permgroup import parse_group_spec

    return parse_group_spec(text)


def check_galois(f, seed, prime_bound, stored) -> bool:
    from .galois import galois_certify

    cert = galois_certify(f, seed=seed, prime_budget=prime_bound)
    return cert.to_json() == stored and cert.verify(f)


def check_schinzel(res, seed, prime_bound) -> bool:
    from .constructions.schinzel import build_c_and_P, compute_H, norm_of_disc, specialize
    from .exact.integers import is_probable_prime
    from .galois import ramified_primes

    if res["base"]["d"] != 1:
        return False
    n, a, t = res["n"], tuple(res["a"]), res["t"]
    f = specialize(n, a, t)
    if [str(c) for c in f.coeffs] != res["f"]["coeffs"]:
        return False
    c, P = build_c_and_P(n)
    if [str(x) for x in c] != res["c"] or str(P) != res["P"]:
        return False
    H = compute_H(n, a)
    h = int(res["H_value"])
    if [str(x) for x in H.coeffs] != res["H"]["coeffs"] or H(t) != h or norm_of_disc(n, a, t) != h:
        return False
    if is_probable_prime(abs(h)).value != res["primality"]:
        return False
    if res["modulus"] and (t - res["modulus"][0]) % res["modulus"][1]:
        return False
    if not check_galois(f, seed, prime_bound, res["galois"]) or res["galois"]["status"] != "certified-sn":
        return False
    rep = ramified_primes(f)
    return rep.to_json() == res["ramification"] and rep.ramified == [abs(h)] and rep.infinite.all_real


def check_bms(res, seed, prime_bound) -> bool:
    from .constructions.bms import BmsTriple, _certify, cleared_poly, integral_model, relation_r

    n, p, q = res["n"], int(res["p"]), int(res["q"])
    cert, rep, why = _certify(n, p, q, seed, prime_bound)
    if why is not None:
        return False
    t = BmsTriple(n, p, q, relation_r(n, p, q), res["r_primality"], cleared_poly(n, p, q),
                  integral_model(n, p, q), cert, rep, res["stats"])
    return t.to_json() == res and t.verify()


def check_ffield(res, params, seed) -> bool:
    from .constructions import function_field_family

    inst = function_field_family(params["n"], params["q"], samples=params["samples"], seed=seed)
    return inst.to_json() == res and inst.verify()


def check_nq(res, params) -> bool:
    from .permgroup.nq import verify_hit

    A = _group(params["group"]).abstract()
    return bool(res["hits"]) and all(verify_hit(A, h) for h in res["hits"])


def check_frucht(res, params, seed, prime_bound) -> bool:
    from .galois import transposition_inertia_check
    from .graphs import SimpleGraph, automorphism_group_abstract
    from .permgroup import is_isomorphic

    A = _group(params["group"]).abstract()
    graph = SimpleGraph.from_text(res["graph"])
    aut = automorphism_group_abstract(graph, budget=max(64, graph.n))
    if is_isomorphic(aut, A) is None:
        return False
    if not params.get("recipe"):
        return res["n"] == graph.n
    tr = res["triple"]
    return (tr["n"] == graph.n and check_bms(tr, seed, prime_bound)
            and transposition_inertia_check(_poly(tr["integral_model"]), int(tr["r"])))


def check_realize(res, params, seed, prime_bound) -> bool:
    from .constructions.realize import alt_stem_polynomial
    from .galois import irreducible_over_Q, ramified_primes
    from .exact.resultants import discriminant
    from .permgroup.nq import verify_hit

    A = _group(params["group"]).abstract()
    if not verify_hit(A, res["quotient"]):
        return False
    src = res["l_source"]
    if "record" in src:
        rec = src["record"]
        if src["strategy"] == "bms" and not check_bms(rec, seed, prime_bound):
            return False
        if src["strategy"] == "schinzel" and not check_schinzel(rec, seed, prime_bound):
            return False
        if src["strategy"] == "ffield" and not check_ffield(rec, {"n": rec["n"], "q": rec["q"],
                                                                  "samples": rec["evidence"]["samples"]}, seed):
            return False
    kp = res["k_polynomial"]
    if kp is None:
        return True
    stem = _poly(src["stem"])
    g = stem if kp["kind"] == "stem" else alt_stem_polynomial(stem)
    if [str(c) for c in g.coeffs] != kp["poly"]["coeffs"]:
        return False
    irr = irreducible_over_Q(g)
    if not irr.irreducible or irr.to_json() != kp["irreducibility"]:
        return False
    if kp["kind"] == "stem":
        rep = ramified_primes(g)
    else:
        rep = ramified_primes(g, unramified_outside=abs(discriminant(stem)), check_irreducible=False)
    if rep.to_json() != kp["ramification"]:
        return False
    return all(str(p) in set(res["ram_bound"]) for p in rep.ramified)


def verify_record(record) -> bool:
    """True iff the record's result is reproduced exactly from its payload."""
    if record.get("v") != 1 or "result" not in record:
        return False
    kind, res, params = record.get("kind"), record["result"], record.get("params", {})
    seed, prime_bound = record.get("seed", 0), record.get("prime_bound", 10_000)
    try:
        if kind == "galois":
            return check_galois(_poly(params["f"]), seed, prime_bound, res)
        if kind == "ramify":
            from .galois import ramified_primes

            rep = ramified_primes(_poly(params["f"]), factor_bound=params["factor_bound"],
                                  unramified_outside=params["unramified_outside"])
            return rep.to_json() == res
        if kind == "schinzel":
            return check_schinzel(res, seed, prime_bound)
        if kind == "bms":
            return check_bms(res, seed, prime_bound)
        if kind == "ffield":
            return check_ffield(res, params, seed)
        if kind == "nq":
            return check_nq(res, params)
        if kind == "frucht":
            return check_frucht(res, params, seed, prime_bound)
        if kind == "realize":
            return check_realize(res, params, seed, prime_bound)
    except (MinramError, KeyError, TypeError, ValueError):
        return False
    return False
