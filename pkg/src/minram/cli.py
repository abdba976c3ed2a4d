"""Command-line interface: ``minram <command> [options]``.

Every command writes one JSON document to stdout (or ``--output``) and, when
a cache path is configured (``--cache`` or ``MINRAM_CACHE``), appends a
record to a JSON-lines cache. ``verify`` re-checks cached records from
their payloads. Exit codes: 0 success, 1 input error, 2 not found within
budget, 3 failed re-verification.
"""

from __future__ import annotations

import argparse
import configparser
import json
import os
import signal
import sys
from contextlib import contextmanager
from datetime import datetime, timezone

from . import __version__
from .errors import InputError, MinramError, NotFoundError, ResourceError, VerificationError
from .exact.poly import Poly, parse_poly
from .exact.rings import ZZ

SCHEMA_VERSION = 1
EXIT_OK, EXIT_INPUT, EXIT_NOT_FOUND, EXIT_VERIFY = 0, 1, 2, 3
CACHE_ENV = "MINRAM_CACHE"


# -- argument parsing ------------------------------------------------------------


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _pair(text):
    vals = _int_list(text)
    if len(vals) != 2:
        raise argparse.ArgumentTypeError("expected u,v")
    return tuple(vals)


def _common():
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("common options")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--threads", type=_positive, default=1)
    g.add_argument("--budget-ms", type=_positive, default=None, help="wall-clock limit")
    g.add_argument("--prime-bound", type=_positive, default=10_000,
                   help="witness primes scanned by Galois certification")
    g.add_argument("--require-proven", action="store_true",
                   help="accept only primes in the deterministic primality regime")
    g.add_argument("--cache", default=None, help=f"JSON-lines cache (default ${CACHE_ENV})")
    g.add_argument("--config", default=None, help="key = value file presetting options")
    g.add_argument("--output", default=None, help="write the JSON document here")
    return p


def _poly_args(p):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--poly", help='polynomial text, e.g. "X^5 - X - 1"')
    src.add_argument("--coeffs", type=_int_list, help="integer coefficients, lowest degree first")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="minram", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"minram {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("realize", parents=[common], help="realize G as Aut(K/F)")
    p.add_argument("--group", required=True)
    p.add_argument("--strategy", choices=["schinzel", "bms", "ffield"], default="bms")
    p.add_argument("--base", choices=["Q", "Fq(T)"], default=None)
    p.add_argument("--n", type=_positive, default=None)
    p.add_argument("--H", dest="H", default=None, help="subgroup generators in cycle notation")
    p.add_argument("--n-max", type=_positive, default=7)
    p.add_argument("--q", type=_positive, default=2)
    p.add_argument("--p-max", type=_positive, default=1000)
    p.add_argument("--t-max", type=_positive, default=10**5)

    p = sub.add_parser("schinzel", parents=[common], help="S_n polynomial ramified at one prime")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--a", type=_int_list, default=None)
    p.add_argument("--t-min", type=int, default=1)
    p.add_argument("--t-max", type=_positive, default=10**5)
    p.add_argument("--box", type=int, default=2)
    p.add_argument("--modulus", type=_pair, default=None, help="restrict to t = u mod v, given as u,v")

    p = sub.add_parser("bms", parents=[common], help="prime triple r = n^n p + (n-1)^(n-1) q")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--p-max", type=int, default=1000)
    p.add_argument("--q-max", type=int, default=1000)

    p = sub.add_parser("ffield", parents=[common], help="X^n + T X^(n-4) + 1 over F_q(T)")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--q", type=_positive, default=2)
    p.add_argument("--samples", type=_positive, default=200)

    p = sub.add_parser("frucht", parents=[common], help="graph with Aut = G, optionally a field recipe")
    p.add_argument("--group", required=True)
    p.add_argument("--emit-graph", action="store_true", help="print the graph as 'n m' + edge lines")
    p.add_argument("--recipe", action="store_true", help="pair the graph with a BMS triple")
    p.add_argument("--p-max", type=_positive, default=1000)

    p = sub.add_parser("nq-search", parents=[common], help="(Gamma, H) with N(H)/H = G")
    p.add_argument("--group", required=True)
    p.add_argument("--n-min", type=_positive, default=1)
    p.add_argument("--n-max", type=_positive, default=7)
    p.add_argument("--kinds", default="S,A", help="comma-separated subset of S,A")

    p = sub.add_parser("galois", parents=[common], help="certify Gal(f) = S_n or a subgroup of A_n")
    _poly_args(p)

    p = sub.add_parser("ramify", parents=[common], help="ramified primes of Q[X]/(f)")
    _poly_args(p)
    p.add_argument("--factor-bound", type=_positive, default=10**6)
    p.add_argument("--unramified-outside", type=int, default=None)

    p = sub.add_parser("verify", parents=[common], help="re-check cached records or a JSON document")
    p.add_argument("file", nargs="?", default=None, help="JSON document or JSON-lines cache")
    return parser


def _config_defaults(path):
    cp = configparser.ConfigParser()
    try:
        with open(path) as fh:
            cp.read_string("[minram]\n" + fh.read())
    except OSError as exc:
        raise InputError(f"cannot read config {path}: {exc}") from None
    except configparser.Error as exc:
        raise InputError(f"malformed config {path}: {exc}") from None
    return {k.replace("-", "_"): v for k, v in cp["minram"].items()}


def parse_args(argv):
    """argv overrides the config file, which overrides built-in defaults."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.config:
        preset = _config_defaults(args.config)
        sub = parser._subparsers._group_actions[0].choices[args.command]
        known = {a.dest: a for a in sub._actions}
        unknown = sorted(set(preset) - set(known))
        if unknown:
            raise InputError(f"unknown config keys: {', '.join(unknown)}")
        converted = {}
        for key, raw in preset.items():
            action = known[key]
            if isinstance(action, argparse._StoreTrueAction):
                converted[key] = raw.strip().lower() in ("1", "true", "yes", "on")
            elif action.type is not None:
                converted[key] = action.type(raw)
            else:
                converted[key] = raw
        sub.set_defaults(**converted)
        args = parser.parse_args(argv)
    return args


# -- helpers ---------------------------------------------------------------------


def _poly_from(args) -> Poly:
    if args.poly is not None:
        return parse_poly(args.poly)
    if not args.coeffs:
        raise InputError("empty coefficient list")
    return Poly(args.coeffs, ZZ)


def _group(text):
    from .permgroup import parse_group_spec

    return parse_group_spec(text)


@contextmanager
def _time_budget(ms):
    if not ms or not hasattr(signal, "setitimer"):
        yield
        return

    def expire(signum, frame):
        raise ResourceError(f"time budget of {ms} ms exhausted")

    old = signal.signal(signal.SIGALRM, expire)
    signal.setitimer(signal.ITIMER_REAL, ms / 1000)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


def _poly_json(f: Poly):
    return {"coeffs": [str(c) for c in f.coeffs], "text": f.to_string()}


# -- commands: each returns (params, result) ---------------------------------------


def cmd_realize(args):
    from .constructions import realize

    G = _group(args.group)
    cert = realize(G, args.strategy, base=args.base, n=args.n, H=args.H, n_max=args.n_max, q=args.q,
                   seed=args.seed, prime_budget=args.prime_bound, p_max=args.p_max, q_max=args.p_max,
                   t_max=args.t_max, threads=args.threads)
    if not cert.verify():
        raise VerificationError("realization certificate failed re-verification")
    params = {"group": args.group, "strategy": args.strategy, "base": args.base, "n": args.n,
              "H": args.H, "n_max": args.n_max, "q": args.q, "p_max": args.p_max, "t_max": args.t_max}
    return params, cert.to_json()


def cmd_schinzel(args):
    from .constructions import schinzel_search, verify_instance

    inst = schinzel_search(args.n, a=args.a, t_min=args.t_min, t_max=args.t_max, modulus=args.modulus,
                           require_proven=args.require_proven, box=args.box, seed=args.seed,
                           prime_budget=args.prime_bound, threads=args.threads)
    if not verify_instance(inst):
        raise VerificationError("Schinzel instance failed re-verification")
    params = {"n": args.n, "a": args.a, "t_min": args.t_min, "t_max": args.t_max, "box": args.box,
              "modulus": list(args.modulus) if args.modulus else None}
    result = inst.to_json()
    result["f_text"] = inst.f.to_string()
    return params, result


def cmd_bms(args):
    from .constructions import bms_search

    t = bms_search(args.n, args.p_max, args.q_max, require_proven=args.require_proven, seed=args.seed,
                   prime_budget=args.prime_bound, threads=args.threads)
    if not t.verify():
        raise VerificationError("BMS triple failed re-verification")
    return {"n": args.n, "p_max": args.p_max, "q_max": args.q_max}, t.to_json()


def cmd_ffield(args):
    from .constructions import function_field_family

    inst = function_field_family(args.n, args.q, samples=args.samples, seed=args.seed)
    if not inst.verify():
        raise VerificationError("function-field instance failed re-verification")
    return {"n": args.n, "q": args.q, "samples": args.samples}, inst.to_json()


def cmd_frucht(args):
    from .constructions import frucht_field_recipe
    from .graphs import automorphism_group_abstract, frucht_graph
    from .permgroup import is_isomorphic

    G = _group(args.group)
    A = G.abstract()
    params = {"group": args.group, "recipe": args.recipe}
    if args.recipe:
        recipe = frucht_field_recipe(G, p_max=args.p_max, q_max=args.p_max, seed=args.seed,
                                     prime_budget=args.prime_bound, threads=args.threads)
        if not recipe.verify():
            raise VerificationError("Frucht recipe failed re-verification")
        return params, recipe.to_json()
    graph = frucht_graph(A, G.default_generators())
    aut = automorphism_group_abstract(graph, budget=max(64, graph.n))
    if is_isomorphic(aut, A) is None:
        raise VerificationError("Aut(frucht graph) is not isomorphic to G")
    return params, {"group": G.describe(), "order": A.order, "n": graph.n,
                    "m": len(graph.edges), "graph": graph.to_text(), "aut_isomorphic": True}


def cmd_nq(args):
    from .permgroup import find_normalizer_quotient

    kinds = tuple(k.strip() for k in args.kinds.split(",") if k.strip())
    if not set(kinds) <= {"S", "A"}:
        raise InputError("kinds must be a subset of S,A")
    if args.n_min > args.n_max:
        raise InputError("n-min exceeds n-max")
    G = _group(args.group)
    hits = find_normalizer_quotient(G, range(args.n_min, args.n_max + 1), kinds=kinds, threads=args.threads)
    if not hits:
        raise NotFoundError(f"no hits for n in [{args.n_min}, {args.n_max}]",
                            {"complete": hits.complete, "notes": hits.notes}, stage="nq-search")
    params = {"group": args.group, "n_min": args.n_min, "n_max": args.n_max, "kinds": list(kinds)}
    return params, {"complete": hits.complete, "notes": hits.notes, "hits": [h.to_json() for h in hits]}


def cmd_galois(args):
    from .galois import galois_certify

    f = _poly_from(args)
    cert = galois_certify(f, seed=args.seed, prime_budget=args.prime_bound)
    if not cert.verify(f):
        raise VerificationError("Galois certificate failed re-verification")
    return {"f": _poly_json(f)}, cert.to_json()


def cmd_ramify(args):
    from .galois import ramified_primes

    f = _poly_from(args)
    rep = ramified_primes(f, factor_bound=args.factor_bound, unramified_outside=args.unramified_outside)
    params = {"f": _poly_json(f), "factor_bound": args.factor_bound,
              "unramified_outside": args.unramified_outside}
    return params, rep.to_json()


def cmd_verify(args):
    from .verify import verify_record

    path = args.file or args.cache or os.environ.get(CACHE_ENV)
    if not path:
        raise InputError("nothing to verify: give a file, --cache or $" + CACHE_ENV)
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    records = []
    stripped = text.strip()
    if stripped.startswith("{") and "\n{" not in stripped:
        records.append(json.loads(stripped))
    else:
        for i, line in enumerate(text.splitlines(), start=1):
            if line.strip():
                try:
                    records.append(json.loads(line))
                except json.JSONDecodeError as exc:
                    raise InputError(f"{path}:{i}: invalid JSON ({exc.msg})") from None
    outcome = [{"kind": r.get("kind"), "ok": verify_record(r)} for r in records]
    failed = sum(not o["ok"] for o in outcome)
    if failed:
        raise VerificationError(f"{failed} of {len(outcome)} records failed re-verification")
    return {"file": path}, {"records": len(outcome), "verified": outcome}


COMMANDS = {
    "realize": ("realize", cmd_realize),
    "schinzel": ("schinzel", cmd_schinzel),
    "bms": ("bms", cmd_bms),
    "ffield": ("ffield", cmd_ffield),
    "frucht": ("frucht", cmd_frucht),
    "nq-search": ("nq", cmd_nq),
    "galois": ("galois", cmd_galois),
    "ramify": ("ramify", cmd_ramify),
    "verify": ("verify", cmd_verify),
}


# -- output ----------------------------------------------------------------------


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def _timestamp():
    return datetime.now(timezone.utc).isoformat(timespec="seconds").replace("+00:00", "Z")


def _append_cache(path, record):
    line = dumps(record) + "\n"
    fd = os.open(path, os.O_WRONLY | os.O_APPEND | os.O_CREAT, 0o644)
    try:
        os.write(fd, line.encode())
    finally:
        os.close(fd)


def _emit(doc, output):
    text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run_command(argv) -> int:
    try:
        args = parse_args(argv)
    except InputError as exc:
        print(f"minram: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    kind, fn = COMMANDS[args.command]
    try:
        with _time_budget(args.budget_ms):
            params, result = fn(args)
    except InputError as exc:
        return _fail(kind, "input-error", exc, EXIT_INPUT, args.output)
    except NotFoundError as exc:
        return _fail(kind, "not-found", exc, EXIT_NOT_FOUND, args.output)
    except ResourceError as exc:
        return _fail(kind, "budget-exhausted", exc, EXIT_NOT_FOUND, args.output)
    except VerificationError as exc:
        return _fail(kind, "verification-failed", exc, EXIT_VERIFY, args.output)
    except MinramError as exc:
        return _fail(kind, "error", exc, EXIT_INPUT, args.output)

    if getattr(args, "command", None) == "frucht" and args.emit_graph and not args.recipe:
        sys.stdout.write(result["graph"])
        return EXIT_OK
    doc = {"v": SCHEMA_VERSION, "kind": kind, "params": params, "seed": args.seed,
           "prime_bound": args.prime_bound, "require_proven": args.require_proven, "result": result,
           "tool_version": __version__, "timestamp": _timestamp()}
    _emit(doc, args.output)
    cache = args.cache or os.environ.get(CACHE_ENV)
    if cache and kind != "verify":
        _append_cache(cache, doc)
    return EXIT_OK


def _fail(kind, status, exc, code, output):
    err = {"type": type(exc).__name__, "message": str(exc)}
    stage = getattr(exc, "stage", None)
    if stage:
        err["stage"] = stage
    stats = getattr(exc, "stats", None)
    if stats:
        err["stats"] = stats
    _emit({"v": SCHEMA_VERSION, "kind": kind, "status": status, "error": err}, output)
    print(f"minram {kind}: {exc}", file=sys.stderr)
    return code


def main(argv=None):
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
