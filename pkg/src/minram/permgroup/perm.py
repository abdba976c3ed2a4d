"""Permutations as image tuples, plus the cycle-notation grammar.

A permutation of degree n is a tuple ``p`` with ``p[i]`` the image of ``i``.
Products act left to right: ``mul(a, b)`` applies ``a`` first, then ``b``.
Points are 0-based internally and 1-based in cycle strings.
"""

from __future__ import annotations

from ..errors import InputError, ParseError


def identity(n):
    return tuple(range(n))


def is_identity(p):
    return all(i == x for i, x in enumerate(p))


def mul(a, b):
    return tuple([b[x] for x in a])


def inv(p):
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def conj(h, g):
    """h^g = g^-1 h g, i.e. the map g(i) -> g(h(i))."""
    out = [0] * len(h)
    for i, x in enumerate(h):
        out[g[i]] = g[x]
    return tuple(out)


def power(p, e):
    n = len(p)
    if e < 0:
        p, e = inv(p), -e
    result = identity(n)
    while e:
        if e & 1:
            result = mul(result, p)
        e >>= 1
        if e:
            p = mul(p, p)
    return result


def check_perm(p, n=None):
    if n is not None and len(p) != n:
        raise InputError(f"permutation has degree {len(p)}, expected {n}")
    if sorted(p) != list(range(len(p))):
        raise InputError("image array is not a bijection")


def cycles(p):
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen:
            continue
        cyc = [i]
        seen.add(i)
        j = p[i]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = p[j]
        out.append(cyc)
    return out


def cycle_type(p):
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def order(p):
    from math import lcm

    result = 1
    for c in cycles(p):
        result = lcm(result, len(c))
    return result


def sign(p):
    return -1 if sum(len(c) - 1 for c in cycles(p)) % 2 else 1


def support(p):
    return [i for i, x in enumerate(p) if i != x]


def from_cycles(cycle_list, n):
    img = list(range(n))
    seen = set()
    for cyc in cycle_list:
        for x in cyc:
            if not 0 <= x < n:
                raise InputError(f"point {x + 1} outside 1..{n}")
            if x in seen:
                raise InputError(f"point {x + 1} repeated")
            seen.add(x)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a] = b
    return tuple(img)


def format_perm(p):
    """1-based cycle string; the identity prints as ``()``."""
    parts = ["(" + " ".join(str(x + 1) for x in c) + ")" for c in cycles(p) if len(c) > 1]
    return "".join(parts) or "()"


def format_perms(ps):
    return ", ".join(format_perm(p) for p in ps)


def parse_cycles(text: str, degree: int | None = None):
    """Parse a generator list such as ``"(1 2 3)(4 5), (1 2)"``.

    Generators are separated by commas between closing and opening
    parentheses; points inside a cycle by whitespace or commas. Returns
    ``(perms, degree)`` where degree defaults to the largest point used.
    Errors carry the character offset.
    """
    gens: list[list[list[int]]] = []
    current: list[list[int]] = []
    i = 0
    n = len(text)
    max_point = 0
    started = False
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "(":
            j = i + 1
            cyc = []
            num = ""
            num_start = j
            while True:
                if j >= n:
                    raise ParseError("unterminated cycle, expected ')'", offset=j)
                c = text[j]
                if c.isdigit():
                    if not num:
                        num_start = j
                    num += c
                elif c in " \t\n," or c == ")":
                    if num:
                        v = int(num)
                        if v < 1:
                            raise ParseError("points are 1-based", offset=num_start)
                        cyc.append(v - 1)
                        max_point = max(max_point, v)
                        num = ""
                    if c == ")":
                        break
                else:
                    raise ParseError(f"unexpected character {c!r}", offset=j)
                j += 1
            if len(set(cyc)) != len(cyc):
                raise ParseError("repeated point inside a cycle", offset=i)
            current.append(cyc)
            started = True
            i = j + 1
            continue
        if ch == ",":
            if not started:
                raise ParseError("empty generator", offset=i)
            gens.append(current)
            current = []
            started = False
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", offset=i)
    if started:
        gens.append(current)
    elif gens:
        raise ParseError("trailing comma", offset=n)
    if not gens:
        raise ParseError("no generators", offset=0)
    if degree is None:
        degree = max(max_point, 1)
    elif max_point > degree:
        raise InputError(f"point {max_point} exceeds degree {degree}")
    perms = []
    for g in gens:
        img = list(range(degree))
        for cyc in g:
            if len(cyc) > 1:
                # cycles inside one generator compose left to right
                step = from_cycles([cyc], degree)
                img = [step[x] for x in img]
        perms.append(tuple(img))
    return perms, degree


def lex_key(p):
    return p
