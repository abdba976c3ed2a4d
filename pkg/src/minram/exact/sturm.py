"""Exact real-root counting with Sturm sequences over QQ."""

from __future__ import annotations

from fractions import Fraction

from ..errors import UndefinedInputError
from .poly import Poly
from .rings import QQ

INF = float("inf")


def _sign(x):
    return (x > 0) - (x < 0)


def sturm_sequence(f: Poly) -> list[Poly]:
    """Sturm chain of the squarefree part of ``f`` (coefficients in QQ)."""
    f = f.change_ring(QQ)
    if f.is_zero():
        raise UndefinedInputError("Sturm sequence of the zero polynomial")
    g = f.gcd(f.derivative()) if f.degree > 0 else f.monic()
    if g.degree > 0:
        f = f // g
    seq = [f, f.derivative()]
    while not seq[-1].is_zero():
        seq.append(-(seq[-2] % seq[-1]))
    seq.pop()
    return seq


def _variations_at(seq, x):
    signs = []
    for p in seq:
        if x == INF:
            s = _sign(p.lc)
        elif x == -INF:
            s = _sign(p.lc) * (-1 if p.degree % 2 else 1)
        else:
            s = _sign(p(x))
        if s:
            signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(f: Poly, lo=-INF, hi=INF) -> int:
    """Number of distinct real roots of ``f`` in the half-open interval (lo, hi].

    ``lo``/``hi`` may be rationals (``Fraction``/``int``) or +-infinity. A
    non-squarefree ``f`` is counted through its squarefree part.
    """
    seq = sturm_sequence(f)
    if seq[0].degree == 0:
        return 0
    if lo != -INF:
        lo = Fraction(lo)
    if hi != INF:
        hi = Fraction(hi)
    if lo != -INF and hi != INF and lo >= hi:
        return 0
    return _variations_at(seq, lo) - _variations_at(seq, hi)


def real_root_count(f: Poly) -> int:
    return sturm_count(f)
