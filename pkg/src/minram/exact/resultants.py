"""Resultants and discriminants via the subresultant PRS.

All divisions in the remainder sequence are exact in the coefficient
domain, so the same code serves ZZ, Z/p, F_q and the bivariate case where
coefficients are themselves polynomials in T.
"""

from __future__ import annotations

from ..errors import UndefinedInputError
from .poly import Poly


def _exact_div(R, a, b):
    return R.exquo(a, b)


def resultant(f: Poly, g: Poly):
    """Res(f, g) = lc(f)^deg(g) * prod of g over the roots of f.

    Uses the Collins/Brown-Traub subresultant sequence (Cohen, Alg. 3.3.7),
    which needs only exact divisions in the coefficient domain.
    """
    if f.ring != g.ring:
        raise UndefinedInputError("resultant of polynomials over different rings")
    R = f.ring
    if f.is_zero() and g.is_zero():
        raise UndefinedInputError("resultant of two zero polynomials is undefined")
    if f.is_zero() or g.is_zero():
        return R.zero
    A, B = f, g
    s = 1
    if A.degree < B.degree:
        A, B = B, A
        if A.degree % 2 and B.degree % 2:
            s = -s
    if B.degree == 0:
        r = R.power(B.lc, A.degree)
        return r if s == 1 else R.neg(r)
    g_ = R.one
    h = R.one
    while True:
        delta = A.degree - B.degree
        if A.degree % 2 and B.degree % 2:
            s = -s
        Rm = A.prem(B)
        A = B
        if Rm.is_zero():
            return R.zero
        divisor = R.mul(g_, R.power(h, delta))
        B = Poly._raw([_exact_div(R, c, divisor) for c in Rm.coeffs], R)
        g_ = A.lc
        if delta == 1:
            h = g_
        elif delta > 1:
            h = _exact_div(R, R.power(g_, delta), R.power(h, delta - 1))
        if B.degree == 0:
            da = A.degree
            if da == 1:
                r = B.lc
            else:
                r = _exact_div(R, R.power(B.lc, da), R.power(h, da - 1))
            return r if s == 1 else R.neg(r)


def discriminant(f: Poly):
    """disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f) with n = deg f.

    When the characteristic kills the top coefficient of f' the resultant is
    taken with f' at its formal degree n - 1.
    """
    n = f.degree
    if n < 1:
        raise UndefinedInputError("discriminant needs degree >= 1")
    R = f.ring
    df = f.derivative()
    if df.is_zero():
        return R.zero
    res = resultant(f, df)
    gap = (n - 1) - df.degree
    if gap:
        res = R.mul(res, R.power(f.lc, gap))
    res = _exact_div(R, res, f.lc)
    if (n * (n - 1) // 2) % 2:
        res = R.neg(res)
    return res


def sylvester_resultant(f: Poly, g: Poly):
    """Determinant of the Sylvester matrix by fraction-free elimination.

    Slow; kept as an independent oracle for tests of :func:`resultant`.
    """
    R = f.ring
    m, n = f.degree, g.degree
    size = m + n
    if size == 0:
        return R.one
    rows = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(n):
        rows.append([R.zero] * i + fc + [R.zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([R.zero] * i + gc + [R.zero] * (size - n - 1 - i))
    return bareiss_det(rows, R)


def bareiss_det(rows, R):
    M = [list(r) for r in rows]
    n = len(M)
    sign = 1
    prev = R.one
    for k in range(n - 1):
        if R.is_zero(M[k][k]):
            for i in range(k + 1, n):
                if not R.is_zero(M[i][k]):
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return R.zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = R.sub(R.mul(M[i][j], M[k][k]), R.mul(M[i][k], M[k][j]))
                M[i][j] = R.exquo(num, prev)
        prev = M[k][k]
    d = M[n - 1][n - 1]
    return d if sign == 1 else R.neg(d)
