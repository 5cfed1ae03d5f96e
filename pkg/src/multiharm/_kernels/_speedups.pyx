# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled kernels for the exact-arithmetic inner loops.

Same API and bit-identical results as ``pure.py``.  Rationals are carried
through the inner loops as reduced (numerator, denominator) pairs of Python
big ints, with gcd-reduced schoolbook arithmetic; Fraction objects only
appear at the call boundary.
"""

from fractions import Fraction
from math import gcd

BACKEND = "compiled"


cdef inline tuple _add(object na, object da, object nb, object db):
    # both inputs reduced, denominators positive; result reduced
    cdef object g, s, t, g2
    g = gcd(da, db)
    if g == 1:
        return (na * db + nb * da, da * db)
    s = da // g
    t = na * (db // g) + nb * s
    g2 = gcd(t, g)
    if g2 == 1:
        return (t, s * db)
    return (t // g2, s * (db // g2))


cdef inline tuple _mul(object na, object da, object nb, object db):
    cdef object g1, g2
    if na == 0 or nb == 0:
        return (0, 1)
    g1 = gcd(na, db)
    g2 = gcd(nb, da)
    return ((na // g1) * (nb // g2), (da // g2) * (db // g1))


cdef inline list _nums(f):
    return [c.numerator for c in f]


cdef inline list _dens(f):
    return [c.denominator for c in f]


def cauchy_product(f, g, order):
    """Coefficients 0..order of f*g; inputs indexable sequences of Fraction."""
    cdef Py_ssize_t nf = len(f), ng = len(g), n, k, lo, hi
    cdef list fn = _nums(f), fd = _dens(f), gn = _nums(g), gd = _dens(g)
    cdef list out = []
    cdef object an, ad, tn, td
    for n in range(order + 1):
        an, ad = 0, 1
        lo = n - ng + 1
        if lo < 0:
            lo = 0
        hi = n if n < nf - 1 else nf - 1
        for k in range(lo, hi + 1):
            tn, td = _mul(fn[k], fd[k], gn[n - k], gd[n - k])
            an, ad = _add(an, ad, tn, td)
        out.append(Fraction(an, ad))
    return out


def invert_series(f):
    """Coefficients of g with f*g = 1 up to len(f)-1.  Requires f[0] != 0."""
    cdef Py_ssize_t size = len(f), n, i, hi
    cdef list fn = _nums(f), fd = _dens(f)
    cdef object in0, id0, an, ad, tn, td
    # 1/f[0] with positive denominator
    in0, id0 = fd[0], fn[0]
    if id0 < 0:
        in0, id0 = -in0, -id0
    cdef list on = [in0], od = [id0]
    for n in range(1, size):
        an, ad = 0, 1
        hi = n if n < size - 1 else size - 1
        for i in range(1, hi + 1):
            tn, td = _mul(fn[i], fd[i], on[n - i], od[n - i])
            an, ad = _add(an, ad, tn, td)
        tn, td = _mul(-an, ad, in0, id0)
        on.append(tn)
        od.append(td)
    return [Fraction(on[n], od[n]) for n in range(size)]


def sqrt_series(f):
    """Coefficients of g with g*g = f up to len(f)-1.  Requires f[0] == 1."""
    cdef Py_ssize_t size = len(f), n, i
    cdef list fn = _nums(f), fd = _dens(f)
    cdef list on = [1], od = [1]
    cdef object an, ad, tn, td
    for n in range(1, size):
        an, ad = 0, 1
        for i in range(1, n):
            tn, td = _mul(on[i], od[i], on[n - i], od[n - i])
            an, ad = _add(an, ad, tn, td)
        tn, td = _add(fn[n], fd[n], -an, ad)
        tn, td = _mul(tn, td, 1, 2)
        on.append(tn)
        od.append(td)
    return [Fraction(on[n], od[n]) for n in range(size)]


def harmonic_like_levels(n_max, m_max):
    """Table t[m][n] of multiple harmonic-like numbers for 0<=m<=m_max, 0<=n<=n_max.

    Level 0 is all ones; each next level is t[m+1][n] = sum_{j=1..n} t[m][n-j]/j.
    """
    cdef Py_ssize_t n, j, level
    cdef object an, ad, tn, td
    cdef list levels = [[Fraction(1)] * (n_max + 1)]
    cdef list pn = [1] * (n_max + 1), pd = [1] * (n_max + 1)
    cdef list cn, cd
    for level in range(m_max):
        cn, cd = [0], [1]
        for n in range(1, n_max + 1):
            an, ad = 0, 1
            for j in range(1, n + 1):
                tn, td = _mul(pn[n - j], pd[n - j], 1, j)
                an, ad = _add(an, ad, tn, td)
            cn.append(an)
            cd.append(ad)
        levels.append([Fraction(cn[n], cd[n]) for n in range(n_max + 1)])
        pn, pd = cn, cd
    return levels


def stirling1_rows(n_max):
    """Rows 0..n_max of the signed Stirling triangle of the first kind."""
    cdef Py_ssize_t n, k
    cdef list rows = [[1]], prev, row
    for n in range(n_max):
        prev = rows[n]
        row = [0] * (n + 2)
        for k in range(1, n + 1):
            row[k] = prev[k - 1] - n * prev[k]
        row[n + 1] = prev[n]
        rows.append(row)
    return rows
