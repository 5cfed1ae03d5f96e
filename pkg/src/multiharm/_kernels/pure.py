"""Pure-Python kernels for the exact-arithmetic inner loops.

Reference implementations of the hot operations (series products, series
inverse/sqrt coefficient recurrences, harmonic-like tabulation, Stirling
triangle).  The compiled module ``_speedups`` implements the same API and is
preferred at import time; both must produce bit-identical results.
"""

from __future__ import annotations

from fractions import Fraction

BACKEND = "pure"

_ZERO = Fraction(0)
_ONE = Fraction(1)


def cauchy_product(f, g, order):
    """Coefficients 0..order of f*g; inputs indexable sequences of Fraction."""
    nf = len(f)
    ng = len(g)
    out = []
    for n in range(order + 1):
        acc = _ZERO
        for k in range(max(0, n - ng + 1), min(n, nf - 1) + 1):
            acc += f[k] * g[n - k]
        out.append(acc)
    return out


def invert_series(f):
    """Coefficients of g with f*g = 1 up to len(f)-1.  Requires f[0] != 0."""
    inv0 = _ONE / f[0]
    out = [inv0]
    for n in range(1, len(f)):
        acc = _ZERO
        for i in range(1, min(n, len(f) - 1) + 1):
            acc += f[i] * out[n - i]
        out.append(-acc * inv0)
    return out


def sqrt_series(f):
    """Coefficients of g with g*g = f up to len(f)-1.  Requires f[0] == 1."""
    out = [_ONE]
    half = Fraction(1, 2)
    for n in range(1, len(f)):
        acc = _ZERO
        for i in range(1, n):
            acc += out[i] * out[n - i]
        out.append((f[n] - acc) * half)
    return out


def harmonic_like_levels(n_max, m_max):
    """Table t[m][n] of multiple harmonic-like numbers for 0<=m<=m_max, 0<=n<=n_max.

    Level 0 is all ones; each next level is t[m+1][n] = sum_{j=1..n} t[m][n-j]/j.
    """
    levels = [[_ONE] * (n_max + 1)]
    recip = [_ZERO] + [Fraction(1, j) for j in range(1, n_max + 1)]
    for _ in range(m_max):
        prev = levels[-1]
        cur = [_ZERO]
        for n in range(1, n_max + 1):
            acc = _ZERO
            for j in range(1, n + 1):
                acc += prev[n - j] * recip[j]
            cur.append(acc)
        levels.append(cur)
    return levels


def stirling1_rows(n_max):
    """Rows 0..n_max of the signed Stirling triangle of the first kind."""
    rows = [[1]]
    for n in range(n_max):
        prev = rows[-1]
        row = [0] * (n + 2)
        for k in range(1, n + 2):
            row[k] = prev[k - 1] - n * (prev[k] if k <= n else 0)
        rows.append(row)
    return rows
