"""Exact evaluation of every sequence family used by the identity catalog.

Each family has a primary (fast, memoized) route; where an independent route
exists it is exposed as a separate function so the two can be cross-checked:

* ``harmonic_like`` (convolution recurrence) vs ``harmonic_like_bruteforce``
  (literal sum over integer compositions) vs the generating-function route in
  :mod:`multiharm.series`.
* ``hyperharmonic`` (iterated partial sums) vs ``hyperharmonic_closed``
  (binomial times harmonic difference).
* ``hyperharmonic_half`` (central-binomial form) vs
  ``hyperharmonic_half_via_binomial`` (generalized-binomial form).

All caches are module-level, guarded by one re-entrant lock, and transparent:
a warm cache returns exactly what a cold recomputation would.  Values are
immutable, so concurrent use never changes any returned value.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Mapping

from multiharm import _kernels
from multiharm.rational import binomial, gen_binomial

_ZERO = Fraction(0)

_lock = threading.RLock()


class FeasibilityError(ValueError):
    """Raised when a brute-force enumeration would exceed its tuple ceiling."""


def _check_index(n: int, name: str = "n") -> None:
    if n < 0:
        raise ValueError(f"{name} must be >= 0, got {n}")


# ---------------------------------------------------------------------------
# harmonic numbers and relatives


_harmonic: list[Fraction] = [_ZERO]
_harmonic_order: dict[int, list[Fraction]] = {}
_odd_harmonic: list[Fraction] = [_ZERO]
_half_offset: list[Fraction] = [_ZERO]


def harmonic(n: int) -> Fraction:
    """H_n = 1 + 1/2 + ... + 1/n, with H_0 = 0."""
    _check_index(n)
    with _lock:
        while len(_harmonic) <= n:
            k = len(_harmonic)
            _harmonic.append(_harmonic[-1] + Fraction(1, k))
        return _harmonic[n]


def harmonic_order(n: int, r: int) -> Fraction:
    """Order-r harmonic number: sum of 1/k^r for k = 1..n."""
    _check_index(n)
    if r < 1:
        raise ValueError(f"order r must be >= 1, got {r}")
    if r == 1:
        return harmonic(n)
    with _lock:
        lst = _harmonic_order.setdefault(r, [_ZERO])
        while len(lst) <= n:
            k = len(lst)
            lst.append(lst[-1] + Fraction(1, k**r))
        return lst[n]


def odd_harmonic(n: int) -> Fraction:
    """O_n = sum of 1/(2k-1) for k = 1..n, with O_0 = 0."""
    _check_index(n)
    with _lock:
        while len(_odd_harmonic) <= n:
            k = len(_odd_harmonic)
            _odd_harmonic.append(_odd_harmonic[-1] + Fraction(1, 2 * k - 1))
        return _odd_harmonic[n]


def half_harmonic_offset(n: int) -> Fraction:
    """Half-integer harmonic offset: sum of 1/(k - 1/2) for k = 1..n.

    This is the difference of harmonic values at n - 1/2 and at -1/2; only
    such differences are rational, and they are all this package ever needs.
    Each step adds the exact term 1/(k - 1/2) = 2/(2k - 1).
    """
    _check_index(n)
    with _lock:
        while len(_half_offset) <= n:
            k = len(_half_offset)
            _half_offset.append(_half_offset[-1] + Fraction(2, 2 * k - 1))
        return _half_offset[n]


# ---------------------------------------------------------------------------
# multiple harmonic-like numbers


class _HarmonicLikeTable:
    """Memo table for harmonic-like numbers, filled by the kernel backend."""

    def __init__(self) -> None:
        self.levels: list[list[Fraction]] = [[Fraction(1)]]

    def value(self, n: int, m: int) -> Fraction:
        if m >= len(self.levels) or n >= len(self.levels[0]):
            n_cap = len(self.levels[0]) - 1
            if n > n_cap:
                n_cap = max(n, 2 * n_cap, 16)
            m_cap = max(m, len(self.levels) - 1)
            self.levels = _kernels.harmonic_like_levels(n_cap, m_cap)
        return self.levels[m][n]


_hlike = _HarmonicLikeTable()


def harmonic_like(n: int, m: int) -> Fraction:
    """Multiple harmonic-like number: sum of 1/(k_1 ... k_m) over positive
    integer m-tuples with k_1 + ... + k_m <= n.

    Evaluated level by level through the convolution recurrence
    ``t(n, m+1) = sum_{j=1..n} t(n-j, m)/j`` with t(n, 0) = 1 and t(0, m) = 0
    for m >= 1; fully memoized across calls.
    """
    _check_index(n)
    _check_index(m, "m")
    with _lock:
        return _hlike.value(n, m)


#: Default ceiling on how many tuples the brute-force oracle will enumerate.
BRUTE_FORCE_CEILING = 2_000_000


def harmonic_like_bruteforce(n: int, m: int, ceiling: int = BRUTE_FORCE_CEILING) -> Fraction:
    """Independent oracle for :func:`harmonic_like`: the literal composition sum.

    Enumerates every m-tuple of positive integers with component sum <= n
    (there are C(n, m) of them) and adds the exact reciprocal products.
    Refuses with :class:`FeasibilityError` when the tuple count exceeds
    ``ceiling``.
    """
    _check_index(n)
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    count = binomial(n, m)
    if count > ceiling:
        raise FeasibilityError(
            f"{count} tuples for (n={n}, m={m}) exceeds the ceiling of {ceiling}"
        )
    total = _ZERO
    for s in range(m, n + 1):
        # compositions of s into m positive parts via cut positions
        for cuts in combinations(range(1, s), m - 1):
            prod = 1
            prev = 0
            for cut in cuts:
                prod *= cut - prev
                prev = cut
            prod *= s - prev
            total += Fraction(1, prod)
    return total


# ---------------------------------------------------------------------------
# Stirling numbers of the first kind


class _StirlingTable:
    def __init__(self) -> None:
        self.rows: list[list[int]] = [[1]]

    def value(self, n: int, k: int) -> int:
        if n >= len(self.rows):
            self.rows = _kernels.stirling1_rows(max(n, 2 * (len(self.rows) - 1), 16))
        row = self.rows[n]
        return row[k] if k < len(row) else 0


_stirling = _StirlingTable()


def stirling1(n: int, k: int) -> int:
    """Signed Stirling number of the first kind s(n, k).

    Triangle recurrence s(n+1, k) = s(n, k-1) - n*s(n, k) with s(0, 0) = 1;
    s(n, k) = 0 for n < k.
    """
    _check_index(n)
    _check_index(k, "k")
    with _lock:
        return _stirling.value(n, k)


# ---------------------------------------------------------------------------
# hyperharmonic numbers


_hyper: dict[int, list[Fraction]] = {}


def hyperharmonic(n: int, p: int) -> Fraction:
    """Hyperharmonic number: p-fold iterated partial sum of 1/n.

    Defined by the recurrence ``value(n, p) = sum_{i=1..n} value(i, p-1)``
    with base level value(n, 0) = 1/n and value(0, p) = 0 for p >= 1.
    value(0, 0) is undefined and raises ValueError.
    """
    _check_index(n)
    _check_index(p, "p")
    if p == 0:
        if n == 0:
            raise ValueError("hyperharmonic(0, 0) is undefined (base level is 1/n)")
        return Fraction(1, n)
    with _lock:
        lst = _hyper.setdefault(p, [_ZERO])
        while len(lst) <= n:
            i = len(lst)
            lst.append(lst[-1] + hyperharmonic(i, p - 1))
        return lst[n]


def hyperharmonic_closed(n: int, p: int) -> Fraction:
    """Cross-check route for :func:`hyperharmonic`:
    value(n, p) = C(n+p-1, n) * (H_{n+p-1} - H_{p-1}) for p >= 1.
    """
    _check_index(n)
    _check_index(p, "p")
    if p == 0:
        if n == 0:
            raise ValueError("hyperharmonic(0, 0) is undefined (base level is 1/n)")
        return Fraction(1, n)
    return binomial(n + p - 1, n) * (harmonic(n + p - 1) - harmonic(p - 1))


def hyperharmonic_half(r: int, p: int) -> Fraction:
    """Hyperharmonic number of half-integer order p + 1/2, index r.

    Central-binomial form:
    2^(1-2r) * C(2p, p)^-1 * C(2(r+p), r+p) * C(r+p, r) * (O_{r+p} - O_p).
    """
    _check_index(r, "r")
    _check_index(p, "p")
    return (
        Fraction(2, 4**r)
        * Fraction(binomial(2 * (r + p), r + p), binomial(2 * p, p))
        * binomial(r + p, r)
        * (odd_harmonic(r + p) - odd_harmonic(p))
    )


def hyperharmonic_half_via_binomial(r: int, p: int) -> Fraction:
    """Independent route for :func:`hyperharmonic_half`:
    C(r+p-1/2, r) * 2 * (O_{r+p} - O_p), via the generalized binomial.
    """
    _check_index(r, "r")
    _check_index(p, "p")
    return gen_binomial(Fraction(2 * (r + p) - 1, 2), r) * 2 * (odd_harmonic(r + p) - odd_harmonic(p))


# ---------------------------------------------------------------------------
# Fibonacci / Lucas


_fibonacci: list[int] = [0, 1]
_lucas: list[int] = [2, 1]


def fibonacci(n: int) -> int:
    """F_n with F_0 = 0, F_1 = 1."""
    _check_index(n)
    with _lock:
        while len(_fibonacci) <= n:
            _fibonacci.append(_fibonacci[-1] + _fibonacci[-2])
        return _fibonacci[n]


def lucas(n: int) -> int:
    """L_n with L_0 = 2, L_1 = 1."""
    _check_index(n)
    with _lock:
        while len(_lucas) <= n:
            _lucas.append(_lucas[-1] + _lucas[-2])
        return _lucas[n]


# ---------------------------------------------------------------------------
# named families


@dataclass(frozen=True)
class _Family:
    name: str
    params: tuple[str, ...]
    evaluate: Callable[..., Fraction | int]
    validate: Callable[[Mapping[str, int]], str | None] = lambda params: None


def _require_nonneg(key: str) -> Callable[[Mapping[str, int]], str | None]:
    def check(params: Mapping[str, int]) -> str | None:
        if params[key] < 0:
            return f"parameter {key} must be >= 0"
        return None

    return check


_FAMILIES: dict[str, _Family] = {
    f.name: f
    for f in (
        _Family("harmonic", (), harmonic),
        _Family(
            "harmonic_order",
            ("r",),
            harmonic_order,
            lambda p: None if p["r"] >= 1 else "parameter r must be >= 1",
        ),
        _Family("odd_harmonic", (), odd_harmonic),
        _Family("harmonic_like", ("m",), harmonic_like, _require_nonneg("m")),
        _Family("stirling1", ("k",), stirling1, _require_nonneg("k")),
        _Family("hyperharmonic", ("p",), hyperharmonic, _require_nonneg("p")),
        _Family("hyperharmonic_half", ("p",), hyperharmonic_half, _require_nonneg("p")),
        _Family("fibonacci", (), fibonacci),
        _Family("lucas", (), lucas),
        _Family("half_harmonic_offset", (), half_harmonic_offset),
    )
}

#: Stable public vocabulary of sequence family names.
FAMILY_NAMES: tuple[str, ...] = tuple(_FAMILIES)


@dataclass(frozen=True)
class SeqSpec:
    """A named, parameterized sequence family with an evaluation contract.

    ``family`` must be one of :data:`FAMILY_NAMES`; ``params`` must supply
    exactly the parameters that family requires (e.g. ``m`` for
    ``harmonic_like``).  Evaluation at an index is deterministic and
    independent of call order.
    """

    family: str
    params: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        fam = _FAMILIES.get(self.family)
        if fam is None:
            raise ValueError(
                f"unknown sequence family {self.family!r}; known: {', '.join(FAMILY_NAMES)}"
            )
        object.__setattr__(self, "params", dict(self.params))
        missing = [p for p in fam.params if p not in self.params]
        extra = [p for p in self.params if p not in fam.params]
        if missing:
            raise ValueError(f"family {self.family!r} requires parameter(s): {', '.join(missing)}")
        if extra:
            raise ValueError(f"family {self.family!r} does not take: {', '.join(extra)}")
        problem = fam.validate(self.params)
        if problem:
            raise ValueError(f"family {self.family!r}: {problem}")

    def evaluate(self, n: int) -> Fraction | int:
        fam = _FAMILIES[self.family]
        return fam.evaluate(n, **{k: self.params[k] for k in fam.params})


def clear_caches() -> None:
    """Drop every memo table (cold-start state, mainly for tests)."""
    global _hlike, _stirling
    with _lock:
        del _harmonic[1:]
        del _odd_harmonic[1:]
        del _half_offset[1:]
        del _fibonacci[2:]
        del _lucas[2:]
        _harmonic_order.clear()
        _hyper.clear()
        _hlike = _HarmonicLikeTable()
        _stirling = _StirlingTable()
