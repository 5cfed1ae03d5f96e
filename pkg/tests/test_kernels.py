"""The two kernel backends must be interchangeable: same API, identical bits."""

import random
from fractions import Fraction

import pytest

from multiharm import _kernels
from multiharm._kernels import pure

speedups = pytest.importorskip("multiharm._kernels._speedups")


def _random_coeffs(rng, size, nonzero_head=False, unit_head=False):
    coeffs = [
        Fraction(rng.randint(-50, 50), rng.randint(1, 30)) for _ in range(size)
    ]
    if unit_head:
        coeffs[0] = Fraction(1)
    elif nonzero_head:
        while coeffs[0] == 0:
            coeffs[0] = Fraction(rng.randint(-50, 50), rng.randint(1, 30))
    return coeffs


def test_backend_name_is_sane():
    assert _kernels.BACKEND in ("pure", "compiled")
    assert pure.BACKEND == "pure"
    assert speedups.BACKEND == "compiled"


def test_cauchy_product_backends_agree():
    rng = random.Random(1)
    for _ in range(10):
        f = _random_coeffs(rng, rng.randint(1, 40))
        g = _random_coeffs(rng, rng.randint(1, 40))
        order = min(len(f), len(g)) - 1
        assert pure.cauchy_product(f, g, order) == speedups.cauchy_product(f, g, order)


def test_invert_series_backends_agree():
    rng = random.Random(2)
    for _ in range(10):
        f = _random_coeffs(rng, rng.randint(1, 40), nonzero_head=True)
        assert pure.invert_series(f) == speedups.invert_series(f)


def test_sqrt_series_backends_agree():
    rng = random.Random(3)
    for _ in range(10):
        f = _random_coeffs(rng, rng.randint(1, 40), unit_head=True)
        assert pure.sqrt_series(f) == speedups.sqrt_series(f)


def test_harmonic_like_levels_backends_agree():
    assert pure.harmonic_like_levels(30, 4) == speedups.harmonic_like_levels(30, 4)
    assert pure.harmonic_like_levels(0, 0) == speedups.harmonic_like_levels(0, 0) == [[Fraction(1)]]


def test_stirling1_rows_backends_agree():
    assert pure.stirling1_rows(40) == speedups.stirling1_rows(40)
    assert pure.stirling1_rows(0) == [[1]]


def test_invert_round_trip_at_kernel_level():
    rng = random.Random(4)
    f = _random_coeffs(rng, 25, nonzero_head=True)
    for backend in (pure, speedups):
        g = backend.invert_series(f)
        assert backend.cauchy_product(f, g, 24) == [Fraction(1)] + [Fraction(0)] * 24
