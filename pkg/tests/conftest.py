"""Shared fixtures: reference systems, frozen exact values, fuzz generators.

The exact pivot vectors and determinants below were computed with the
dense rational oracle (see test_oracle.py) and are frozen here so every
module can assert against the same ground truth.
"""
from __future__ import annotations

import random
from fractions import Fraction as F
from pathlib import Path

import pytest

from pentasolve.core import PentaMatrix, penta_from_bands, penta_matvec
from pentasolve.oracle import DenseMatrix, dense_det
from pentasolve.ptrans import factor_ptrans1, factor_ptrans2

FIXTURE_DIR = Path(__file__).parent / "fixtures"

# 10x10 reference system, exact solution (1, 2, ..., 10).
N10_BANDS = dict(
    d=(1, 2, 3, -4, 5, 6, 7, -1, 1, 8),
    a=(2, 2, 1, 5, -7, 3, -1, 4, 5),
    b=(1, 5, -2, 1, 5, 2, 4, -3),
    c=(0, 3, 2, 1, 2, 1, 2, 1, -2, 4),
    e=(0, 0, 1, 3, 1, 5, 2, 2, 2, -1),
)
N10_Y = (8, 33, 8, 24, 29, 98, 99, 17, 57, 108)
N10_SOLUTION = tuple(range(1, 11))
N10_DET = 1061233
N10_MU_EXACT = (F(1), F(-4), F(2), F(-3, 8), F(27), F(245, 9),
                F(3289, 441), F(-14384, 16445), F(-5381, 899),
                F(1061233, 86096))
N10_PSI_EXACT = (F(-1061233, 617131), F(617131, 540904), F(270452, 78753),
                 F(-157506, 7277), F(383, 156), F(988, 161), F(69, 11),
                 F(-77, 12), F(-3, 2), F(8))

# 4x4 zero-pivot system, exact solution (1, 1, 1, 1), det 126.
N4_BANDS = dict(
    d=(3, -2, -1, 3),
    a=(2, 7, 5),
    b=(1, 1),
    c=(0, -3, 2, 2),
    e=(0, 0, 3, 1),
)
N4_Y = (6, 3, 9, 6)
N4_DET = 126
N4_PSI_EXACT = (F(21, 4), F(-24, 13), F(-13, 3), F(3))


def float_bands(bands: dict) -> dict:
    return {k: [float(v) for v in vs] for k, vs in bands.items()}


def exact_bands(bands: dict) -> dict:
    return {k: [F(v) for v in vs] for k, vs in bands.items()}


def build(bands: dict, exact: bool = False) -> PentaMatrix:
    conv = exact_bands if exact else float_bands
    return penta_from_bands(**conv(bands))


@pytest.fixture
def n10() -> PentaMatrix:
    return build(N10_BANDS)


@pytest.fixture
def n10_exact() -> PentaMatrix:
    return build(N10_BANDS, exact=True)


@pytest.fixture
def n4() -> PentaMatrix:
    return build(N4_BANDS)


@pytest.fixture
def n4_exact() -> PentaMatrix:
    return build(N4_BANDS, exact=True)


@pytest.fixture
def identity4() -> PentaMatrix:
    return penta_from_bands([1.0] * 4, [0.0] * 4, [0.0] * 4, [0.0] * 4,
                            [0.0] * 4)


def y_float(values) -> list:
    return [float(v) for v in values]


def y_exact(values) -> list:
    return [F(v) for v in values]


def random_exact_system(rng: random.Random, n: int,
                        lo: int = -9, hi: int = 9):
    """Random integer pentadiagonal system with exact scalars."""
    def vec(size):
        return [F(rng.randint(lo, hi)) for _ in range(size)]

    P = penta_from_bands(vec(n), vec(n - 1), vec(n - 2), vec(n - 1),
                         vec(n - 2))
    return P, vec(n)


def random_clean_system(rng: random.Random, n: int):
    """Random exact system on which both sweeps succeed and det is nonzero."""
    while True:
        P, y = random_exact_system(rng, n)
        try:
            factor_ptrans1(P, y)
            factor_ptrans2(P, y)
        except Exception:
            continue
        if dense_det(DenseMatrix.from_penta(P)) != 0:
            return P, y


def plant_zero_minor(rng: random.Random, n: int):
    """Random nonsingular exact system whose k-th leading minor vanishes.

    Rows k-1 and k are made proportional on the first k columns (their
    overhang into columns k+1, k+2 stays free), so elimination without row
    exchange must hit a zero pivot at or before position k while the full
    matrix stays nonsingular.
    """
    while True:
        P, y = random_exact_system(rng, n)
        k = rng.randint(2, n)
        lam = F(rng.choice([-3, -2, -1, 1, 2, 3]))
        r = k - 1
        d, a, b, c, e = (list(P.d), list(P.a), list(P.b), list(P.c),
                         list(P.e))
        if r - 1 >= 2:
            e[r - 1] = F(0)
        e[r] = lam * c[r - 1] if r >= 2 else F(0)
        c[r] = lam * d[r - 1]
        d[r] = lam * a[r - 1]
        planted = penta_from_bands(d, a, b, c, e)
        if dense_det(DenseMatrix.from_penta(planted)) == 0:
            continue
        return planted, y


def make_singular_system(rng: random.Random, n: int, consistent: bool):
    """Random exact singular system (last two rows proportional)."""
    P, _ = random_exact_system(rng, n)
    lam = F(rng.choice([-2, -1, 1, 2]))
    d, a, b, c, e = list(P.d), list(P.a), list(P.b), list(P.c), list(P.e)
    e[n - 2] = F(0)
    e[n - 1] = lam * c[n - 2]
    c[n - 1] = lam * d[n - 2]
    d[n - 1] = lam * a[n - 2]
    singular = penta_from_bands(d, a, b, c, e)
    x = [F(rng.randint(-5, 5)) for _ in range(n)]
    y = penta_matvec(singular, x)
    if not consistent:
        y[n - 1] = y[n - 1] + 1
    return singular, y


def random_dominant_system(rng: random.Random, n: int):
    """Random float system with a strongly dominant main diagonal."""
    a = [rng.uniform(-1, 1) for _ in range(n - 1)]
    b = [rng.uniform(-1, 1) for _ in range(n - 2)]
    c = [0.0] + [rng.uniform(-1, 1) for _ in range(n - 1)]
    e = [0.0, 0.0] + [rng.uniform(-1, 1) for _ in range(n - 2)]
    a_full = a + [0.0]
    b_full = b + [0.0, 0.0]
    d = []
    for k in range(n):
        offs = abs(c[k]) + abs(e[k]) + abs(a_full[k]) + abs(b_full[k])
        sign = 1.0 if rng.random() < 0.5 else -1.0
        d.append(sign * (offs + rng.uniform(1.0, 2.0)))
    P = penta_from_bands(d, a, b, c, e)
    y = [rng.uniform(-10, 10) for _ in range(n)]
    return P, y
