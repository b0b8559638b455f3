"""The two transformation solvers for pentadiagonal systems.

Both solvers eliminate the system in a single sweep and finish with one
substitution pass, never pivoting by row exchange:

* ``solve_ptrans1`` sweeps downward, producing a unit *upper* triangular
  system that is solved by backward substitution.  Its divisor sequence is
  the vector ``mu``.
* ``solve_ptrans2`` sweeps upward, producing a unit *lower* triangular
  system that is solved by forward substitution.  Its divisor sequence is
  the vector ``psi``.

Either solver is valid exactly when its divisors all come out nonzero; an
exactly-zero divisor raises :class:`~pentasolve.core.ZeroPivot`, which the
symbolic variants in :mod:`pentasolve.symbolic` know how to rescue.

The recurrences are written against abstract scalars, so the same code
runs on floats, on exact fractions, and on the rational functions used by
the rescue path.  Each solve costs ``19 n - 29`` scalar operations, which
the instrumented ``op_count`` in the report reproduces exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .core import (Algorithm, DimensionMismatch, PentaMatrix, SingularMatrix,
                   SolveReport, ZeroPivot)

#: Pivots smaller than this times the largest band magnitude are flagged
#: in the report as near-breakdown (floats only; exact scalars never are).
NEAR_ZERO_THRESHOLD = 1e-300


@dataclass(frozen=True)
class Ptrans1Factorization:
    """Vectors produced by the downward sweep.

    All five are stored at full length ``n`` with zeros in the positions
    the recurrences never define (``alpha[n-1]``, ``beta[n-2:]``,
    ``gamma[0]``), mirroring the band storage convention.
    """

    alpha: tuple
    beta: tuple
    z: tuple
    gamma: tuple
    mu: tuple


@dataclass(frozen=True)
class Ptrans2Factorization:
    """Vectors produced by the upward sweep.

    Stored at full length ``n`` with zeros in the undefined positions
    (``sigma[0]``, ``phi[0:2]``, ``rho[n-1]``).
    """

    sigma: tuple
    phi: tuple
    w: tuple
    rho: tuple
    psi: tuple


PivotHook = Callable[[int, object], object]


def _strict_pivot(index: int, value):
    if value == 0:
        raise ZeroPivot(index)
    return value


def _check_rhs(P: PentaMatrix, y: Sequence) -> None:
    if len(y) != P.n:
        raise DimensionMismatch(
            f"right-hand side has length {len(y)}, expected {P.n}")


def _eliminate_down(P: PentaMatrix, y: Sequence,
                    pivot: PivotHook) -> tuple[list, list, list, list, list, int]:
    """Downward elimination sweep; returns (alpha, beta, z, gamma, mu, ops).

    ``pivot(i, value)`` sees every divisor as it is produced (``i`` is the
    1-based row) and returns the value actually used, raising or
    substituting as the caller requires.

    The last two rows reuse the same recurrences as the interior rows: in
    particular ``z[n-2]`` consumes ``z[n-4]`` and ``z[n-3]``, and ``z[n-1]``
    consumes ``z[n-3]`` and ``z[n-2]``.  Only that indexing reproduces the
    worked n=10 system; shifting the tail to reuse ``z[n-2]`` twice does not.
    """
    n = P.n
    d, a, b, c, e = P.d, P.a, P.b, P.c, P.e
    zero = d[0] * 0
    alpha = [zero] * n
    beta = [zero] * n
    z = [zero] * n
    gamma = [zero] * n
    mu = [zero] * n

    mu[0] = pivot(1, d[0])
    alpha[0] = a[0] / mu[0]
    beta[0] = b[0] / mu[0]
    z[0] = y[0] / mu[0]
    gamma[1] = c[1]
    mu[1] = pivot(2, d[1] - alpha[0] * gamma[1])
    alpha[1] = (a[1] - beta[0] * gamma[1]) / mu[1]
    beta[1] = b[1] / mu[1]
    z[1] = (y[1] - z[0] * gamma[1]) / mu[1]
    ops = 12

    for k in range(2, n):
        gamma[k] = c[k] - alpha[k - 2] * e[k]
        mu[k] = pivot(k + 1, d[k] - beta[k - 2] * e[k] - alpha[k - 1] * gamma[k])
        ops += 6
        if k <= n - 2:
            alpha[k] = (a[k] - beta[k - 1] * gamma[k]) / mu[k]
            ops += 3
        if k <= n - 3:
            beta[k] = b[k] / mu[k]
            ops += 1
        z[k] = (y[k] - z[k - 2] * e[k] - z[k - 1] * gamma[k]) / mu[k]
        ops += 5

    return alpha, beta, z, gamma, mu, ops


def _back_substitute(alpha: Sequence, beta: Sequence,
                     z: Sequence) -> tuple[list, int]:
    """Solve the unit upper triangular system left by the downward sweep."""
    n = len(z)
    x = [None] * n
    x[n - 1] = z[n - 1]
    x[n - 2] = z[n - 2] - alpha[n - 2] * x[n - 1]
    for k in range(n - 3, -1, -1):
        x[k] = z[k] - alpha[k] * x[k + 1] - beta[k] * x[k + 2]
    return x, 2 + 4 * (n - 2)


def _eliminate_up(P: PentaMatrix, y: Sequence,
                  pivot: PivotHook) -> tuple[list, list, list, list, list, int]:
    """Upward elimination sweep; returns (sigma, phi, w, rho, psi, ops)."""
    n = P.n
    d, a, b, c, e = P.d, P.a, P.b, P.c, P.e
    zero = d[0] * 0
    sigma = [zero] * n
    phi = [zero] * n
    w = [zero] * n
    rho = [zero] * n
    psi = [zero] * n

    psi[n - 1] = pivot(n, d[n - 1])
    sigma[n - 1] = c[n - 1] / psi[n - 1]
    phi[n - 1] = e[n - 1] / psi[n - 1]
    w[n - 1] = y[n - 1] / psi[n - 1]
    rho[n - 2] = a[n - 2]
    psi[n - 2] = pivot(n - 1, d[n - 2] - sigma[n - 1] * rho[n - 2])
    sigma[n - 2] = (c[n - 2] - phi[n - 1] * rho[n - 2]) / psi[n - 2]
    phi[n - 2] = e[n - 2] / psi[n - 2]
    w[n - 2] = (y[n - 2] - w[n - 1] * rho[n - 2]) / psi[n - 2]
    ops = 12

    for k in range(n - 3, -1, -1):
        rho[k] = a[k] - sigma[k + 2] * b[k]
        psi[k] = pivot(k + 1, d[k] - phi[k + 2] * b[k] - sigma[k + 1] * rho[k])
        ops += 6
        if k >= 1:
            sigma[k] = (c[k] - phi[k + 1] * rho[k]) / psi[k]
            ops += 3
        if k >= 2:
            phi[k] = e[k] / psi[k]
            ops += 1
        w[k] = (y[k] - w[k + 2] * b[k] - w[k + 1] * rho[k]) / psi[k]
        ops += 5

    return sigma, phi, w, rho, psi, ops


def _forward_substitute(sigma: Sequence, phi: Sequence,
                        w: Sequence) -> tuple[list, int]:
    """Solve the unit lower triangular system left by the upward sweep."""
    n = len(w)
    x = [None] * n
    x[0] = w[0]
    x[1] = w[1] - sigma[1] * x[0]
    for k in range(2, n):
        x[k] = w[k] - sigma[k] * x[k - 1] - phi[k] * x[k - 2]
    return x, 2 + 4 * (n - 2)


def _product(values: Sequence):
    acc = values[0]
    for v in values[1:]:
        acc = acc * v
    return acc


def _near_zero_hook(P: PentaMatrix, warned: list[int],
                    threshold: float) -> PivotHook:
    """Strict pivot hook that also flags suspiciously small float pivots."""
    scale = max((abs(v) for band in (P.d, P.a, P.b, P.c, P.e) for v in band
                 if isinstance(v, float)), default=0.0)
    cutoff = threshold * scale

    def hook(index: int, value):
        if value == 0:
            raise ZeroPivot(index)
        if isinstance(value, float) and abs(value) < cutoff:
            warned.append(index)
        return value

    return hook


def factor_ptrans1(P: PentaMatrix, y: Sequence) -> Ptrans1Factorization:
    """Run the downward sweep, raising :class:`ZeroPivot` on breakdown."""
    _check_rhs(P, y)
    alpha, beta, z, gamma, mu, _ = _eliminate_down(P, y, _strict_pivot)
    return Ptrans1Factorization(tuple(alpha), tuple(beta), tuple(z),
                                tuple(gamma), tuple(mu))


def factor_ptrans2(P: PentaMatrix, y: Sequence) -> Ptrans2Factorization:
    """Run the upward sweep, raising :class:`ZeroPivot` on breakdown."""
    _check_rhs(P, y)
    sigma, phi, w, rho, psi, _ = _eliminate_up(P, y, _strict_pivot)
    return Ptrans2Factorization(tuple(sigma), tuple(phi), tuple(w),
                                tuple(rho), tuple(psi))


def _finish(solution, pivots, ops, algorithm, warned) -> SolveReport:
    det = _product(pivots)
    # Every pivot was checked nonzero, so on exact scalar types the product
    # cannot vanish; a zero here is float underflow of a provably nonzero
    # determinant and is recorded as-is rather than raised.
    if det == 0 and not isinstance(det, float):
        raise SingularMatrix("zero determinant")
    return SolveReport(
        solution=tuple(solution),
        pivots=tuple(pivots),
        determinant=det,
        op_count=ops,
        rescued_indices=(),
        algorithm=algorithm,
        near_zero_indices=tuple(warned),
    )


def solve_ptrans1(P: PentaMatrix, y: Sequence, *,
                  near_zero_threshold: float = NEAR_ZERO_THRESHOLD) -> SolveReport:
    """Solve ``P x = y`` by the downward sweep plus backward substitution."""
    _check_rhs(P, y)
    warned: list[int] = []
    hook = _near_zero_hook(P, warned, near_zero_threshold)
    alpha, beta, z, _, mu, ops1 = _eliminate_down(P, y, hook)
    x, ops2 = _back_substitute(alpha, beta, z)
    return _finish(x, mu, ops1 + ops2, Algorithm.PTRANS1, warned)


def solve_ptrans2(P: PentaMatrix, y: Sequence, *,
                  near_zero_threshold: float = NEAR_ZERO_THRESHOLD) -> SolveReport:
    """Solve ``P x = y`` by the upward sweep plus forward substitution."""
    _check_rhs(P, y)
    warned: list[int] = []
    hook = _near_zero_hook(P, warned, near_zero_threshold)
    sigma, phi, w, _, psi, ops1 = _eliminate_up(P, y, hook)
    x, ops2 = _forward_substitute(sigma, phi, w)
    return _finish(x, psi, ops1 + ops2, Algorithm.PTRANS2, warned)


def _zero_rhs(P: PentaMatrix) -> list:
    zero = P.d[0] * 0
    return [zero] * P.n


def determinant_with_method(P: PentaMatrix):
    """Determinant via the pivot products, with the path that produced it.

    Tries the downward sweep first, then the upward sweep, then the exact
    symbolic rescue.  Raises :class:`SingularMatrix` only when the rescue
    path confirms the determinant is exactly zero.
    """
    try:
        return _product(factor_ptrans1(P, _zero_rhs(P)).mu), Algorithm.PTRANS1
    except ZeroPivot:
        pass
    try:
        return _product(factor_ptrans2(P, _zero_rhs(P)).psi), Algorithm.PTRANS2
    except ZeroPivot:
        pass
    from .symbolic import symbolic_determinant

    det = symbolic_determinant(P)
    if det == 0:
        raise SingularMatrix("all paths confirm a zero determinant")
    if isinstance(P.d[0], float):
        det = float(det)
    return det, Algorithm.SPTRANS1


def determinant(P: PentaMatrix):
    """Determinant of the matrix as the product of elimination pivots."""
    value, _ = determinant_with_method(P)
    return value
