"""The two numeric sweeps: pivots, solutions, determinants, op counts."""
import random
from fractions import Fraction as F

import pytest

from pentasolve.core import Algorithm, SingularMatrix, ZeroPivot
from pentasolve.oracle import DenseMatrix, dense_det, dense_solve
from pentasolve.ptrans import (determinant, determinant_with_method,
                               factor_ptrans1, factor_ptrans2, solve_ptrans1,
                               solve_ptrans2)

from conftest import (N4_BANDS, N4_DET, N4_PSI_EXACT, N4_Y, N10_BANDS,
                      N10_DET, N10_MU_EXACT, N10_PSI_EXACT, N10_SOLUTION,
                      N10_Y, build, make_singular_system, plant_zero_minor,
                      random_clean_system, random_dominant_system, y_exact,
                      y_float)


def test_factor_ptrans1_exact_pivots(n10_exact):
    fac = factor_ptrans1(n10_exact, y_exact(N10_Y))
    assert fac.mu == N10_MU_EXACT


def test_factor_ptrans1_identity(identity4):
    fac = factor_ptrans1(identity4, [5.0, 6.0, 7.0, 8.0])
    assert fac.mu == (1.0,) * 4
    assert fac.alpha == (0.0,) * 4
    assert fac.beta == (0.0,) * 4
    assert fac.gamma == (0.0,) * 4
    assert fac.z == (5.0, 6.0, 7.0, 8.0)


def test_factor_ptrans1_zero_pivot_index(n4):
    with pytest.raises(ZeroPivot) as excinfo:
        factor_ptrans1(n4, y_float(N4_Y))
    assert excinfo.value.index == 2


def test_factor_ptrans1_zero_pivot_in_exact_arithmetic(n4_exact):
    with pytest.raises(ZeroPivot) as excinfo:
        factor_ptrans1(n4_exact, y_exact(N4_Y))
    assert excinfo.value.index == 2


def test_factor_ptrans2_exact_pivots(n10_exact):
    fac = factor_ptrans2(n10_exact, y_exact(N10_Y))
    assert fac.psi == N10_PSI_EXACT


def test_factor_ptrans2_identity(identity4):
    fac = factor_ptrans2(identity4, [5.0, 6.0, 7.0, 8.0])
    assert fac.psi == (1.0,) * 4
    assert fac.sigma == (0.0,) * 4
    assert fac.phi == (0.0,) * 4
    assert fac.w == (5.0, 6.0, 7.0, 8.0)


def test_factor_ptrans2_n4_has_no_zero_pivot(n4_exact):
    fac = factor_ptrans2(n4_exact, y_exact(N4_Y))
    assert fac.psi == N4_PSI_EXACT


def _dense_mul(A, B):
    n = len(A)
    return [[sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)]


def test_ptrans1_factorization_reconstructs_the_system(n10_exact):
    # The sweep is row_i <- (row_i - e_i * new_{i-2} - gamma_i * new_{i-1})
    # / mu_i, so the lower factor carries (e, gamma, mu) and the unit upper
    # factor carries (alpha, beta); their product must restore P, and the
    # lower factor applied to z must restore y.
    y = y_exact(N10_Y)
    fac = factor_ptrans1(n10_exact, y)
    n = n10_exact.n
    zero = F(0)
    lower = [[zero] * n for _ in range(n)]
    upper = [[zero] * n for _ in range(n)]
    for i in range(n):
        lower[i][i] = fac.mu[i]
        if i >= 1:
            lower[i][i - 1] = fac.gamma[i]
        if i >= 2:
            lower[i][i - 2] = n10_exact.e[i]
        upper[i][i] = F(1)
        if i + 1 < n:
            upper[i][i + 1] = fac.alpha[i]
        if i + 2 < n:
            upper[i][i + 2] = fac.beta[i]
    assert _dense_mul(lower, upper) == n10_exact.to_dense()
    rebuilt_rhs = [sum(lower[i][j] * fac.z[j] for j in range(n))
                   for i in range(n)]
    assert rebuilt_rhs == y


def test_ptrans2_factorization_reconstructs_the_system(n10_exact):
    y = y_exact(N10_Y)
    fac = factor_ptrans2(n10_exact, y)
    n = n10_exact.n
    zero = F(0)
    upper = [[zero] * n for _ in range(n)]
    lower = [[zero] * n for _ in range(n)]
    for i in range(n):
        upper[i][i] = fac.psi[i]
        if i + 1 < n:
            upper[i][i + 1] = fac.rho[i]
        if i + 2 < n:
            upper[i][i + 2] = n10_exact.b[i]
        lower[i][i] = F(1)
        if i >= 1:
            lower[i][i - 1] = fac.sigma[i]
        if i >= 2:
            lower[i][i - 2] = fac.phi[i]
    assert _dense_mul(upper, lower) == n10_exact.to_dense()
    rebuilt_rhs = [sum(upper[i][j] * fac.w[j] for j in range(n))
                   for i in range(n)]
    assert rebuilt_rhs == y


def test_solve_ptrans1_reference_solution(n10):
    report = solve_ptrans1(n10, y_float(N10_Y))
    assert report.algorithm is Algorithm.PTRANS1
    assert max(abs(x - v) for x, v in zip(report.solution, N10_SOLUTION)) \
        <= 1e-10
    assert report.determinant == pytest.approx(N10_DET, rel=1e-10)
    assert report.rescued_indices == ()


def test_solve_ptrans2_reference_solution(n10):
    report = solve_ptrans2(n10, y_float(N10_Y))
    assert report.algorithm is Algorithm.PTRANS2
    assert max(abs(x - v) for x, v in zip(report.solution, N10_SOLUTION)) \
        <= 1e-10


def test_solves_are_exact_over_rationals(n10_exact):
    y = y_exact(N10_Y)
    assert list(solve_ptrans1(n10_exact, y).solution) == y_exact(N10_SOLUTION)
    assert list(solve_ptrans2(n10_exact, y).solution) == y_exact(N10_SOLUTION)


def test_solve_identity_returns_rhs(identity4):
    y = [5.0, 6.0, 7.0, 8.0]
    assert solve_ptrans1(identity4, y).solution == tuple(y)
    assert solve_ptrans2(identity4, y).solution == tuple(y)


def test_op_count_matches_the_affine_cost():
    rng = random.Random(5)
    for n in (4, 5, 8, 33, 100):
        P, y = random_dominant_system(rng, n)
        assert solve_ptrans1(P, y).op_count == 19 * n - 29
        assert solve_ptrans2(P, y).op_count == 19 * n - 29


def test_random_exact_systems_match_the_dense_oracle():
    rng = random.Random(88)
    for _ in range(30):
        n = rng.randint(4, 12)
        P, y = random_clean_system(rng, n)
        expected = dense_solve(DenseMatrix.from_penta(P), y)
        assert list(solve_ptrans1(P, y).solution) == expected
        assert list(solve_ptrans2(P, y).solution) == expected


def test_diagonally_dominant_8x8_matches_oracle_in_floats():
    rng = random.Random(12)
    P, y = random_dominant_system(rng, 8)
    expected = dense_solve(DenseMatrix.from_penta(P), y)
    got = solve_ptrans1(P, y).solution
    scale = max(abs(v) for v in expected)
    assert max(abs(g - w) for g, w in zip(got, expected)) <= 1e-10 * scale


def test_solver_equivalence_and_residual_on_float_systems():
    rng = random.Random(13)
    for n in (4, 7, 50, 400, 10_000):
        P, y = random_dominant_system(rng, n)
        r1 = solve_ptrans1(P, y)
        r2 = solve_ptrans2(P, y)
        assert max(abs(u - v) for u, v in zip(r1.solution, r2.solution)) \
            <= 1e-8 * max(abs(v) for v in r1.solution)
        from pentasolve.core import penta_matvec
        norm_y = max(abs(v) for v in y)
        for report in (r1, r2):
            residual = [lhs - rhs for lhs, rhs
                        in zip(penta_matvec(P, report.solution), y)]
            assert max(abs(v) for v in residual) <= 1e-10 * norm_y


def test_determinant_consistency_between_sweeps():
    rng = random.Random(99)
    for _ in range(20):
        n = rng.randint(4, 12)
        P, y = random_clean_system(rng, n)
        mu_det = determinant(P)
        fac2 = factor_ptrans2(P, y)
        psi_det = F(1)
        for v in fac2.psi:
            psi_det *= v
        assert mu_det == psi_det == dense_det(DenseMatrix.from_penta(P))


def test_determinant_reference_values(n10_exact, n4_exact, identity4):
    assert determinant(n10_exact) == N10_DET
    assert determinant(n4_exact) == N4_DET
    assert determinant(identity4) == 1.0


def test_circulated_renderings_agree_with_the_exact_values():
    # Two rounded fraction renderings of the n=10 determinant circulate
    # (one per pivot product); both must sit within 1e-3 of the true
    # integer value, as must the rounded renderings of the psi pivots.
    for rendering in (F(4989610795975, 4701708),
                      F(557494642026514353, 525327436055)):
        assert abs(rendering - N10_DET) <= F(1, 1000) * N10_DET
    psi_rendered = (F(-6213, 3613), F(1603, 1405), F(1487, 433),
                    F(-5173, 239), F(383, 156), F(988, 161), F(69, 11),
                    F(-77, 12), F(-3, 2), F(8))
    for got, rendered in zip(N10_PSI_EXACT, psi_rendered):
        assert abs(got - rendered) <= F(1, 1000) * abs(rendered)


def test_determinant_falls_back_when_the_first_sweep_breaks(n4_exact):
    value, method = determinant_with_method(n4_exact)
    assert value == N4_DET
    assert method is Algorithm.PTRANS2


def test_determinant_uses_the_symbolic_path_when_both_sweeps_break():
    # d4 = 0 kills the upward sweep at its first pivot; the shared zero
    # second leading minor kills the downward sweep.
    P = build(dict(d=(3, -2, -1, 0), a=(2, 7, 5), b=(1, 1),
                   c=(0, -3, 2, 2), e=(0, 0, 3, 1)), exact=True)
    with pytest.raises(ZeroPivot):
        factor_ptrans1(P, y_exact(N4_Y))
    with pytest.raises(ZeroPivot):
        factor_ptrans2(P, y_exact(N4_Y))
    value, method = determinant_with_method(P)
    assert method is Algorithm.SPTRANS1
    assert value == dense_det(DenseMatrix.from_penta(P))


def test_determinant_raises_only_for_a_confirmed_singular_matrix():
    rng = random.Random(4321)
    P, _ = make_singular_system(rng, 6, consistent=True)
    with pytest.raises(SingularMatrix):
        determinant(P)


def test_near_zero_pivot_is_flagged_not_fatal():
    tiny = 1e-310
    P = build(dict(d=(1.0, tiny, 1.0, 1.0), a=(0.0, 0.0, 0.0),
                   b=(0.0, 0.0), c=(0.0, 0.0, 0.0, 0.0),
                   e=(0.0, 0.0, 0.0, 0.0)))
    report = solve_ptrans1(P, [1.0, tiny, 1.0, 1.0])
    assert report.near_zero_indices == (2,)
    assert report.solution == (1.0, 1.0, 1.0, 1.0)


def test_zero_pivot_on_planted_leading_minors():
    rng = random.Random(777)
    for _ in range(10):
        n = rng.randint(4, 10)
        P, y = plant_zero_minor(rng, n)
        with pytest.raises(ZeroPivot):
            solve_ptrans1(P, y)
