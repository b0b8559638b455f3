"""FastAPI service wrapping the solver package.

Errors surface as JSON ``{"detail": {"code", "message", ...}}`` payloads:
bad input (parse errors, invalid orders or bands) maps to HTTP 400, solver
breakdown to HTTP 422 with ``code`` one of ``zero_pivot`` (plus the 1-based
``index``), ``singular_matrix``, ``division_by_zero_function`` or
``degree_cap_exceeded``.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

from fastapi import FastAPI
from fastapi.responses import JSONResponse

from . import __version__
from .backward import BackwardPentaMatrix, reversal_sign, solve_backward
from .bench import run_benchmark
from .core import (Algorithm, DegreeCapExceeded, DivisionByZeroFunction,
                   InvalidOrder, ParseError, PentaError, PentaMatrix,
                   PoleAtZero, SingularMatrix, SolveReport, ZeroPivot,
                   penta_from_bands)
from .fileformat import format_penta, parse_penta
from .ptrans import determinant_with_method, solve_ptrans1, solve_ptrans2
from .schemas import (ALGORITHM_BY_NAME, AlgorithmName, BenchCell,
                      BenchRequest, BenchResponse, BenchRowOut,
                      DeterminantRequest, DeterminantResponse,
                      GenerateRequest, GenerateResponse, HealthResponse,
                      SolveRequest, SolveResponse)
from .symbolic import as_fraction, format_ratfun, sptrans1, sptrans2
from .systems import fourth_difference_system

app = FastAPI(
    title="pentasolve",
    version=__version__,
    description="Pentadiagonal linear system solvers with an exact "
                "symbolic rescue for zero-pivot breakdown.",
)

_ERROR_MAP = [
    (ParseError, "parse_error", 400),
    (InvalidOrder, "invalid_order", 400),
    (ZeroPivot, "zero_pivot", 422),
    (SingularMatrix, "singular_matrix", 422),
    (PoleAtZero, "singular_matrix", 422),
    (DivisionByZeroFunction, "division_by_zero_function", 422),
    (DegreeCapExceeded, "degree_cap_exceeded", 422),
]


@app.exception_handler(PentaError)
async def _penta_error_handler(request, exc: PentaError):
    code, status = "invalid_input", 400
    for klass, klass_code, klass_status in _ERROR_MAP:
        if isinstance(exc, klass):
            code, status = klass_code, klass_status
            break
    detail: dict = {"code": code, "message": str(exc)}
    if isinstance(exc, ZeroPivot):
        detail["index"] = exc.index
    return JSONResponse(status_code=status, content={"detail": detail})


def _to_float(value) -> float:
    if isinstance(value, float):
        return value
    try:
        return float(value)
    except OverflowError:
        return math.inf if value > 0 else -math.inf


System = Union[PentaMatrix, BackwardPentaMatrix]


def _float_system(req) -> tuple[System, list]:
    """The float-scalar system a request describes."""
    if req.penta is not None:
        doc = parse_penta(req.penta)
        return doc.system, list(doc.rhs)
    s = req.system
    P = penta_from_bands(s.d, s.a, s.b, s.c, s.e)
    system: System = BackwardPentaMatrix(P) if s.backward else P
    return system, list(s.y)


def _exact_system(req) -> tuple[System, list]:
    """The same system with exact scalars.

    PENTA text re-parses its decimal literals as fractions; explicit JSON
    bands arrive as floats and convert through their exact binary value.
    """
    if req.penta is not None:
        doc = parse_penta(req.penta, exact=True)
        return doc.system, list(doc.rhs)
    s = req.system
    bands = [[as_fraction(v) for v in band]
             for band in (s.d, s.a, s.b, s.c, s.e)]
    P = penta_from_bands(*bands)
    system = BackwardPentaMatrix(P) if s.backward else P
    return system, [as_fraction(v) for v in s.y]


def _dispatch(system: System, rhs: list, algorithm: Algorithm) -> SolveReport:
    if isinstance(system, BackwardPentaMatrix):
        return solve_backward(system, rhs, algorithm)
    solver = {
        Algorithm.PTRANS1: solve_ptrans1,
        Algorithm.PTRANS2: solve_ptrans2,
        Algorithm.SPTRANS1: sptrans1,
        Algorithm.SPTRANS2: sptrans2,
    }[algorithm]
    return solver(system, rhs)


def _solve_response(report: SolveReport, n: int) -> SolveResponse:
    base = dict(
        algorithm=report.algorithm.value,
        n=n,
        solution=[_to_float(v) for v in report.solution],
        determinant=_to_float(report.determinant),
        op_count=report.op_count,
        rescued_indices=list(report.rescued_indices),
        near_zero_indices=list(report.near_zero_indices),
    )
    if report.symbolic_solution is not None:
        return SolveResponse(
            **base,
            solution_exact=[str(v) for v in report.solution],
            determinant_exact=str(report.determinant),
            pivot_expressions=[format_ratfun(p) for p in report.pivots],
            solution_expressions=[format_ratfun(x)
                                  for x in report.symbolic_solution],
        )
    return SolveResponse(**base, pivots=[_to_float(v) for v in report.pivots])


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(version=__version__)


@app.post("/solve", response_model=SolveResponse,
          response_model_exclude_none=True)
def solve(req: SolveRequest) -> SolveResponse:
    """Solve a system with the requested algorithm.

    ``auto`` runs the float downward sweep and, if it breaks down on a
    zero pivot, falls back to the exact symbolic rescue.
    """
    if req.algorithm in (AlgorithmName.sptrans1, AlgorithmName.sptrans2):
        system, rhs = _exact_system(req)
        report = _dispatch(system, rhs, ALGORITHM_BY_NAME[req.algorithm])
        return _solve_response(report, system.n)
    if req.algorithm is AlgorithmName.auto:
        system, rhs = _float_system(req)
        try:
            report = _dispatch(system, rhs, Algorithm.PTRANS1)
        except ZeroPivot:
            system, rhs = _exact_system(req)
            report = _dispatch(system, rhs, Algorithm.SPTRANS1)
        return _solve_response(report, system.n)
    system, rhs = _float_system(req)
    report = _dispatch(system, rhs, ALGORITHM_BY_NAME[req.algorithm])
    return _solve_response(report, system.n)


@app.post("/determinant", response_model=DeterminantResponse)
def determinant_endpoint(req: DeterminantRequest) -> DeterminantResponse:
    """Exact determinant via the pivot-product fallback chain."""
    system, _ = _exact_system(req)
    if isinstance(system, BackwardPentaMatrix):
        value, method = determinant_with_method(system.forward)
        value = reversal_sign(system.n) * value
    else:
        value, method = determinant_with_method(system)
    return DeterminantResponse(
        determinant=_to_float(value),
        determinant_exact=str(value),
        algorithm=method.value,
    )


@app.post("/generate/example3", response_model=GenerateResponse)
def generate_example3(req: GenerateRequest) -> GenerateResponse:
    """PENTA v1 text for the fourth-difference family of the given order."""
    P, y = fourth_difference_system(req.n, exact=True)
    text = format_penta(P, y, comments=(
        f"fourth-difference family, n={req.n}; exact solution is all ones",))
    return GenerateResponse(n=req.n, penta=text)


@app.post("/bench", response_model=BenchResponse)
def bench(req: BenchRequest) -> BenchResponse:
    """Benchmark algorithms on the fourth-difference family."""
    for n in req.sizes:
        if n < 6:
            raise InvalidOrder(f"bench sizes must be >= 6, got {n}")
    rows = run_benchmark(
        req.sizes,
        [ALGORITHM_BY_NAME[a] for a in req.algorithms],
        repeats=req.repeats,
    )
    return BenchResponse(rows=[
        BenchRowOut(n=row.n, results={
            name: BenchCell(
                max_abs_error=cell.max_abs_error,
                wall_time_seconds=cell.wall_time_seconds,
                op_count=cell.op_count,
                error=cell.error,
            ) for name, cell in row.results.items()
        }) for row in rows
    ])
