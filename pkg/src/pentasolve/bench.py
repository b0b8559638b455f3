"""Benchmark harness over the built-in fourth-difference family.

For each requested order the system is generated once, then solved with
each requested algorithm.  The reported error is the max-abs distance from
the known all-ones solution; the wall time is a monotonic-clock measurement
around the solve call only (generation and I/O excluded), taking the best
of ``repeats`` runs to damp scheduler noise.  A solver failure marks its
cell and the run continues.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .backward import _SOLVERS
from .core import Algorithm, PentaError
from .systems import fourth_difference_system


@dataclass(frozen=True)
class AlgorithmResult:
    """One benchmark cell: either measurements or a failure marker."""

    max_abs_error: Optional[float] = None
    wall_time_seconds: Optional[float] = None
    op_count: Optional[int] = None
    error: Optional[str] = None


@dataclass(frozen=True)
class BenchRow:
    """Per-order benchmark results, keyed by algorithm name."""

    n: int
    results: dict[str, AlgorithmResult]


def _measure(solver, P, y, repeats: int) -> tuple:
    best = None
    report = None
    for _ in range(max(1, repeats)):
        start = time.perf_counter()
        report = solver(P, y)
        elapsed = time.perf_counter() - start
        if best is None or elapsed < best:
            best = elapsed
    return report, best


def run_benchmark(sizes: Sequence[int],
                  algorithms: Sequence[Union[Algorithm, str]] = (
                      Algorithm.PTRANS1, Algorithm.PTRANS2),
                  repeats: int = 1) -> list[BenchRow]:
    """Benchmark the requested algorithms on the fourth-difference family."""
    algorithms = [Algorithm(a) for a in algorithms]
    rows = []
    for n in sizes:
        P, y = fourth_difference_system(n)
        results: dict[str, AlgorithmResult] = {}
        for alg in algorithms:
            try:
                report, elapsed = _measure(_SOLVERS[alg], P, y, repeats)
            except PentaError as exc:
                results[alg.value] = AlgorithmResult(
                    error=f"{type(exc).__name__}: {exc}")
                continue
            err = max(abs(float(v) - 1.0) for v in report.solution)
            results[alg.value] = AlgorithmResult(
                max_abs_error=err,
                wall_time_seconds=elapsed,
                op_count=report.op_count,
            )
        rows.append(BenchRow(n=n, results=results))
    return rows
