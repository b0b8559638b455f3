"""Pydantic request/response models for the HTTP service."""
from __future__ import annotations

from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field, model_validator

from .core import Algorithm


class AlgorithmName(str, Enum):
    """Wire names for the solvers; ``auto`` falls back on breakdown."""

    ptrans1 = "ptrans1"
    ptrans2 = "ptrans2"
    sptrans1 = "sptrans1"
    sptrans2 = "sptrans2"
    auto = "auto"


ALGORITHM_BY_NAME = {
    AlgorithmName.ptrans1: Algorithm.PTRANS1,
    AlgorithmName.ptrans2: Algorithm.PTRANS2,
    AlgorithmName.sptrans1: Algorithm.SPTRANS1,
    AlgorithmName.sptrans2: Algorithm.SPTRANS2,
}


class BandSystem(BaseModel):
    """A pentadiagonal system as explicit bands plus right-hand side.

    Bands may be given at natural length or padded to length n with their
    forced zeros, exactly as in the PENTA v1 text format.  ``backward``
    marks the bands as anti-bands (column-reversed layout).
    """

    d: list[float]
    a: list[float]
    b: list[float]
    c: list[float]
    e: list[float]
    y: list[float]
    backward: bool = False


class SolveRequest(BaseModel):
    """Solve request carrying either explicit bands or PENTA v1 text."""

    system: Optional[BandSystem] = None
    penta: Optional[str] = None
    algorithm: AlgorithmName = AlgorithmName.auto

    @model_validator(mode="after")
    def _exactly_one_source(self):
        if (self.system is None) == (self.penta is None):
            raise ValueError("provide exactly one of 'system' or 'penta'")
        return self


class SolveResponse(BaseModel):
    """Solution plus diagnostics.

    The ``*_exact`` and ``*_expressions`` fields are filled only by the
    symbolic algorithms: exact values as fraction strings, and the pivot /
    solution expressions in the rescue indeterminate ``p`` rendered by the
    stable grammar of ``format_ratfun``.  Numeric algorithms fill
    ``pivots`` instead.
    """

    algorithm: str
    n: int
    solution: list[float]
    determinant: float
    op_count: int
    rescued_indices: list[int] = Field(default_factory=list)
    near_zero_indices: list[int] = Field(default_factory=list)
    pivots: Optional[list[float]] = None
    solution_exact: Optional[list[str]] = None
    determinant_exact: Optional[str] = None
    pivot_expressions: Optional[list[str]] = None
    solution_expressions: Optional[list[str]] = None


class DeterminantRequest(BaseModel):
    system: Optional[BandSystem] = None
    penta: Optional[str] = None

    @model_validator(mode="after")
    def _exactly_one_source(self):
        if (self.system is None) == (self.penta is None):
            raise ValueError("provide exactly one of 'system' or 'penta'")
        return self


class DeterminantResponse(BaseModel):
    """Exact determinant (fraction string) with a float view of it."""

    determinant: float
    determinant_exact: str
    algorithm: str


class GenerateRequest(BaseModel):
    n: int


class GenerateResponse(BaseModel):
    n: int
    penta: str


class BenchRequest(BaseModel):
    sizes: list[int]
    algorithms: list[AlgorithmName] = Field(
        default_factory=lambda: [AlgorithmName.ptrans1, AlgorithmName.ptrans2])
    repeats: int = 1

    @model_validator(mode="after")
    def _no_auto(self):
        if AlgorithmName.auto in self.algorithms:
            raise ValueError("bench requires concrete algorithms, not 'auto'")
        return self


class BenchCell(BaseModel):
    max_abs_error: Optional[float] = None
    wall_time_seconds: Optional[float] = None
    op_count: Optional[int] = None
    error: Optional[str] = None


class BenchRowOut(BaseModel):
    n: int
    results: dict[str, BenchCell]


class BenchResponse(BaseModel):
    rows: list[BenchRowOut]


class HealthResponse(BaseModel):
    status: str = "ok"
    version: str
