"""FastAPI application exposing the analysis pipeline.

Run with `essgraph serve` or `uvicorn essgraph.service.app:app`.
"""

from __future__ import annotations

from typing import Literal

from fastapi import FastAPI, HTTPException, Query
from fastapi.responses import PlainTextResponse

from .. import __version__
from ..graphs import to_dot, to_edge_list
from ..ideals import DomainError, Factorization, factorize
from ..structure import build_aig_squarefree, build_essential_graph_bruteforce, build_host_graph, essential_graph_dot
from .schemas import (
    AnalyzeReport,
    ConnectivityInfo,
    SpectrumReport,
    VerifySummaryInfo,
    build_analyze_report,
    build_connectivity_info,
    build_spectrum_report,
    build_verify_summary,
)

MatrixKind = Literal["adjacency", "laplacian", "signless", "normalized"]
Scope = Literal["full", "subgraph"]
ExportWhat = Literal["graph", "host", "aig"]
ExportFormat = Literal["dot", "edgelist"]


def _factorize_or_400(n: int) -> Factorization:
    try:
        return factorize(n)
    except DomainError as exc:
        raise HTTPException(status_code=400, detail=str(exc))


def export_text(fact: Factorization, what: str, fmt: str = "dot") -> str:
    """Render one of the three graphs as DOT or a plain edge list."""
    if what == "graph":
        if fmt == "dot":
            return essential_graph_dot(fact)
        graph = build_essential_graph_bruteforce(fact)
        return to_edge_list(graph, label=lambda v: str(fact.generator(v)))
    if what == "host":
        if fact.k < 2:
            raise ValueError(f"n={fact.n} has a single prime factor; the host graph is empty")
        graph = build_host_graph(fact)
        label = lambda v: str(fact.generator(v))
    elif what == "aig":
        graph = build_aig_squarefree(fact.primes)
        label = str
    else:
        raise ValueError(f"unknown export target {what!r}")
    if fmt == "dot":
        return to_dot(graph, name=f"{what}_Z{fact.n}", label=label)
    return to_edge_list(graph, label=label)


def create_app() -> FastAPI:
    app = FastAPI(
        title="essgraph",
        version=__version__,
        description="Essential ideal graphs of Z_n: structure, spectra, and connectivity invariants.",
    )

    @app.get("/healthz")
    def healthz() -> dict:
        return {"status": "ok", "version": __version__}

    @app.get("/analyze/{n}", response_model=AnalyzeReport)
    def analyze(n: int, tolerance: float = Query(default=1e-8, gt=0)) -> AnalyzeReport:
        return build_analyze_report(_factorize_or_400(n), tolerance)

    @app.get("/spectra/{n}", response_model=SpectrumReport)
    def spectra(
        n: int,
        matrix: MatrixKind = "laplacian",
        scope: Scope = "subgraph",
        tolerance: float = Query(default=1e-8, gt=0),
    ) -> SpectrumReport:
        return build_spectrum_report(_factorize_or_400(n), matrix, scope, tolerance)

    @app.get("/connectivity/{n}", response_model=ConnectivityInfo)
    def connectivity(n: int, tolerance: float = Query(default=1e-8, gt=0)) -> ConnectivityInfo:
        return build_connectivity_info(_factorize_or_400(n), tolerance)

    @app.get("/verify", response_model=VerifySummaryInfo)
    def verify(
        lo: int = Query(ge=1),
        hi: int = Query(ge=1),
        tolerance: float = Query(default=1e-8, gt=0),
    ) -> VerifySummaryInfo:
        if hi < lo:
            raise HTTPException(status_code=400, detail="hi must be >= lo")
        return build_verify_summary(lo, hi, tolerance)

    @app.get("/export/{n}", response_class=PlainTextResponse)
    def export(n: int, what: ExportWhat = "graph", fmt: ExportFormat = "dot") -> str:
        try:
            return export_text(_factorize_or_400(n), what, fmt)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))

    return app


app = create_app()
