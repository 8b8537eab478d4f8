"""Pydantic request/response models and the builders that fill them.

Spectrum reports carry both routes: the closed-form decomposition (fixed part
plus quotient spectrum) and the brute-force eigensolve, with their agreement
and maximum deviation.  Full-graph reports cross-check the structurally
assembled graph against the definitional one instead, and for the Laplacian
the join formula supplies a fully closed-form route.
"""

from __future__ import annotations

from math import isinf

from pydantic import BaseModel

from ..connectivity import ConnectivityReport, classify
from ..eigen import DEFAULT_GROUP_TOL, Spectrum, group_eigenvalues, jacobi_eigenvalues, max_deviation
from ..graphs import graph_spectrum, join_laplacian_spectrum
from ..ideals import Factorization, essential_count, total_ideal_count
from ..spectra import (
    class_weights,
    fixed_spectrum_part,
    is_laplacian_integral,
    quotient_matrix,
    spectrum_bruteforce,
    spectrum_via_theorem,
)
from ..structure import assemble_structured, class_partition, verify_structure
from ..verify import verify_range


class SpectrumEntry(BaseModel):
    value: float
    multiplicity: int


class SpectrumReport(BaseModel):
    n: int
    kind: str
    scope: str
    entries: list[SpectrumEntry]
    fixed_part: list[SpectrumEntry] | None
    quotient_part: list[SpectrumEntry] | None
    agreement: bool
    max_abs_deviation: float | None


class FactorizationInfo(BaseModel):
    n: int
    primes: list[int]
    exponents: list[int]


class ClassRow(BaseModel):
    saturated: list[int]
    representative: int
    size: int
    neighbor_weight: int
    members: list[int]


class StructureInfo(BaseModel):
    equal: bool
    clique_order: int
    class_count: int
    host_edges: int | None
    assembled_edges: int
    bruteforce_edges: int


class IntegralityInfo(BaseModel):
    integral: bool
    integer_spectrum: list[int] | None
    offending: float | None
    determinant_checks: list[tuple[int, int]]


class ConnectivityInfo(BaseModel):
    n: int
    T: int
    clique_order: int
    eta: int | None
    spectral_radius: float
    algebraic_connectivity: float
    kappa_formula: int
    kappa_maxflow: int
    complement_connected: bool
    b_equals_T: bool
    case: str
    a_vs_kappa: str


class AnalyzeReport(BaseModel):
    n: int
    factorization: FactorizationInfo
    total_ideals: int
    clique_order: int
    classes: list[ClassRow]
    structure: StructureInfo
    spectra: list[SpectrumReport]
    connectivity: ConnectivityInfo
    laplacian_integral: IntegralityInfo


class VerifyFailureInfo(BaseModel):
    n: int
    check: str
    detail: str


class VerifySummaryInfo(BaseModel):
    lo: int
    hi: int
    checked: int
    skipped: int
    all_passed: bool
    failures: list[VerifyFailureInfo]


def _entries(spec: Spectrum) -> list[SpectrumEntry]:
    return [SpectrumEntry(value=v, multiplicity=mult) for v, mult in spec.entries]


def _structured_full_spectrum(fact: Factorization, kind: str, tol: float) -> Spectrum:
    """Full-graph spectrum by a route independent of the definitional build.

    Laplacian: clique spectrum joined onto the theorem subgraph spectrum, all
    closed form except the quotient eigensolve.  Other kinds: eigensolve of
    the structurally assembled graph.
    """
    t = total_ideal_count(fact)
    m = essential_count(fact)
    if kind == "laplacian":
        if fact.k == 1:
            return group_eigenvalues([0.0] + [float(t)] * (t - 1), tol=tol)
        sub = spectrum_via_theorem(fact, kind, tol)
        if m == 0:
            return sub
        clique = group_eigenvalues([0.0] + [float(m)] * (m - 1), tol=tol)
        return join_laplacian_spectrum(clique, m, sub, t - m, tol=tol)
    return graph_spectrum(assemble_structured(fact), kind, tol=tol)


def build_spectrum_report(
    fact: Factorization, kind: str, scope: str = "subgraph", tol: float = DEFAULT_GROUP_TOL
) -> SpectrumReport:
    brute = spectrum_bruteforce(fact, kind, scope=scope, tol=tol)
    if scope == "subgraph":
        structured = spectrum_via_theorem(fact, kind, tol)
        if fact.k >= 2:
            fixed = group_eigenvalues(fixed_spectrum_part(fact, kind), tol=tol)
            quotient = group_eigenvalues(jacobi_eigenvalues(quotient_matrix(fact, kind)), tol=tol)
            fixed_part, quotient_part = _entries(fixed), _entries(quotient)
        else:
            fixed_part, quotient_part = [], []
    else:
        structured = _structured_full_spectrum(fact, kind, tol)
        fixed_part = quotient_part = None
    dev = max_deviation(structured, brute)
    return SpectrumReport(
        n=fact.n,
        kind=kind,
        scope=scope,
        entries=_entries(brute),
        fixed_part=fixed_part,
        quotient_part=quotient_part,
        agreement=dev <= tol,
        max_abs_deviation=None if isinf(dev) else dev,
    )


def build_connectivity_info(fact: Factorization, tol: float = DEFAULT_GROUP_TOL) -> ConnectivityInfo:
    return connectivity_info_from_report(classify(fact, tol))


def connectivity_info_from_report(report: ConnectivityReport) -> ConnectivityInfo:
    return ConnectivityInfo(
        n=report.n,
        T=report.T,
        clique_order=report.clique_order,
        eta=report.eta,
        spectral_radius=report.spectral_radius,
        algebraic_connectivity=report.algebraic_connectivity,
        kappa_formula=report.kappa_formula,
        kappa_maxflow=report.kappa_maxflow,
        complement_connected=report.complement_connected,
        b_equals_T=report.b_equals_T,
        case=report.case_label,
        a_vs_kappa=report.a_vs_kappa,
    )


def build_analyze_report(fact: Factorization, tol: float = DEFAULT_GROUP_TOL) -> AnalyzeReport:
    part = class_partition(fact)
    rows: list[ClassRow] = []
    if fact.k >= 2:
        weights = class_weights(fact)
        for cls, nw in zip(part.classes, weights.neighbor_weights):
            rows.append(
                ClassRow(
                    saturated=sorted(cls.key),
                    representative=fact.generator(cls.representative),
                    size=cls.size,
                    neighbor_weight=nw,
                    members=[fact.generator(v) for v in cls.members],
                )
            )
    report = verify_structure(fact)
    structure = StructureInfo(
        equal=report.equal,
        clique_order=report.clique_order,
        class_count=len(part.classes),
        host_edges=None if report.host is None else report.host.size,
        assembled_edges=report.assembled.size,
        bruteforce_edges=report.bruteforce.size,
    )
    cert = is_laplacian_integral(fact)
    return AnalyzeReport(
        n=fact.n,
        factorization=FactorizationInfo(
            n=fact.n, primes=list(fact.primes), exponents=list(fact.exponents)
        ),
        total_ideals=total_ideal_count(fact),
        clique_order=essential_count(fact),
        classes=rows,
        structure=structure,
        spectra=[build_spectrum_report(fact, kind, "subgraph", tol) for kind in
                 ("adjacency", "laplacian", "signless", "normalized")],
        connectivity=build_connectivity_info(fact, tol),
        laplacian_integral=IntegralityInfo(
            integral=cert.integral,
            integer_spectrum=None if cert.integer_spectrum is None else list(cert.integer_spectrum),
            offending=cert.offending,
            determinant_checks=[(c, d) for c, d in cert.determinant_checks],
        ),
    )


def build_verify_summary(lo: int, hi: int, tol: float = DEFAULT_GROUP_TOL) -> VerifySummaryInfo:
    summary = verify_range(lo, hi, tol)
    return VerifySummaryInfo(
        lo=summary.lo,
        hi=summary.hi,
        checked=summary.checked,
        skipped=summary.skipped,
        all_passed=summary.all_passed,
        failures=[VerifyFailureInfo(n=f.n, check=f.check, detail=f.detail) for f in summary.failures],
    )
