"""Spectral radius, algebraic connectivity, and vertex connectivity of the graph.

Everything here runs on the full essential ideal graph.  The spectral radius
is bounded by the vertex count T with equality exactly when the complement is
disconnected; the vertex connectivity has a closed piecewise form which the
max-flow computation cross-validates; the relation between algebraic and
vertex connectivity splits by the shape of the factorization.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import prod

from .eigen import DEFAULT_GROUP_TOL, Spectrum
from .graphs import complement, is_connected, vertex_connectivity
from .ideals import Factorization, essential_count, total_ideal_count
from .spectra import spectrum_bruteforce
from .structure import build_essential_graph_bruteforce

CASE_PRIME_POWER = "prime-power"
CASE_SQUAREFREE_K2 = "squarefree-k2"
CASE_SQUAREFREE_K3 = "squarefree-k>=3"
CASE_MIXED = "mixed"

A_VS_KAPPA_EQUAL = "equal"
A_VS_KAPPA_LESS = "strict-less"
A_VS_KAPPA_NA = "not-applicable"


@dataclass(frozen=True)
class ConnectivityReport:
    """All connectivity invariants of one modulus, with consistency cross-checks."""

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
    case_label: str
    a_vs_kappa: str


def full_laplacian_spectrum(fact: Factorization, tol: float = DEFAULT_GROUP_TOL) -> Spectrum:
    return spectrum_bruteforce(fact, "laplacian", scope="full", tol=tol)


def spectral_radius(fact: Factorization, tol: float = DEFAULT_GROUP_TOL) -> float:
    """Largest Laplacian eigenvalue of the full graph."""
    return full_laplacian_spectrum(fact, tol).largest


def algebraic_connectivity(fact: Factorization, tol: float = DEFAULT_GROUP_TOL) -> float:
    """Second-smallest Laplacian eigenvalue; 0 for the single-vertex graph."""
    if total_ideal_count(fact) < 2:
        return 0.0
    return full_laplacian_spectrum(fact, tol).second_smallest()


@lru_cache(maxsize=None)
def complement_connected(fact: Factorization) -> bool:
    """Whether the complement of the essential ideal graph is connected (by traversal)."""
    return is_connected(complement(build_essential_graph_bruteforce(fact)))


def complement_connected_formula(fact: Factorization) -> bool:
    """Closed form for complement connectivity.

    Squarefree n with k >= 3 is the generic connected case.  T = 1 (n = p^2)
    is the single-vertex graph whose complement is trivially connected; the
    generic closed form presumes at least two vertices, so the degenerate case
    is carved out explicitly.
    """
    squarefree = all(m == 1 for m in fact.exponents)
    return (squarefree and fact.k >= 3) or total_ideal_count(fact) == 1


def spectral_radius_attains_bound(fact: Factorization) -> bool:
    """Closed form for b = T: prime powers p^t with t > 2, products of two
    distinct primes, and any k >= 2 with a repeated prime factor."""
    k = fact.k
    ms = fact.exponents
    if k == 1:
        return ms[0] > 2
    if all(m == 1 for m in ms):
        return k == 2
    return True


def eta_value(fact: Factorization) -> int | None:
    """Smallest single-prime class size: min over j of prod of the other exponents.

    None for k = 1, where no nonessential classes exist.
    """
    if fact.k == 1:
        return None
    ms = fact.exponents
    return min(prod(ms[i] for i in range(fact.k) if i != j) for j in range(fact.k))


def kappa_formula(fact: Factorization) -> int:
    """Closed-form vertex connectivity of the essential ideal graph.

    Prime powers give a complete graph (T - 1); squarefree moduli with several
    primes have cut vertices at the prime ideals (1); otherwise the minimum
    cut takes the essential clique plus the smallest single-prime class.
    """
    if fact.k == 1:
        return total_ideal_count(fact) - 1
    if all(m == 1 for m in fact.exponents):
        return 1
    eta = eta_value(fact)
    assert eta is not None
    return essential_count(fact) + eta


def kappa_maxflow(fact: Factorization) -> int:
    return vertex_connectivity(build_essential_graph_bruteforce(fact))


def case_label(fact: Factorization) -> str:
    if fact.k == 1:
        return CASE_PRIME_POWER
    if all(m == 1 for m in fact.exponents):
        return CASE_SQUAREFREE_K2 if fact.k == 2 else CASE_SQUAREFREE_K3
    return CASE_MIXED


def classify(fact: Factorization, tol: float = DEFAULT_GROUP_TOL) -> ConnectivityReport:
    """Full connectivity report with internal consistency enforced.

    Raises RuntimeError when any cross-check fails (formula vs max-flow kappa,
    the three-way spectral-radius-bound agreement, or the decided
    algebraic-vs-vertex connectivity cases); those are theorems, so a failure
    means an implementation bug.
    """
    t = total_ideal_count(fact)
    b = spectral_radius(fact, tol)
    a = algebraic_connectivity(fact, tol)
    kf = kappa_formula(fact)
    km = kappa_maxflow(fact)
    compl = complement_connected(fact)
    b_eq = abs(b - t) <= tol
    case = case_label(fact)

    if kf != km:
        raise RuntimeError(f"n={fact.n}: kappa formula {kf} != max-flow {km}")
    if b > t + tol:
        raise RuntimeError(f"n={fact.n}: spectral radius {b} exceeds vertex count {t}")
    if t >= 2 and b_eq == compl:
        raise RuntimeError(f"n={fact.n}: b = T must coincide with a disconnected complement")
    if b_eq != spectral_radius_attains_bound(fact):
        raise RuntimeError(f"n={fact.n}: b = T disagrees with the closed-form case list")
    if compl != complement_connected_formula(fact):
        raise RuntimeError(f"n={fact.n}: complement connectivity disagrees with the closed form")

    graph_complete = fact.k == 1 or (fact.k == 2 and all(m == 1 for m in fact.exponents))
    if t < 2 or graph_complete:
        a_vs = A_VS_KAPPA_NA
    elif abs(a - km) <= tol:
        a_vs = A_VS_KAPPA_EQUAL
    else:
        if a > km + tol:
            raise RuntimeError(f"n={fact.n}: algebraic connectivity {a} above vertex connectivity {km}")
        a_vs = A_VS_KAPPA_LESS

    if case == CASE_SQUAREFREE_K3 and a_vs != A_VS_KAPPA_LESS:
        raise RuntimeError(f"n={fact.n}: squarefree k>=3 must have a < kappa")
    if case == CASE_MIXED and fact.k == 2:
        ms = fact.exponents
        if a_vs != A_VS_KAPPA_EQUAL:
            raise RuntimeError(f"n={fact.n}: two-prime moduli with a square must have a = kappa")
        if abs(a - (t - max(ms))) > tol or kf != essential_count(fact) + min(ms):
            raise RuntimeError(f"n={fact.n}: closed forms for a and kappa broke")

    return ConnectivityReport(
        n=fact.n,
        T=t,
        clique_order=essential_count(fact),
        eta=eta_value(fact),
        spectral_radius=b,
        algebraic_connectivity=a,
        kappa_formula=kf,
        kappa_maxflow=km,
        complement_connected=compl,
        b_equals_T=b_eq,
        case_label=case,
        a_vs_kappa=a_vs,
    )


CSV_HEADER = "n,T,m,eta,b,a,kappa,case,b_eq_T,a_vs_k"


def report_csv_row(report: ConnectivityReport) -> str:
    eta = "" if report.eta is None else str(report.eta)
    return (
        f"{report.n},{report.T},{report.clique_order},{eta},"
        f"{report.spectral_radius:.10g},{report.algebraic_connectivity:.10g},"
        f"{report.kappa_maxflow},{report.case_label},"
        f"{str(report.b_equals_T).lower()},{report.a_vs_kappa}"
    )
