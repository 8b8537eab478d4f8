"""Cross-validation sweeps: every closed form against its independent oracle.

For each composite modulus the sweep checks structural equality of the two
graph constructions, agreement of all four theorem spectra with brute-force
eigensolves, the vertex-connectivity formula against max-flow, the three-way
spectral-radius-bound classification, and the host-to-annihilating-ideal-graph
isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass

from .connectivity import classify
from .eigen import DEFAULT_GROUP_TOL, max_deviation
from .graphs import MATRIX_KINDS
from .ideals import DomainError, Factorization, factorize
from .spectra import spectrum_bruteforce, spectrum_via_theorem
from .structure import host_aig_isomorphism, verify_structure


@dataclass(frozen=True)
class CheckFailure:
    n: int
    check: str
    detail: str


@dataclass(frozen=True)
class VerifySummary:
    lo: int
    hi: int
    checked: int
    skipped: int
    failures: tuple[CheckFailure, ...]

    @property
    def all_passed(self) -> bool:
        return not self.failures


def verify_single(fact: Factorization, tol: float = DEFAULT_GROUP_TOL) -> list[CheckFailure]:
    """Run every cross-check for one modulus; an empty list means all passed."""
    failures: list[CheckFailure] = []
    n = fact.n

    report = verify_structure(fact)
    if not report.equal:
        failures.append(CheckFailure(n, "structure", "assembled and definitional edge sets differ"))

    for kind in MATRIX_KINDS:
        theorem = spectrum_via_theorem(fact, kind, tol)
        brute = spectrum_bruteforce(fact, kind, scope="subgraph", tol=tol)
        dev = max_deviation(theorem, brute)
        if not dev <= tol:
            failures.append(CheckFailure(n, f"spectrum-{kind}", f"max deviation {dev:.3e}"))

    try:
        conn = classify(fact, tol)
    except RuntimeError as exc:
        failures.append(CheckFailure(n, "connectivity", str(exc)))
        conn = None
    if conn is not None and conn.kappa_formula != conn.kappa_maxflow:
        failures.append(
            CheckFailure(n, "kappa", f"formula {conn.kappa_formula} != max-flow {conn.kappa_maxflow}")
        )

    if fact.k >= 2:
        _, ok = host_aig_isomorphism(fact)
        if not ok:
            failures.append(CheckFailure(n, "host-isomorphism", "host-to-annihilating-graph map failed verification"))

    return failures


def verify_range(lo: int, hi: int, tol: float = DEFAULT_GROUP_TOL) -> VerifySummary:
    """Sweep every composite n in [lo, hi]; primes and n < 4 are counted as skipped."""
    checked = 0
    skipped = 0
    failures: list[CheckFailure] = []
    for n in range(lo, hi + 1):
        try:
            fact = factorize(n)
        except DomainError:
            skipped += 1
            continue
        checked += 1
        failures.extend(verify_single(fact, tol))
    return VerifySummary(lo=lo, hi=hi, checked=checked, skipped=skipped, failures=tuple(failures))
