"""Dense symmetric eigensolver and eigenvalue-multiset bookkeeping.

The solver is a cyclic Jacobi iteration: sweeps of Givens rotations drive the
off-diagonal Frobenius norm below a fixed threshold.  Matrices at desk scale
stay in the low thousands, where Jacobi is simple, robust, and accurate to
near machine precision.  Eigenvalues are grouped into (value, multiplicity)
pairs with an absolute tolerance so algebraic multiplicities survive the
floating-point round trip.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

DEFAULT_GROUP_TOL = 1e-8
JACOBI_OFF_THRESHOLD = 1e-12
JACOBI_MAX_SWEEPS = 100


class EigensolverError(RuntimeError):
    """Jacobi iteration hit the sweep cap before reaching the threshold."""


@dataclass(frozen=True)
class Spectrum:
    """Sorted real eigenvalue multiset with tolerance-grouped multiplicities.

    entries are (eigenvalue, multiplicity) pairs, eigenvalues strictly
    descending after grouping.
    """

    entries: tuple[tuple[float, int], ...]
    tol: float = DEFAULT_GROUP_TOL

    @property
    def size(self) -> int:
        return sum(mult for _, mult in self.entries)

    def values(self) -> np.ndarray:
        """Expanded eigenvalues, descending, one slot per multiplicity."""
        return np.array([v for v, mult in self.entries for _ in range(mult)], dtype=float)

    def multiplicity_of(self, value: float, tol: float | None = None) -> int:
        t = self.tol if tol is None else tol
        return sum(mult for v, mult in self.entries if abs(v - value) <= t)

    @property
    def largest(self) -> float:
        if not self.entries:
            raise ValueError("empty spectrum")
        return self.entries[0][0]

    @property
    def smallest(self) -> float:
        if not self.entries:
            raise ValueError("empty spectrum")
        return self.entries[-1][0]

    def second_smallest(self) -> float:
        """Second entry of the expanded ascending list (counts multiplicity)."""
        vals = self.values()
        if vals.size < 2:
            raise ValueError("need at least two eigenvalues")
        return float(vals[-2])

    def total(self) -> float:
        return float(sum(v * mult for v, mult in self.entries))

    def __str__(self) -> str:
        return "{" + ", ".join(f"{v:.10g}^{mult}" if mult > 1 else f"{v:.10g}" for v, mult in self.entries) + "}"


def group_eigenvalues(values, tol: float = DEFAULT_GROUP_TOL) -> Spectrum:
    """Group a real eigenvalue multiset into a Spectrum.

    Values whose gap to the previous (ascending) value is <= tol fall into the
    same group; the group is reported at its mean.
    """
    vals = np.sort(np.asarray(list(values), dtype=float))
    if vals.size == 0:
        return Spectrum(entries=(), tol=tol)
    groups: list[list[float]] = [[float(vals[0])]]
    for v in vals[1:]:
        if float(v) - groups[-1][-1] <= tol:
            groups[-1].append(float(v))
        else:
            groups.append([float(v)])
    entries = tuple((sum(g) / len(g), len(g)) for g in reversed(groups))
    return Spectrum(entries=entries, tol=tol)


def _offdiag_norm(a: np.ndarray) -> float:
    # Summing off-diagonal squares directly avoids the catastrophic
    # cancellation of ||A||_F^2 - ||diag||_F^2 once the iteration converges.
    off = a.copy()
    np.fill_diagonal(off, 0.0)
    return float(np.linalg.norm(off))


def jacobi_eigenvalues(
    matrix,
    off_threshold: float = JACOBI_OFF_THRESHOLD,
    max_sweeps: int = JACOBI_MAX_SWEEPS,
) -> np.ndarray:
    """All eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi.

    Operates on a private copy.  Raises EigensolverError when the off-diagonal
    Frobenius norm is still above threshold after max_sweeps sweeps; that does
    not happen for symmetric input at the dimensions this package produces.
    """
    a = np.array(matrix, dtype=float, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"square matrix required, got shape {a.shape}")
    n = a.shape[0]
    if n == 0:
        return np.empty(0, dtype=float)
    if n == 1:
        return np.array([a[0, 0]], dtype=float)
    # Round-off keeps the off-diagonal norm above ~eps*||A||, so the requested
    # threshold is floored there for large-norm input.
    stop = max(off_threshold, 64.0 * np.finfo(float).eps * float(np.linalg.norm(a)))
    skip = stop / (2.0 * n)  # pivots this small cannot lift the off-norm above stop
    for _ in range(max_sweeps):
        if _offdiag_norm(a) <= stop:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= skip:
                    continue
                app, aqq = a[p, p], a[q, q]
                tau = (aqq - app) / (2.0 * apq)
                t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                rowp = a[p, :].copy()
                rowq = a[q, :].copy()
                a[p, :] = c * rowp - s * rowq
                a[q, :] = s * rowp + c * rowq
                colp = a[:, p].copy()
                colq = a[:, q].copy()
                a[:, p] = c * colp - s * colq
                a[:, q] = s * colp + c * colq
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = a[q, p] = 0.0
    else:
        if _offdiag_norm(a) > stop:
            raise EigensolverError(
                f"off-diagonal norm {_offdiag_norm(a):.3e} after {max_sweeps} sweeps (dimension {n})"
            )
    return np.sort(np.diag(a).copy())


def symmetric_eigenvalues(matrix, tol: float = DEFAULT_GROUP_TOL) -> Spectrum:
    """Spectrum of a symmetric matrix: Jacobi eigenvalues grouped at tol."""
    return group_eigenvalues(jacobi_eigenvalues(matrix), tol=tol)


def max_deviation(a: Spectrum, b: Spectrum) -> float:
    """Largest elementwise gap between two spectra as sorted multisets.

    Infinity when the total multiplicities differ.
    """
    va, vb = a.values(), b.values()
    if va.size != vb.size:
        return float("inf")
    if va.size == 0:
        return 0.0
    return float(np.max(np.abs(va - vb)))


def spectra_close(a: Spectrum, b: Spectrum, tol: float = DEFAULT_GROUP_TOL) -> bool:
    """Multiset equality of two spectra within an absolute tolerance."""
    return max_deviation(a, b) <= tol
