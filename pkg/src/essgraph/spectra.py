"""Spectra of the nonessential induced subgraph via class quotient matrices.

The class partition is equitable, so each of the four matrices of the
nonessential subgraph decomposes into a fixed part with closed-form
multiplicities plus the spectrum of a small quotient matrix over the classes.
A brute-force route (build the graph, eigensolve the matrix) cross-validates
every theorem spectrum.  The vertex-weighted class Laplacian is an integer
matrix similar to the Laplacian quotient; integer determinant checks on it
certify Laplacian integrality exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .eigen import DEFAULT_GROUP_TOL, Spectrum, group_eigenvalues, symmetric_eigenvalues
from .graphs import MATRIX_KINDS, matrix_for
from .ideals import Factorization, essential_count, nonessential_ideals, total_ideal_count
from .structure import build_essential_graph_bruteforce, class_partition

SCOPES = ("full", "subgraph")


@dataclass(frozen=True)
class ClassWeights:
    """Per-class sizes and neighbor weights, in class order.

    sizes[i] is the number of ideals in class i; neighbor_weights[i] is the
    total size of the classes adjacent to it in the host (disjoint index sets).
    Host connectivity makes every neighbor weight positive.
    """

    fact: Factorization
    keys: tuple[frozenset[int], ...]
    sizes: tuple[int, ...]
    neighbor_weights: tuple[int, ...]


@lru_cache(maxsize=None)
def class_weights(fact: Factorization) -> ClassWeights:
    if fact.k < 2:
        raise ValueError("class weights need k >= 2 prime factors")
    part = class_partition(fact)
    keys = tuple(c.key for c in part.classes)
    sizes = tuple(c.size for c in part.classes)
    neighbor = tuple(
        sum(s for other, s in zip(keys, sizes) if not (key & other))
        for key in keys
    )
    return ClassWeights(fact=fact, keys=keys, sizes=sizes, neighbor_weights=neighbor)


def quotient_matrix(fact: Factorization, kind: str, positive_normalized: bool = False) -> np.ndarray:
    """Class quotient matrix of the requested kind; dimension 2^k - 2.

    Off-diagonal entries live only between host-adjacent classes and carry
    sqrt(size_i * size_j), signed and scaled per kind.  positive_normalized
    flips the sign of the normalized kind's off-diagonal; it exists only so
    the sign convention can be machine-checked against the brute-force route
    (the positive variant does not reproduce the graph spectrum).
    """
    if kind not in MATRIX_KINDS:
        raise ValueError(f"unknown matrix kind {kind!r}; expected one of {MATRIX_KINDS}")
    w = class_weights(fact)
    d = len(w.keys)
    mat = np.zeros((d, d))
    for i in range(d):
        for j in range(i + 1, d):
            if w.keys[i] & w.keys[j]:
                continue
            root = np.sqrt(w.sizes[i] * w.sizes[j])
            if kind == "adjacency":
                val = root
            elif kind == "laplacian":
                val = -root
            elif kind == "signless":
                val = root
            else:
                val = root / np.sqrt(w.neighbor_weights[i] * w.neighbor_weights[j])
                if not positive_normalized:
                    val = -val
            mat[i, j] = mat[j, i] = val
    if kind in ("laplacian", "signless"):
        mat[np.diag_indices(d)] = np.array(w.neighbor_weights, dtype=float)
    elif kind == "normalized":
        mat[np.diag_indices(d)] = 1.0
    return mat


def fixed_spectrum_part(fact: Factorization, kind: str) -> list[float]:
    """Closed-form eigenvalues of the nonessential subgraph outside the quotient.

    adjacency: 0 repeated (T - m) - (2^k - 2) times; laplacian and signless:
    each class's neighbor weight repeated size-1 times; normalized: 1 repeated
    sum(size-1) times.
    """
    w = class_weights(fact)
    if kind == "adjacency":
        count = (total_ideal_count(fact) - essential_count(fact)) - len(w.keys)
        return [0.0] * count
    if kind in ("laplacian", "signless"):
        out: list[float] = []
        for size, nw in zip(w.sizes, w.neighbor_weights):
            out.extend([float(nw)] * (size - 1))
        return out
    if kind == "normalized":
        return [1.0] * sum(size - 1 for size in w.sizes)
    raise ValueError(f"unknown matrix kind {kind!r}")


def spectrum_via_theorem(fact: Factorization, kind: str, tol: float = DEFAULT_GROUP_TOL) -> Spectrum:
    """Spectrum of the nonessential induced subgraph from the class decomposition.

    Fixed part union quotient-matrix spectrum; total multiplicity T - m.
    Empty for k = 1, where there are no nonessential ideals.
    """
    if fact.k == 1:
        return group_eigenvalues([], tol=tol)
    from .eigen import jacobi_eigenvalues

    quotient = jacobi_eigenvalues(quotient_matrix(fact, kind))
    return group_eigenvalues(list(quotient) + fixed_spectrum_part(fact, kind), tol=tol)


@lru_cache(maxsize=None)
def _bruteforce_values(fact: Factorization, kind: str, scope: str) -> tuple[float, ...]:
    from .eigen import jacobi_eigenvalues

    graph = build_essential_graph_bruteforce(fact)
    if scope == "subgraph":
        graph = graph.induced(nonessential_ideals(fact))
    return tuple(jacobi_eigenvalues(matrix_for(graph, kind)))


def spectrum_bruteforce(fact: Factorization, kind: str, scope: str = "subgraph", tol: float = DEFAULT_GROUP_TOL) -> Spectrum:
    """Oracle spectrum: build the requested graph and eigensolve its matrix.

    scope 'full' is the whole essential ideal graph, 'subgraph' its induced
    subgraph on the nonessential ideals.  The graph comes from the
    definitional construction, independent of the class decomposition.
    """
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}; expected one of {SCOPES}")
    if kind not in MATRIX_KINDS:
        raise ValueError(f"unknown matrix kind {kind!r}; expected one of {MATRIX_KINDS}")
    return group_eigenvalues(_bruteforce_values(fact, kind, scope), tol=tol)


def weighted_laplacian(fact: Factorization) -> np.ndarray:
    """Vertex-weighted class Laplacian: integer, zero row sums, not symmetric.

    Row i holds the neighbor weight on the diagonal and -size_j at each
    host-adjacent class j.  It equals W^{-1/2} C_L W^{1/2} for the weight
    diagonal W = diag(sizes), hence shares the Laplacian quotient's spectrum.
    """
    w = class_weights(fact)
    d = len(w.keys)
    mat = np.zeros((d, d), dtype=np.int64)
    for i in range(d):
        mat[i, i] = w.neighbor_weights[i]
        for j in range(d):
            if i != j and not (w.keys[i] & w.keys[j]):
                mat[i, j] = -w.sizes[j]
    return mat


def integer_determinant(matrix) -> int:
    """Exact determinant of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [[int(x) for x in row] for row in matrix]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("square matrix required")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for col in range(n - 1):
        pivot_row = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot_row is None:
            return 0
        if pivot_row != col:
            m[col], m[pivot_row] = m[pivot_row], m[col]
            sign = -sign
        for r in range(col + 1, n):
            for c in range(col + 1, n):
                m[r][c] = (m[r][c] * m[col][col] - m[r][col] * m[col][c]) // prev
            m[r][col] = 0
        prev = m[col][col]
    return sign * m[n - 1][n - 1]


@dataclass(frozen=True)
class IntegralityCertificate:
    """Verdict plus evidence for Laplacian integrality of the essential ideal graph.

    Integrality of the whole graph's Laplacian spectrum reduces to the class
    Laplacian having an all-integer spectrum.  Each numeric eigenvalue is
    screened against its nearest integer and then confirmed (or refuted) by an
    exact integer determinant of the weighted class Laplacian shifted by that
    integer.
    """

    n: int
    integral: bool
    eigenvalues: tuple[tuple[float, int], ...]
    integer_spectrum: tuple[int, ...] | None
    offending: float | None
    determinant_checks: tuple[tuple[int, int], ...]


def is_laplacian_integral(fact: Factorization, screen_tol: float = 1e-6) -> IntegralityCertificate:
    """Decide Laplacian integrality with an exact integer certificate.

    k = 1 is the complete graph, integral by inspection.  Otherwise each
    eigenvalue of the Laplacian quotient must sit within screen_tol of an
    integer c with det(L_w - c*I) = 0 in exact integer arithmetic.
    """
    if fact.k == 1:
        t = total_ideal_count(fact)
        entries = ((float(t), t - 1), (0.0, 1)) if t > 1 else ((0.0, 1),)
        ints = tuple(sorted(int(v) for v, mult in entries for _ in range(mult)))
        return IntegralityCertificate(
            n=fact.n, integral=True, eigenvalues=entries,
            integer_spectrum=ints, offending=None, determinant_checks=(),
        )
    lw = weighted_laplacian(fact)
    spec = symmetric_eigenvalues(quotient_matrix(fact, "laplacian"))
    checks: list[tuple[int, int]] = []
    ints: list[int] = []
    for value, mult in spec.entries:
        candidate = round(value)
        if abs(value - candidate) >= screen_tol:
            return IntegralityCertificate(
                n=fact.n, integral=False, eigenvalues=spec.entries,
                integer_spectrum=None, offending=value, determinant_checks=tuple(checks),
            )
        shifted = lw - candidate * np.eye(lw.shape[0], dtype=np.int64)
        det = integer_determinant(shifted.tolist())
        checks.append((int(candidate), det))
        if det != 0:
            return IntegralityCertificate(
                n=fact.n, integral=False, eigenvalues=spec.entries,
                integer_spectrum=None, offending=value, determinant_checks=tuple(checks),
            )
        ints.extend([int(candidate)] * mult)
    return IntegralityCertificate(
        n=fact.n, integral=True, eigenvalues=spec.entries,
        integer_spectrum=tuple(sorted(ints)), offending=None, determinant_checks=tuple(checks),
    )
