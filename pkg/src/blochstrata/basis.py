"""Orthonormal traceless Hermitian operator bases (generalized Gell-Mann matrices).

The basis of the space of traceless Hermitian N x N matrices used throughout
this package consists of the N**2 - 1 generalized Gell-Mann matrices, rescaled
so that Tr{T_j T_k} = delta_jk.  For N = 2 these are the Pauli matrices over
sqrt(2); for N = 3 the standard Gell-Mann matrices over sqrt(2).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

import numpy as np

from .errors import DomainError

HERMITICITY_TOL = 1e-14
TRACE_TOL = 1e-14
GRAM_TOL = 1e-12


@dataclass(frozen=True)
class BasisSet:
    """An ordered set of N**2 - 1 traceless Hermitian matrices, orthonormal
    in the trace inner product Tr{A B}.

    ``elements`` is a read-only complex array of shape (N**2 - 1, N, N).
    Instances are immutable and safe to share between threads.
    """

    dim: int
    elements: np.ndarray

    def __post_init__(self):
        n = self.dim
        if n < 2:
            raise DomainError(f"basis dimension must be >= 2, got {n}")
        elements = np.array(self.elements, dtype=complex)
        if elements.shape != (n * n - 1, n, n):
            raise DomainError(
                f"expected {n * n - 1} matrices of shape ({n}, {n}), "
                f"got array of shape {elements.shape}"
            )
        elements.setflags(write=False)
        object.__setattr__(self, "elements", elements)

    def __len__(self) -> int:
        return self.elements.shape[0]

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, index) -> np.ndarray:
        return self.elements[index]


@dataclass(frozen=True)
class Violation:
    """One violated basis invariant with its magnitude (absolute deviation)."""

    invariant: str  # "hermiticity" | "trace" | "gram"
    location: tuple
    magnitude: float


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def build_basis(dim: int) -> BasisSet:
    """Construct the generalized Gell-Mann basis for N x N Hermitian matrices.

    Element order is fixed: all symmetric off-diagonal pairs
    (E_jk + E_kj)/sqrt(2) in lexicographic (j, k) order, then all
    antisymmetric pairs -i(E_jk - E_kj)/sqrt(2), then the N - 1 diagonal
    traceless matrices diag(1, ..., 1, -l, 0, ..., 0)/sqrt(l(l+1)) with
    growing leading block.  Each element has unit Hilbert-Schmidt norm.
    The construction is pure and bit-deterministic.
    """
    if dim < 2:
        raise DomainError(f"basis dimension must be >= 2, got {dim}")
    n = dim
    mats = np.zeros((n * n - 1, n, n), dtype=complex)
    inv_sqrt2 = 1.0 / sqrt(2.0)
    idx = 0
    for j in range(n):
        for k in range(j + 1, n):
            mats[idx, j, k] = inv_sqrt2
            mats[idx, k, j] = inv_sqrt2
            idx += 1
    for j in range(n):
        for k in range(j + 1, n):
            mats[idx, j, k] = -1j * inv_sqrt2
            mats[idx, k, j] = 1j * inv_sqrt2
            idx += 1
    for l in range(1, n):
        scale = 1.0 / sqrt(l * (l + 1))
        for m in range(l):
            mats[idx, m, m] = scale
        mats[idx, l, l] = -l * scale
        idx += 1
    return BasisSet(dim=n, elements=mats)


def expand(basis: BasisSet, matrix: np.ndarray) -> np.ndarray:
    """Coordinates Tr{M T_j} of a Hermitian matrix in the basis.

    The identity component of ``matrix`` does not contribute; for a traceless
    Hermitian input the expansion reconstructs it exactly.
    """
    m = np.asarray(matrix, dtype=complex)
    if m.shape != (basis.dim, basis.dim):
        raise DomainError(
            f"matrix shape {m.shape} does not match basis dimension {basis.dim}"
        )
    return np.einsum("ij,kji->k", m, basis.elements).real


def verify_basis(basis: BasisSet) -> ValidationReport:
    """Check every BasisSet invariant; report violations instead of raising.

    Returns an empty report iff all elements are Hermitian within 1e-14,
    traceless within 1e-14, and the Gram matrix Tr{T_j T_k} equals the
    identity within 1e-12 entrywise.
    """
    violations = []
    elems = basis.elements
    for j, e in enumerate(elems):
        herm_dev = float(np.abs(e - e.conj().T).max())
        if herm_dev > HERMITICITY_TOL:
            violations.append(Violation("hermiticity", (j,), herm_dev))
        trace_dev = float(abs(e.trace()))
        if trace_dev > TRACE_TOL:
            violations.append(Violation("trace", (j,), trace_dev))
    gram = np.einsum("aij,bji->ab", elems, elems)
    gram_dev = np.abs(gram - np.eye(len(elems)))
    for j, k in zip(*np.nonzero(gram_dev > GRAM_TOL)):
        violations.append(Violation("gram", (int(j), int(k)), float(gram_dev[j, k])))
    return ValidationReport(tuple(violations))
