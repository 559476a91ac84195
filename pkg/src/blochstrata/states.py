"""Density matrices, Bloch vectors, spectra, and positivity classification.

States are plain complex numpy arrays.  A density matrix is Hermitian with
unit trace and eigenvalues >= -1e-10; its Bloch vector is the real coordinate
vector V_j = Tr{rho T_j} in a :class:`~blochstrata.basis.BasisSet`, so that
rho = (1/N) I + sum_j V_j T_j.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .basis import BasisSet, expand
from .errors import DomainError, NumericError

DEFAULT_ZERO_TOL = 1e-9
HERMITICITY_TOL = 1e-12
UNIT_TRACE_TOL = 1e-10
DENSITY_TRACE_TOL = 1e-12
PSD_TOL = 1e-10


class StateKind(str, Enum):
    POSITIVE_INTERIOR = "positive_interior"
    BOUNDARY = "boundary"
    NONPOSITIVE = "nonpositive"


@dataclass(frozen=True)
class StateClass:
    """Positivity classification of a unit-trace Hermitian matrix."""

    kind: StateKind
    zero_count: int = 0

    @property
    def label(self) -> str:
        if self.kind is StateKind.BOUNDARY:
            return f"boundary({self.zero_count})"
        return self.kind.value


@dataclass(frozen=True)
class Spectrum:
    """Real eigenvalues sorted descending plus the count of zeros under tolerance."""

    values: np.ndarray
    zero_count: int


def maximally_mixed(dim: int) -> np.ndarray:
    """The state (1/N) I, center of the state space."""
    if dim < 2:
        raise DomainError(f"dimension must be >= 2, got {dim}")
    return np.eye(dim, dtype=complex) / dim


def check_hermitian(matrix, tol: float = HERMITICITY_TOL) -> np.ndarray:
    """Validate and return a square Hermitian complex matrix."""
    m = np.asarray(matrix, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {m.shape}")
    dev = float(np.abs(m - m.conj().T).max())
    if dev > tol:
        raise DomainError(f"matrix is not Hermitian: max |m - m^H| = {dev:.3e}")
    return m


def check_density(matrix, zero_tol: float = DEFAULT_ZERO_TOL) -> np.ndarray:
    """Validate a density matrix: Hermitian, unit trace, eigenvalues >= -1e-10."""
    m = check_hermitian(matrix)
    tr = float(m.trace().real)
    if abs(tr - 1.0) > DENSITY_TRACE_TOL:
        raise DomainError(f"density matrix must have unit trace, got {tr!r}")
    w = hermitian_eigenvalues(m)
    if w[0] < -PSD_TOL:
        raise DomainError(
            f"matrix is not positive semidefinite: smallest eigenvalue {w[0]:.3e}"
        )
    return m


def hermitian_eigenvalues(matrix: np.ndarray) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix in ascending order.

    The input is symmetrized as (m + m^H)/2 first, so solver-dependent
    complex dust on nearly-Hermitian inputs is discarded.
    """
    h = (matrix + matrix.conj().T) / 2.0
    try:
        return np.linalg.eigvalsh(h)
    except np.linalg.LinAlgError as exc:
        raise NumericError(f"eigensolver failed on shape {h.shape}: {exc}") from exc


def spectrum(matrix, zero_tol: float = DEFAULT_ZERO_TOL) -> Spectrum:
    """Descending eigenvalues of a Hermitian matrix with the zero count.

    ``zero_count`` is the number of eigenvalues with |w| <= zero_tol.
    """
    if zero_tol <= 0:
        raise DomainError(f"zero_tol must be positive, got {zero_tol}")
    m = check_hermitian(matrix)
    w = hermitian_eigenvalues(m)[::-1]
    zeros = int(np.count_nonzero(np.abs(w) <= zero_tol))
    return Spectrum(values=w, zero_count=zeros)


def purity(matrix) -> float:
    """Tr{m^2} of a Hermitian matrix, computed as the squared Frobenius norm."""
    m = np.asarray(matrix, dtype=complex)
    return float(np.vdot(m, m).real)


def classify(matrix, zero_tol: float = DEFAULT_ZERO_TOL) -> StateClass:
    """Classify a unit-trace Hermitian matrix by its eigenvalue signs.

    NONPOSITIVE if some eigenvalue < -zero_tol; BOUNDARY(p) if p >= 1
    eigenvalues lie in [-zero_tol, zero_tol] and the rest are positive;
    POSITIVE_INTERIOR otherwise.  Inputs with trace away from 1 are a
    precondition violation, not silently renormalized.
    """
    if zero_tol <= 0:
        raise DomainError(f"zero_tol must be positive, got {zero_tol}")
    m = check_hermitian(matrix)
    tr = float(m.trace().real)
    if abs(tr - 1.0) > UNIT_TRACE_TOL:
        raise DomainError(f"classification requires unit trace, got {tr!r}")
    w = hermitian_eigenvalues(m)
    if w[0] < -zero_tol:
        return StateClass(StateKind.NONPOSITIVE)
    zeros = int(np.count_nonzero(np.abs(w) <= zero_tol))
    if zeros >= 1:
        return StateClass(StateKind.BOUNDARY, zero_count=zeros)
    return StateClass(StateKind.POSITIVE_INTERIOR)


def from_bloch(basis: BasisSet, vector) -> np.ndarray:
    """Map a Bloch vector to (1/N) I + sum_j v_j T_j.

    The result always has unit trace and is Hermitian; positivity is NOT
    guaranteed (vectors outside the admissible region give nonpositive
    matrices).
    """
    v = np.asarray(vector, dtype=float)
    n = basis.dim
    if v.shape != (n * n - 1,):
        raise DomainError(
            f"expected a vector of length {n * n - 1} for dimension {n}, "
            f"got shape {v.shape}"
        )
    return maximally_mixed(n) + np.tensordot(v, basis.elements, axes=(0, 0))


def to_bloch(basis: BasisSet, matrix) -> np.ndarray:
    """Bloch coordinates V_j = Tr{m T_j} of a unit-trace Hermitian matrix."""
    m = check_hermitian(matrix)
    if m.shape != (basis.dim, basis.dim):
        raise DomainError(
            f"matrix shape {m.shape} does not match basis dimension {basis.dim}"
        )
    tr = float(m.trace().real)
    if abs(tr - 1.0) > UNIT_TRACE_TOL:
        raise DomainError(f"Bloch coordinates require unit trace, got {tr!r}")
    return expand(basis, m)
