"""Linear algebra on the two-qubit, two-mode composite Hilbert space.

Everything here is dense numpy: the largest space we ever build is a few
hundred dimensions (two qubits and two bosonic modes truncated at a handful
of phonons), so sparse machinery would be pointless complexity.

Slot ordering is fixed throughout the package:

    slot 0: ion 1 spin (dim 2)
    slot 1: ion 2 spin (dim 2)
    slot 2: center-of-mass mode (dim n_max+1)
    slot 3: rocking mode (dim n_max+1)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

HERMITICITY_TOL = 1e-10

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
IDENTITY_2 = np.eye(2, dtype=complex)


@dataclass(frozen=True)
class CompositeSpace:
    """Two qubits and two bosonic modes, each mode truncated at n_max phonons."""

    n_max: int

    def __post_init__(self):
        if self.n_max < 1:
            raise ValueError(f"n_max must be >= 1, got {self.n_max}")

    @property
    def dims(self) -> tuple[int, int, int, int]:
        m = self.n_max + 1
        return (2, 2, m, m)

    @property
    def total_dim(self) -> int:
        return 4 * (self.n_max + 1) ** 2


def build_space(n_max: int) -> CompositeSpace:
    """Composite space of [ion1, ion2, com mode, rocking mode]."""
    return CompositeSpace(n_max=int(n_max))


def pauli_phi(phi: float) -> np.ndarray:
    """Equatorial Pauli operator cos(phi)*sx + sin(phi)*sy.

    Hermitian, traceless, squares to the identity for any phi.
    """
    return np.array(
        [[0.0, np.exp(-1j * phi)], [np.exp(1j * phi), 0.0]], dtype=complex
    )


def ladder(n_max: int) -> np.ndarray:
    """Annihilation operator on a Fock space truncated at n_max.

    a|n> = sqrt(n)|n-1> holds for every retained n; the matrix simply has no
    column feeding |n_max> from above, which is the usual hard truncation.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    return np.diag(np.sqrt(np.arange(1, n_max + 1)), k=1).astype(complex)


def number_op(n_max: int) -> np.ndarray:
    return np.diag(np.arange(n_max + 1)).astype(complex)


def embed(block: np.ndarray, slot: int, space: CompositeSpace) -> np.ndarray:
    """Embed a single-slot operator into the full space (identity elsewhere)."""
    dims = space.dims
    if not 0 <= slot < len(dims):
        raise ValueError(f"slot must be in 0..3, got {slot}")
    block = np.asarray(block, dtype=complex)
    if block.shape != (dims[slot], dims[slot]):
        raise ValueError(
            f"block shape {block.shape} does not match slot {slot} dim {dims[slot]}"
        )
    factors = [
        block if k == slot else np.eye(d, dtype=complex) for k, d in enumerate(dims)
    ]
    return reduce(np.kron, factors)


def basis_state(space: CompositeSpace, q1: int, q2: int, n1: int, n2: int) -> np.ndarray:
    """Computational product basis vector |q1 q2; n1 n2>."""
    dims = space.dims
    for val, d in zip((q1, q2, n1, n2), dims):
        if not 0 <= val < d:
            raise ValueError(f"basis index {val} out of range for dim {d}")
    psi = np.zeros(space.total_dim, dtype=complex)
    m = space.n_max + 1
    psi[((q1 * 2 + q2) * m + n1) * m + n2] = 1.0
    return psi


def is_hermitian(op: np.ndarray, tol: float = HERMITICITY_TOL) -> bool:
    return bool(np.max(np.abs(op - op.conj().T)) < tol)


def validate_density_matrix(rho: np.ndarray, tol: float = 1e-9, check_psd: bool = False):
    """Raise if rho is not a valid density matrix (debug/validation path).

    Positivity is an eigensolve and therefore opt-in; trace and Hermiticity
    are cheap and always checked.
    """
    rho = np.asarray(rho)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"density matrix must be square, got shape {rho.shape}")
    tr = np.trace(rho)
    if abs(tr - 1.0) > tol:
        raise ValueError(f"density matrix trace {tr} deviates from 1 beyond {tol}")
    defect = np.max(np.abs(rho - rho.conj().T))
    if defect > tol:
        raise ValueError(f"Hermiticity defect {defect:.3e} beyond {tol}")
    if check_psd:
        lo = np.linalg.eigvalsh(rho)[0]
        if lo < -1e-8:
            raise ValueError(f"smallest eigenvalue {lo:.3e} below -1e-8")


def partial_trace_motion(state: np.ndarray, space: CompositeSpace) -> np.ndarray:
    """Trace out both motional modes, returning the 4x4 two-qubit density matrix.

    Accepts either a pure state vector or a full density matrix.
    """
    state = np.asarray(state, dtype=complex)
    m = space.n_max + 1
    if state.ndim == 1:
        if state.size != space.total_dim:
            raise ValueError("state length does not match space")
        # Qubit indices are the leading axes, so a reshape exposes the
        # (spin, motion) bipartition directly.
        mat = state.reshape(4, m * m)
        return mat @ mat.conj().T
    if state.shape != (space.total_dim, space.total_dim):
        raise ValueError("density matrix shape does not match space")
    rho = state.reshape(4, m * m, 4, m * m)
    return np.einsum("akbk->ab", rho)


def state_fidelity(rho: np.ndarray, target: np.ndarray) -> float:
    """Overlap <target|rho|target> of a density matrix with a pure target."""
    rho = np.asarray(rho, dtype=complex)
    target = np.asarray(target, dtype=complex)
    if rho.shape != (target.size, target.size):
        raise ValueError("shape mismatch between rho and target")
    norm = np.linalg.norm(target)
    if abs(norm - 1.0) > 1e-9:
        raise ValueError(f"target vector norm {norm} is not 1")
    tr = np.trace(rho)
    if abs(tr - 1.0) > 1e-6:
        raise ValueError(f"rho trace {tr} is not 1")
    val = target.conj() @ rho @ target
    if abs(val.imag) > 1e-12:
        raise ValueError(f"fidelity has imaginary residue {val.imag:.3e}")
    return float(val.real)


def purity(rho: np.ndarray) -> float:
    return float(np.real(np.trace(rho @ rho)))
