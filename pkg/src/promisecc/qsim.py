"""Dense complex linear algebra for small state-vector simulations.

States are 1-D complex numpy arrays of unit norm, operators are square
complex numpy arrays that are unitary to ``ATOL``.  The module also builds
the four specific operators the disjointness protocol needs on its
2n-dimensional register, whose basis is indexed by pairs ``(i, b)`` with
``i`` in 1..n and ``b`` in {0, 1}, laid out as ``index = b*n + i - 1``:

* :func:`spread_op` -- first column uniform over the ``(i, 0)`` block;
* :func:`swap_op` -- swaps the amplitudes of ``(i, 0)`` and ``(i, 1)``
  exactly where the word has a 1;
* :func:`phase_op` -- flips the sign of ``(i, 1)`` exactly where the word
  has a 1;
* :func:`collect_op` -- the adjoint of :func:`spread_op`, so its first row
  is uniform over the ``(i, 0)`` block.

Only the fixed column of the spread and the fixed row of the collect are
forced by the protocol; the rest of those matrices is completed by
Gram-Schmidt against the standard basis, which makes construction
deterministic.  Sign-flip and swap operators also have fast O(n)
application paths that agree with the dense matrices exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bits import BitString

#: Entrywise tolerance for unitarity / norm checks.
ATOL = 1e-10
#: Tolerance for probability assertions (sums over outcomes etc.).
PROB_ATOL = 1e-9


def pair_index(i: int, b: int, n: int) -> int:
    """Linear index of basis label (i, b), i in 1..n, b in {0, 1}."""
    if not 1 <= i <= n:
        raise ValueError(f"i must be in 1..{n}, got {i}")
    if b not in (0, 1):
        raise ValueError(f"b must be 0 or 1, got {b}")
    return b * n + (i - 1)


def basis_state(dim: int, index: int) -> np.ndarray:
    """Standard basis vector e_index in dimension dim."""
    psi = np.zeros(dim, dtype=complex)
    psi[index] = 1.0
    return psi


def norm(psi: np.ndarray) -> float:
    return float(np.linalg.norm(psi))


def is_unit(psi: np.ndarray, atol: float = ATOL) -> bool:
    return abs(norm(psi) - 1.0) <= atol


def is_unitary(u: np.ndarray, atol: float = ATOL) -> bool:
    u = np.asarray(u, dtype=complex)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        return False
    eye = np.eye(u.shape[0])
    return bool(np.max(np.abs(u.conj().T @ u - eye)) <= atol)


def assert_unitary(u: np.ndarray, atol: float = ATOL) -> None:
    if not is_unitary(u, atol):
        raise ValueError("matrix is not unitary within tolerance")


def apply(u: np.ndarray, psi: np.ndarray) -> np.ndarray:
    """Apply an operator to a state; dimensions must match."""
    u = np.asarray(u, dtype=complex)
    psi = np.asarray(psi, dtype=complex)
    if u.shape != (psi.shape[0], psi.shape[0]):
        raise ValueError(f"dimension mismatch: {u.shape} vs {psi.shape}")
    return u @ psi


@dataclass(frozen=True)
class ProjectiveMeasurement:
    """Labeled orthogonal projectors that sum to the identity."""

    labels: tuple
    projectors: tuple  # of np.ndarray, aligned with labels

    def __post_init__(self):
        if len(self.labels) != len(self.projectors):
            raise ValueError("labels and projectors must align")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("outcome labels must be distinct")

    @property
    def dim(self) -> int:
        return self.projectors[0].shape[0]

    def validate(self, atol: float = ATOL) -> None:
        """Check hermiticity, idempotence, pairwise orthogonality, completeness."""
        total = np.zeros((self.dim, self.dim), dtype=complex)
        for p in self.projectors:
            if np.max(np.abs(p - p.conj().T)) > atol:
                raise ValueError("projector is not Hermitian")
            if np.max(np.abs(p @ p - p)) > atol:
                raise ValueError("projector is not idempotent")
            total += p
        for a in range(len(self.projectors)):
            for b in range(a + 1, len(self.projectors)):
                if np.max(np.abs(self.projectors[a] @ self.projectors[b])) > atol:
                    raise ValueError("projectors are not pairwise orthogonal")
        if np.max(np.abs(total - np.eye(self.dim))) > atol:
            raise ValueError("projectors do not sum to the identity")

    def probability(self, outcome, psi: np.ndarray) -> float:
        return outcome_probability(self, outcome, psi)


def outcome_probability(m: ProjectiveMeasurement, outcome, psi: np.ndarray) -> float:
    """Born probability ||P_outcome psi||^2."""
    psi = np.asarray(psi, dtype=complex)
    if psi.shape[0] != m.dim:
        raise ValueError(f"dimension mismatch: {psi.shape[0]} vs {m.dim}")
    try:
        k = m.labels.index(outcome)
    except ValueError:
        raise ValueError(f"unknown outcome label {outcome!r}") from None
    return float(np.linalg.norm(m.projectors[k] @ psi) ** 2)


def basis_measurement(dim: int, labels=None) -> ProjectiveMeasurement:
    """One projector per basis state, labelled 0..dim-1 unless given."""
    if labels is None:
        labels = tuple(range(dim))
    if len(labels) != dim:
        raise ValueError("need one label per basis state")
    projs = []
    for k in range(dim):
        p = np.zeros((dim, dim), dtype=complex)
        p[k, k] = 1.0
        projs.append(p)
    return ProjectiveMeasurement(tuple(labels), tuple(projs))


def pair_basis_measurement(n: int) -> ProjectiveMeasurement:
    """Basis measurement on the 2n-dim register with (i, b) outcome labels."""
    labels = [(i, b) for b in (0, 1) for i in range(1, n + 1)]
    return basis_measurement(2 * n, tuple(labels))


def complete_unitary_from_column(column: np.ndarray) -> np.ndarray:
    """Deterministic unitary whose first column is the given unit vector.

    Gram-Schmidt against the standard basis in index order, skipping the
    basis vectors that become dependent.  Same input, same matrix.
    """
    c = np.asarray(column, dtype=complex).reshape(-1)
    if not is_unit(c):
        raise ValueError("first column must have unit norm")
    dim = c.shape[0]
    cols = [c]
    for k in range(dim):
        if len(cols) == dim:
            break
        v = basis_state(dim, k)
        for w in cols:
            v = v - np.vdot(w, v) * w
        nv = np.linalg.norm(v)
        if nv > 1e-8:
            cols.append(v / nv)
    if len(cols) != dim:
        raise ValueError("failed to complete an orthonormal basis")
    return np.column_stack(cols)


def uniform_over(dim: int, support: int) -> np.ndarray:
    """Unit vector with amplitude 1/sqrt(support) on the first `support` indices."""
    if not 1 <= support <= dim:
        raise ValueError("support must be in 1..dim")
    c = np.zeros(dim, dtype=complex)
    c[:support] = 1.0 / np.sqrt(support)
    return c


def spread_op(n: int) -> np.ndarray:
    """2n-dim unitary taking (1,0) to the uniform superposition of all (i,0)."""
    if n < 1:
        raise ValueError("n must be positive")
    return complete_unitary_from_column(uniform_over(2 * n, n))


def collect_op(n: int) -> np.ndarray:
    """Adjoint of spread_op: first row uniform over the (i,0) block."""
    return spread_op(n).conj().T


def swap_op(x: BitString) -> np.ndarray:
    """Permutation swapping (i,0) and (i,1) at every position where x has a 1.

    An involution: applying it twice is the identity.
    """
    n = x.n
    u = np.zeros((2 * n, 2 * n), dtype=complex)
    for i, bit in enumerate(x.bits, start=1):
        lo, hi = pair_index(i, 0, n), pair_index(i, 1, n)
        if bit:
            u[hi, lo] = 1.0
            u[lo, hi] = 1.0
        else:
            u[lo, lo] = 1.0
            u[hi, hi] = 1.0
    return u


def phase_op(y: BitString) -> np.ndarray:
    """Diagonal sign flip: -1 on (i,1) where y has a 1, +1 elsewhere."""
    n = y.n
    d = np.ones(2 * n, dtype=complex)
    for i, bit in enumerate(y.bits, start=1):
        if bit:
            d[pair_index(i, 1, n)] = -1.0
    return np.diag(d)


def apply_swap_fast(x: BitString, psi: np.ndarray) -> np.ndarray:
    """O(n) application of swap_op(x); agrees with the dense path exactly."""
    n = x.n
    if psi.shape[0] != 2 * n:
        raise ValueError("dimension mismatch")
    out = np.array(psi, dtype=complex)
    for i, bit in enumerate(x.bits, start=1):
        if bit:
            lo, hi = pair_index(i, 0, n), pair_index(i, 1, n)
            out[lo], out[hi] = psi[hi], psi[lo]
    return out


def apply_phase_fast(y: BitString, psi: np.ndarray) -> np.ndarray:
    """O(n) application of phase_op(y); agrees with the dense path exactly."""
    n = y.n
    if psi.shape[0] != 2 * n:
        raise ValueError("dimension mismatch")
    out = np.array(psi, dtype=complex)
    for i, bit in enumerate(y.bits, start=1):
        if bit:
            out[pair_index(i, 1, n)] = -out[pair_index(i, 1, n)]
    return out


def dump_matrix_csv(u: np.ndarray, path) -> None:
    """Debug dump as CSV of 're,im' entries, one row per matrix row."""
    u = np.asarray(u, dtype=complex)
    with open(path, "w") as fh:
        for row in u:
            fh.write(";".join(f"{z.real:.17g},{z.imag:.17g}" for z in row))
            fh.write("\n")
