"""Symplectic linear algebra on the contact hyperplane and the ambient space.

Conventions fixed here and used everywhere else:

* hyperplane indices run 1..2n-2, stored 0-based;
* the hyperplane form is the block matrix omega = [[0, I], [-I, 0]];
* omega^{kl} is defined by omega^{kl} omega_{lj} = -delta_j^k (numerically it
  equals omega for the chosen block form);
* raising / lowering: gamma^p = omega^{pq} gamma_q and gamma_p = gamma^q omega_{qp};
* ambient rows/columns are ordered (inf, 1, ..., 2n-2, 0) and carry
  Omega = du^inf ^ du^0 + (1/2) omega_pq du^p ^ du^q.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionError

__all__ = [
    "Dimensions",
    "SymplecticForm",
    "SpElement",
    "build_standard_form",
    "index_adjust",
    "is_symplectic",
    "sp_basis",
    "sp_block_matrix",
    "sp_blocks",
]


@dataclass(frozen=True)
class Dimensions:
    """Half-dimension parameter n: contact manifold R^(2n-1), hyperplane rank 2n-2."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise DimensionError(f"n must be >= 2, got {self.n}")

    @property
    def hyperplane_rank(self):
        return 2 * self.n - 2

    @property
    def contact_dim(self):
        return 2 * self.n - 1

    @property
    def ambient_dim(self):
        return 2 * self.n

    # positions of the coordinate slots inside a contact point (x^1..x^{2n-2}, x^0)
    @property
    def x0_pos(self):
        return 2 * self.n - 2


@dataclass(frozen=True)
class SymplecticForm:
    """omega on the hyperplane, its inverse-convention partner, and ambient Omega."""

    dims: Dimensions
    omega_lower: np.ndarray = field(repr=False)
    omega_upper: np.ndarray = field(repr=False)
    Omega_ambient: np.ndarray = field(repr=False)


def build_standard_form(dims):
    m = dims.hyperplane_rank
    half = m // 2
    omega = np.zeros((m, m))
    omega[:half, half:] = np.eye(half)
    omega[half:, :half] = -np.eye(half)
    # omega^{kl} omega_{lj} = -delta_j^k  =>  W = -inv(omega)
    w_upper = -np.linalg.inv(omega)
    w_upper = np.rint(w_upper)

    N = dims.ambient_dim
    Omega = np.zeros((N, N))
    Omega[0, N - 1] = 1.0
    Omega[N - 1, 0] = -1.0
    Omega[1 : N - 1, 1 : N - 1] = omega
    return SymplecticForm(dims, omega, w_upper, Omega)


def index_adjust(tensor, slot, direction, form):
    """Raise or lower one hyperplane-index slot of a numeric tensor.

    Follows gamma^p = omega^{pq} gamma_q and gamma_p = gamma^q omega_{qp}; the
    two are mutually inverse. `slot` counts axes of `tensor`, each of which
    must have length 2n-2.
    """
    tensor = np.asarray(tensor)
    if not 0 <= slot < tensor.ndim:
        raise DimensionError(f"slot {slot} out of range for rank {tensor.ndim}")
    m = form.dims.hyperplane_rank
    if tensor.shape[slot] != m:
        raise DimensionError("slot is not a hyperplane index")
    if direction == "raise":
        out = np.tensordot(form.omega_upper, tensor, axes=([1], [slot]))
        return np.moveaxis(out, 0, slot)
    if direction == "lower":
        out = np.tensordot(tensor, form.omega_lower, axes=([slot], [0]))
        return np.moveaxis(out, -1, slot)
    raise ValueError(f"direction must be 'raise' or 'lower', got {direction!r}")


def is_symplectic(A, form, tol=1e-10):
    """Whether A_I^P A_J^Q Omega_PQ = Omega_IJ holds to max-entry residual tol."""
    A = np.asarray(A, dtype=np.float64)
    N = form.dims.ambient_dim
    if A.shape != (N, N):
        raise DimensionError(f"expected {(N, N)} matrix, got {A.shape}")
    resid = np.einsum("ip,jq,pq->ij", A, A, form.Omega_ambient) - form.Omega_ambient
    return bool(np.abs(resid).max() <= tol)


@dataclass(frozen=True)
class SpElement:
    """Element of Sp(n, R) in the ambient index convention, checked on construction."""

    matrix: np.ndarray
    form: SymplecticForm
    tolerance: float = 1e-9

    def __post_init__(self):
        object.__setattr__(
            self, "matrix", np.array(self.matrix, dtype=np.float64, copy=True)
        )
        if not is_symplectic(self.matrix, self.form, self.tolerance):
            raise DimensionError("matrix is not symplectic within tolerance")

    def inv(self):
        return SpElement(np.linalg.inv(self.matrix), self.form, self.tolerance)


def sp_block_matrix(form, a=0.0, b=None, b0=0.0, c=None, c0=0.0, s=None):
    """Assemble the sp(n, R) element with the block layout

        [ a    c_q        c_0 ]
        [ b^p  (s omega)  c^p ]
        [ b_0  -b_q       -a  ]

    where s is symmetric, c^p raises c_q, and b_q lowers b^p.
    """
    dims = form.dims
    m = dims.hyperplane_rank
    N = dims.ambient_dim
    b = np.zeros(m) if b is None else np.asarray(b, dtype=np.float64)
    c = np.zeros(m) if c is None else np.asarray(c, dtype=np.float64)
    s = np.zeros((m, m)) if s is None else np.asarray(s, dtype=np.float64)
    if not np.allclose(s, s.T):
        raise DimensionError("hyperplane block parameter s must be symmetric")
    h = np.zeros((N, N))
    h[0, 0] = a
    h[0, 1 : N - 1] = c
    h[0, N - 1] = c0
    h[1 : N - 1, 0] = b
    h[1 : N - 1, 1 : N - 1] = s @ form.omega_lower
    h[1 : N - 1, N - 1] = form.omega_upper @ c
    h[N - 1, 0] = b0
    h[N - 1, 1 : N - 1] = -(b @ form.omega_lower)
    h[N - 1, N - 1] = -a
    return h


def sp_blocks(h, form):
    """Extract (a, b, b0, c, c0, A_block) from an ambient matrix in block layout."""
    N = form.dims.ambient_dim
    h = np.asarray(h, dtype=np.float64)
    return {
        "a": h[0, 0],
        "b": h[1 : N - 1, 0].copy(),
        "b0": h[N - 1, 0],
        "c": h[0, 1 : N - 1].copy(),
        "c0": h[0, N - 1],
        "A": h[1 : N - 1, 1 : N - 1].copy(),
    }


def sp_basis(dims):
    """Basis of sp(n, R): the frame generators e_alpha first (hyperplane order
    then the Reeb slot), completed by the a, c, c_0 and symmetric-block
    directions of the block form."""
    form = build_standard_form(dims)
    m = dims.hyperplane_rank
    basis = []
    # e_i = block element with b = unit vector; e_0 = block element with b0 = 1
    for i in range(m):
        e = np.zeros(m)
        e[i] = 1.0
        basis.append(sp_block_matrix(form, b=e))
    basis.append(sp_block_matrix(form, b0=1.0))
    basis.append(sp_block_matrix(form, a=1.0))
    for i in range(m):
        e = np.zeros(m)
        e[i] = 1.0
        basis.append(sp_block_matrix(form, c=e))
    basis.append(sp_block_matrix(form, c0=1.0))
    for i in range(m):
        for j in range(i, m):
            s = np.zeros((m, m))
            s[i, j] = s[j, i] = 1.0
            basis.append(sp_block_matrix(form, s=s))
    return basis
