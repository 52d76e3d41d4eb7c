"""Symmetric eigenvalue utilities: spectra, PSD tests, interlacing.

All tolerances are relative to 1 + the matrix (or value) max-norm.
Multiplicities are only ever handled through sorted multisets; no
operation here matches eigenvectors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

DENSE_LIMIT = 6000
DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class SpectrumReport:
    """Ascending eigenvalues of a symmetric matrix plus a residual bound."""

    values: tuple[float, ...]
    residual: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        if any(self.values[i] > self.values[i + 1] for i in range(len(self.values) - 1)):
            raise ValueError("eigenvalues must be ascending")
        if self.residual < 0:
            raise ValueError("residual must be nonnegative")

    @property
    def dim(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)


def _require_symmetric(M: np.ndarray) -> np.ndarray:
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {M.shape}")
    scale = 1.0 + (np.abs(M).max() if M.size else 0.0)
    if np.abs(M - M.T).max() > 1e-12 * scale:
        raise ValueError("matrix is not symmetric")
    return M


def eigenvalues(M: np.ndarray) -> SpectrumReport:
    """Full ascending spectrum with the max per-pair residual ||Mv - mu v||."""
    M = _require_symmetric(M)
    vals, vecs = np.linalg.eigh(M)
    residual = float(np.linalg.norm(M @ vecs - vecs * vals, axis=0).max()) if M.size else 0.0
    return SpectrumReport(tuple(vals.tolist()), residual)


def is_psd(M: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    M = _require_symmetric(M)
    scale = 1.0 + (np.abs(M).max() if M.size else 0.0)
    return bool(np.linalg.eigvalsh(M).min() >= -tol * scale)


def _values(spectrum) -> np.ndarray:
    if isinstance(spectrum, SpectrumReport):
        return np.asarray(spectrum.values)
    return np.asarray(spectrum, dtype=float)


def interlace_check(a, b, tol: float = DEFAULT_TOL) -> bool:
    """a_1 <= b_1 <= a_2 <= ... <= a_n <= b_n, with a the collapsed spectrum.

    Both inputs must have equal length and be ascending.
    """
    va, vb = _values(a), _values(b)
    if va.shape != vb.shape:
        raise ValueError("spectra must have equal length")
    eps = tol * (1.0 + max(np.abs(va).max(), np.abs(vb).max(), 0.0))
    if np.any(va > vb + eps):
        return False
    return not np.any(vb[:-1] > va[1:] + eps)


def multiset_equal(a, b, tol: float = DEFAULT_TOL) -> bool:
    """Sorted pairwise comparison with relative tolerance."""
    va, vb = np.sort(_values(a)), np.sort(_values(b))
    if va.shape != vb.shape:
        return False
    if va.size == 0:
        return True
    eps = tol * (1.0 + max(np.abs(va).max(), np.abs(vb).max()))
    return bool(np.abs(va - vb).max() <= eps)


def shift_bound_check(G, tol: float = DEFAULT_TOL) -> bool:
    """Each eigenvalue moves up by at most 2*sum_{i<=j} a_in a_jn / s
    going from the collapsed graph back to the original (s = total rate
    into the last vertex)."""
    from .graphs import collapse_last_vertex, rw_laplacian

    n = G.n
    rates = [G.weight(i, n) for i in range(1, n)]
    s = sum(rates)
    if s <= 0:
        raise ValueError("total rate into the last vertex must be positive")
    bound = 2.0 * sum(rates[i] * rates[j] for i in range(n - 1) for j in range(i, n - 1)) / s
    before = np.linalg.eigvalsh(rw_laplacian(G))
    after = np.sort(
        np.concatenate([np.linalg.eigvalsh(rw_laplacian(collapse_last_vertex(G, n))), [0.0]])
    )
    eps = tol * (1.0 + max(np.abs(before).max(), bound))
    return bool(np.all(before - after <= bound + eps))


def second_smallest_laplacian_eig(
    M, dense_limit: int = DENSE_LIMIT, solver_tol: float = 1e-10
) -> float:
    """Second-smallest eigenvalue of a (possibly sparse) graph Laplacian.

    Dense solve up to `dense_limit`; beyond that, an iterative solve on
    the operator with the known all-ones kernel direction shifted up out
    of the way, so the smallest remaining eigenvalue is the gap.
    """
    dim = M.shape[0]
    if dim < 2:
        raise ValueError("need dimension >= 2")
    if dim <= dense_limit:
        dense = M.toarray() if sp.issparse(M) else np.asarray(M, dtype=float)
        return float(np.linalg.eigvalsh(dense)[1])
    diag_max = float(M.diagonal().max())
    shift = 1.0 + 2.0 * diag_max  # exceeds lambda_max by Gershgorin

    def matvec(x):
        return M @ x + shift * x.mean() * np.ones(dim)

    op = spla.LinearOperator((dim, dim), matvec=matvec, dtype=float)
    vals = spla.eigsh(op, k=1, which="SA", tol=solver_tol, maxiter=20000, return_eigenvectors=False)
    return float(vals[0])
