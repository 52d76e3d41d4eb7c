"""Young's orthogonal representation of the symmetric group.

For each partition shape, transpositions act by explicit orthogonal,
symmetric, involutive matrices on the span of the standard tableaux of
that shape (in dictionary order, see `aldous.tableaux`). The adjacent
transposition (i, i+1) acts on a tableau t by one of three rules:

* i and i+1 in the same row of t: diagonal entry +1;
* same column: diagonal entry -1;
* otherwise, with s the tableau obtained by swapping i and i+1 and
  r the axial distance (content of i+1 minus content of i), the pair
  {t, s} carries the 2x2 block [[1/r, sqrt(1-1/r^2)], [sqrt(1-1/r^2), -1/r]].

All other entries vanish. General transpositions come from conjugating
along a chain of adjacent ones, and arbitrary permutations from a
deterministic bubble-sort factorization, so the map stays a group
homomorphism (products compose right to left).

The reflection-difference matrices V_ij = I - rho_ij are positive
semidefinite with eigenvalues in {0, 2}; weighting them by edge rates
gives the per-shape Laplacian blocks that the interchange process
decomposes into.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .permutations import Permutation
from .tableaux import Partition, content, covers_below, enumerate_syt, f_dim

_adjacent_cache: dict[tuple[tuple[int, ...], int], np.ndarray] = {}
_transposition_cache: dict[tuple[tuple[int, ...], int, int], np.ndarray] = {}


@dataclass(frozen=True)
class SignedWeightedGraph:
    """Edge weights keyed on unordered pairs, signs unrestricted.

    Carrier for comparison matrices whose edge coefficients may be
    negative; only symmetry of the keying is enforced.
    """

    n: int
    weights: dict[tuple[int, int], float]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"vertex count must be >= 1, got {self.n}")
        normalized: dict[tuple[int, int], float] = {}
        for (i, j), w in self.weights.items():
            i, j = int(i), int(j)
            if i == j:
                raise ValueError(f"self-loop on vertex {i}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"edge ({i},{j}) out of range for n={self.n}")
            key = (i, j) if i < j else (j, i)
            if key in normalized:
                raise ValueError(f"duplicate edge {key}")
            w = float(w)
            if not math.isfinite(w):
                raise ValueError(f"weight for edge {key} must be finite, got {w}")
            normalized[key] = w
        object.__setattr__(self, "weights", normalized)


def _rho_adjacent(parts: tuple[int, ...], i: int) -> np.ndarray:
    key = (parts, i)
    cached = _adjacent_cache.get(key)
    if cached is not None:
        return cached
    lam = Partition(parts)
    n = lam.n
    if not 1 <= i <= n - 1:
        raise ValueError(f"adjacent index must be in 1..{n - 1}, got {i}")
    tabs = enumerate_syt(lam)
    index = {t.rows: k for k, t in enumerate(tabs)}
    M = np.zeros((len(tabs), len(tabs)))
    for k, t in enumerate(tabs):
        row_i, col_i = t.position(i)
        row_j, col_j = t.position(i + 1)
        if row_i == row_j:
            M[k, k] = 1.0
        elif col_i == col_j:
            M[k, k] = -1.0
        else:
            m = index[t.swap_values(i, i + 1).rows]
            if m > k:
                r = (col_j - row_j) - (col_i - row_i)  # axial distance
                off = math.sqrt(1.0 - 1.0 / r**2)
                M[k, k] = 1.0 / r
                M[m, m] = -1.0 / r
                M[k, m] = M[m, k] = off
    M.flags.writeable = False
    _adjacent_cache[key] = M
    return M


def rho_adjacent(lam: Partition, i: int) -> np.ndarray:
    """Matrix of the adjacent transposition (i, i+1)."""
    return _rho_adjacent(lam.parts, i).copy()


def _rho_transposition(parts: tuple[int, ...], i: int, j: int) -> np.ndarray:
    key = (parts, i, j)
    cached = _transposition_cache.get(key)
    if cached is not None:
        return cached
    n = sum(parts)
    if not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= {n}, got ({i}, {j})")
    M = _rho_adjacent(parts, j - 1)
    for m in range(j - 2, i - 1, -1):
        A = _rho_adjacent(parts, m)
        M = A @ M @ A
    M = np.ascontiguousarray(M)
    M.flags.writeable = False
    _transposition_cache[key] = M
    return M


def rho_transposition(lam: Partition, i: int, j: int) -> np.ndarray:
    """Matrix of the transposition (i, j), built by conjugating (j-1, j)
    down the chain of adjacent transpositions."""
    return _rho_transposition(lam.parts, i, j).copy()


def rho_sigma(lam: Partition, sigma: Permutation) -> np.ndarray:
    """Matrix of an arbitrary permutation via its adjacent factorization."""
    if sigma.n != lam.n:
        raise ValueError(f"permutation size {sigma.n} != partition size {lam.n}")
    M = np.eye(f_dim(lam))
    for i in sigma.adjacent_factorization():
        M = M @ _rho_adjacent(lam.parts, i)
    return M


def transposition_difference(lam: Partition, i: int, j: int) -> np.ndarray:
    """V_ij = I - rho_ij; PSD with eigenvalues in {0, 2}."""
    return np.eye(f_dim(lam)) - _rho_transposition(lam.parts, i, j)


def irrep_laplacian(lam: Partition, graph) -> np.ndarray:
    """Weighted sum of V_ij over the graph's edges.

    Accepts nonnegative or signed weights (anything with `.n` and a
    `.weights` dict keyed on pairs). PSD whenever all weights are >= 0.
    """
    if lam.n != graph.n:
        raise ValueError(f"partition of {lam.n} does not match graph on {graph.n} vertices")
    f = f_dim(lam)
    L = np.zeros((f, f))
    eye = np.eye(f)
    for (i, j), w in graph.weights.items():
        if w != 0.0:
            L += w * (eye - _rho_transposition(lam.parts, i, j))
    return L


def jucys_murphy(lam: Partition, j: int) -> np.ndarray:
    """Sum of rho_ij over i < j; diagonal with the content of j's box."""
    if not 2 <= j <= lam.n:
        raise ValueError(f"need 2 <= j <= {lam.n}, got {j}")
    f = f_dim(lam)
    X = np.zeros((f, f))
    for i in range(1, j):
        X += _rho_transposition(lam.parts, i, j)
    return X


def branching_check(
    lam: Partition, i: int, j: int, tol: float = 1e-10
) -> tuple[bool, tuple[int, ...]]:
    """Check that rho_ij is permutation-similar to the direct sum of the
    rho_ij of the shapes one box below.

    Tableaux are regrouped by the corner holding n (groups in
    `covers_below` order, members in the dictionary order of their
    restrictions); the returned witness lists, for each regrouped
    position, the original tableau index. Requires i < j < n so the
    transposition also acts on every smaller shape.
    """
    n = lam.n
    if not 1 <= i < j < n:
        raise ValueError(f"need 1 <= i < j < {n}, got ({i}, {j})")
    tabs = enumerate_syt(lam)
    below = covers_below(lam)
    shape_position = {}
    for g, mu in enumerate(below):
        for k, t in enumerate(enumerate_syt(mu)):
            shape_position[(mu.parts, t.rows)] = (g, k)
    order = sorted(
        range(len(tabs)),
        key=lambda k: shape_position[
            (tabs[k].restricted().shape.parts, tabs[k].restricted().rows)
        ],
    )
    M = _rho_transposition(lam.parts, i, j)
    regrouped = M[np.ix_(order, order)]
    blocks = [_rho_transposition(mu.parts, i, j) for mu in below]
    direct_sum = np.zeros_like(regrouped)
    offset = 0
    for block in blocks:
        d = block.shape[0]
        direct_sum[offset : offset + d, offset : offset + d] = block
        offset += d
    ok = bool(np.abs(regrouped - direct_sum).max() <= tol)
    return ok, tuple(order)


# ---------------------------------------------------------------------------
# Reference data: transposition reflection vectors for the four-box shapes
# ---------------------------------------------------------------------------

_SQ = math.sqrt


def s4_transposition_vectors() -> dict[tuple[tuple[int, ...], int, int], np.ndarray]:
    """The 18 reflection vectors v for the multi-dimensional shapes of
    four boxes, one per transposition (i, j).

    For shapes (3,1) and (2,2) the transposition matrix is I - v v^T;
    for (2,1,1) the sign convention flips: -I + v v^T.
    """
    v31 = {
        (1, 2): [0.0, 0.0, _SQ(2.0)],
        (1, 3): [0.0, _SQ(3.0 / 2.0), _SQ(1.0 / 2.0)],
        (1, 4): [_SQ(4.0 / 3.0), _SQ(1.0 / 6.0), _SQ(1.0 / 2.0)],
        (2, 3): [0.0, _SQ(3.0 / 2.0), -_SQ(1.0 / 2.0)],
        (2, 4): [_SQ(4.0 / 3.0), _SQ(1.0 / 6.0), -_SQ(1.0 / 2.0)],
        (3, 4): [_SQ(4.0 / 3.0), -_SQ(2.0 / 3.0), 0.0],
    }
    v22 = {
        (1, 2): [0.0, _SQ(2.0)],
        (1, 3): [_SQ(3.0 / 2.0), _SQ(1.0 / 2.0)],
        (1, 4): [_SQ(3.0 / 2.0), -_SQ(1.0 / 2.0)],
        (2, 3): [_SQ(3.0 / 2.0), -_SQ(1.0 / 2.0)],
        (2, 4): [_SQ(3.0 / 2.0), _SQ(1.0 / 2.0)],
        (3, 4): [0.0, _SQ(2.0)],
    }
    v211 = {
        (1, 2): [_SQ(2.0), 0.0, 0.0],
        (1, 3): [_SQ(1.0 / 2.0), -_SQ(3.0 / 2.0), 0.0],
        (1, 4): [_SQ(1.0 / 2.0), -_SQ(1.0 / 6.0), _SQ(4.0 / 3.0)],
        (2, 3): [-_SQ(1.0 / 2.0), -_SQ(3.0 / 2.0), 0.0],
        (2, 4): [-_SQ(1.0 / 2.0), -_SQ(1.0 / 6.0), _SQ(4.0 / 3.0)],
        (3, 4): [0.0, _SQ(2.0 / 3.0), _SQ(4.0 / 3.0)],
    }
    out: dict[tuple[tuple[int, ...], int, int], np.ndarray] = {}
    for parts, table in (((3, 1), v31), ((2, 2), v22), ((2, 1, 1), v211)):
        for (i, j), vec in table.items():
            out[(parts, i, j)] = np.array(vec)
    return out


def s4_transposition_matrix(lam: Partition, i: int, j: int) -> np.ndarray:
    """Transposition matrix rebuilt from the reference vectors (plus the
    two one-dimensional shapes, which are +1 and -1)."""
    if lam.n != 4 or not 1 <= i < j <= 4:
        raise ValueError("reference data covers shapes of 4 boxes and 1 <= i < j <= 4")
    if lam.parts == (4,):
        return np.array([[1.0]])
    if lam.parts == (1, 1, 1, 1):
        return np.array([[-1.0]])
    v = s4_transposition_vectors()[(lam.parts, i, j)]
    if lam.parts == (2, 1, 1):
        return -np.eye(3) + np.outer(v, v)
    return np.eye(len(v)) - np.outer(v, v)
