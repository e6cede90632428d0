"""Dense complex linear algebra for small matrices.

Rank and singularity decisions all go through one Gaussian elimination with
complete pivoting, so ``solve``, ``rank`` and ``nullspace`` always agree on
whether a matrix is singular. Orthonormal bases come from the SVD, sized by
that rank, and are then put in a canonical form (see ``canonical_basis``).
"""

from __future__ import annotations

import numpy as np

from .config import tolerances
from .errors import ConvergenceFailure, DimensionMismatch, SingularMatrix


def as_matrix(M) -> np.ndarray:
    M = np.asarray(M, dtype=complex)
    if M.ndim != 2:
        raise DimensionMismatch(f"expected a matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise ValueError("matrix has non-finite entries")
    return M


def as_vector(v, n: int | None = None) -> np.ndarray:
    v = np.asarray(v, dtype=complex)
    if v.ndim != 1:
        raise DimensionMismatch(f"expected a vector, got shape {v.shape}")
    if n is not None and v.shape[0] != n:
        raise DimensionMismatch(f"expected length {n}, got {v.shape[0]}")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector has non-finite entries")
    return v


def _threshold(M, rtol, atol):
    if atol is not None:
        return atol
    if rtol is None:
        rtol = tolerances().rank
    scale = np.max(np.abs(M)) if M.size else 0.0
    return rtol * scale


def _eliminate(M, thresh):
    """LU with complete pivoting, stopped at the first pivot at or below ``thresh``.

    Returns the packed factors, row and column permutations and the list of
    accepted pivots (its length is the numerical rank).
    """
    A = np.array(M, dtype=complex)
    n, m = A.shape
    rows = np.arange(n)
    cols = np.arange(m)
    pivots = []
    for k in range(min(n, m)):
        sub = np.abs(A[k:, k:])
        i, j = np.unravel_index(np.argmax(sub), sub.shape)
        i += k
        j += k
        p = A[i, j]
        if not abs(p) > thresh:
            break
        if i != k:
            A[[k, i]] = A[[i, k]]
            rows[[k, i]] = rows[[i, k]]
        if j != k:
            A[:, [k, j]] = A[:, [j, k]]
            cols[[k, j]] = cols[[j, k]]
        A[k + 1 :, k] /= p
        A[k + 1 :, k + 1 :] -= np.outer(A[k + 1 :, k], A[k, k + 1 :])
        pivots.append(p)
    return A, rows, cols, pivots


def rank(M, rtol: float | None = None, atol: float | None = None) -> int:
    M = as_matrix(M)
    if M.size == 0:
        return 0
    return len(_eliminate(M, _threshold(M, rtol, atol))[3])


def det(M) -> complex:
    M = as_matrix(M)
    n, m = M.shape
    if n != m:
        raise DimensionMismatch("det needs a square matrix")
    A, rows, cols, pivots = _eliminate(M, 0.0)
    if len(pivots) < n:
        return 0j
    sign = _perm_sign(rows) * _perm_sign(cols)
    return complex(sign * np.prod(pivots))


def _perm_sign(p):
    p = list(p)
    sign = 1
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def _lu_solve(A, rows, cols, b):
    n = A.shape[0]
    z = b[rows].astype(complex)
    for i in range(1, n):
        z[i] -= A[i, :i] @ z[:i]
    for i in range(n - 1, -1, -1):
        z[i] = (z[i] - A[i, i + 1 :] @ z[i + 1 :]) / A[i, i]
    y = np.empty(n, dtype=complex)
    y[cols] = z
    return y


def solve(M, b) -> np.ndarray:
    """Solve ``M y = b``; raise :class:`SingularMatrix` if M is rank deficient."""
    M = as_matrix(M)
    n, m = M.shape
    if n != m:
        raise DimensionMismatch("solve needs a square matrix")
    b = as_vector(b, n)
    A, rows, cols, pivots = _eliminate(M, _threshold(M, None, None))
    if len(pivots) < n:
        raise SingularMatrix(f"rank {len(pivots)} < {n}")
    y = _lu_solve(A, rows, cols, b)
    # one step of refinement keeps the residual at rounding level
    y += _lu_solve(A, rows, cols, b - M @ y)
    return y


def canonical_basis(B) -> np.ndarray:
    """Canonical orthonormal basis for the span of the (independent) columns of B.

    The span is put in reduced row echelon form, then Gram-Schmidt is run on
    the echelon rows. The result depends only on the subspace, not on the
    spanning set, which keeps printed bases and quotient tables reproducible.
    """
    B = as_matrix(B)
    n, k = B.shape
    if k == 0:
        return np.zeros((n, 0), dtype=complex)
    R = B.T.copy()
    thresh = tolerances().rank * max(float(np.max(np.abs(R))), 1e-300)
    row = 0
    for col in range(n):
        if row == k:
            break
        piv = row + int(np.argmax(np.abs(R[row:, col])))
        if abs(R[piv, col]) <= thresh:
            continue
        R[[row, piv]] = R[[piv, row]]
        R[row] /= R[row, col]
        others = np.arange(k) != row
        R[others] -= np.outer(R[others, col], R[row])
        row += 1
    Q = np.zeros((n, k), dtype=complex)
    for i in range(k):
        v = R[i].copy()
        for _ in range(2):
            v -= Q[:, :i] @ (Q[:, :i].conj().T @ v)
        Q[:, i] = v / np.linalg.norm(v)
    return Q


def nullspace(M, rtol: float | None = None, atol: float | None = None) -> np.ndarray:
    """Orthonormal basis (as columns) of ``{v : M v = 0}``."""
    M = as_matrix(M)
    n, m = M.shape
    if M.size == 0:
        return np.eye(m, dtype=complex)
    r = rank(M, rtol, atol)
    _, _, vh = np.linalg.svd(M, full_matrices=True)
    return canonical_basis(vh[r:].conj().T)


def column_space(M, rtol: float | None = None, atol: float | None = None) -> np.ndarray:
    """Orthonormal basis (as columns) of the range of M."""
    M = as_matrix(M)
    if M.size == 0:
        return np.zeros((M.shape[0], 0), dtype=complex)
    r = rank(M, rtol, atol)
    u, _, _ = np.linalg.svd(M, full_matrices=True)
    return canonical_basis(u[:, :r])


def orthonormal_complement(Q) -> np.ndarray:
    """Orthonormal basis of the orthogonal complement of the columns of Q."""
    Q = as_matrix(Q)
    n, k = Q.shape
    if k == 0:
        return np.eye(n, dtype=complex)
    u, _, _ = np.linalg.svd(Q, full_matrices=True)
    return canonical_basis(u[:, k:])


def eigenvalues(M) -> np.ndarray:
    """All eigenvalues of a square matrix, with multiplicity."""
    M = as_matrix(M)
    n, m = M.shape
    if n != m or n == 0:
        raise DimensionMismatch("eigenvalues needs a non-empty square matrix")
    try:
        vals = np.linalg.eigvals(M)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc
    if not np.all(np.isfinite(vals)):
        raise ConvergenceFailure("eigenvalue iteration produced non-finite values")
    return vals


def eigen_decomposition(M) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues and right eigenvectors (as columns) of a square matrix."""
    M = as_matrix(M)
    n, m = M.shape
    if n != m or n == 0:
        raise DimensionMismatch("eigen_decomposition needs a non-empty square matrix")
    try:
        vals, vecs = np.linalg.eig(M)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc
    if not (np.all(np.isfinite(vals)) and np.all(np.isfinite(vecs))):
        raise ConvergenceFailure("eigen-decomposition produced non-finite values")
    return vals, vecs


def left_eigenvectors(M, lam, rtol: float | None = None) -> np.ndarray:
    """Basis (columns) of ``{w : w^T M = lam w^T}``.

    ``lam`` is normally an approximate eigenvalue, so the threshold is the
    eigen tolerance relative to the size of M rather than the rank tolerance.
    """
    M = as_matrix(M)
    n = M.shape[0]
    if rtol is None:
        rtol = tolerances().eig
    scale = max(float(np.max(np.abs(M))), abs(lam), 1e-300)
    return nullspace(M.T - lam * np.eye(n), atol=rtol * scale)


def match_multisets(a, b) -> float:
    """Greedy minimal-distance matching of two equal-size multisets of scalars.

    Returns the largest distance among matched pairs.
    """
    a = list(np.asarray(a, dtype=complex))
    b = list(np.asarray(b, dtype=complex))
    if len(a) != len(b):
        raise DimensionMismatch("multisets differ in size")
    pairs = sorted(
        ((abs(x - y), i, j) for i, x in enumerate(a) for j, y in enumerate(b)),
        key=lambda t: t[0],
    )
    used_a, used_b = set(), set()
    worst = 0.0
    for d, i, j in pairs:
        if i in used_a or j in used_b:
            continue
        used_a.add(i)
        used_b.add(j)
        worst = max(worst, d)
    return worst


def set_distance(a, b) -> float:
    """Hausdorff distance between two finite sets of scalars."""
    a = np.asarray(list(a), dtype=complex)
    b = np.asarray(list(b), dtype=complex)
    if a.size == 0 or b.size == 0:
        return 0.0 if a.size == b.size else float("inf")
    d = np.abs(a[:, None] - b[None, :])
    return float(max(d.min(axis=1).max(), d.min(axis=0).max()))
