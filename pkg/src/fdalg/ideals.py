"""Ideals as subspaces: principal ideals, quotients, maximal ideals.

Ideals carry an orthonormal basis, so containment and equality reduce to
projection residuals and do not depend on which spanning set was given.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import linalg
from .chars import Character, characters
from .config import tolerances
from .core import (
    FUNCTION_ALGEBRA,
    Algebra,
    multiply,
    quotient_by_subspace,
    regular_representation,
    validate_algebra,
)
from .errors import (
    NotAnIdeal,
    NotApplicable,
    NotASubsetIdeal,
    NotProper,
    RankDeficient,
    ValidationError,
)


@dataclass(frozen=True, eq=False)
class Ideal:
    basis: np.ndarray  # orthonormal columns
    parent_dim: int

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    def residual(self, v) -> float:
        """Distance from v to the ideal, relative to max(1, |v|)."""
        v = np.asarray(v, dtype=complex)
        Q = self.basis
        r = v - Q @ (Q.conj().T @ v)
        return float(np.linalg.norm(r) / max(1.0, np.linalg.norm(v)))

    def contains(self, v, tol: float | None = None) -> bool:
        if tol is None:
            tol = tolerances().ideal
        return self.residual(v) <= tol

    def contains_ideal(self, other: "Ideal", tol: float | None = None) -> bool:
        return all(self.contains(v, tol) for v in other.basis.T)

    def same_as(self, other: "Ideal", tol: float | None = None) -> bool:
        return self.dim == other.dim and self.contains_ideal(other, tol)

    def __repr__(self):
        return f"Ideal(dim={self.dim}, parent_dim={self.parent_dim})"


@dataclass(frozen=True, eq=False)
class QuotientResult:
    quotient: Algebra
    projection: np.ndarray
    section: np.ndarray


def _span(vectors, n) -> np.ndarray:
    M = np.asarray(vectors, dtype=complex)
    if M.size == 0:
        return np.zeros((n, 0), dtype=complex)
    M = linalg.as_matrix(M)
    if M.shape[0] != n:
        raise ValueError(f"basis columns must have length {n}, got {M.shape[0]}")
    return M


def closure_violation(A: Algebra, S) -> float:
    """Largest relative residual of ``b_i * v`` off span(S), v a column of S."""
    S = _span(S, A.dim)
    if S.shape[1] == 0:
        return 0.0
    Q = linalg.column_space(S)
    worst = 0.0
    for i in range(A.dim):
        W = regular_representation(A, A.basis(i)) @ S
        R = W - Q @ (Q.conj().T @ W)
        norms = np.maximum(1.0, np.linalg.norm(W, axis=0))
        worst = max(worst, float(np.max(np.linalg.norm(R, axis=0) / norms)))
    return worst


def is_ideal(A: Algebra, S) -> tuple[bool, float]:
    """Whether the span of the columns of S is an ideal, and the worst violation."""
    S = _span(S, A.dim)
    if linalg.rank(S) < S.shape[1]:
        raise RankDeficient("subspace basis columns are linearly dependent")
    v = closure_violation(A, S)
    return v <= tolerances().ideal, v


def make_ideal(A: Algebra, vectors, check: bool = True) -> Ideal:
    """Ideal spanned by the columns of ``vectors`` (dependent columns allowed)."""
    S = _span(vectors, A.dim)
    Q = linalg.column_space(S) if S.shape[1] else S
    if check:
        ok, v = is_ideal(A, Q)
        if not ok:
            raise NotAnIdeal(f"subspace is not closed under multiplication (violation {v:.3g})")
    return Ideal(Q, A.dim)


def zero_ideal(A: Algebra) -> Ideal:
    return Ideal(np.zeros((A.dim, 0), dtype=complex), A.dim)


def whole_algebra(A: Algebra) -> Ideal:
    return Ideal(np.eye(A.dim, dtype=complex), A.dim)


def principal_ideal(A: Algebra, x) -> Ideal:
    """All multiples ``a * x``: the range of the regular representation of x."""
    return Ideal(linalg.column_space(regular_representation(A, x)), A.dim)


def is_proper(A: Algebra, I: Ideal) -> bool:
    return I.dim < A.dim


def ideal_sum(A: Algebra, I: Ideal, J: Ideal) -> Ideal:
    return make_ideal(A, np.hstack([I.basis, J.basis]), check=False)


def ideal_intersection(A: Algebra, I: Ideal, J: Ideal) -> Ideal:
    # v in both iff v = I a = J b, i.e. (a, b) in the kernel of [I, -J]
    K = linalg.nullspace(np.hstack([I.basis, -J.basis]))
    return make_ideal(A, I.basis @ K[: I.dim], check=False)


def quotient(A: Algebra, I: Ideal) -> QuotientResult:
    """The quotient algebra A / I with its projection and section maps."""
    if not is_proper(A, I):
        raise NotProper("cannot form the quotient by the whole algebra")
    ok, v = is_ideal(A, I.basis)
    if not ok:
        raise NotAnIdeal(f"subspace is not an ideal (violation {v:.3g})")
    Q, P, S = quotient_by_subspace(A, I.basis)
    report = validate_algebra(Q)
    if not report.ok:
        raise ValidationError(report)
    return QuotientResult(Q, P, S)


def character_kernel(A: Algebra, phi: Character) -> Ideal:
    return Ideal(linalg.nullspace(phi.functional[None, :]), A.dim)


def maximal_ideals(A: Algebra) -> list[Ideal]:
    """Kernels of the characters, in the characters' canonical order."""
    out: list[Ideal] = []
    for phi in characters(A):
        K = character_kernel(A, phi)
        if not any(K.same_as(M) for M in out):
            out.append(K)
    return out


def maximal_ideal_containing(A: Algebra, I: Ideal) -> Ideal:
    """A maximal ideal containing the proper ideal I.

    A character of A / I, composed with the projection, is a character of A
    that vanishes on I; its kernel is the answer.
    """
    q = quotient(A, I)
    psi = characters(q.quotient)[0]
    return character_kernel(A, Character(psi.functional @ q.projection))


def _require_function_algebra(A: Algebra):
    if FUNCTION_ALGEBRA not in A.tags:
        raise NotApplicable("operation needs an algebra built by function_algebra")


def vanishing_ideal(A: Algebra, points: Iterable[int]) -> Ideal:
    """Functions vanishing at every point of ``points``."""
    _require_function_algebra(A)
    E = set(int(p) for p in points)
    if any(p < 0 or p >= A.dim for p in E):
        raise IndexError(f"points must lie in 0..{A.dim - 1}")
    keep = [p for p in range(A.dim) if p not in E]
    return Ideal(np.eye(A.dim, dtype=complex)[:, keep], A.dim)


def ideal_to_subset(A: Algebra, I: Ideal) -> frozenset[int]:
    """The set of points where every function of I vanishes."""
    _require_function_algebra(A)
    tol = tolerances().ideal
    row_size = np.linalg.norm(I.basis, axis=1) if I.dim else np.zeros(A.dim)
    E = frozenset(p for p in range(A.dim) if row_size[p] <= tol)
    if not vanishing_ideal(A, E).same_as(I):
        raise NotASubsetIdeal("ideal is not the vanishing ideal of any point set")
    return E


def projection_is_multiplicative(A: Algebra, q: QuotientResult, x, y) -> float:
    """Defect ``|P(xy) - P(x) P(y)|_inf`` of the quotient map on one pair."""
    P = q.projection
    lhs = P @ multiply(A, x, y)
    rhs = multiply(q.quotient, P @ x, P @ y)
    return float(np.max(np.abs(lhs - rhs)))
