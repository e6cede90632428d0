"""Commutative algebras with identity, given by structure constants.

An algebra of dimension n is stored as a dense tensor ``c`` of shape
(n, n, n) with ``b_i * b_j = sum_k c[i, j, k] b_k`` and a coordinate vector
for the identity. Elements are plain complex numpy vectors of length n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import linalg
from .config import tolerances
from .errors import DimensionMismatch, NotInvertible, SingularMatrix

FUNCTION_ALGEBRA = "function_algebra"
SEMIGROUP_ALGEBRA = "semigroup_algebra"
POLYNOMIAL_QUOTIENT = "polynomial_quotient"


@dataclass(frozen=True, eq=False)
class Algebra:
    structure: np.ndarray
    identity: np.ndarray
    basis_names: tuple = ()
    tags: frozenset = frozenset()

    def __post_init__(self):
        c = np.array(self.structure, dtype=complex)
        if c.ndim != 3 or c.shape[0] < 1 or len(set(c.shape)) != 1:
            raise DimensionMismatch(f"structure constants must have shape (n, n, n), got {c.shape}")
        if not np.all(np.isfinite(c)):
            raise ValueError("structure constants must be finite")
        n = c.shape[0]
        e = linalg.as_vector(np.array(self.identity, dtype=complex), n)
        names = tuple(str(s) for s in self.basis_names) or tuple(f"b{i}" for i in range(n))
        if len(names) != n:
            raise DimensionMismatch(f"{len(names)} basis names for dimension {n}")
        c.setflags(write=False)
        e = e.copy()
        e.setflags(write=False)
        object.__setattr__(self, "structure", c)
        object.__setattr__(self, "identity", e)
        object.__setattr__(self, "basis_names", names)
        object.__setattr__(self, "tags", frozenset(self.tags))

    @property
    def dim(self) -> int:
        return self.structure.shape[0]

    def element(self, coords) -> np.ndarray:
        return linalg.as_vector(coords, self.dim)

    def basis(self, i: int) -> np.ndarray:
        v = np.zeros(self.dim, dtype=complex)
        v[i] = 1
        return v

    def zero(self) -> np.ndarray:
        return np.zeros(self.dim, dtype=complex)

    def __repr__(self):
        tags = ",".join(sorted(self.tags))
        return f"Algebra(dim={self.dim}, basis={list(self.basis_names)}, tags=[{tags}])"


@dataclass(frozen=True)
class Check:
    name: str
    violation: float
    ok: bool
    where: tuple | None = None

    def to_dict(self):
        d = {"name": self.name, "violation": self.violation, "ok": self.ok}
        if self.where is not None:
            d["where"] = [int(i) for i in self.where]
        return d


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def __bool__(self):
        return self.ok

    def __getitem__(self, name) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.ok), None)

    def to_dict(self):
        return {"ok": self.ok, "checks": [c.to_dict() for c in self.checks]}


def _worst(diff):
    diff = np.abs(diff)
    if diff.size == 0:
        return 0.0, None
    idx = np.unravel_index(np.argmax(diff), diff.shape)
    return float(diff[idx]), tuple(int(i) for i in idx)


def validate_algebra(A: Algebra, tol: float | None = None) -> ValidationReport:
    """Check commutativity, associativity, the identity law and e != 0."""
    if tol is None:
        tol = tolerances().axiom
    c = A.structure
    checks = []

    v, where = _worst(c - c.transpose(1, 0, 2))
    checks.append(Check("commutativity", v, v <= tol, where if v > tol else None))

    # (b_i b_j) b_k versus b_i (b_j b_k)
    left = np.einsum("ijm,mkl->ijkl", c, c)
    right = np.einsum("jkm,iml->ijkl", c, c)
    v, where = _worst(left - right)
    checks.append(Check("associativity", v, v <= tol, where if v > tol else None))

    Me = regular_representation(A, A.identity)
    v, where = _worst(Me - np.eye(A.dim))
    checks.append(Check("identity_law", v, v <= tol, where if v > tol else None))

    norm_e = float(np.max(np.abs(A.identity)))
    checks.append(Check("identity_nonzero", 0.0 if norm_e > tol else 1.0, norm_e > tol))
    return ValidationReport(tuple(checks))


def multiply(A: Algebra, x, y) -> np.ndarray:
    x, y = A.element(x), A.element(y)
    return np.einsum("i,j,ijk->k", x, y, A.structure)


def power(A: Algebra, x, k: int) -> np.ndarray:
    result = A.identity.copy()
    x = A.element(x)
    for _ in range(k):
        result = multiply(A, result, x)
    return result


def regular_representation(A: Algebra, x) -> np.ndarray:
    """Matrix of ``y -> x * y`` in the basis of A."""
    x = A.element(x)
    return np.einsum("i,ijk->kj", x, A.structure)


def traces(A: Algebra) -> np.ndarray:
    """``tau[k] = trace of the regular representation of b_k``."""
    return np.einsum("kll->k", A.structure)


def invert(A: Algebra, x) -> np.ndarray:
    """Inverse of x; raises :class:`NotInvertible` if x has none."""
    try:
        y = linalg.solve(regular_representation(A, x), A.identity)
    except SingularMatrix:
        raise NotInvertible("element is not invertible") from None
    return y


def is_invertible(A: Algebra, x) -> bool:
    M = regular_representation(A, x)
    return linalg.rank(M) == A.dim


def random_element(A: Algebra, rng: np.random.Generator) -> np.ndarray:
    """Coordinates drawn uniformly from the closed unit disc."""
    r = np.sqrt(rng.uniform(size=A.dim))
    theta = rng.uniform(0, 2 * np.pi, size=A.dim)
    return r * np.exp(1j * theta)


def function_algebra(n: int) -> Algebra:
    """Complex functions on an n-point set under pointwise product."""
    if n < 1:
        raise ValueError("function algebra needs at least one point")
    c = np.zeros((n, n, n), dtype=complex)
    for i in range(n):
        c[i, i, i] = 1
    return Algebra(c, np.ones(n), tuple(f"p{i}" for i in range(n)), frozenset({FUNCTION_ALGEBRA}))


def polynomial_quotient_algebra(coeffs: Sequence) -> Algebra:
    """C[t]/(p) for a monic p, coefficients given highest degree first.

    ``[1, 0, -1]`` is t^2 - 1. The basis is 1, t, ..., t^(d-1).
    """
    p = np.asarray(coeffs, dtype=complex)
    if p.ndim != 1 or len(p) < 2:
        raise ValueError("polynomial must have degree at least 1")
    if p[0] != 1:
        raise ValueError("polynomial must be monic")
    d = len(p) - 1
    low = p[::-1][:d]  # a_0 .. a_{d-1}
    # reduced coordinates of t^m for m = 0 .. 2d-2
    powers = np.zeros((2 * d - 1, d), dtype=complex)
    powers[0, 0] = 1
    for m in range(1, 2 * d - 1):
        prev = powers[m - 1]
        nxt = np.zeros(d, dtype=complex)
        nxt[1:] = prev[:-1]
        nxt -= prev[-1] * low
        powers[m] = nxt
    c = np.zeros((d, d, d), dtype=complex)
    for i in range(d):
        for j in range(d):
            c[i, j] = powers[i + j]
    names = ["1", "t"] + [f"t^{k}" for k in range(2, d)]
    return Algebra(c, powers[0], tuple(names[:d]), frozenset({POLYNOMIAL_QUOTIENT}))


def quotient_by_subspace(A: Algebra, Q) -> tuple[Algebra, np.ndarray, np.ndarray]:
    """Algebra structure on A / span(Q) for an ideal with orthonormal basis Q.

    Returns ``(quotient, projection, section)``; the section is the
    orthonormal complement of the ideal and ``projection`` its conjugate
    transpose, so ``projection @ section`` is the identity.
    """
    Q = linalg.as_matrix(Q)
    S = linalg.orthonormal_complement(Q)
    P = S.conj().T
    # products of section vectors, projected back
    c = np.einsum("ia,jb,ijk,ck->abc", S, S, A.structure, P)
    e = P @ A.identity
    return Algebra(c, e), P, S


def random_elements(A: Algebra, count: int, seed) -> Iterable[np.ndarray]:
    rng = np.random.default_rng(seed)
    for _ in range(count):
        yield random_element(A, rng)
