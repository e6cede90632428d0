"""Spectra of elements and characters (homomorphisms onto C).

Eigenvalues of a regular representation lose accuracy badly at defective
eigenvalues (a nilpotent block of size k spreads them by roughly eps**(1/k)).
Both routes here therefore first divide out the radical, the nilpotent
elements, located as the kernel of the trace form ``(x, y) -> tr(M_xy)``.
What remains is a product of copies of C, where every multiplication
operator is diagonalizable and its eigen-data is well conditioned.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import linalg
from .config import tolerances
from .core import (
    Algebra,
    quotient_by_subspace,
    random_element,
    regular_representation,
    traces,
    is_invertible,
)
from .errors import ConvergenceFailure, NotApplicable, SingularMatrix

MAX_DRAWS = 8
_GOLDEN = (1 + 5**0.5) / 2


@dataclass(frozen=True, eq=False)
class Character:
    functional: np.ndarray

    def __call__(self, x) -> complex:
        return complex(self.functional @ np.asarray(x, dtype=complex))

    def __repr__(self):
        return f"Character({np.round(self.functional, 6).tolist()})"


@dataclass(frozen=True)
class Spectrum:
    values: tuple
    multiplicities: tuple

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


@dataclass(frozen=True, eq=False)
class Reduction:
    """A modulo its radical, with the maps between the two."""

    radical: np.ndarray
    algebra: Algebra
    projection: np.ndarray
    section: np.ndarray


def radical_basis(A: Algebra) -> np.ndarray:
    """Orthonormal basis of the nilradical (kernel of the trace form)."""
    form = np.einsum("ijk,k->ij", A.structure, traces(A))
    return linalg.nullspace(form)


@lru_cache(maxsize=512)
def semisimple_reduction(A: Algebra) -> Reduction:
    J = radical_basis(A)
    R, P, S = quotient_by_subspace(A, J)
    return Reduction(J, R, P, S)


def multiplicative_defect(A: Algebra, w) -> float:
    """Worst relative failure of ``w`` to be a character, over basis pairs."""
    w = np.asarray(w, dtype=complex)
    prod = np.einsum("ijk,k->ij", A.structure, w)
    scale = np.outer(1 + np.abs(w), 1 + np.abs(w))
    defect = np.max(np.abs(prod - np.outer(w, w)) / scale)
    return float(max(defect, abs(w @ A.identity - 1)))


def _cluster(vals, tol):
    """Merge values closer than tol; each cluster is replaced by its mean."""
    clusters: list[list[complex]] = []
    for v in vals:
        for c in clusters:
            if abs(np.mean(c) - v) <= tol:
                c.append(v)
                break
        else:
            clusters.append([v])
    means = [complex(np.mean(c)) for c in clusters]
    return sorted(means, key=lambda z: (round(z.real, 9), round(z.imag, 9)))


def canonical_probe(n: int) -> np.ndarray:
    """Fixed element used to give characters a reproducible order."""
    k = np.arange(1, n + 1)
    return np.exp(2j * np.pi * ((k * _GOLDEN) % 1)) / np.sqrt(k)


def _reduced_characters(R: Algebra, seed) -> list[np.ndarray]:
    tol = tolerances()
    for attempt in range(MAX_DRAWS):
        rng = np.random.default_rng([seed, attempt])
        M = regular_representation(R, random_element(R, rng))
        found = []
        for lam in _cluster(linalg.eigenvalues(M), tol.dedup):
            W = linalg.left_eigenvectors(M, lam)
            if W.shape[1] != 1:
                # coincident values of the probe; a fresh draw separates them
                continue
            w = W[:, 0]
            s = w @ R.identity
            if abs(s) <= tol.char:
                continue
            w = w / s
            if multiplicative_defect(R, w) <= tol.char:
                found.append(w)
        if len(found) == R.dim:
            return found
    raise ConvergenceFailure(f"no consistent character set after {MAX_DRAWS} draws")


@lru_cache(maxsize=512)
def _characters(A: Algebra, seed) -> tuple:
    red = semisimple_reduction(A)
    tol = tolerances()
    functionals = []
    for psi in _reduced_characters(red.algebra, seed):
        phi = psi @ red.projection
        if multiplicative_defect(A, phi) > tol.char:
            raise ConvergenceFailure("pulled-back functional is not multiplicative")
        if all(np.max(np.abs(phi - f)) > tol.dedup for f in functionals):
            functionals.append(phi)
    probe = canonical_probe(A.dim)

    def key(f):
        v = complex(f @ probe)
        return (round(v.real, 9), round(v.imag, 9), tuple(np.round(f.real, 9)))

    functionals.sort(key=key)
    out = []
    for f in functionals:
        f = f.copy()
        f.setflags(write=False)
        out.append(Character(f))
    return tuple(out)


def characters(A: Algebra, seed: int = 0) -> list[Character]:
    """Every homomorphism of A onto C, each exactly once, in canonical order."""
    return list(_characters(A, seed))


def check_character(A: Algebra, phi: Character) -> float:
    return multiplicative_defect(A, phi.functional)


def spectrum(A: Algebra, x) -> Spectrum:
    """Distinct eigenvalues of the regular representation of x.

    Multiplicities are the algebraic multiplicities in A, obtained as traces
    of the spectral idempotents; they sum to ``A.dim``.
    """
    x = A.element(x)
    tol = tolerances()
    red = semisimple_reduction(A)
    R = red.algebra
    xr = red.projection @ x
    # diagonalizable in R, so the identity expands in the eigenbasis and
    # the part of that expansion on one eigenvalue is its spectral idempotent
    raw, V = linalg.eigen_decomposition(regular_representation(R, xr))
    values = _cluster(raw, tol.dedup)
    try:
        coeffs = linalg.solve(V, R.identity)
    except SingularMatrix:
        raise ConvergenceFailure("eigenvectors of the reduced operator are not independent") from None
    owner = np.argmin(np.abs(raw[:, None] - np.array(values)[None, :]), axis=1)
    tau = traces(A)
    mults = []
    for i, lam in enumerate(values):
        sel = owner == i
        E = V[:, sel] @ coeffs[sel]
        m = complex(tau @ (red.section @ E))
        k = int(round(m.real))
        if abs(m - k) > 1e-6 or k < 1:
            raise ConvergenceFailure(f"non-integral multiplicity {m} for eigenvalue {lam}")
        mults.append(k)
    if sum(mults) != A.dim:
        raise ConvergenceFailure(f"multiplicities sum to {sum(mults)}, expected {A.dim}")
    return Spectrum(tuple(values), tuple(mults))


def spectral_radius(A: Algebra, x) -> float:
    return max(abs(v) for v in spectrum(A, x).values)


def witness_noninvertible(A: Algebra, x) -> Character:
    """A character vanishing at x; x must not be invertible."""
    x = A.element(x)
    if is_invertible(A, x):
        raise NotApplicable("element is invertible, so no character vanishes on it")
    best = min(characters(A), key=lambda phi: abs(phi(x)))
    bound = tolerances().char * max(1.0, float(np.max(np.abs(x))))
    if abs(best(x)) > bound:
        raise ConvergenceFailure(f"smallest character value {abs(best(x)):.3g} exceeds {bound:.3g}")
    return best
