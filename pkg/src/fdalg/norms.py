"""Norms on algebras, normed-algebra checks and Neumann-series inversion."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .chars import characters, spectral_radius
from .config import tolerances
from .core import FUNCTION_ALGEBRA, SEMIGROUP_ALGEBRA, Algebra, multiply, random_element
from .errors import ConvergenceFailure, InapplicableNorm, PreconditionViolated

NEUMANN_MAX_TERMS = 100_000


class NormKind(enum.Enum):
    SUP = "sup"  # max |f(p)| on a function algebra
    L1 = "l1"  # sum |f(a)| on a semigroup algebra
    COORDINATE_L1 = "coordinate-l1"  # sum of |coordinates| on any basis

    @classmethod
    def parse(cls, name: str) -> "NormKind":
        try:
            return cls(name.lower())
        except ValueError:
            choices = ", ".join(k.value for k in cls)
            raise ValueError(f"unknown norm {name!r}; choose one of {choices}") from None


def default_norm(A: Algebra) -> NormKind:
    if FUNCTION_ALGEBRA in A.tags:
        return NormKind.SUP
    if SEMIGROUP_ALGEBRA in A.tags:
        return NormKind.L1
    return NormKind.COORDINATE_L1


def require_applicable(kind: NormKind, A: Algebra):
    if kind is NormKind.SUP and FUNCTION_ALGEBRA not in A.tags:
        raise InapplicableNorm("the sup norm applies to function algebras only")
    if kind is NormKind.L1 and SEMIGROUP_ALGEBRA not in A.tags:
        raise InapplicableNorm("the l1 norm applies to semigroup algebras only")


def norm(kind: NormKind, A: Algebra, x) -> float:
    require_applicable(kind, A)
    x = A.element(x)
    if kind is NormKind.SUP:
        return float(np.max(np.abs(x)))
    return float(np.sum(np.abs(x)))


@dataclass
class NormReport:
    """Worst margins found; a negative margin is a violation of that size."""

    kind: NormKind
    trials: int
    margins: dict = field(default_factory=dict)
    tol: float = 1e-12

    @property
    def ok(self) -> bool:
        return all(m >= -self.tol for m in self.margins.values())

    def to_dict(self):
        return {"norm": self.kind.value, "trials": self.trials, "ok": self.ok, "margins": dict(self.margins)}


def check_normed_algebra(A: Algebra, kind: NormKind, trials: int = 1000, seed=0, tol: float | None = None) -> NormReport:
    """Spot-check the normed-algebra axioms on random pairs.

    Margins: triangle ``|x| + |y| - |x + y|``, submultiplicativity
    ``|x||y| - |xy|``, homogeneity ``-abs(|ax| - |a||x|)`` and the unit
    ``-abs(|e| - 1)``. Negative margins are violations.
    """
    require_applicable(kind, A)
    if tol is None:
        tol = tolerances().norm_margin
    rng = np.random.default_rng(seed)
    tri = sub = hom = math.inf
    for _ in range(trials):
        x = random_element(A, rng)
        y = random_element(A, rng)
        alpha = complex(*rng.normal(size=2))
        nx, ny = norm(kind, A, x), norm(kind, A, y)
        tri = min(tri, nx + ny - norm(kind, A, x + y))
        sub = min(sub, nx * ny - norm(kind, A, multiply(A, x, y)))
        hom = min(hom, -abs(norm(kind, A, alpha * x) - abs(alpha) * nx))
    report = NormReport(kind, trials, tol=tol)
    report.margins = {
        "triangle": tri if trials else 0.0,
        "submultiplicative": sub if trials else 0.0,
        "homogeneity": hom if trials else 0.0,
        "unit": -abs(norm(kind, A, A.identity) - 1),
    }
    return report


def neumann_inverse(A: Algebra, kind: NormKind, lam: complex, x, tol: float | None = None) -> np.ndarray:
    """Inverse of ``lam e - x`` summed as ``lam^-1 sum_j (x / lam)^j``.

    The extra factor ``lam^-1`` (compared with summing ``lam^-j x^j``) makes
    the result an actual inverse; convergence needs ``|x| < |lam|`` either way.
    Partial sums satisfy ``(lam e - x) y_N - e = -(x / lam)^N`` exactly, so
    summation stops once that term is below ``tol * (1 - |x| / |lam|)``,
    which keeps the residual under ``tol``.
    """
    if tol is None:
        tol = tolerances().solve
    x = A.element(x)
    lam = complex(lam)
    nx = norm(kind, A, x)
    if not nx < abs(lam):
        raise PreconditionViolated(f"series needs |x| < |lambda|, got {nx:.6g} >= {abs(lam):.6g}")
    ratio = nx / abs(lam)
    stop = tol * (1 - ratio)
    step = x / lam
    term = A.identity.copy()
    total = np.zeros(A.dim, dtype=complex)
    for _ in range(NEUMANN_MAX_TERMS):
        if norm(kind, A, term) < stop:
            return total / lam
        total += term
        term = multiply(A, term, step)
    raise ConvergenceFailure(f"series did not reach tolerance in {NEUMANN_MAX_TERMS} terms")


@dataclass
class SpectralBoundReport:
    norm: float
    spectral_radius: float
    max_character_value: float
    tol: float

    @property
    def spectral_margin(self) -> float:
        return self.norm - self.spectral_radius

    @property
    def character_margin(self) -> float:
        return self.norm - self.max_character_value

    @property
    def ok(self) -> bool:
        return self.spectral_margin >= -self.tol and self.character_margin >= -self.tol

    def to_dict(self):
        return {
            "ok": self.ok,
            "norm": self.norm,
            "spectral_radius": self.spectral_radius,
            "max_character_value": self.max_character_value,
            "spectral_margin": self.spectral_margin,
            "character_margin": self.character_margin,
        }


def verify_spectral_bounds(A: Algebra, kind: NormKind, x, tol: float | None = None) -> SpectralBoundReport:
    """Compare |x| with the spectral radius and with every |phi(x)|."""
    if tol is None:
        tol = tolerances().bound
    nx = norm(kind, A, x)
    x = A.element(x)
    rho = spectral_radius(A, x)
    top = max(abs(phi(x)) for phi in characters(A))
    return SpectralBoundReport(nx, rho, top, tol)
