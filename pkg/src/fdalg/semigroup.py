"""Finite commutative semigroups with identity and their convolution algebras."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .chars import Character, characters
from .config import tolerances
from .core import SEMIGROUP_ALGEBRA, Algebra, Check, ValidationReport
from .errors import DimensionMismatch, ValidationError


@dataclass(frozen=True, eq=False)
class Semigroup:
    table: np.ndarray
    identity_index: int = 0
    names: tuple = ()

    def __post_init__(self):
        t = np.array(self.table)
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] < 1:
            raise DimensionMismatch(f"Cayley table must be square and non-empty, got shape {t.shape}")
        if not np.issubdtype(t.dtype, np.integer):
            if not np.all(np.equal(np.mod(t, 1), 0)):
                raise ValueError("Cayley table entries must be integers")
            t = t.astype(int)
        n = t.shape[0]
        if t.min() < 0 or t.max() >= n:
            raise ValueError(f"Cayley table entries must lie in 0..{n - 1}")
        if not 0 <= int(self.identity_index) < n:
            raise ValueError(f"identity index must lie in 0..{n - 1}")
        names = tuple(str(s) for s in self.names) or tuple(str(i) for i in range(n))
        if len(names) != n:
            raise DimensionMismatch(f"{len(names)} names for {n} elements")
        t = t.astype(np.int64)
        t.setflags(write=False)
        object.__setattr__(self, "table", t)
        object.__setattr__(self, "identity_index", int(self.identity_index))
        object.__setattr__(self, "names", names)

    @property
    def size(self) -> int:
        return self.table.shape[0]

    def add(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    @cached_property
    def _pairs(self):
        # unordered pairs x <= y, grouped in a fixed order
        x, y = np.triu_indices(self.size)
        return x, y, self.table[x, y]

    def __repr__(self):
        return f"Semigroup(size={self.size}, identity={self.identity_index})"


@dataclass(frozen=True)
class Semicharacter:
    values: np.ndarray

    def __call__(self, a: int) -> complex:
        return complex(self.values[a])


def validate_semigroup(table, identity_index: int = 0) -> ValidationReport:
    """Exact checks of commutativity, the identity law and associativity."""
    t = np.asarray(table)
    out_of_range = ValidationReport((Check("range", 1.0, False),))
    if t.ndim != 2 or t.size == 0 or t.shape[0] != t.shape[1]:
        return out_of_range
    n = t.shape[0]
    if t.min() < 0 or t.max() >= n or not 0 <= identity_index < n:
        return out_of_range
    checks = []

    bad = np.argwhere(t != t.T)
    checks.append(Check("commutativity", float(len(bad)), len(bad) == 0, tuple(bad[0]) if len(bad) else None))

    bad = np.flatnonzero(t[:, identity_index] != np.arange(n))
    checks.append(Check("identity_law", float(len(bad)), len(bad) == 0, (int(bad[0]),) if len(bad) else None))

    # (a+b)+c versus a+(b+c) for all triples at once
    left = t[t]  # left[a, b, c] = t[t[a, b], c]
    right = t[:, t]  # right[a, b, c] = t[a, t[b, c]]
    bad = np.argwhere(left != right)
    checks.append(Check("associativity", float(len(bad)), len(bad) == 0, tuple(bad[0]) if len(bad) else None))
    return ValidationReport(tuple(checks))


def _require_valid(S: Semigroup):
    report = validate_semigroup(S.table, S.identity_index)
    if not report.ok:
        raise ValidationError(report)


def _fvec(S, f):
    f = np.asarray(f, dtype=complex)
    if f.shape != (S.size,):
        raise DimensionMismatch(f"function vector must have length {S.size}, got shape {f.shape}")
    return f


def _cmul(u, v):
    # numpy's complex multiply may fuse operations asymmetrically; building
    # the product from real ufuncs makes it exactly symmetric in u and v
    re = u.real * v.real - u.imag * v.imag
    im = u.real * v.imag + u.imag * v.real
    return re + 1j * im


def convolve(S: Semigroup, f1, f2) -> np.ndarray:
    """``(f1 * f2)(z) = sum over x + y = z of f1(x) f2(y)``.

    Each unordered pair {x, y} contributes ``f1(x)f2(y) + f1(y)f2(x)`` (once
    when x = y) and pairs are accumulated in a fixed order, so swapping the
    arguments gives a bit-identical result.
    """
    f1 = _fvec(S, f1)
    f2 = _fvec(S, f2)
    x, y, z = S._pairs
    terms = _cmul(f1[x], f2[y])
    off = x != y
    terms[off] = terms[off] + _cmul(f1[y[off]], f2[x[off]])
    out = np.zeros(S.size, dtype=complex)
    np.add.at(out, z, terms)
    return out


def delta(S: Semigroup, a: int) -> np.ndarray:
    if not 0 <= a < S.size:
        raise IndexError(f"element index {a} out of range 0..{S.size - 1}")
    f = np.zeros(S.size, dtype=complex)
    f[a] = 1
    return f


def semigroup_algebra(S: Semigroup) -> Algebra:
    """Functions on S under convolution, in the basis of point masses."""
    _require_valid(S)
    n = S.size
    c = np.zeros((n, n, n), dtype=complex)
    i, j = np.indices((n, n))
    c[i, j, S.table] = 1
    return Algebra(c, delta(S, S.identity_index), tuple(f"d[{s}]" for s in S.names), frozenset({SEMIGROUP_ALGEBRA}))


def semicharacter_defect(S: Semigroup, values) -> dict:
    """Violations of the semicharacter conditions for a candidate value vector."""
    v = np.asarray(values, dtype=complex)
    mult = np.abs(v[S.table] - np.outer(v, v))
    return {
        "identity": float(abs(v[S.identity_index] - 1)),
        "multiplicativity": float(mult.max()),
        "bound": float(max(0.0, np.abs(v).max() - 1)),
    }


def is_semicharacter(S: Semigroup, values, tol: float | None = None) -> bool:
    if tol is None:
        tol = tolerances().char
    return all(d <= tol for d in semicharacter_defect(S, values).values())


def semicharacters(S: Semigroup, seed: int = 0) -> list[Semicharacter]:
    """Semicharacters, read off as the values of characters on point masses."""
    A = semigroup_algebra(S)
    out = []
    for phi in characters(A, seed):
        # phi(delta_a) is the a-th coordinate of the functional
        values = phi.functional.copy()
        if not is_semicharacter(S, values):
            raise ValueError("character restricted to point masses is not a semicharacter")
        out.append(Semicharacter(values))
    return out


def character_from_semicharacter(S: Semigroup, Phi: Semicharacter) -> Character:
    """The character ``f -> sum_a Phi(a) f(a)``."""
    if not is_semicharacter(S, Phi.values):
        raise ValueError(f"not a semicharacter: {semicharacter_defect(S, Phi.values)}")
    return Character(np.asarray(Phi.values, dtype=complex).copy())


# catalog constructors


def cyclic_group(n: int) -> Semigroup:
    a = np.arange(n)
    return Semigroup((a[:, None] + a[None, :]) % n, 0, tuple(f"{i}" for i in range(n)))


def max_chain(k: int) -> Semigroup:
    """{0, ..., k} with a + b = max(a, b): every element is idempotent."""
    a = np.arange(k + 1)
    return Semigroup(np.maximum(a[:, None], a[None, :]), 0)


def truncation_monoid(k: int) -> Semigroup:
    """{0, ..., k} with a + b = min(a + b, k)."""
    a = np.arange(k + 1)
    return Semigroup(np.minimum(a[:, None] + a[None, :], k), 0)


def direct_product(S: Semigroup, T: Semigroup) -> Semigroup:
    """Componentwise operation; the pair (s, t) has index s * |T| + t."""
    m = T.size
    n = S.size * m
    idx = np.arange(n)
    s, t = idx // m, idx % m
    table = S.table[s[:, None], s[None, :]] * m + T.table[t[:, None], t[None, :]]
    names = tuple(f"({S.names[i]},{T.names[j]})" for i, j in zip(s, t))
    return Semigroup(table, S.identity_index * m + T.identity_index, names)
