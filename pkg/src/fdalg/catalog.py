"""Named test objects: function algebras, semigroups and polynomial quotients."""

from __future__ import annotations

from functools import lru_cache

from .core import Algebra, function_algebra, polynomial_quotient_algebra
from .semigroup import (
    Semigroup,
    cyclic_group,
    direct_product,
    max_chain,
    semigroup_algebra,
    truncation_monoid,
)

# monic, highest degree first; all have coefficients that keep the
# coordinate l1 norm submultiplicative
POLYNOMIALS = {
    "t": [1, 0],
    "t^2": [1, 0, 0],
    "t^2-1": [1, 0, -1],
    "t^3-1": [1, 0, 0, -1],
    "t^3-t": [1, 0, -1, 0],
    "t^3-t^2": [1, -1, 0, 0],
    "t^4-1": [1, 0, 0, 0, -1],
    "t^4-t^2": [1, 0, -1, 0, 0],
    "t^5": [1, 0, 0, 0, 0, 0],
    "t^5-1": [1, 0, 0, 0, 0, -1],
    "t^5-t^3": [1, 0, -1, 0, 0, 0],
}


@lru_cache(maxsize=None)
def semigroups() -> dict[str, Semigroup]:
    out = {}
    for n in range(1, 7):
        out[f"Z{n}"] = cyclic_group(n)
    for k in range(1, 5):
        out[f"chain{k}"] = max_chain(k)
    for k in range(1, 5):
        out[f"trunc{k}"] = truncation_monoid(k)
    for a, b in [
        ("Z2", "Z2"),
        ("Z2", "Z3"),
        ("Z2", "Z6"),
        ("Z3", "Z4"),
        ("Z2", "chain1"),
        ("chain1", "chain1"),
        ("chain2", "Z3"),
        ("trunc2", "Z2"),
        ("trunc1", "chain1"),
        ("trunc3", "Z3"),
    ]:
        out[f"{a}x{b}"] = direct_product(out[a], out[b])
    return out


@lru_cache(maxsize=None)
def function_algebras() -> dict[str, Algebra]:
    return {f"fn{n}": function_algebra(n) for n in range(1, 7)}


@lru_cache(maxsize=None)
def semigroup_algebras() -> dict[str, Algebra]:
    return {f"C[{name}]": semigroup_algebra(S) for name, S in semigroups().items()}


@lru_cache(maxsize=None)
def polynomial_algebras() -> dict[str, Algebra]:
    return {f"C[t]/({name})": polynomial_quotient_algebra(p) for name, p in POLYNOMIALS.items()}


def algebras() -> dict[str, Algebra]:
    return {**function_algebras(), **semigroup_algebras(), **polynomial_algebras()}


def small_semigroups(max_size: int = 5) -> dict[str, Semigroup]:
    return {k: S for k, S in semigroups().items() if S.size <= max_size}
