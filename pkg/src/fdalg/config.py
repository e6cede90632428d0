"""Numerical tolerances, kept in one place.

Every default below can be scaled at once through the ``FDALG_TOL_SCALE``
environment variable (a positive finite float, e.g. ``FDALG_TOL_SCALE=10``).
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, fields, replace
from functools import lru_cache

ENV_VAR = "FDALG_TOL_SCALE"


@dataclass(frozen=True)
class Tolerances:
    rank: float = 1e-10  # pivot threshold, relative to max |entry|
    solve: float = 1e-8  # residual of linear solves and inverses
    orth: float = 1e-12
    eig: float = 1e-8  # eigen-residual, relative to ||M||
    axiom: float = 1e-9
    char: float = 1e-8
    dedup: float = 1e-7
    ideal: float = 1e-8
    bound: float = 1e-8  # slack in |lambda| <= |x| and |phi(x)| <= |x|
    norm_margin: float = 1e-12  # slack in the normed-algebra inequalities

    def scaled(self, factor: float) -> "Tolerances":
        return replace(self, **{f.name: getattr(self, f.name) * factor for f in fields(self)})


def _parse_scale(raw: str) -> float:
    try:
        value = float(raw)
    except ValueError:
        raise ValueError(f"{ENV_VAR} must be a number, got {raw!r}") from None
    if not math.isfinite(value) or value <= 0:
        raise ValueError(f"{ENV_VAR} must be positive and finite, got {raw!r}")
    return value


@lru_cache(maxsize=None)
def _cached(raw):
    if raw is None:
        return Tolerances()
    return Tolerances().scaled(_parse_scale(raw))


def tolerances() -> Tolerances:
    """Active tolerances (defaults, scaled by the environment override)."""
    return _cached(os.environ.get(ENV_VAR))
