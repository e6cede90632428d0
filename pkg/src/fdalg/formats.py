"""JSON file formats for algebras, semigroups and element vectors.

Complex numbers are written as ``[re, im]`` pairs. Floats use Python's
shortest round-trip representation, so save followed by load reproduces
every value bit for bit.

Algebra file::

    {"dim": 2,
     "basis_names": ["1", "t"],
     "structure_constants": [[[[1.0, 0.0], [0.0, 0.0]], ...], ...],
     "identity": [[1.0, 0.0], [0.0, 0.0]],
     "tags": ["polynomial_quotient"]}

Semigroup file::

    {"size": 2, "names": ["0", "1"], "table": [[0, 1], [1, 0]], "identity_index": 0}
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .core import FUNCTION_ALGEBRA, SEMIGROUP_ALGEBRA, Algebra, Check, ValidationReport, validate_algebra
from .errors import ParseError, ValidationError
from .semigroup import Semigroup, validate_semigroup


def _reject_constant(name):
    raise ValueError(f"non-finite number {name} is not allowed")


def parse_json(text: str):
    try:
        return json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _is_number(v):
    return isinstance(v, (int, float)) and not isinstance(v, bool)


def parse_scalar(v, where: str = "value") -> complex:
    """A bare real number or an ``[re, im]`` pair."""
    if _is_number(v):
        z = complex(v)
    elif isinstance(v, list) and len(v) == 2 and all(_is_number(p) for p in v):
        z = complex(float(v[0]), float(v[1]))
    else:
        raise ParseError(f"{where}: expected a number or an [re, im] pair, got {json.dumps(v)[:40]}")
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ParseError(f"{where}: non-finite value")
    return z


def parse_vector(v, n: int | None = None, where: str = "vector") -> np.ndarray:
    if isinstance(v, str):
        v = parse_json(v)
    if not isinstance(v, list):
        raise ParseError(f"{where}: expected a list")
    if n is not None and len(v) != n:
        raise ParseError(f"{where}: expected {n} entries, got {len(v)}")
    return np.array([parse_scalar(x, f"{where}[{i}]") for i, x in enumerate(v)], dtype=complex)


def _pair(z) -> list:
    z = complex(z)
    return [float(z.real), float(z.imag)]


def _nested_pairs(a):
    if np.ndim(a) == 0:
        return _pair(a)
    return [_nested_pairs(x) for x in a]


def _is_flat(v) -> bool:
    if isinstance(v, dict):
        return False
    if isinstance(v, list):
        return all(not isinstance(x, (list, dict)) for x in v)
    return True


def _emit(obj, indent: int) -> str:
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(k)}: {_emit(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, list):
        if all(_is_flat(v) and (not isinstance(v, list) or len(v) <= 2) for v in obj):
            # scalars, or a row of [re, im] pairs
            return "[" + ", ".join(_emit(v, 0) for v in obj) + "]"
        return "[\n" + ",\n".join(inner + _emit(v, indent + 1) for v in obj) + "\n" + pad + "]"
    return json.dumps(obj, allow_nan=False)


def to_text(obj) -> str:
    """Indented JSON with the innermost arrays kept on one line."""
    return _emit(obj, 0) + "\n"


# algebras


def algebra_to_dict(A: Algebra) -> dict:
    d = {
        "dim": A.dim,
        "basis_names": list(A.basis_names),
        "structure_constants": _nested_pairs(A.structure),
        "identity": _nested_pairs(A.identity),
    }
    if A.tags:
        d["tags"] = sorted(A.tags)
    return d


def _require(d, key, where):
    if key not in d:
        raise ParseError(f"{where}: missing key {key!r}")
    return d[key]


def algebra_from_dict(d) -> Algebra:
    if not isinstance(d, dict):
        raise ParseError("algebra file must hold a JSON object")
    n = _require(d, "dim", "algebra")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError("dim: expected a positive integer")
    names = d.get("basis_names", [f"b{i}" for i in range(n)])
    if not isinstance(names, list) or len(names) != n or not all(isinstance(s, str) for s in names):
        raise ParseError(f"basis_names: expected {n} strings")
    raw = _require(d, "structure_constants", "algebra")
    c = np.zeros((n, n, n), dtype=complex)
    if not isinstance(raw, list) or len(raw) != n:
        raise ParseError(f"structure_constants: expected {n} entries")
    for i, plane in enumerate(raw):
        if not isinstance(plane, list) or len(plane) != n:
            raise ParseError(f"structure_constants[{i}]: expected {n} entries")
        for j, row in enumerate(plane):
            c[i, j] = parse_vector(row, n, f"structure_constants[{i}][{j}]")
    e = parse_vector(_require(d, "identity", "algebra"), n, "identity")
    tags = d.get("tags", [])
    if not isinstance(tags, list) or not all(isinstance(t, str) for t in tags):
        raise ParseError("tags: expected a list of strings")
    return Algebra(c, e, tuple(names), frozenset(tags))


def _tag_checks(A: Algebra) -> list[Check]:
    """A tag is a claim about the structure; verify it before trusting it."""
    checks = []
    n = A.dim
    if FUNCTION_ALGEBRA in A.tags:
        expected = np.zeros((n, n, n))
        expected[np.arange(n), np.arange(n), np.arange(n)] = 1
        v = float(max(np.abs(A.structure - expected).max(), np.abs(A.identity - 1).max()))
        checks.append(Check("tag:function_algebra", v, v == 0.0))
    if SEMIGROUP_ALGEBRA in A.tags:
        c = A.structure
        zero_one = np.all((c == 0) | (c == 1))
        one_hot = np.all(c.sum(axis=2) == 1)
        e_ok = np.all((A.identity == 0) | (A.identity == 1)) and A.identity.sum() == 1
        ok = bool(zero_one and one_hot and e_ok)
        checks.append(Check("tag:semigroup_algebra", 0.0 if ok else 1.0, ok))
    return checks


def validate_loaded_algebra(A: Algebra) -> ValidationReport:
    report = validate_algebra(A)
    return ValidationReport(report.checks + tuple(_tag_checks(A)))


def _checked_algebra(d, validate):
    A = algebra_from_dict(d)
    if validate:
        report = validate_loaded_algebra(A)
        if not report.ok:
            raise ValidationError(report)
    return A


def loads_algebra(text: str, validate: bool = True) -> Algebra:
    return _checked_algebra(parse_json(text), validate)


def dumps_algebra(A: Algebra) -> str:
    return to_text(algebra_to_dict(A))


def load_algebra(path, validate: bool = True) -> Algebra:
    return loads_algebra(Path(path).read_text(), validate)


def save_algebra(A: Algebra, path):
    Path(path).write_text(dumps_algebra(A))


# semigroups


def semigroup_to_dict(S: Semigroup) -> dict:
    return {
        "size": S.size,
        "names": list(S.names),
        "table": S.table.tolist(),
        "identity_index": S.identity_index,
    }


def semigroup_from_dict(d) -> Semigroup:
    if not isinstance(d, dict):
        raise ParseError("semigroup file must hold a JSON object")
    n = _require(d, "size", "semigroup")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError("size: expected a positive integer")
    names = d.get("names", [str(i) for i in range(n)])
    if not isinstance(names, list) or len(names) != n or not all(isinstance(s, str) for s in names):
        raise ParseError(f"names: expected {n} strings")
    table = _require(d, "table", "semigroup")
    if not isinstance(table, list) or len(table) != n:
        raise ParseError(f"table: expected {n} rows")
    for i, row in enumerate(table):
        if not isinstance(row, list) or len(row) != n:
            raise ParseError(f"table[{i}]: expected {n} entries")
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise ParseError(f"table[{i}][{j}]: expected an integer in 0..{n - 1}")
    ident = _require(d, "identity_index", "semigroup")
    if not isinstance(ident, int) or isinstance(ident, bool) or not 0 <= ident < n:
        raise ParseError(f"identity_index: expected an integer in 0..{n - 1}")
    return Semigroup(np.array(table, dtype=np.int64), ident, tuple(names))


def _checked_semigroup(d, validate):
    S = semigroup_from_dict(d)
    if validate:
        report = validate_semigroup(S.table, S.identity_index)
        if not report.ok:
            raise ValidationError(report)
    return S


def loads_semigroup(text: str, validate: bool = True) -> Semigroup:
    return _checked_semigroup(parse_json(text), validate)


def dumps_semigroup(S: Semigroup) -> str:
    return to_text(semigroup_to_dict(S))


def load_semigroup(path, validate: bool = True) -> Semigroup:
    return loads_semigroup(Path(path).read_text(), validate)


def save_semigroup(S: Semigroup, path):
    Path(path).write_text(dumps_semigroup(S))


def loads_any(text: str, validate: bool = True) -> Algebra | Semigroup:
    """Load whichever kind of object the document describes."""
    d = parse_json(text)
    if isinstance(d, dict) and "table" in d:
        return _checked_semigroup(d, validate)
    return _checked_algebra(d, validate)


def load_any(path, validate: bool = True) -> Algebra | Semigroup:
    return loads_any(Path(path).read_text(), validate)
