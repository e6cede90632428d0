"""Command-line interface.

Exit codes: 0 for a completed computation (including mathematical negatives
such as a non-invertible element), 1 when an input fails validation or a
``check`` finds violations, 2 for usage and I/O errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import catalog, formats
from .chars import characters, check_character, spectrum, witness_noninvertible
from .core import Algebra, invert, multiply, random_element, regular_representation, validate_algebra
from .errors import (
    ConvergenceFailure,
    DimensionMismatch,
    InapplicableNorm,
    NotApplicable,
    NotAnIdeal,
    NotInvertible,
    NotProper,
    ParseError,
    PreconditionViolated,
    RankDeficient,
    ValidationError,
)
from .ideals import make_ideal, maximal_ideals, quotient
from .linalg import set_distance
from .norms import NormKind, check_normed_algebra, default_norm, neumann_inverse, verify_spectral_bounds
from .semigroup import (
    Semigroup,
    convolve,
    delta,
    semicharacter_defect,
    semicharacters,
    semigroup_algebra,
    validate_semigroup,
)

DEFAULT_DIGITS = 12


class UsageError(Exception):
    pass


def _clean(v: float, digits: int) -> float | int:
    if digits < 17:
        v = round(v, digits)
    if v == 0:
        return 0
    if float(v).is_integer() and abs(v) < 2**53:
        return int(v)
    return v


def show_scalar(z, digits: int):
    """A real number when the imaginary part rounds to zero, else ``[re, im]``."""
    z = complex(z)
    re, im = _clean(z.real, digits), _clean(z.imag, digits)
    return re if im == 0 else [re, im]


def show_vector(v, digits: int) -> list:
    return [show_scalar(z, digits) for z in v]


def _round_algebra(A: Algebra, digits: int) -> Algebra:
    if digits >= 17:
        return A
    c = np.round(A.structure, digits) + 0.0
    e = np.round(A.identity, digits) + 0.0
    return Algebra(c, e, A.basis_names, A.tags)


def _emit(obj):
    sys.stdout.write(formats.to_text(obj))


def _load_algebra(path) -> Algebra:
    obj = _load_any(path)
    if isinstance(obj, Semigroup):
        raise UsageError(f"{path} holds a semigroup; this command needs an algebra")
    return obj


def _load_semigroup(path) -> Semigroup:
    obj = _load_any(path)
    if not isinstance(obj, Semigroup):
        raise UsageError(f"{path} holds an algebra; this command needs a semigroup")
    return obj


def _load_any(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None
    return formats.loads_any(text)


def _element(A: Algebra, text: str) -> np.ndarray:
    return formats.parse_vector(text, A.dim, "element")


# subcommands


def cmd_validate(args):
    try:
        text = Path(args.file).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc.strerror or exc}") from None
    obj = formats.loads_any(text, validate=False)
    if isinstance(obj, Semigroup):
        report = validate_semigroup(obj.table, obj.identity_index)
        kind = "semigroup"
    else:
        report = formats.validate_loaded_algebra(obj)
        kind = "algebra"
    _emit({"kind": kind, **report.to_dict()})
    return 0 if report.ok else 1


def cmd_spectrum(args):
    A = _load_algebra(args.algebra)
    sp = spectrum(A, _element(A, args.element))
    _emit({
        "values": show_vector(sp.values, args.digits),
        "multiplicities": list(sp.multiplicities),
    })
    return 0


def cmd_characters(args):
    A = _load_algebra(args.algebra)
    chars = characters(A, args.seed)
    _emit({"count": len(chars), "characters": [show_vector(phi.functional, args.digits) for phi in chars]})
    return 0


def cmd_maximal_ideals(args):
    A = _load_algebra(args.algebra)
    out = []
    for I in maximal_ideals(A):
        out.append({"dim": I.dim, "basis": [show_vector(v, args.digits) for v in I.basis.T]})
    _emit({"count": len(out), "maximal_ideals": out})
    return 0


def cmd_quotient(args):
    A = _load_algebra(args.algebra)
    vectors = formats.parse_json(args.ideal)
    if not isinstance(vectors, list):
        raise UsageError("--ideal must be a JSON list of basis vectors")
    cols = [formats.parse_vector(v, A.dim, f"ideal[{i}]") for i, v in enumerate(vectors)]
    basis = np.array(cols).T if cols else np.zeros((A.dim, 0))
    q = quotient(A, make_ideal(A, basis))
    sys.stdout.write(formats.dumps_algebra(_round_algebra(q.quotient, args.digits)))
    return 0


def cmd_invert(args):
    A = _load_algebra(args.algebra)
    x = _element(A, args.element)
    if args.neumann:
        if args.lam is None:
            raise UsageError("--neumann needs --lambda")
        lam = formats.parse_scalar(formats.parse_json(args.lam), "lambda")
        kind = NormKind.parse(args.norm) if args.norm else default_norm(A)
        try:
            y = neumann_inverse(A, kind, lam, x)
        except PreconditionViolated as exc:
            _emit({"result": "PRECONDITION_VIOLATED", "reason": str(exc)})
            return 0
        _emit({"result": "INVERTED", "method": "neumann", "norm": kind.value, "inverse": show_vector(y, args.digits)})
        return 0
    try:
        y = invert(A, x)
    except NotInvertible:
        phi = witness_noninvertible(A, x)
        _emit({"result": "NOT_INVERTIBLE", "witness": show_vector(phi.functional, args.digits)})
        return 0
    _emit({"result": "INVERTED", "method": "direct", "inverse": show_vector(y, args.digits)})
    return 0


def cmd_semigroup_algebra(args):
    S = _load_semigroup(args.semigroup)
    sys.stdout.write(formats.dumps_algebra(semigroup_algebra(S)))
    return 0


def cmd_semicharacters(args):
    S = _load_semigroup(args.semigroup)
    rows = [show_vector(Phi.values, args.digits) for Phi in semicharacters(S, args.seed)]
    _emit({"elements": list(S.names), "count": len(rows), "semicharacters": rows})
    return 0


def cmd_convolve(args):
    S = _load_semigroup(args.semigroup)
    f1 = formats.parse_vector(args.f1, S.size, "f1")
    f2 = formats.parse_vector(args.f2, S.size, "f2")
    sys.stdout.write(json.dumps(show_vector(convolve(S, f1, f2), args.digits)) + "\n")
    return 0


def run_checks(A: Algebra, kind: NormKind, trials: int, seed: int, S: Semigroup | None = None) -> dict:
    """Randomized invariant suite; every entry carries an ``ok`` flag."""
    rng = np.random.default_rng(seed)
    results = {}

    report = validate_algebra(A)
    results["axioms"] = report.to_dict()

    chars = characters(A)
    results["characters"] = {
        "count": len(chars),
        "worst_defect": max(check_character(A, phi) for phi in chars),
    }
    results["characters"]["ok"] = results["characters"]["worst_defect"] <= 1e-8

    comm = assoc = hom = spec = 0.0
    for _ in range(trials):
        x, y, z = (random_element(A, rng) for _ in range(3))
        xy = multiply(A, x, y)
        comm = max(comm, float(np.max(np.abs(xy - multiply(A, y, x)))))
        scale = np.linalg.norm(x) * np.linalg.norm(y) * np.linalg.norm(z)
        d = np.max(np.abs(multiply(A, xy, z) - multiply(A, x, multiply(A, y, z)))) / max(scale, 1.0)
        assoc = max(assoc, float(d))
        Mxy = regular_representation(A, xy)
        hom = max(hom, float(np.max(np.abs(Mxy - regular_representation(A, x) @ regular_representation(A, y)))))
        spec = max(spec, set_distance([phi(x) for phi in chars], spectrum(A, x).values))
    results["commutativity"] = {"worst": comm, "ok": comm <= 1e-12}
    results["associativity"] = {"worst": assoc, "ok": assoc <= 1e-9}
    results["regular_representation"] = {"worst": hom, "ok": hom <= 1e-9}
    results["spectrum_vs_characters"] = {"worst": spec, "ok": spec <= 1e-7}

    results["norm"] = check_normed_algebra(A, kind, trials, seed).to_dict()
    worst_bound = min(
        min(r.spectral_margin, r.character_margin)
        for r in (verify_spectral_bounds(A, kind, random_element(A, rng)) for _ in range(max(1, trials // 10)))
    )
    results["spectral_bounds"] = {"worst_margin": worst_bound, "ok": worst_bound >= -1e-8}

    if S is not None:
        sg = {}
        table_ok = all(
            np.array_equal(convolve(S, delta(S, a), delta(S, b)), delta(S, S.add(a, b)))
            for a in range(S.size)
            for b in range(S.size)
        )
        sg["delta_convolution_matches_table"] = table_ok
        worst = 0.0
        for Phi in semicharacters(S):
            d = semicharacter_defect(S, Phi.values)
            worst = max(worst, d["identity"], d["multiplicativity"], d["bound"])
        sg["worst_semicharacter_defect"] = worst
        sg["ok"] = table_ok and worst <= 1e-9
        results["semigroup"] = sg

    results["ok"] = all(v.get("ok", True) for v in results.values() if isinstance(v, dict))
    return results


def cmd_check(args):
    obj = _load_any(args.file)
    S = obj if isinstance(obj, Semigroup) else None
    A = semigroup_algebra(S) if S is not None else obj
    kind = NormKind.parse(args.norm) if args.norm else default_norm(A)
    results = run_checks(A, kind, args.trials, args.seed, S)
    _emit(_rounded(results, args.digits))
    return 0 if results["ok"] else 1


def _rounded(obj, digits):
    if isinstance(obj, dict):
        return {k: _rounded(v, digits) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_rounded(v, digits) for v in obj]
    if isinstance(obj, float):
        return float(f"{obj:.{min(digits, 17)}g}") + 0.0
    return obj


def cmd_catalog(args):
    out = Path(args.directory)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name, A in {**catalog.function_algebras(), **catalog.polynomial_algebras()}.items():
        path = out / (_slug(name) + ".alg.json")
        formats.save_algebra(A, path)
        written.append(path.name)
    for name, S in catalog.semigroups().items():
        path = out / (_slug(name) + ".sg.json")
        formats.save_semigroup(S, path)
        written.append(path.name)
    _emit({"written": written})
    return 0


def _slug(name: str) -> str:
    for a, b in [("C[t]/(", "poly_"), (")", ""), ("^", ""), ("-", "_minus_")]:
        name = name.replace(a, b)
    return name


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fdalg", description="Finite-dimensional commutative algebras over C.")
    p.add_argument("--digits", type=int, default=DEFAULT_DIGITS, help="decimal places in printed results (17 = full)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check the axioms of an algebra or semigroup file")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("spectrum", help="spectrum of an element")
    s.add_argument("algebra")
    s.add_argument("--element", required=True, help="JSON list of coordinates")
    s.set_defaults(func=cmd_spectrum)

    s = sub.add_parser("characters", help="all characters as functionals")
    s.add_argument("algebra")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_characters)

    s = sub.add_parser("maximal-ideals", help="bases of all maximal ideals")
    s.add_argument("algebra")
    s.set_defaults(func=cmd_maximal_ideals)

    s = sub.add_parser("quotient", help="quotient by an ideal, written as an algebra file")
    s.add_argument("algebra")
    s.add_argument("--ideal", required=True, help="JSON list of spanning vectors")
    s.set_defaults(func=cmd_quotient)

    s = sub.add_parser("invert", help="invert an element")
    s.add_argument("algebra")
    s.add_argument("--element", required=True)
    s.add_argument("--neumann", action="store_true", help="invert lambda*e - x by the geometric series")
    s.add_argument("--lambda", dest="lam", help="number or [re, im]")
    s.add_argument("--norm", choices=[k.value for k in NormKind])
    s.set_defaults(func=cmd_invert)

    s = sub.add_parser("semigroup-algebra", help="convolution algebra of a semigroup")
    s.add_argument("semigroup")
    s.set_defaults(func=cmd_semigroup_algebra)

    s = sub.add_parser("semicharacters", help="table of semicharacters")
    s.add_argument("semigroup")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_semicharacters)

    s = sub.add_parser("convolve", help="convolution of two functions on a semigroup")
    s.add_argument("semigroup")
    s.add_argument("--f1", required=True)
    s.add_argument("--f2", required=True)
    s.set_defaults(func=cmd_convolve)

    s = sub.add_parser("check", help="randomized invariant report")
    s.add_argument("file")
    s.add_argument("--norm", choices=[k.value for k in NormKind])
    s.add_argument("--trials", type=int, default=200)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("catalog", help="write the built-in catalog as files")
    s.add_argument("directory")
    s.set_defaults(func=cmd_catalog)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"fdalg: validation failed: {exc}", file=sys.stderr)
        return 1
    except ConvergenceFailure as exc:
        print(f"fdalg: numerical failure: {exc}", file=sys.stderr)
        return 1
    except (
        UsageError,
        ParseError,
        DimensionMismatch,
        InapplicableNorm,
        NotApplicable,
        NotAnIdeal,
        NotProper,
        RankDeficient,
        ValueError,
    ) as exc:
        print(f"fdalg: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
