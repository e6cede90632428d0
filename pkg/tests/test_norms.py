import numpy as np
import pytest

from fdalg import catalog
from fdalg.chars import spectral_radius
from fdalg.config import tolerances
from fdalg.core import function_algebra, invert, multiply, polynomial_quotient_algebra, random_element
from fdalg.errors import InapplicableNorm, PreconditionViolated
from fdalg.norms import (
    NormKind,
    check_normed_algebra,
    default_norm,
    neumann_inverse,
    norm,
    verify_spectral_bounds,
)
from fdalg.semigroup import cyclic_group, semigroup_algebra

from conftest import ALGEBRAS, algebra_params

FN4 = function_algebra(4)
T2 = polynomial_quotient_algebra([1, 0, 0])
Z2 = semigroup_algebra(cyclic_group(2))


def test_norm_examples():
    assert norm(NormKind.SUP, FN4, [1, -3, 2j, 0]) == 3
    assert norm(NormKind.L1, Z2, [3, -4j]) == 7
    assert norm(NormKind.COORDINATE_L1, T2, [1, -2]) == 3
    assert norm(NormKind.COORDINATE_L1, FN4, [1, 1, 1, 1]) == 4


def test_inapplicable_norms():
    with pytest.raises(InapplicableNorm):
        norm(NormKind.SUP, T2, [1, 0])
    with pytest.raises(InapplicableNorm):
        norm(NormKind.L1, FN4, [1, 0, 0, 0])


def test_parse_and_default():
    assert NormKind.parse("SUP") is NormKind.SUP
    assert NormKind.parse("coordinate-l1") is NormKind.COORDINATE_L1
    with pytest.raises(ValueError):
        NormKind.parse("l2")
    assert default_norm(FN4) is NormKind.SUP
    assert default_norm(Z2) is NormKind.L1
    assert default_norm(T2) is NormKind.COORDINATE_L1


def test_sup_norm_axioms_on_fn4():
    r = check_normed_algebra(FN4, NormKind.SUP, trials=1000)
    assert r.ok, r.margins


@pytest.mark.parametrize("name", sorted(catalog.semigroup_algebras()))
def test_l1_axioms_on_semigroup_algebras(name):
    r = check_normed_algebra(ALGEBRAS[name], NormKind.L1, trials=300)
    assert r.ok, r.margins


@pytest.mark.parametrize("name", sorted(catalog.polynomial_algebras()))
def test_coordinate_l1_axioms_on_polynomial_algebras(name):
    r = check_normed_algebra(ALGEBRAS[name], NormKind.COORDINATE_L1, trials=300)
    assert r.ok, r.margins


def test_coordinate_l1_fails_when_unit_is_not_a_basis_vector():
    # C[t]/(t^2 - 4) with t^2 = 4 breaks submultiplicativity
    A = polynomial_quotient_algebra([1, 0, -4])
    r = check_normed_algebra(A, NormKind.COORDINATE_L1, trials=200)
    assert not r.ok and r.margins["submultiplicative"] < 0


def test_neumann_examples():
    y = neumann_inverse(T2, NormKind.COORDINATE_L1, 2, [0, 1])
    assert np.allclose(y, [0.5, 0.25], atol=1e-9)
    y = neumann_inverse(FN4, NormKind.SUP, 1, [0.5, -0.5, 0.25j, 0])
    assert np.allclose(y, 1 / (1 - np.array([0.5, -0.5, 0.25j, 0])), atol=1e-8)
    with pytest.raises(PreconditionViolated):
        neumann_inverse(T2, NormKind.COORDINATE_L1, 1, [0, 1])
    with pytest.raises(PreconditionViolated):
        neumann_inverse(FN4, NormKind.SUP, 0.5, [1, 0, 0, 0])


@algebra_params()
def test_neumann_agrees_with_direct_inverse(name, rng):
    A = ALGEBRAS[name]
    kind = default_norm(A)
    for _ in range(100):
        x = random_element(A, rng)
        lam = complex(*rng.normal(size=2))
        ratio = rng.uniform(0.0, 0.9)
        x = x * (ratio * abs(lam) / max(norm(kind, A, x), 1e-300))
        y = neumann_inverse(A, kind, lam, x)
        target = lam * A.identity - x
        # the stopping rule guarantees the residual, measured in the same norm
        assert norm(kind, A, multiply(A, target, y) - A.identity) <= tolerances().solve
        assert np.max(np.abs(y - invert(A, target))) <= 1e-7 * max(1.0, np.abs(y).max())


@algebra_params()
def test_norm_dominates_spectrum(name, rng):
    A = ALGEBRAS[name]
    kinds = {default_norm(A)}
    if default_norm(A) is NormKind.L1:
        kinds.add(NormKind.COORDINATE_L1)
    for kind in kinds:
        for _ in range(30):
            r = verify_spectral_bounds(A, kind, random_element(A, rng))
            assert r.ok, r.to_dict()


def test_sup_norm_equals_spectral_radius(rng):
    for n in range(1, 7):
        A = function_algebra(n)
        for _ in range(50):
            x = random_element(A, rng)
            assert abs(norm(NormKind.SUP, A, x) - spectral_radius(A, x)) <= 1e-10


def test_nilpotent_has_zero_radius_but_positive_norm():
    r = verify_spectral_bounds(T2, NormKind.COORDINATE_L1, [0, 1])
    assert r.spectral_radius == 0 and r.norm == 1 and r.ok
