import numpy as np
import pytest

from fdalg import catalog
from fdalg.chars import (
    characters,
    check_character,
    semisimple_reduction,
    spectral_radius,
    spectrum,
    witness_noninvertible,
)
from fdalg.core import (
    function_algebra,
    invert,
    multiply,
    polynomial_quotient_algebra,
    random_element,
    regular_representation,
)
from fdalg.errors import NotApplicable, NotInvertible
from fdalg.linalg import eigenvalues, set_distance
from fdalg.semigroup import cyclic_group, semigroup_algebra

from conftest import ALGEBRAS, algebra_params
from oracles import polynomial_characters, same_vector_sets

T2 = polynomial_quotient_algebra([1, 0, 0])
Z2 = semigroup_algebra(cyclic_group(2))
Z3 = semigroup_algebra(cyclic_group(3))


def test_spectrum_of_identity():
    for A in [T2, function_algebra(4), Z3]:
        sp = spectrum(A, A.identity)
        assert len(sp.values) == 1 and abs(sp.values[0] - 1) < 1e-12
        assert sp.multiplicities == (A.dim,)


def test_spectrum_of_nilpotent():
    sp = spectrum(T2, [0, 1])
    assert sp.values == (0,) and sp.multiplicities == (2,)


def test_spectrum_of_delta0_plus_delta1():
    # characters (1, 1) and (1, -1) give 2 and 0
    sp = spectrum(Z2, [1, 1])
    assert set_distance(sp.values, [0, 2]) < 1e-12
    assert set_distance(eigenvalues(regular_representation(Z2, [1, 1])), [0, 2]) < 1e-12


def test_spectrum_of_function_is_its_value_set():
    sp = spectrum(function_algebra(3), [1, 2, 3])
    assert set_distance(sp.values, [1, 2, 3]) < 1e-12
    sp = spectrum(function_algebra(4), [5, 1j, 5, 1j])
    assert set_distance(sp.values, [5, 1j]) < 1e-12 and sorted(sp.multiplicities) == [2, 2]


def test_spectrum_of_cube_root_generator():
    A = polynomial_quotient_algebra([1, 0, 0, -1])
    roots = [np.exp(2j * np.pi * k / 3) for k in range(3)]
    assert set_distance(spectrum(A, [0, 1, 0]).values, roots) < 1e-12


def test_multiplicities_for_nonsemisimple_blocks():
    # t^5 - t^3 = t^3 (t - 1)(t + 1): blocks of size 3, 1, 1
    A = polynomial_quotient_algebra([1, 0, -1, 0, 0, 0])
    sp = spectrum(A, [0, 1, 0, 0, 0])
    mult = dict(zip(np.round(np.real(sp.values)).astype(int), sp.multiplicities))
    assert mult == {-1: 1, 0: 3, 1: 1}


@algebra_params()
def test_spectrum_is_exactly_where_inversion_fails(name, rng):
    A = ALGEBRAS[name]
    for _ in range(20):
        x = random_element(A, rng)
        sp = spectrum(A, x)
        assert 1 <= len(sp.values) <= A.dim
        assert sum(sp.multiplicities) == A.dim
        for lam in sp.values:
            with pytest.raises(NotInvertible):
                invert(A, lam * A.identity - x)
        for _ in range(5):
            mu = complex(*rng.normal(size=2))
            if min(abs(mu - v) for v in sp.values) > 1e-7:
                invert(A, mu * A.identity - x)


def test_characters_of_function_algebra_are_evaluations():
    chars = characters(function_algebra(3))
    assert same_vector_sets([c.functional for c in chars], list(np.eye(3)), 1e-8)


def test_characters_of_dual_numbers():
    chars = characters(T2)
    assert len(chars) == 1
    assert np.allclose(chars[0].functional, [1, 0], atol=1e-12)


def test_characters_of_z3_are_cube_roots():
    chars = characters(Z3)
    assert len(chars) == 3
    vals = [c(np.array([0, 1, 0])) for c in chars]
    assert set_distance(vals, [np.exp(2j * np.pi * k / 3) for k in range(3)]) < 1e-12


@pytest.mark.parametrize("name", sorted(catalog.POLYNOMIALS))
def test_polynomial_characters_match_roots(name):
    coeffs = catalog.POLYNOMIALS[name]
    A = polynomial_quotient_algebra(coeffs)
    expected = polynomial_characters(coeffs)
    got = [c.functional for c in characters(A)]
    assert same_vector_sets(got, expected, 1e-8)


@algebra_params()
def test_characters_are_multiplicative_on_random_pairs(name, rng):
    A = ALGEBRAS[name]
    chars = characters(A)
    assert 1 <= len(chars) <= A.dim
    for phi in chars:
        assert abs(phi(A.identity) - 1) <= 1e-8
        assert check_character(A, phi) <= 1e-8
        for _ in range(200):
            x, y = random_element(A, rng), random_element(A, rng)
            px, py = phi(x), phi(y)
            assert abs(phi(multiply(A, x, y)) - px * py) <= 1e-8 * (1 + abs(px)) * (1 + abs(py))


def test_character_counts():
    for n in range(1, 7):
        assert len(characters(function_algebra(n))) == n
        assert len(characters(semigroup_algebra(cyclic_group(n)))) == n
    for name, coeffs in catalog.POLYNOMIALS.items():
        assert len(characters(polynomial_quotient_algebra(coeffs))) == len(polynomial_characters(coeffs))


def test_character_order_is_deterministic():
    A = ALGEBRAS["C[Z3xZ4]"]
    a = [c.functional for c in characters(A, seed=0)]
    b = [c.functional for c in characters(A, seed=5)]
    assert all(np.allclose(x, y, atol=1e-10) for x, y in zip(a, b))


def test_radical_of_truncation_monoid():
    # {0..4} with a + b = min(a + b, 4): C[t]/(t^4 (t - 1)), radical of dim 3
    red = semisimple_reduction(ALGEBRAS["C[trunc4]"])
    assert red.radical.shape[1] == 3 and red.algebra.dim == 2


@algebra_params()
def test_spectrum_equals_character_values(name, rng):
    A = ALGEBRAS[name]
    chars = characters(A)
    for _ in range(50):
        x = random_element(A, rng)
        assert set_distance([phi(x) for phi in chars], spectrum(A, x).values) <= 1e-7


def test_witness_examples():
    phi = witness_noninvertible(T2, [0, 0])
    assert phi(np.zeros(2)) == 0
    phi = witness_noninvertible(T2, [0, 1])
    assert abs(phi(np.array([0, 1]))) < 1e-12
    phi = witness_noninvertible(function_algebra(2), [0, 5])
    assert np.allclose(phi.functional, [1, 0], atol=1e-12)
    with pytest.raises(NotApplicable):
        witness_noninvertible(T2, [1, 0])


def test_spectral_radius_examples():
    assert abs(spectral_radius(T2, T2.identity) - 1) < 1e-12
    assert spectral_radius(T2, [0, 1]) == 0
    assert abs(spectral_radius(function_algebra(2), [2, 3j]) - 3) < 1e-12
