"""Independent reference computations used by the tests.

Nothing here calls the eigen-solver or the character search, so agreement
with the library is a genuine cross-check.
"""

import cmath
import itertools

import numpy as np
import sympy


def power_cycle(S, a):
    """Index m and period p with m*a = (m+p)*a, for the element a of S."""
    seen = {}
    x = a
    k = 1
    while x not in seen:
        seen[x] = k
        x = S.add(x, a)
        k += 1
    m = seen[x]
    return m, k - m


def brute_force_semicharacters(S, tol=1e-9):
    """All semicharacters of a small semigroup by exhaustive search.

    A semicharacter value is 0 or a root of unity whose order divides the
    period of the element's powers, so each element has finitely many
    candidates; every combination is checked against the defining equations.
    """
    candidates = []
    for a in range(S.size):
        if a == S.identity_index:
            candidates.append([1])
            continue
        _, p = power_cycle(S, a)
        candidates.append([0] + [cmath.exp(2j * cmath.pi * k / p) for k in range(p)])
    found = []
    for combo in itertools.product(*candidates):
        v = np.array(combo, dtype=complex)
        if np.max(np.abs(v[S.table] - np.outer(v, v))) <= tol:
            found.append(v)
    return found


def polynomial_characters(coeffs):
    """Characters of C[t]/(p): t -> r for each distinct root r, via sympy."""
    t = sympy.symbols("t")
    d = len(coeffs) - 1
    p = sum(sympy.Integer(c) * t ** (d - i) for i, c in enumerate(coeffs))
    out = []
    for r in sympy.roots(sympy.Poly(p, t)):
        r = complex(sympy.N(r, 30))
        out.append(np.array([r**i for i in range(d)], dtype=complex))
    return out


def same_vector_sets(a, b, tol):
    """Whether two lists of vectors agree as sets, up to tol in max-norm."""
    if len(a) != len(b):
        return False
    unused = list(b)
    for v in a:
        for i, w in enumerate(unused):
            if np.max(np.abs(np.asarray(v) - np.asarray(w))) <= tol:
                del unused[i]
                break
        else:
            return False
    return True


def naive_multiply(A, x, y):
    """Triple loop over structure constants."""
    n = A.dim
    out = [0j] * n
    for i in range(n):
        for j in range(n):
            for k in range(n):
                out[k] += x[i] * y[j] * A.structure[i, j, k]
    return np.array(out)
