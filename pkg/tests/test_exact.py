from __future__ import annotations

from fractions import Fraction

import numpy as np
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import classes
from twodist.exact import (
    IntPoly,
    charpoly_int,
    det_int,
    exact_decide,
    exact_test_spherical,
    isolate_roots,
    squarefree_decomposition,
    squarefree_part,
    sturm_count,
)
from twodist.graphs import Graph, random_graph
from twodist.spherical import test_spherical

X = sympy.Symbol("x")


def _sympy_charpoly(a) -> list[int]:
    return [int(c) for c in sympy.Matrix(a.tolist()).charpoly(X).all_coeffs()]


def test_charpoly_examples():
    assert charpoly_int(Graph.complete(3).adjacency(int)) == IntPoly.from_high([1, 0, -3, -2])
    assert charpoly_int(np.zeros((2, 2), dtype=int)) == IntPoly.from_high([1, 0, 0])
    two_k2 = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert charpoly_int(two_k2.adjacency(int)) == IntPoly.from_high([1, 0, -2, 0, 1])


def test_charpoly_against_sympy(rng):
    for _ in range(30):
        n = int(rng.integers(1, 9))
        a = random_graph(n, 0.5, rng).adjacency(int)
        assert list(reversed(charpoly_int(a).coeffs)) == _sympy_charpoly(a)


def test_charpoly_matches_det(rng):
    for _ in range(20):
        n = int(rng.integers(2, 7))
        a = random_graph(n, 0.5, rng).adjacency(int)
        p = charpoly_int(a)
        for t in (-3, 0, 2, 5):
            assert p(t) == det_int(t * np.eye(n, dtype=int) - a)


def test_sturm_examples():
    assert sturm_count(IntPoly.from_high([1, 0, -2]), 1, 2) == 1
    assert sturm_count(IntPoly.from_high([1, 0, 0]), -1, 1) == 1
    c5 = charpoly_int(Graph.cycle(5).adjacency(int))
    assert sturm_count(squarefree_part(c5), Fraction(6, 10), Fraction(7, 10)) == 1


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=6), st.integers(-8, 8))
@settings(max_examples=200, deadline=None)
def test_sturm_additive_and_counts_roots(roots, cut):
    p = IntPoly((1,))
    for r in roots:
        p = p * IntPoly((-r, 1))
    sf = squarefree_part(p)
    lo, hi = -10, 10
    total = sturm_count(sf, lo, hi)
    assert total == len(set(roots))
    assert sturm_count(sf, lo, cut) + sturm_count(sf, cut, hi) == total


def test_squarefree_decomposition():
    # (x-1)(x+2)^2 x^3
    x = IntPoly((0, 1))
    p = IntPoly((-1, 1)) * IntPoly((2, 1)) * IntPoly((2, 1)) * x * x * x
    factors = squarefree_decomposition(p)
    roots = [sympy.roots(sympy.Poly(list(reversed(f.coeffs)), X)) if f.degree > 0 else {} for f in factors]
    assert set(roots[0]) == {1}
    assert set(roots[1]) == {-2}
    assert set(roots[2]) == {0}


def test_isolate_roots_petersen():
    p = squarefree_part(charpoly_int(Graph.petersen().adjacency(int)))
    boxes = isolate_roots(p)
    assert len(boxes) == 3
    for (lo, hi), want in zip(sorted(boxes), [-2, 1, 3]):
        assert lo < want <= hi


def test_exact_examples():
    assert exact_test_spherical(Graph.cycle(5))
    assert not exact_test_spherical(Graph.cycle(4))
    v = exact_decide(Graph.petersen())
    assert v.spherical and v.mult_lambda2_A == 5 and v.min_dimension == 4


def test_exact_n6_count():
    assert sum(exact_test_spherical(g) for g in classes(6)) == 42


def test_exact_agrees_with_float_n6():
    for g in classes(6):
        rep = test_spherical(g, exact_fallback=False)
        v = exact_decide(g)
        assert rep.spherical == v.spherical
        if v.spherical:
            assert rep.min_dimension == v.min_dimension
