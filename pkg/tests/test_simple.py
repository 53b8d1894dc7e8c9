import itertools

import pytest

from rackalg.errors import BudgetExceeded, InputError, ValidationError
from rackalg.permgroups import Perm, alternating_group, generate
from rackalg.racks import (CROSSED_SET, QUANDLE, RACK, cyclic_affine, inner_group, is_indecomposable,
                           is_isomorphic, is_morphism, trivial)
from rackalg.simple import (admissible_polynomials, enumerate_racks, irreducible_count, is_congruence, is_simple,
                            permutation_rack_simplicity, principal_congruence, proper_quotient,
                            simple_affine_count, simple_affine_list, twisted_homogeneous_simple)

from conftest import named


def derived_subgroup(G):
    comms = {a.inverse() * b.inverse() * a * b for a in G.elements for b in G.elements}
    return generate(list(comms) or [G.identity()], G.degree)


def is_solvable(G):
    while G.order() > 1:
        H = derived_subgroup(G)
        if H.order() == G.order():
            return False
        G = H
    return True


def test_cube_faces_not_simple():
    C = named("cube_faces")
    assert not is_simple(C)
    Y, proj = proper_quotient(C)
    assert is_isomorphic(Y, cyclic_affine(3, 2)) is not None
    assert is_morphism(C, Y, proj)


@pytest.mark.parametrize("name", ["tetrahedron", "z3", "z5_2", "transpositions", "octahedron"])
def test_simple_named(name):
    expect = {"tetrahedron": True, "z3": True, "z5_2": True, "transpositions": False, "octahedron": False}
    assert is_simple(named(name)) is expect[name]


def test_principal_congruences_are_congruences():
    for name in ("cube_faces", "transpositions", "tetrahedron"):
        X = named(name)
        for a, b in itertools.combinations(range(X.size), 2):
            c = principal_congruence(X, a, b)
            assert is_congruence(X, c.blocks)
            Y, proj = c.quotient(X)
            assert is_morphism(X, Y, proj)


def test_trivial_and_small_not_simple():
    assert not is_simple(trivial(3))
    with pytest.raises(InputError):
        principal_congruence(trivial(1), 0, 0)


def test_affine_counts():
    assert simple_affine_count(2, 2) == 1
    assert simple_affine_count(3, 1) == 1
    assert simple_affine_count(2, 3) == 2
    assert simple_affine_count(7, 1) == 5
    assert irreducible_count(2, 4) == 3
    with pytest.raises(InputError):
        simple_affine_count(4, 1)


@pytest.mark.parametrize("p,t", [(2, 2), (3, 1), (2, 3), (5, 1), (3, 2), (2, 4)])
def test_affine_list_matches_count(p, t):
    racks = simple_affine_list(p, t)
    assert len(racks) == len(admissible_polynomials(p, t)) == simple_affine_count(p, t)


@pytest.mark.parametrize("p,t", [(2, 2), (3, 1), (2, 3), (5, 1)])
def test_affine_list_simple_and_solvable(p, t):
    for X in simple_affine_list(p, t):
        assert is_simple(X) and is_indecomposable(X)
        assert is_solvable(inner_group(X).group)


def test_affine_identifications():
    (T,) = simple_affine_list(2, 2)
    assert is_isomorphic(T, named("tetrahedron")) is not None
    (Z,) = simple_affine_list(3, 1)
    assert is_isomorphic(Z, cyclic_affine(3, 2)) is not None


def test_permutation_racks():
    assert permutation_rack_simplicity(5)
    assert not permutation_rack_simplicity(4)
    assert permutation_rack_simplicity(2)
    with pytest.raises(InputError):
        permutation_rack_simplicity(1)


def test_a5_classes():
    A5 = alternating_group(5)
    three = Perm([1, 2, 0, 3, 4])
    invol = Perm([1, 0, 3, 2, 4])
    X = twisted_homogeneous_simple(A5, 1, seed=three)
    Y = twisted_homogeneous_simple(A5, 1, seed=invol)
    assert X.size == 20 and Y.size == 15
    assert X.kind == CROSSED_SET and Y.kind == CROSSED_SET


def test_twisted_degenerate_rejected():
    A5 = alternating_group(5)
    n = Perm([1, 2, 0, 3, 4])
    with pytest.raises(ValidationError):
        twisted_homogeneous_simple(A5, 1, theta=n, seed=n.inverse())
    with pytest.raises(BudgetExceeded):
        twisted_homogeneous_simple(A5, 1, seed=n, cap=5)


def test_simple_implies_indecomposable():
    for n in (3, 4):
        for X in enumerate_racks(n, QUANDLE):
            if is_simple(X):
                assert is_indecomposable(X)


def test_enumeration_counts():
    counts = {kind: [len(enumerate_racks(n, kind)) for n in (1, 2, 3, 4)]
              for kind in (RACK, QUANDLE, CROSSED_SET)}
    assert counts == {RACK: [1, 2, 6, 19], QUANDLE: [1, 1, 3, 7], CROSSED_SET: [1, 1, 2, 4]}


def test_enumeration_crossed_sets_of_three():
    found = enumerate_racks(3, CROSSED_SET)
    assert any(X.is_trivial() for X in found)
    assert any(is_isomorphic(X, cyclic_affine(3, 2)) is not None for X in found)


def test_enumeration_indecomposable_four():
    found = enumerate_racks(4, QUANDLE, indecomposable=True)
    assert any(is_isomorphic(X, named("tetrahedron")) is not None for X in found)


def test_enumeration_cap():
    with pytest.raises(BudgetExceeded):
        enumerate_racks(6)
