import itertools

import pytest

from rackalg.abelian import FinAbGroup
from rackalg.cohomology import (abelian_to_constant, cohomology_dim_mod_p, cohomology_with, module_cochain_complex,
                                module_cohomology, nonabelian_h2, rack_homology, trivial_complex, trivial_module)
from rackalg.errors import BudgetExceeded, ValidationError
from rackalg.extensions import ConstantCocycle, XModule, find_constant_coboundary, tetrahedron_beta, z3_module_example
from rackalg.permgroups import symmetric_group
from rackalg.racks import cyclic_affine, disjoint_sum, orbits, permutation_rack, trivial

from conftest import named


def test_trivial_rack_boundaries_vanish():
    C = trivial_complex(trivial(3), 3)
    assert all(not any(any(row) for row in C.boundaries[n]) for n in (1, 2, 3))


@pytest.mark.parametrize("name", ["z3", "tetrahedron", "xpm"])
def test_boundary_squares_to_zero(name):
    assert trivial_complex(named(name), 3).check_squares()


@pytest.mark.parametrize("name", ["z3", "tetrahedron", "cube_faces", "xpm"])
def test_h1_rank_is_orbit_count(name):
    X = named(name)
    H = rack_homology(X, 1)
    assert H.free_rank == len(orbits(X)) and H.torsion == []


@pytest.mark.parametrize("p,q", [(3, 2), (5, 2), (5, 3)])
def test_h2_of_cyclic_affine_is_z(p, q):
    H = rack_homology(cyclic_affine(p, q), 2)
    assert (H.free_rank, H.torsion) == (1, [])


def test_h2_disjoint_sum_rank_four():
    X = cyclic_affine(3, 2)
    H = cohomology_with(disjoint_sum(X, X), 2)
    assert H.free_rank == 4


def test_tetrahedron_h2():
    H = rack_homology(named("tetrahedron"), 2)
    assert (H.free_rank, H.torsion) == (1, [2])


@pytest.mark.parametrize("name,p", [("tetrahedron", 2), ("z3", 3), ("z3", 2), ("transpositions", 2)])
def test_universal_coefficients_agree_with_mod_p(name, p):
    X = named(name)
    H = cohomology_with(X, 2, (p,))
    assert H.free_rank == 0
    assert len(H.torsion) == cohomology_dim_mod_p(X, 2, p)


def test_budget():
    with pytest.raises(BudgetExceeded):
        trivial_complex(named("transpositions"), 6, basis_cap=1000)


def test_quandle_homology_needs_quandle():
    with pytest.raises(ValidationError):
        trivial_complex(permutation_rack([1, 0]), 2, quandle=True)


def test_trivial_module_matches_universal_coefficients():
    X = cyclic_affine(3, 2)
    C = module_cochain_complex(trivial_module(X, FinAbGroup([2])), 3)
    assert C.check_squares()
    for n in (1, 2, 3):
        H, U = module_cohomology(C, n), cohomology_with(X, n, (2,))
        assert (H.free_rank, H.torsion) == (U.free_rank, U.torsion)


def test_module_complex_squares_and_kappa_tilde_class():
    M, _ = z3_module_example(tilde=True)
    C = module_cochain_complex(M, 2)
    assert C.check_squares()
    assert module_cohomology(C, 2).order >= 2


def test_affine_module_complex_squares():
    A = FinAbGroup([5])
    for X in (cyclic_affine(3, 2), named("tetrahedron")):
        C = module_cochain_complex(XModule.affine(X, A, A.scalar(2)), 2)
        assert C.check_squares()


def test_higher_degrees_independent_of_basepoint():
    A = FinAbGroup([3])
    M = XModule.affine(named("tetrahedron"), A, A.scalar(2))
    results = set()
    for b in range(4):
        C = module_cochain_complex(M, 2, basepoint=b)
        H = module_cohomology(C, 2)
        results.add((H.free_rank, tuple(H.torsion)))
    assert len(results) == 1


def test_nonabelian_h2_counts():
    S2 = symmetric_group(2)
    tet = nonabelian_h2(named("tetrahedron"), S2)
    z3 = nonabelian_h2(named("z3"), S2)
    assert len(tet.classes) == 4
    assert len(z3.classes) == 2
    # with two points, classes match H^2(X, Z/2)
    assert len(tet.classes) == cohomology_with(named("tetrahedron"), 2, (2,)).order
    assert len(z3.classes) == cohomology_with(named("z3"), 2, (2,)).order


def test_nonabelian_h2_contains_tetrahedron_beta():
    X = named("tetrahedron")
    beta = tetrahedron_beta(X)
    reps = nonabelian_h2(X, symmetric_group(2)).classes
    hits = [r for r in reps if find_constant_coboundary(beta, ConstantCocycle(X, r)) is not None]
    assert len(hits) == 1
    assert any(not p.is_identity() for row in hits[0] for p in row)


def test_nonabelian_h2_budget():
    with pytest.raises(BudgetExceeded):
        nonabelian_h2(named("tetrahedron"), symmetric_group(3), budget=50)


def test_abelian_cocycle_gives_constant_cocycle():
    X = cyclic_affine(3, 2)
    A = FinAbGroup([2])
    Tm = trivial_module(X, A)
    C = module_cochain_complex(Tm, 2)
    for vals in itertools.product(range(2), repeat=9):
        f = {(i, j): (vals[3 * i + j],) for i in range(3) for j in range(3)}
        d = C.apply(2, f)
        closed = all(v == (0,) for v in d.values())
        beta = abelian_to_constant(X, A, [[f[(i, j)] for j in range(3)] for i in range(3)])
        assert beta.validate(level="Rack").ok == closed
