from fractions import Fraction

import pytest

from rackalg.braided import (BraidedSpace, SetSolution, cartan_matrix, check_braid_equation, cocycle_failure,
                             constant_cocycle, cocycle_from_dict, derived_solution, is_rack_cocycle,
                             rigidity_check, t_equivalence_check)
from rackalg.cyclotomic import CycScalar
from rackalg.errors import InputError, ValidationError
from rackalg.racks import cyclic_affine, is_isomorphic, trivial

from conftest import named


def test_constant_cocycle_braids(tetra):
    B = BraidedSpace.rack_type(tetra, constant_cocycle(tetra, -1))
    assert check_braid_equation(B)
    assert rigidity_check(B)


def test_perturbed_cocycle_fails(tetra):
    q = [[-1] * 4 for _ in range(4)]
    q[0][1] = 1
    assert cocycle_failure(tetra, q) is not None
    B = BraidedSpace.rack_type(tetra, q, check=False)
    assert not check_braid_equation(B)
    with pytest.raises(ValidationError):
        BraidedSpace.rack_type(tetra, q)


def test_transposition_braiding():
    X = trivial(3)
    assert check_braid_equation(BraidedSpace.rack_type(X, constant_cocycle(X, 1)))


def test_cocycle_json():
    X = cyclic_affine(3, 2)
    q = cocycle_from_dict(X, {"constant_exponent": 1})
    assert q[0][0] == -1
    q = cocycle_from_dict(X, {"conductor": 3, "exponents": [[0] * 3] * 3})
    assert is_rack_cocycle(X, q)
    with pytest.raises(InputError):
        cocycle_from_dict(X, {"exponents": [[0]]})


def test_derived_solution_of_rack(tetra):
    S = SetSolution.from_rack(tetra)
    D = derived_solution(S, 4)
    assert D.rack == tetra and D.verified_degrees == [2, 3, 4]


def test_derived_solution_trivial():
    p = 5
    mu = [(i + 1) % p for i in range(p)]
    inv = [(i - 1) % p for i in range(p)]
    S = SetSolution.from_map(p, lambda i, j: (mu[j], inv[i]))
    assert S.is_solution()
    assert derived_solution(S, 3).rack.is_trivial()


def test_rigidity():
    S = SetSolution.from_rack(cyclic_affine(3, 2))
    assert rigidity_check(BraidedSpace.set_type(S))
    bad = SetSolution([[0, 0], [1, 1]], [[0, 0], [1, 1]])  # S(i, j) = (i, j)
    assert not rigidity_check(BraidedSpace.set_type(bad, check=False))


def test_cartan_types():
    assert cartan_matrix([[-1, 1], [1, -1]]).component_types == ["A1", "A1"]
    m = -1
    a2 = [[m, m, 1, 1], [1, m, 1, 1], [1, 1, m, m], [1, 1, 1, m]]
    res = cartan_matrix(a2)
    assert res.tag == "A-chains" and res.predicted_dimension() == 64
    sq = [[m if (i == j or (j - i) % 4 == 1) else 1 for j in range(4)] for i in range(4)]
    assert cartan_matrix(sq).tag == "contains-cycle"
    with pytest.raises(ValidationError):
        cartan_matrix([[1]])


def test_identity_t_equivalence(tetra):
    B = BraidedSpace.rack_type(tetra, constant_cocycle(tetra, -1))
    assert t_equivalence_check(B, B, lambda w: {tuple(w): 1}, 3)


def test_set_solution_t_equivalence():
    S = SetSolution.from_rack(named("z3"))
    B1 = BraidedSpace.set_type(S)
    D = derived_solution(S, 3).rack
    B2 = BraidedSpace.rack_type(D, constant_cocycle(D, 1))
    assert t_equivalence_check(B1, B2, lambda w: {S.T(w): 1}, 4)
