import itertools
import random

import pytest

from rackalg.abelian import FinAbGroup
from rackalg.errors import BudgetExceeded, InputError, ValidationError
from rackalg.extensions import (ConstantCocycle, DynamicalCocycle, XModule, cohomologous_mod, extend,
                                extension_isomorphism, find_constant_coboundary, find_mod_coboundary,
                                is_transitive_constant, recognize_extension, section_cocycle, tetrahedron_beta,
                                trivial_constant, validate_mod2cocycle, validate_xmodule, z3_module_example)
from rackalg.permgroups import Perm
from rackalg.racks import (QUANDLE, cyclic_affine, is_indecomposable, is_isomorphic, is_morphism, product,
                           trivial)
from rackalg.simple import proper_quotient

from conftest import named


def brute_cocycle(X, A, kappa, eta, tau):
    """Direct check of the module 2-cocycle identity."""
    T = X.table
    for i, j, k in itertools.product(range(X.size), repeat=3):
        lhs = A.add(A.apply(eta[i][T[j][k]], kappa[j][k]), kappa[i][T[j][k]])
        rhs = A.add(A.add(A.apply(eta[T[i][j]][T[i][k]], kappa[i][k]),
                          A.apply(tau[T[i][j]][T[i][k]], kappa[i][j])), kappa[T[i][j]][T[i][k]])
        if lhs != rhs:
            return False
    return True


def test_tetrahedron_beta_extension(tetra):
    beta = tetrahedron_beta(tetra)
    assert beta.validate().ok
    E = extend(tetra, beta)
    assert E.size == 8
    assert E.kind in (QUANDLE, "CrossedSet")
    assert is_indecomposable(E)


def test_tetrahedron_beta_transitive_and_not_trivial(tetra):
    beta = tetrahedron_beta(tetra)
    assert is_transitive_constant(tetra, beta)
    assert not is_transitive_constant(tetra, trivial_constant(tetra, 2))
    assert find_constant_coboundary(beta, trivial_constant(tetra, 2)) is None


def test_section_cocycle_trivial_rho_not_transitive(tetra):
    beta = section_cocycle(tetra, 0, lambda g: Perm.identity(3), 3)
    assert beta.validate().ok
    assert not is_transitive_constant(tetra, beta)


def test_transitive_requires_indecomposable():
    X = trivial(2)
    with pytest.raises(ValidationError):
        is_transitive_constant(X, trivial_constant(X, 2))


def test_trivial_module_gives_product():
    X = named("z3")
    A = FinAbGroup([2])
    M = XModule(X, A, [[A.identity()] * 3] * 3, [[A.zero_map()] * 3] * 3)
    assert M.validate().ok
    E = extend(X, M.alpha())
    assert is_isomorphic(E, product(X, trivial(2))) is not None


def test_z3_kappa_is_transpositions():
    M, kappa = z3_module_example()
    assert M.validate().ok
    assert validate_mod2cocycle(M, kappa).ok
    E = extend(M.base, M.alpha(kappa))
    assert is_isomorphic(E, named("transpositions")) is not None


def test_z3_kappa_tilde_is_cube_faces():
    M, kappa = z3_module_example(tilde=True)
    assert validate_mod2cocycle(M, kappa).ok
    E = extend(M.base, M.alpha(kappa))
    assert is_isomorphic(E, named("cube_faces")) is not None


def test_kappa_cohomologous_to_zero():
    M, kappa = z3_module_example()
    zero = [[(0,)] * 3 for _ in range(3)]
    assert cohomologous_mod(M, kappa, zero, [(1,)] * 3)
    assert cohomologous_mod(M, kappa, kappa, [(0,)] * 3)
    Mt, kt = z3_module_example(tilde=True)
    assert find_mod_coboundary(Mt, kt, zero) is None


def test_mod_search_budget():
    M, kappa = z3_module_example()
    with pytest.raises(BudgetExceeded):
        find_mod_coboundary(M, kappa, kappa, budget=4)


def test_affine_module_over_any_rack():
    A = FinAbGroup([5])
    for X in (named("tetrahedron"), named("z3"), trivial(3)):
        for c in (2, 3, 4):
            M = XModule.affine(X, A, A.scalar(c))
            assert M.validate(level="Quandle").ok
            assert M.xmod4_readings()[0] is None


def test_affine_module_existential_reading_fails():
    # the stronger reading of the crossed-set axiom rejects η = g, τ = 1 - g
    A = FinAbGroup([5])
    rep = XModule.affine(named("tetrahedron"), A, A.scalar(2)).validate()
    assert set(rep.failures()) == {"xmod4 (existential reading)"}


def test_non_closed_kappa_fails_with_witness():
    X = named("z3")
    A = FinAbGroup([3])
    eta = [[A.identity()] * 3 for _ in range(3)]
    tau = [[A.zero_map()] * 3 for _ in range(3)]
    M = XModule(X, A, eta, tau)
    rng = random.Random(7)
    seen_bad = 0
    for _ in range(40):
        kappa = [[(rng.randrange(3),) for _ in range(3)] for _ in range(3)]
        rep = validate_mod2cocycle(M, kappa)
        assert rep.ok == brute_cocycle(X, A, kappa, M.eta, M.tau)
        if not rep.ok:
            seen_bad += 1
            assert len(rep.failures()["2-cocycle"]) == 3
    assert seen_bad > 0


def test_xmodule_shape_and_validity_errors():
    X = named("z3")
    A = FinAbGroup([2])
    with pytest.raises(InputError):
        validate_xmodule(X, A, [[A.identity()]], [[A.zero_map()]])
    bad = validate_xmodule(X, A, [[A.zero_map()] * 3] * 3, [[A.zero_map()] * 3] * 3)
    assert "automorphism" in bad.failures()


def test_xmod4_readings_reported():
    M, _ = z3_module_example()
    pw, ex = M.xmod4_readings()
    assert pw is None or len(pw) == 4
    assert ex is None or len(ex) == 4


def test_dynamical_cocycle_validation():
    X = named("z3")
    with pytest.raises(InputError):
        DynamicalCocycle(X, 2, [[[[0, 5]] * 2] * 3] * 3)
    not_bij = DynamicalCocycle.from_function(X, 2, lambda i, j, s, t: 0)
    assert "bijective" in not_bij.validate().failures()
    # α_ij(s, t) = t + 1 at one pair only breaks the composition law
    alpha = DynamicalCocycle.from_function(X, 2, lambda i, j, s, t: (t + (i == 0 and j == 1)) % 2)
    rep = alpha.validate(level="Rack")
    assert "composition" in rep.failures()
    with pytest.raises(ValidationError):
        extend(X, alpha)


def test_constant_cocycle_shape_and_quandle_condition():
    X = named("z3")
    with pytest.raises(InputError):
        ConstantCocycle(X, [[Perm([1, 0])] * 2] * 3)
    sw = Perm([1, 0])
    beta = ConstantCocycle(X, [[sw] * 3 for _ in range(3)])
    assert beta.validate(level="Rack").ok
    assert "quandle" in beta.validate(level="Quandle").failures()


def test_recognize_cube_faces_over_z3():
    C = named("cube_faces")
    Y, proj = proper_quotient(C)
    assert Y.size == 3 and is_isomorphic(Y, cyclic_affine(3, 2)) is not None
    alpha, fibers = recognize_extension(C, Y, proj)
    assert alpha.size == 2
    E = extend(Y, alpha)
    assert is_morphism(C, E, extension_isomorphism(C, fibers))


def test_recognize_affine_quotient():
    X, Y = cyclic_affine(9, 2), cyclic_affine(3, 2)
    proj = [x % 3 for x in range(9)]
    alpha, fibers = recognize_extension(X, Y, proj)
    assert alpha.size == 3
    assert is_morphism(X, extend(Y, alpha), extension_isomorphism(X, fibers))


def test_recognize_identity():
    X = named("tetrahedron")
    alpha, fibers = recognize_extension(X, X, list(range(4)))
    assert alpha.size == 1 and alpha.is_constant()


def test_recognize_unequal_fibers():
    X = trivial(3)
    with pytest.raises(ValidationError):
        recognize_extension(X, trivial(2), [0, 0, 1])
