from hypothesis import given, settings, strategies as st

from rackalg.abelian import FinAbGroup
from rackalg.permgroups import Perm, alternating_group, generate, semidirect_product, symmetric_group


def test_symmetric_and_alternating():
    assert symmetric_group(4).order() == 24
    assert alternating_group(5).order() == 60
    assert generate([], degree=3).order() == 1


def test_center_and_classes():
    S4 = symmetric_group(4)
    assert S4.center() == [Perm.identity(4)]
    assert len(S4.conjugacy_class(Perm.from_cycles([(0, 1)], 4))) == 6
    A5 = alternating_group(5)
    assert len(A5.conjugacy_class(Perm.from_cycles([(0, 1), (2, 3)], 5))) == 15
    assert A5.is_simple()


def test_semidirect_products():
    assert semidirect_product(FinAbGroup([5]), [((2,),)]).order() == 20
    assert semidirect_product(FinAbGroup([2, 2]), [((0, 1), (1, 1))]).order() == 12
    assert semidirect_product(FinAbGroup([3]), [((1,),)]).is_abelian()


@settings(max_examples=50, deadline=None)
@given(st.lists(st.permutations(range(5)), min_size=1, max_size=3))
def test_generation_order_independent(images):
    gens = [Perm(p) for p in images]
    G1 = generate(gens, degree=5)
    G2 = generate(list(reversed(gens)), degree=5)
    assert set(G1.elements) == set(G2.elements)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.permutations(range(5)), min_size=1, max_size=2))
def test_class_equation(images):
    G = generate([Perm(p) for p in images], degree=5)
    classes = G.conjugacy_classes()
    assert sum(len(c) for c in classes) == G.order()
    assert len({g for c in classes for g in c}) == G.order()
    for c in classes:
        assert len(c) * G.centralizer(c[0]).order() == G.order()
