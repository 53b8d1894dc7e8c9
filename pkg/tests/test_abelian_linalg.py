from fractions import Fraction

import flint
from hypothesis import given, settings, strategies as st

from rackalg.abelian import FinAbGroup
from rackalg.linalg import column_rref, dense_to_columns, integer_rank, rank, smith_invariants


def test_group_basics():
    A = FinAbGroup([2, 3])
    assert A.order == 6 and A.exponent == 6
    assert len(A.elements()) == 6
    assert A.add((1, 2), (1, 2)) == (0, 1)
    assert A.reduce(5) == (1, 0)


def test_automorphism_inverse():
    A = FinAbGroup([2, 2])
    g = ((0, 1), (1, 1))
    assert A.is_automorphism(g)
    assert A.compose(g, A.inverse_map(g)) == A.normalize(A.identity())
    assert A.map_order(g) == 3


def test_characters_pairing():
    A = FinAbGroup([4])
    assert len(A.characters()) == 4
    assert A.pairing_exponent((1,), (1,)) % 4 == 1


def test_smith_matches_flint():
    M = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    ours = smith_invariants(M)
    snf = flint.fmpz_mat(M).snf()
    diag = [abs(int(snf[i, i])) for i in range(3) if snf[i, i] != 0]
    assert ours == diag


@settings(max_examples=100, deadline=None)
@given(st.lists(st.lists(st.integers(-6, 6), min_size=4, max_size=4), min_size=1, max_size=5))
def test_smith_oracle(M):
    ours = smith_invariants(M)
    snf = flint.fmpz_mat(M).snf()
    diag = [abs(int(snf[i, i])) for i in range(min(len(M), 4)) if snf[i, i] != 0]
    assert ours == diag
    assert integer_rank(M) == len(diag)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=6))
def test_rank_backends_agree(M):
    cols, nrows = dense_to_columns(M)
    r = flint.fmpq_mat(M).rank()
    assert rank(cols, nrows) == r
    piv_f, _ = column_rref(cols, nrows, backend="flint")
    piv_p, coords = column_rref(cols, nrows, backend="python")
    assert piv_f == piv_p
    for c, co in enumerate(coords):
        recon = {}
        for k, a in co.items():
            for row, v in cols[piv_p[k]].items():
                recon[row] = recon.get(row, 0) + a * v
        assert {r_: v for r_, v in recon.items() if v} == {r_: Fraction(v) for r_, v in cols[c].items() if v}
