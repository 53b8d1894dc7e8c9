"""Acceptance criteria, one PASS/FAIL line each.

Run under pytest (lines appear in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.
"""
import os
import sys
import time

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from rackalg.cohomology import cohomology_with, rack_homology  # noqa: E402
from rackalg.fourier import conjugation_failure, fourier_transform, paper_intertwiners, z3_split  # noqa: E402
from rackalg.nichols import (affine_degree2_relations, evaluate_chain, poly_divides, presentation_check,  # noqa: E402
                             printed_chain, relation_set, symmetrizer_crosscheck)
from rackalg.permgroups import Perm, alternating_group  # noqa: E402
from rackalg.racks import cyclic_affine, disjoint_sum, is_isomorphic  # noqa: E402
from rackalg.simple import (_is_prime, is_simple, permutation_rack_simplicity, proper_quotient,  # noqa: E402
                            simple_affine_count, simple_affine_list, twisted_homogeneous_simple)

from conftest import minus_one, named, nichols  # noqa: E402

TETRA = [1, 4, 8, 11, 12, 12, 11, 8, 4, 1]
TRANSP = [1, 6, 19, 42, 71, 96, 106, 96, 71, 42, 19, 6, 1]
Z5 = [1, 5, 15, 35, 66, 105, 145, 175, 186, 175, 145, 105, 66, 35, 15, 5, 1]
MINUS = [[-1] * 3 for _ in range(3)]

RESULTS: dict = {}


def c1():
    t = time.time()
    N = nichols("tetrahedron")
    dt = time.time() - t
    ok = N.dims == TETRA and N.total == 72 and N.top_degree == 9 and dt <= 10
    return ok, f"dims {N.dims}, total {N.total}, {dt:.1f}s"


def c2():
    N = nichols("transpositions")
    return N.dims == TRANSP and N.total == 576, f"dims {N.dims}, total {N.total}"


def c3():
    N = nichols("cube_faces")
    return N.dims == nichols("transpositions").dims == TRANSP, f"dims {N.dims}"


def c4():
    N = nichols("z5_2")
    return N.dims == Z5 and N.total == 1280 and N.top_degree == 16, f"total {N.total}, top degree {N.top_degree}"


def c5():
    tet = printed_chain("tetrahedron", nichols("tetrahedron"), completion="2")
    tr = printed_chain("transpositions", nichols("transpositions"))
    z5 = printed_chain("z5_2", nichols("z5_2"))
    ok = tet.ok and tr.ok and z5.ok
    return ok, f"tetrahedron {tet.value}, transpositions {tr.value}, z5_2 printed chain {z5.value}"


def c5b():
    word = "0101201020303124"
    v = evaluate_chain(nichols("z5_2"), word, word).value
    return v == 1, f"z5_2 word {word} is a nonzero integral: own-letter chain gives {v}"


def c6():
    bad = []
    for name in ("tetrahedron", "transpositions", "cube_faces", "z5_2"):
        N = nichols(name)
        Q = presentation_check(minus_one(name), relation_set(name, named(name)), N.top_degree + 1)
        if Q.dims[:N.top_degree + 1] != N.dims or any(Q.dims[N.top_degree + 1:]):
            bad.append(name)
    return not bad, "all four presentations match" if not bad else f"mismatch: {bad}"


def c7():
    f4 = affine_degree2_relations(named("tetrahedron"), p=2, t=2, n_order=3)
    f5 = affine_degree2_relations(cyclic_affine(5, 2), p=5, t=1, n_order=4)
    ok = (f4.dimension_B2 == f4.formula_dimension == f4.symmetrizer_dimension == 8
          and f5.dimension_B2 == f5.formula_dimension == f5.symmetrizer_dimension == 15)
    return ok, f"F4: {f4.dimension_B2}, F5: {f5.dimension_B2}"


def c8():
    ranks = {(p, q): rack_homology(cyclic_affine(p, q), 2) for p, q in ((3, 2), (5, 2), (5, 3))}
    ok = all(H.free_rank == 1 and not H.torsion for H in ranks.values())
    return ok, ", ".join(f"({p},{q}): rank {H.free_rank}" for (p, q), H in ranks.items())


def c9():
    Z = cyclic_affine(3, 2)
    r = cohomology_with(Z, 2).free_rank
    s = cohomology_with(disjoint_sum(Z, Z), 2).free_rank
    return s == 2 * r + 2, f"rank H2(Z)={r}, rank H2(Z⊔Z)={s}"


def c10():
    t = time.time()
    checks = {"tetrahedron simple": is_simple(named("tetrahedron"))}
    C = named("cube_faces")
    Y, _ = proper_quotient(C)
    checks["cube faces quotient"] = (not is_simple(C)) and is_isomorphic(Y, cyclic_affine(3, 2)) is not None
    checks["cycle racks"] = all(permutation_rack_simplicity(n) == _is_prime(n) for n in range(2, 10))
    A5 = alternating_group(5)
    X15 = twisted_homogeneous_simple(A5, 1, seed=Perm([1, 0, 3, 2, 4]))
    X20 = twisted_homogeneous_simple(A5, 1, seed=Perm([1, 2, 0, 3, 4]))
    checks["A5 classes"] = X15.size == 15 and X20.size == 20 and is_simple(X15) and is_simple(X20)
    dt = time.time() - t
    bad = [k for k, v in checks.items() if not v]
    return not bad and dt <= 60, f"{dt:.1f}s" + (f", failed: {bad}" if bad else "")


def c11():
    want = {(2, 2): 1, (3, 2): 3, (2, 3): 2, (3, 1): 1, (5, 1): 3, (7, 1): 5}
    got = {k: (simple_affine_count(*k), len(simple_affine_list(*k))) for k in want}
    ok = all(got[k] == (v, v) for k, v in want.items())
    return ok, ", ".join(f"{k}: {got[k][0]}" for k in want)


def c12():
    fails = []
    for tilde in (False, True):
        sc = z3_split(MINUS, tilde=tilde)
        if conjugation_failure(fourier_transform(sc, verify=False), sc.A) is not None:
            fails.append("conjugation" + (" (tilde)" if tilde else ""))
    from rackalg.abelian import FinAbGroup
    from rackalg.cyclotomic import CycScalar, simplify
    z = simplify(CycScalar.zeta(3, 1))
    uno = paper_intertwiners("ej-uno", 4, sigma=[0, 1], omega=(1,), q=[[1, -1], [z, 1]], A=FinAbGroup([3]))
    for res in (uno, paper_intertwiners("ej-dos-1", 4, q=MINUS), paper_intertwiners("ej-dos-2", 4, q=MINUS)):
        if not res.ok:
            fails.append(res.case)
    return not fails, "conjugation and t-equivalences hold (ej-dos-2 with solved signs)" if not fails \
        else f"failed: {fails}"


def c12b():
    res = paper_intertwiners("ej-dos-2", 4, q=MINUS, r_mode="literal")
    return res.ok, "ej-dos-2 literal R-formula: " + ("holds" if res.ok else f"fails at {res.failure}")


def c13():
    # the randomized suites live in test_properties.py; here a quick replay of
    # the deterministic parts
    ok = all(nichols(n).poincare_ok() for n in ("tetrahedron", "transpositions", "cube_faces", "z5_2"))
    ok = ok and all(d == r for n in ("tetrahedron", "z5_2") for d, r in symmetrizer_crosscheck(nichols(n), 4).values())
    ok = ok and poly_divides([1, 2, 1], TRANSP) and poly_divides([1, 2, 1], Z5)
    return ok, "Poincaré, symmetrizer and divisibility replay; randomized suites in test_properties.py"


CRITERIA = [("1", c1), ("2", c2), ("3", c3), ("4", c4), ("5", c5), ("5b", c5b), ("6", c6), ("7", c7),
            ("8", c8), ("9", c9), ("10", c10), ("11", c11), ("12", c12), ("12b", c12b), ("13", c13)]
# sub-lines report related findings and are not criteria
INFO = {"5b", "12b"}


def line(key, ok, detail):
    tag = "PASS" if ok else "FAIL"
    kind = "note" if key in INFO else "criterion"
    return f"ACCEPTANCE {kind} {key}: {tag} ({detail})"


MAIN = [c for c in CRITERIA if c[0] not in INFO]
NOTES = [c for c in CRITERIA if c[0] in INFO]


@pytest.mark.parametrize("key,func", MAIN, ids=[k for k, _ in MAIN])
def test_criterion(key, func):
    ok, detail = func()
    RESULTS[key] = (ok, detail)
    assert ok, detail


@pytest.mark.parametrize("key,func", NOTES, ids=[k for k, _ in NOTES])
def test_note(key, func):
    RESULTS[key] = func()


if __name__ == "__main__":
    for key, func in CRITERIA:
        print(line(key, *func()), flush=True)
