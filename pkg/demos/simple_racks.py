"""Simplicity tests, simple affine racks and small enumerations."""
from rackalg.permgroups import Perm, alternating_group
from rackalg.racks import NAMED
from rackalg.simple import (enumerate_racks, is_simple, proper_quotient, simple_affine_count,
                            twisted_homogeneous_simple)

for name in ("tetrahedron", "cube_faces", "transpositions", "z5_2"):
    X = NAMED[name]()
    q = proper_quotient(X)
    print(f"{name:15s} simple={is_simple(X)}" + (f"  quotient of size {q[0].size}" if q else ""))

for p, t in ((2, 2), (2, 3), (3, 2), (5, 1), (7, 1)):
    print(f"simple affine racks of order {p}^{t}: {simple_affine_count(p, t)}")

A5 = alternating_group(5)
for seed in (Perm([1, 0, 3, 2, 4]), Perm([1, 2, 0, 3, 4])):
    X = twisted_homogeneous_simple(A5, 1, seed=seed)
    print(f"A5 class of {seed.cycles()}: {X.size} elements, {X.kind}")

for kind in ("Rack", "Quandle", "CrossedSet"):
    print(kind, [len(enumerate_racks(n, kind)) for n in range(1, 5)])
