"""Rack homology of small racks and nonabelian H² with two-point fibers."""
from rackalg.cohomology import nonabelian_h2, rack_homology
from rackalg.permgroups import symmetric_group
from rackalg.racks import NAMED

for name in ("z3", "z5_2", "z5_3", "tetrahedron", "cube_faces"):
    X = NAMED[name]()
    hs = [rack_homology(X, n) for n in (1, 2)]
    text = ", ".join(f"H{h.n} = Z^{h.free_rank}" + "".join(f" + Z/{d}" for d in h.torsion) for h in hs)
    print(f"{name:12s} {text}")

for name in ("z3", "tetrahedron"):
    r = nonabelian_h2(NAMED[name](), symmetric_group(2))
    print(f"{name:12s} H2(X, S2): {len(r.classes)} classes from {r.cocycle_count} cocycles")
