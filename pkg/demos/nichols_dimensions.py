"""Hilbert series of Nichols algebras of rack type with q ≡ -1."""
from rackalg.braided import BraidedSpace, constant_cocycle
from rackalg.nichols import nichols_graded
from rackalg.racks import NAMED

for name in ("tetrahedron", "transpositions", "cube_faces", "z5_2"):
    X = NAMED[name]()
    N = nichols_graded(BraidedSpace.rack_type(X, constant_cocycle(X, -1)))
    print(f"{name:15s} |X|={X.size}  dim={N.total:5d}  top={N.top_degree:2d}  {N.dims}")
