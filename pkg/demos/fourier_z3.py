"""Fourier transform of the two Z/2-extensions of (Z/3, ▷²) and their t-equivalences."""
from rackalg.fourier import fourier_transform, paper_intertwiners, z3_split
from rackalg.racks import NAMED, is_isomorphic

q = [[-1] * 3 for _ in range(3)]
for tilde, target in ((False, "transpositions"), (True, "cube_faces")):
    sc = z3_split(q, tilde=tilde)
    res = fourier_transform(sc)  # raises if the conjugation identity fails
    Y = sc.extension()
    print(f"extension ≅ {target}: {is_isomorphic(Y, NAMED[target]()) is not None}")
    for x in range(res.braided.n):
        row = [f"{res.braided.target[x][y]}:{res.braided.coef[x][y]}" for y in range(res.braided.n)]
        print(f"  {res.labels[x]}  " + " ".join(row))

for case, kw in (("ej-dos-1", {}), ("ej-dos-2", {}), ("ej-dos-2", {"r_mode": "literal"})):
    r = paper_intertwiners(case, 4, q=q, **kw)
    print(case, kw, "ok" if r.ok else f"fails at {r.failure}")
