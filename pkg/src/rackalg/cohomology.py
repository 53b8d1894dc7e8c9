"""Rack homology and cohomology.

* Trivial coefficients: the integral chain complex C_n = Z X^n with
  ∂(x_1..x_{n+1}) = Σ_{i<=n} (-1)^i [(.. x̂_i ..) - (x_1..x_{i-1}, x_i▷x_{i+1}, .., x_i▷x_{n+1})]
  and ∂ = 0 on C_1.  Homology comes from ranks and Smith normal forms.
* X-module coefficients: the cochain complex Fun(X^n, A) dual to the
  complex with η/τ weights, realised as integer matrices on the
  coordinates of A = ⊕ Z/m_u.
* Nonabelian H²(X, Γ): constant cocycles β: X × X -> Γ up to
  β ~ γ_{i▷j}⁻¹ β_ij γ_j, by backtracking.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd
from typing import Sequence

from .abelian import FinAbGroup
from .errors import BudgetExceeded, InputError, ValidationError
from .extensions import ConstantCocycle, XModule
from .linalg import USE_FLINT, flint, integer_rank, smith_invariants
from .permgroups import Perm, PermGroup
from .racks import Rack

DEFAULT_BASIS_CAP = 10**7
DEFAULT_H2_BUDGET = 10**6


@dataclass
class HomologyResult:
    n: int
    free_rank: int
    torsion: list[int]

    def to_dict(self) -> dict:
        return {"n": self.n, "free_rank": self.free_rank, "torsion": list(self.torsion)}

    @property
    def order(self):
        """Order of a finite group, None when infinite."""
        if self.free_rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out


def _tuples(n_letters: int, n: int):
    return list(itertools.product(range(n_letters), repeat=n))


def _bracket(T, xs) -> int:
    """[x_1 ⋯ x_k] = x_1 ▷ (x_2 ▷ (⋯ ▷ x_k))."""
    v = xs[-1]
    for x in reversed(xs[:-1]):
        v = T[x][v]
    return v


def _shift(T, xs, i):
    """(x_1..x_{i-1}, x_i ▷ x_{i+1}, .., x_i ▷ x_{n+1}) with 0-based i."""
    xi = xs[i]
    return xs[:i] + tuple(T[xi][y] for y in xs[i + 1:])


def _degenerate(xs) -> bool:
    return any(xs[k] == xs[k + 1] for k in range(len(xs) - 1))


# ---------------------------------------------------------------------
# trivial coefficients


@dataclass
class ChainComplexZ:
    """Boundaries ∂_n: C_{n+1} -> C_n as dense integer matrices (rows index C_n)."""

    rack: Rack
    bases: dict = field(default_factory=dict)
    boundaries: dict = field(default_factory=dict)
    quandle: bool = False

    def dim(self, n: int) -> int:
        return len(self.bases[n])

    def check_squares(self) -> bool:
        for n in self.boundaries:
            if n - 1 in self.boundaries:
                A, B = self.boundaries[n - 1], self.boundaries[n]
                for row in A:
                    for c in range(len(B[0]) if B else 0):
                        if sum(row[k] * B[k][c] for k in range(len(row)) if row[k]):
                            return False
        return True


def trivial_complex(X: Rack, n_max: int, quandle: bool = False,
                    basis_cap: int = DEFAULT_BASIS_CAP) -> ChainComplexZ:
    """Chain groups C_1..C_{n_max+1} and boundaries ∂_n for 1 <= n <= n_max.

    With ``quandle=True`` the degenerate tuples (x_k = x_{k+1}) are
    divided out, giving quandle homology.
    """
    if n_max < 1:
        raise InputError("n_max must be >= 1")
    if quandle and not X.is_quandle():
        raise ValidationError("quandle homology needs a quandle", condition="quandle")
    if X.size ** (n_max + 1) > basis_cap:
        raise BudgetExceeded(f"|X|^{n_max + 1} basis elements exceed cap {basis_cap}", X.size ** (n_max + 1))
    T = X.table
    C = ChainComplexZ(X, quandle=quandle)
    for n in range(1, n_max + 2):
        basis = _tuples(X.size, n)
        if quandle:
            basis = [b for b in basis if not _degenerate(b)]
        C.bases[n] = basis
    C.boundaries[0] = [[0] * len(C.bases[1])]
    for n in range(1, n_max + 1):
        idx = {b: k for k, b in enumerate(C.bases[n])}
        M = [[0] * len(C.bases[n + 1]) for _ in C.bases[n]]
        for c, xs in enumerate(C.bases[n + 1]):
            for i in range(n):
                sign = -1 if i % 2 == 0 else 1  # (-1)^{i+1} for 1-based index i+1
                for term, s in ((xs[:i] + xs[i + 1:], sign), (_shift(T, xs, i), -sign)):
                    r = idx.get(term)
                    if r is not None:
                        M[r][c] += s
        C.boundaries[n] = M
    return C


def homology(C: ChainComplexZ, n: int) -> HomologyResult:
    """H_n = ker(∂_{n-1}: C_n -> C_{n-1}) / im(∂_n: C_{n+1} -> C_n)."""
    if n not in C.boundaries or n - 1 not in C.boundaries:
        raise InputError(f"complex does not reach degree {n}")
    Dn, Dprev = C.boundaries[n], C.boundaries[n - 1]
    r_prev = integer_rank(Dprev)
    inv = smith_invariants(Dn)
    free = C.dim(n) - r_prev - len(inv)
    return HomologyResult(n, free, [d for d in inv if d > 1])


def rack_homology(X: Rack, n: int, quandle: bool = False) -> HomologyResult:
    return homology(trivial_complex(X, n, quandle=quandle), n)


def _hom_group(H: HomologyResult, m: int) -> list[int]:
    """Cyclic orders of Hom(H, Z/m) (m = 0 means Z; order 0 stands for Z)."""
    out = [m] * H.free_rank
    if m:
        out += [gcd(d, m) for d in H.torsion]
    return out


def _ext_group(H: HomologyResult, m: int) -> list[int]:
    if m == 0:
        return list(H.torsion)
    return [gcd(d, m) for d in H.torsion]


def cohomology_with(X: Rack, n: int, G: Sequence[int] | FinAbGroup = (0,), quandle: bool = False) -> HomologyResult:
    """H^n(X, G) for a trivial coefficient group by universal coefficients.

    ``G`` lists cyclic orders, 0 standing for Z.  H^n = Hom(H_n, G) ⊕ Ext(H_{n-1}, G).
    """
    orders = list(G.orders) if isinstance(G, FinAbGroup) else list(G)
    C = trivial_complex(X, n, quandle=quandle)
    Hn = homology(C, n)
    Hprev = homology(C, n - 1) if n >= 2 else HomologyResult(0, 1, [])
    free, tors = 0, []
    for m in orders:
        for d in _hom_group(Hn, m) + _ext_group(Hprev, m):
            if d == 0:
                free += 1
            elif d > 1:
                tors.append(d)
    return HomologyResult(n, free, _normal_torsion(tors))


def _normal_torsion(orders: list[int]) -> list[int]:
    """Invariant factors of ⊕ Z/d."""
    if not orders:
        return []
    inv = smith_invariants([[d if i == j else 0 for j in range(len(orders))] for i, d in enumerate(orders)])
    return [d for d in inv if d > 1]


def cohomology_dim_mod_p(X: Rack, n: int, p: int, quandle: bool = False) -> int:
    """dim over F_p of H^n(X, F_p), computed directly by ranks mod p."""
    C = trivial_complex(X, n, quandle=quandle)

    def rank_mod(M):
        if not M or not M[0]:
            return 0
        if USE_FLINT:
            return flint.nmod_mat(M, p).rank()
        return _rank_mod_python(M, p)

    # cochain d^{n}: C^n -> C^{n+1} is the transpose of ∂_n
    return C.dim(n) - rank_mod(C.boundaries[n]) - rank_mod(C.boundaries[n - 1])


def _rank_mod_python(M, p):
    A = [[x % p for x in row] for row in M]
    r = 0
    cols = len(A[0])
    for c in range(cols):
        piv = next((i for i in range(r, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = pow(A[r][c], -1, p)
        A[r] = [x * inv % p for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [(x - f * y) % p for x, y in zip(A[i], A[r])]
        r += 1
    return r


# ---------------------------------------------------------------------
# X-module coefficients


@dataclass
class ModuleCochainComplex:
    """d^n: Fun(X^n, A) -> Fun(X^{n+1}, A) as integer matrices on coordinates.

    Coordinates of C^n are (tuple, u) with tuple ∈ X^n and u a cyclic
    factor of A, ordered tuple-major; C^0 = A.
    """

    module: XModule
    basepoint: int
    bases: dict = field(default_factory=dict)
    d: dict = field(default_factory=dict)

    def moduli(self, n: int) -> list[int]:
        return [m for _ in self.bases[n] for m in self.module.A.orders]

    def apply(self, n: int, f: dict) -> dict:
        """d^n f for a cochain given as {tuple: element of A}."""
        A = self.module.A
        r = A.rank
        vec = [0] * (len(self.bases[n]) * r)
        for k, t in enumerate(self.bases[n]):
            for u, x in enumerate(f.get(t, A.zero())):
                vec[k * r + u] = x
        out = {}
        D = self.d[n]
        for k, t in enumerate(self.bases[n + 1]):
            out[t] = A.reduce([sum(D[k * r + u][c] * vec[c] for c in range(len(vec))) for u in range(r)])
        return out

    def check_squares(self) -> bool:
        """d^{n+1} d^n ≡ 0 modulo the target moduli."""
        for n in self.d:
            if n + 1 not in self.d:
                continue
            A, B = self.d[n + 1], self.d[n]
            mods = self.moduli(n + 2)
            for i, row in enumerate(A):
                for c in range(len(B[0])):
                    if sum(row[k] * B[k][c] for k in range(len(row)) if row[k]) % mods[i]:
                        return False
        return True


def module_cochain_complex(M: XModule, n_max: int, basepoint: int = 0,
                           basis_cap: int = DEFAULT_BASIS_CAP) -> ModuleCochainComplex:
    """Differentials d^0..d^{n_max}.

    d^0 a (x) = -τ_{*, *⁻¹▷x}(a); for n >= 1
    df(x) = Σ_{i<=n} (-1)^i [η_{[x_1..x_i],[x_1..x̂_i..x_{n+1}]} f(.. x̂_i ..) - f(shift_i x)]
            - (-1)^{n+1} τ_{[x_1..x_n],[x_1..x_{n-1} x_{n+1}]} f(x_1..x_n).
    """
    X, A = M.base, M.A
    if X.size ** (n_max + 1) * A.rank > basis_cap:
        raise BudgetExceeded("cochain basis exceeds cap", X.size ** (n_max + 1))
    rep = M.validate(level="Rack")
    rep.raise_if_failed("invalid X-module")
    T, r = X.table, A.rank
    C = ModuleCochainComplex(M, basepoint)
    for n in range(0, n_max + 2):
        C.bases[n] = _tuples(X.size, n)

    def add_block(D, row_t, col_t, mat, sign):
        for u in range(r):
            for v in range(r):
                if mat[u][v]:
                    D[row_t * r + u][col_t * r + v] += sign * mat[u][v]

    ident = A.identity()
    for n in range(0, n_max + 1):
        src, dst = C.bases[n], C.bases[n + 1]
        sidx = {t: k for k, t in enumerate(src)}
        D = [[0] * (len(src) * r) for _ in range(len(dst) * r)]
        for k, xs in enumerate(dst):
            if n == 0:
                add_block(D, k, 0, M.tau[basepoint][X.op_inv(basepoint, xs[0])], -1)
                continue
            for i in range(n):
                sign = -1 if i % 2 == 0 else 1
                hat = xs[:i] + xs[i + 1:]
                a, b = _bracket(T, xs[:i + 1]), _bracket(T, hat)
                add_block(D, k, sidx[hat], M.eta[a][b], sign)
                add_block(D, k, sidx[_shift(T, xs, i)], ident, -sign)
            a = _bracket(T, xs[:n])
            b = _bracket(T, xs[:n - 1] + xs[n:n + 1])
            add_block(D, k, sidx[xs[:n]], M.tau[a][b], -((-1) ** (n + 1)))
        mods = [m for _ in dst for m in A.orders]
        C.d[n] = [[x % mods[i] for x in row] for i, row in enumerate(D)]
    return C


def _kernel_lattice(B: list[list[int]], ncols: int) -> list[list[int]]:
    """A Z-basis (as rows) of {v ∈ Z^ncols : B v = 0}."""
    rows = len(B)
    if rows == 0:
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    # HNF of [B^T | I]; rows whose B^T part vanishes carry the kernel
    aug = [[B[r][c] for r in range(rows)] + [int(c == j) for j in range(ncols)] for c in range(ncols)]
    H = flint.fmpz_mat(aug).hnf().tolist()
    return [[int(x) for x in row[rows:]] for row in H if all(x == 0 for x in row[:rows])]


def module_cohomology(C: ModuleCochainComplex, n: int) -> HomologyResult:
    """H^n of the module cochain complex (a finite abelian group)."""
    if not USE_FLINT:  # pragma: no cover
        raise RuntimeError("module cohomology needs python-flint")
    if n not in C.d:
        raise InputError(f"complex does not reach degree {n}")
    Dn = C.d[n]
    k = len(Dn[0])
    mods_n, mods_next = C.moduli(n), C.moduli(n + 1)
    # cocycles: v with Dn v ≡ 0 mod mods_next, i.e. kernel of [Dn | -diag]
    B = [list(row) + [-(mods_next[i]) if j == i else 0 for j in range(len(mods_next))]
         for i, row in enumerate(Dn)]
    K = _kernel_lattice(B, k + len(mods_next))
    L = [row[:k] for row in K]
    # L spans a full-rank lattice; extract a basis via HNF
    Lb = [row for row in flint.fmpz_mat(L).hnf().tolist() if any(row)]
    Lb = [[int(x) for x in row] for row in Lb]
    gens = [[mods_n[i] if j == i else 0 for j in range(k)] for i in range(k)]
    if n >= 1:
        Dp = C.d[n - 1]
        for c in range(len(Dp[0])):
            gens.append([Dp[r][c] for r in range(k)])
    # coordinates of the generators in the lattice basis
    Lm = flint.fmpq_mat(flint.fmpz_mat(Lb).transpose())
    G = flint.fmpq_mat(flint.fmpz_mat(gens).transpose())
    X = Lm.solve(G)
    coords = [[int(X[i, j]) for j in range(X.ncols())] for i in range(X.nrows())]
    inv = smith_invariants(coords)
    free = len(Lb) - len(inv)
    return HomologyResult(n, free, [d for d in inv if d > 1])


# ---------------------------------------------------------------------
# nonabelian H²


@dataclass
class NonabelianH2:
    classes: list  # each a tuple of tuples of Perm, one representative per class
    cocycle_count: int


def nonabelian_h2(X: Rack, G: PermGroup, budget: int = DEFAULT_H2_BUDGET) -> NonabelianH2:
    """Z²(X, Γ) by backtracking and its classes under γ: X -> Γ."""
    els = list(G.elements)
    idx = {g: k for k, g in enumerate(els)}
    n = X.size
    T = X.table
    mul = [[idx[a * b] for b in els] for a in els]
    inv = [idx[a.inverse()] for a in els]
    order = [(i, j) for i in range(n) for j in range(n)]
    pos = {p: k for k, p in enumerate(order)}
    # constraints β_{i,j▷k} β_{j,k} = β_{i▷j,i▷k} β_{i,k}, attached to the last-assigned pair
    cons: list[list] = [[] for _ in order]
    for i, j, k in itertools.product(range(n), repeat=3):
        pairs = [(i, T[j][k]), (j, k), (T[i][j], T[i][k]), (i, k)]
        last = max(pos[p] for p in pairs)
        cons[last].append(pairs)
    beta = [0] * len(order)
    found = []
    nodes = 0

    def ok(step):
        for a, b, c, d in cons[step]:
            if mul[beta[pos[a]]][beta[pos[b]]] != mul[beta[pos[c]]][beta[pos[d]]]:
                return False
        return True

    def rec(step):
        nonlocal nodes
        if step == len(order):
            found.append(tuple(beta))
            return
        for g in range(len(els)):
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"search exceeded {budget} nodes", len(found), partial=len(found))
            beta[step] = g
            if ok(step):
                rec(step + 1)

    rec(0)
    seen = set()
    classes = []
    for b in found:
        if b in seen:
            continue
        orbit = set()
        for gam in itertools.product(range(len(els)), repeat=n):
            # β̃_ij = γ_{i▷j}⁻¹ β_ij γ_j
            orbit.add(tuple(mul[mul[inv[gam[T[i][j]]]][b[pos[(i, j)]]]][gam[j]] for i, j in order))
        seen |= orbit
        classes.append(tuple(tuple(els[b[pos[(i, j)]]] for j in range(n)) for i in range(n)))
    return NonabelianH2(classes, len(found))


def abelian_to_constant(X: Rack, A: FinAbGroup, f) -> ConstantCocycle:
    """B_ij(a) = a + f_ij as a constant cocycle on the elements of A."""
    els = A.elements()
    n = X.size
    return ConstantCocycle(X, [[Perm([A.index(A.add(a, f[i][j])) for a in els]) for j in range(n)]
                               for i in range(n)])


def trivial_module(X: Rack, A: FinAbGroup) -> XModule:
    """η = id, τ = 0."""
    n = X.size
    return XModule(X, A, [[A.identity()] * n for _ in range(n)], [[A.zero_map()] * n for _ in range(n)])
