"""Congruences, simplicity, simple affine racks and small rack enumeration."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Sequence

import flint

from .abelian import FinAbGroup
from .errors import BudgetExceeded, InputError, ValidationError
from .permgroups import Perm, PermGroup
from .racks import (CROSSED_SET, KIND_LEVEL, QUANDLE, RACK, Rack, _kind, affine_rack, congruence_closure,
                    cycle_rack, is_indecomposable, is_isomorphic, quotient_by_partition)

ENUMERATION_CAP = 5
ORBIT_CAP = 10**4


@dataclass(frozen=True)
class Congruence:
    blocks: tuple

    @property
    def is_total(self) -> bool:
        return len(self.blocks) == 1

    @property
    def is_discrete(self) -> bool:
        return all(len(b) == 1 for b in self.blocks)

    def quotient(self, X: Rack) -> tuple[Rack, list[int]]:
        return quotient_by_partition(X, self.blocks)


def is_congruence(X: Rack, blocks: Sequence[Sequence[int]]) -> bool:
    block_of = {}
    for k, b in enumerate(blocks):
        for x in b:
            block_of[x] = k
    if sorted(block_of) != list(range(X.size)):
        return False
    t = X.table
    for x, x2 in itertools.product(range(X.size), repeat=2):
        if block_of[x] != block_of[x2]:
            continue
        for y in range(X.size):
            if block_of[t[x][y]] != block_of[t[x2][y]] or block_of[t[y][x]] != block_of[t[y][x2]]:
                return False
    return True


def principal_congruence(X: Rack, a: int, b: int) -> Congruence:
    """Smallest congruence with a ~ b."""
    if X.size < 2:
        raise InputError("principal congruences need at least 2 elements")
    return Congruence(tuple(tuple(bl) for bl in congruence_closure(X, [(a, b)])))


def proper_quotient(X: Rack) -> tuple[Rack, list[int]] | None:
    """A quotient with 1 < |Y| < |X|, if one exists.

    Every congruence contains a principal one, so a nontrivial projection
    exists iff some principal congruence is not total.
    """
    best = None
    for a, b in itertools.combinations(range(X.size), 2):
        c = principal_congruence(X, a, b)
        if not c.is_total and (best is None or len(c.blocks) > len(best.blocks)):
            best = c
    return None if best is None else best.quotient(X)


def is_simple(X: Rack) -> bool:
    """Nontrivial, and every projection is onto a point or bijective."""
    if X.size < 2 or X.is_trivial():
        return False
    # a nontrivial decomposable rack projects onto the trivial rack with two
    # elements; otherwise congruences are Inn-stable, so a proper one relates
    # 0 to some b
    if not is_indecomposable(X):
        return False
    return all(principal_congruence(X, 0, b).is_total for b in range(1, X.size))


# ---------------------------------------------------------------------
# affine


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def _mobius(n: int) -> int:
    res, m, d = 1, n, 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            res = -res
        d += 1
    return -res if m > 1 else res


def irreducible_count(p: int, t: int) -> int:
    """Monic irreducible polynomials of degree t over F_p."""
    return sum(_mobius(t // d) * p ** d for d in range(1, t + 1) if t % d == 0) // t


def simple_affine_count(p: int, t: int) -> int:
    if not _is_prime(p):
        raise InputError(f"{p} is not prime")
    if t < 1:
        raise InputError("t must be at least 1")
    return p - 2 if t == 1 else irreducible_count(p, t)


def admissible_polynomials(p: int, t: int) -> list[list[int]]:
    """Monic irreducible f over F_p of degree t, f ≠ X, X - 1; coefficients low to high."""
    if not _is_prime(p):
        raise InputError(f"{p} is not prime")
    out = []
    for low in itertools.product(range(p), repeat=t):
        coeffs = list(low) + [1]
        if t == 1 and coeffs[0] in (0, p - 1):
            continue
        _, fac = flint.nmod_poly(coeffs, p).factor()
        if len(fac) == 1 and fac[0][1] == 1 and fac[0][0].degree() == t:
            out.append(coeffs)
    return out


def companion(coeffs: Sequence[int], p: int) -> tuple:
    """Companion matrix of the monic polynomial with the given coefficients."""
    t = len(coeffs) - 1
    M = [[0] * t for _ in range(t)]
    for r in range(1, t):
        M[r][r - 1] = 1
    for r in range(t):
        M[r][t - 1] = (-coeffs[r]) % p
    return tuple(tuple(row) for row in M)


def simple_affine_list(p: int, t: int) -> list[Rack]:
    """(F_p^t, g) with g the companion matrix of each admissible polynomial."""
    A = FinAbGroup([p] * t)
    out = []
    for f in admissible_polynomials(p, t):
        X = affine_rack(A, companion(f, p))
        X.name = f"affine(F_{p}^{t}, {f})"
        out.append(X)
    return out


# ---------------------------------------------------------------------
# permutation and twisted homogeneous racks


def permutation_rack_simplicity(n: int) -> bool:
    """Simplicity of the n-cycle permutation rack, by congruence search."""
    if n < 2:
        raise InputError("n must be at least 2")
    return is_simple(cycle_rack(n))


def _inner_by(L: PermGroup, theta: Callable) -> Perm | None:
    """The n ∈ L with θ(g) = n g n⁻¹ on generators, if θ is inner."""
    gens = L.generators
    for n in L.elements:
        if all(theta(g) == n * g * n.inverse() for g in gens):
            return n
    return None


def twisted_homogeneous_simple(L: PermGroup, t: int, theta=None, seed: Sequence[Perm] | Perm | None = None,
                               cap: int = ORBIT_CAP, check: bool = True) -> Rack:
    """Orbit of ``seed`` in L^t under h ⇀ m = h m x(h)⁻¹ with m ▷ p = m x(p m⁻¹).

    x(l_1..l_t) = (θ(l_t), l_1, .., l_{t-1}).  θ is a callable on Perm, or a
    Perm n meaning g -> n g n⁻¹; None is the identity.
    """
    if t < 1:
        raise InputError("t must be at least 1")
    if theta is None:
        theta = lambda g: g
    elif isinstance(theta, Perm):
        n0 = theta
        theta = lambda g, n0=n0: n0 * g * n0.inverse()
    if seed is None:
        raise InputError("a seed in L^t is required")
    seed = (seed,) if isinstance(seed, Perm) else tuple(seed)
    if len(seed) != t or any(s not in L for s in seed):
        raise InputError("seed must be a t-tuple of elements of L")
    if t == 1:
        n = _inner_by(L, theta)
        if n is not None and (n * seed[0]).is_identity():
            raise ValidationError("degenerate case: x inner by n with seed n⁻¹", condition="n ≠ m⁻¹ if t = 1",
                                  witness=n.to_json())

    def x(v):
        return (theta(v[-1]),) + v[:-1]

    def mul(u, v):
        return tuple(a * b for a, b in zip(u, v))

    def inv(u):
        return tuple(a.inverse() for a in u)

    one = L.identity()
    gens = [tuple(g if k == c else one for k in range(t)) for c in range(t) for g in L.generators]
    dom = {seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for m in frontier:
            for h in gens:
                k = mul(mul(h, m), inv(x(h)))
                if k not in dom:
                    dom.add(k)
                    nxt.append(k)
                    if len(dom) > cap:
                        raise BudgetExceeded(f"orbit exceeds {cap} elements", len(dom))
        frontier = nxt
    elems = sorted(dom)
    idx = {e: k for k, e in enumerate(elems)}
    table = [[idx[mul(m, x(mul(p, inv(m))))] for p in elems] for m in elems]
    X = Rack(table, name=f"twisted homogeneous (t={t})")
    if check and not is_simple(X):
        raise ValidationError("constructed rack is not simple", condition="simple")
    return X


# ---------------------------------------------------------------------
# enumeration


def _canonical(table, n) -> tuple:
    best = None
    for p in itertools.permutations(range(n)):
        inv = [0] * n
        for a, b in enumerate(p):
            inv[b] = a
        t = tuple(tuple(p[table[inv[i]][inv[j]]] for j in range(n)) for i in range(n))
        if best is None or t < best:
            best = t
    return best


def enumerate_racks(n: int, kind: str = RACK, cap: int = ENUMERATION_CAP,
                    indecomposable: bool = False) -> list[Rack]:
    """All racks of order n up to isomorphism whose kind is at least ``kind``.

    Rows φ_i are chosen in order, pruning with φ_{φ_i(j)} = φ_i φ_j φ_i⁻¹
    whenever all three rows are known.
    """
    if kind not in KIND_LEVEL or KIND_LEVEL[kind] < 1:
        raise InputError(f"unknown kind {kind!r}")
    if n < 1:
        raise InputError("n must be positive")
    if n > cap:
        raise BudgetExceeded(f"n = {n} exceeds enumeration cap {cap}", n)
    perms = list(itertools.permutations(range(n)))
    need_quandle = KIND_LEVEL[kind] >= KIND_LEVEL[QUANDLE]
    rows: list = [None] * n
    found: dict = {}

    def consistent(k: int) -> bool:
        # all constraints involving rows 0..k
        for i in range(k + 1):
            pi = rows[i]
            for j in range(k + 1):
                c = pi[j]
                if c > k:
                    continue
                pj, pc = rows[j], rows[c]
                # φ_c φ_i = φ_i φ_j
                for y in range(n):
                    if pc[pi[y]] != pi[pj[y]]:
                        return False
        return True

    def search(k: int):
        if k == n:
            if KIND_LEVEL[_kind(rows)] < KIND_LEVEL[kind]:
                return
            canon = _canonical(rows, n)
            if canon not in found:
                found[canon] = True
            return
        for p in perms:
            if need_quandle and p[k] != k:
                continue
            rows[k] = p
            if consistent(k):
                search(k + 1)
        rows[k] = None

    search(0)
    out = [Rack([list(r) for r in canon]) for canon in sorted(found)]
    if indecomposable:
        out = [X for X in out if is_indecomposable(X)]
    return out
