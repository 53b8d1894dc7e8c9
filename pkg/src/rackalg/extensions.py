"""Extensions of racks by dynamical cocycles, constant cocycles and X-modules.

A dynamical cocycle on X with fiber S = {0..m-1} is a table
``alpha[i][j][s][t]``; the extension X ×_α S has elements (i, s),
numbered i*m + s, and (i,s) ▷ (j,t) = (i▷j, α_ij(s,t)).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .abelian import FinAbGroup
from .errors import BudgetExceeded, InputError, ValidationError
from .permgroups import Perm, generate
from .racks import CROSSED_SET, QUANDLE, RACK, Rack, is_indecomposable, is_morphism

DEFAULT_SEARCH_BUDGET = 10**6

LEVELS = (RACK, QUANDLE, CROSSED_SET)


@dataclass
class Report:
    """Pass/fail per named condition, with the first witness of each failure."""

    checks: dict = field(default_factory=dict)

    def add(self, name: str, witness):
        self.checks[name] = witness

    @property
    def ok(self) -> bool:
        return all(w is None for w in self.checks.values())

    def failures(self) -> dict:
        return {k: w for k, w in self.checks.items() if w is not None}

    def to_dict(self) -> dict:
        return {"ok": self.ok,
                "checks": {k: {"ok": w is None, "witness": _jsonable(w)} for k, w in self.checks.items()}}

    def raise_if_failed(self, what: str):
        for name, w in self.checks.items():
            if w is not None:
                raise ValidationError(f"{what}: condition {name} fails", condition=name, witness=w)


def _jsonable(w):
    if w is None:
        return None
    if isinstance(w, (list, tuple)):
        return [_jsonable(x) for x in w]
    return w


def _level_of(X: Rack, level: str | None) -> str:
    if level is None:
        return X.kind
    if level not in LEVELS:
        raise InputError(f"unknown level {level!r}")
    if LEVELS.index(level) > LEVELS.index(X.kind):
        raise ValidationError(f"base is a {X.kind}, not a {level}", condition="base kind")
    return level


# ---------------------------------------------------------------------
# dynamical cocycles


class DynamicalCocycle:
    def __init__(self, base: Rack, size: int, alpha):
        self.base = base
        self.size = int(size)
        n, m = base.size, self.size
        try:
            a = [[[[int(alpha[i][j][s][t]) for t in range(m)] for s in range(m)]
                  for j in range(n)] for i in range(n)]
        except (IndexError, TypeError) as exc:
            raise InputError("cocycle table has the wrong shape") from exc
        for i, j, s, t in itertools.product(range(n), range(n), range(m), range(m)):
            if not 0 <= a[i][j][s][t] < m:
                raise InputError(f"cocycle value out of range at {(i, j, s, t)}")
        self.alpha = a

    @classmethod
    def from_function(cls, base: Rack, size: int, f: Callable[[int, int, int, int], int]):
        n, m = base.size, size
        return cls(base, size, [[[[f(i, j, s, t) for t in range(m)] for s in range(m)]
                                 for j in range(n)] for i in range(n)])

    def __call__(self, i, j, s, t) -> int:
        return self.alpha[i][j][s][t]

    def validate(self, level: str | None = None) -> Report:
        X, m, a = self.base, self.size, self.alpha
        level = _level_of(X, level)
        T = X.table
        n = X.size
        r = Report()
        bij = None
        for i, j, s in itertools.product(range(n), range(n), range(m)):
            if len(set(a[i][j][s])) != m:
                bij = (i, j, s)
                break
        r.add("bijective", bij)
        comp = None
        for i, j, k in itertools.product(range(n), repeat=3):
            ij, ik, jk = T[i][j], T[i][k], T[j][k]
            for s, t, u in itertools.product(range(m), repeat=3):
                if a[i][jk][s][a[j][k][t][u]] != a[ij][ik][a[i][j][s][t]][a[i][k][s][u]]:
                    comp = (i, j, k, s, t, u)
                    break
            if comp:
                break
        r.add("composition", comp)
        if level in (QUANDLE, CROSSED_SET):
            w = None
            for i, s in itertools.product(range(n), range(m)):
                if a[i][i][s][s] != s:
                    w = (i, s)
                    break
            r.add("quandle", w)
        if level == CROSSED_SET:
            w = None
            for i, j in itertools.product(range(n), repeat=2):
                if T[i][j] != j:
                    continue
                for s, t in itertools.product(range(m), repeat=2):
                    if a[i][j][s][t] == t and a[j][i][t][s] != s:
                        w = (i, j, s, t)
                        break
                if w:
                    break
            r.add("crossed set", w)
        return r

    def is_constant(self) -> bool:
        """α_ij(s) independent of s."""
        return all(row[s] == row[0] for ai in self.alpha for row in ai for s in range(self.size))

    def to_dict(self) -> dict:
        return {"size": self.size, "alpha": self.alpha}


class ConstantCocycle:
    """β: X × X -> Sym(S), stored as Perm objects on {0..m-1}."""

    def __init__(self, base: Rack, beta):
        self.base = base
        n = base.size
        try:
            self.beta = [[b if isinstance(b, Perm) else Perm(b) for b in beta[i]] for i in range(n)]
        except (IndexError, TypeError) as exc:
            raise InputError("constant cocycle has the wrong shape") from exc
        sizes = {b.degree for row in self.beta for b in row}
        if len(sizes) != 1 or any(len(row) != n for row in self.beta):
            raise InputError("constant cocycle has the wrong shape")
        self.size = sizes.pop()

    def to_dynamical(self) -> DynamicalCocycle:
        n, m = self.base.size, self.size
        return DynamicalCocycle(self.base, m, [[[[self.beta[i][j](t) for t in range(m)] for _ in range(m)]
                                                for j in range(n)] for i in range(n)])

    def validate(self, level: str | None = None) -> Report:
        X = self.base
        level = _level_of(X, level)
        T, n, b = X.table, X.size, self.beta
        r = Report()
        w = None
        for i, j, k in itertools.product(range(n), repeat=3):
            if b[i][T[j][k]] * b[j][k] != b[T[i][j]][T[i][k]] * b[i][k]:
                w = (i, j, k)
                break
        r.add("composition", w)
        if level in (QUANDLE, CROSSED_SET):
            w = next((i for i in range(n) if not b[i][i].is_identity()), None)
            r.add("quandle", None if w is None else (w,))
        if level == CROSSED_SET:
            w = None
            for i, j in itertools.product(range(n), repeat=2):
                if T[i][j] == j and any(b[i][j](t) == t for t in range(self.size)) \
                        and not b[j][i].is_identity():
                    w = (i, j)
                    break
            r.add("crossed set", w)
        return r


def extend(X: Rack, alpha, level: str | None = None, check: bool = True) -> Rack:
    """The extension X ×_α S; ``alpha`` is a DynamicalCocycle or ConstantCocycle."""
    if isinstance(alpha, ConstantCocycle):
        alpha = alpha.to_dynamical()
    if alpha.base is not X and alpha.base.table != X.table:
        raise InputError("cocycle is defined over a different rack")
    if check:
        alpha.validate(level).raise_if_failed("not a dynamical cocycle")
    n, m, a, T = X.size, alpha.size, alpha.alpha, X.table
    table = [[T[i][j] * m + a[i][j][s][t] for j in range(n) for t in range(m)]
             for i in range(n) for s in range(m)]
    labels = [f"{X.label(i)}:{s}" for i in range(n) for s in range(m)]
    return Rack(table, labels=labels, name=f"{X.name or 'X'}×S")


def cohomologous_dynamical(alpha: DynamicalCocycle, alpha2: DynamicalCocycle, gamma: Sequence) -> bool:
    """α'_ij(s,t) = γ_{i▷j}(α_ij(γ_i⁻¹ s, γ_j⁻¹ t)) for all i, j, s, t."""
    X, m = alpha.base, alpha.size
    g = [p if isinstance(p, Perm) else Perm(p) for p in gamma]
    gi = [p.inverse() for p in g]
    T = X.table
    for i, j in itertools.product(range(X.size), repeat=2):
        for s, t in itertools.product(range(m), repeat=2):
            if alpha2.alpha[i][j][s][t] != g[T[i][j]](alpha.alpha[i][j][gi[i](s)][gi[j](t)]):
                return False
    return True


def find_dynamical_coboundary(alpha: DynamicalCocycle, alpha2: DynamicalCocycle,
                              budget: int = DEFAULT_SEARCH_BUDGET):
    """Some γ: X -> Sym(S) relating α and α', or None; backtracks over X."""
    X, m = alpha.base, alpha.size
    n = X.size
    perms = [Perm(p) for p in itertools.permutations(range(m))]
    total = len(perms) ** n
    if total > budget:
        raise BudgetExceeded(f"{total} candidate maps exceed budget {budget}", total)
    T = X.table
    gamma: list = [None] * n

    def consistent(upto):
        # check all (i,j) with i, j, i▷j already assigned
        for i in range(upto + 1):
            for j in range(upto + 1):
                k = T[i][j]
                if k > upto:
                    continue
                gk, gi, gj = gamma[k], gamma[i].inverse(), gamma[j].inverse()
                for s, t in itertools.product(range(m), repeat=2):
                    if alpha2.alpha[i][j][s][t] != gk(alpha.alpha[i][j][gi(s)][gj(t)]):
                        return False
        return True

    def rec(x):
        if x == n:
            return True
        for p in perms:
            gamma[x] = p
            if consistent(x) and rec(x + 1):
                return True
        gamma[x] = None
        return False

    return list(gamma) if rec(0) else None


def constant_cohomologous(beta: ConstantCocycle, beta2: ConstantCocycle, gamma: Sequence) -> bool:
    """β'_ij = γ_{i▷j} β_ij γ_j⁻¹."""
    X = beta.base
    g = [p if isinstance(p, Perm) else Perm(p) for p in gamma]
    T = X.table
    return all(beta2.beta[i][j] == g[T[i][j]] * beta.beta[i][j] * g[j].inverse()
               for i in range(X.size) for j in range(X.size))


def find_constant_coboundary(beta: ConstantCocycle, beta2: ConstantCocycle,
                             budget: int = DEFAULT_SEARCH_BUDGET):
    return find_dynamical_coboundary(beta.to_dynamical(), beta2.to_dynamical(), budget)


def is_transitive_constant(X: Rack, beta: ConstantCocycle, i: int = 0) -> bool:
    """Whether H_i (elements of Inn(X ×_β S) preserving i × S) is transitive on i × S."""
    if not is_indecomposable(X):
        raise ValidationError("base rack is decomposable", condition="indecomposable")
    m = beta.size
    E = extend(X, beta, level=RACK)
    G = generate([E.phi(k) for k in range(E.size)], E.size)
    fiber = set(range(i * m, (i + 1) * m))
    reach = set()
    for h in G.elements:
        if all(h(x) in fiber for x in fiber):
            reach.add(h(i * m))
    return reach == fiber


def tetrahedron_beta(X: Rack) -> ConstantCocycle:
    """β(x,y) = id if x = 1, y = 1 or x = y, the transposition otherwise."""
    n = X.size
    one = X.labels.index("1") if X.labels and "1" in X.labels else 0
    swap, ident = Perm([1, 0]), Perm([0, 1])
    return ConstantCocycle(X, [[ident if (x == one or y == one or x == y) else swap
                                for y in range(n)] for x in range(n)])


def trivial_constant(X: Rack, m: int) -> ConstantCocycle:
    e = Perm.identity(m)
    return ConstantCocycle(X, [[e] * X.size for _ in range(X.size)])


def section_cocycle(X: Rack, x0: int, rho: Callable[[Perm], Perm], m: int) -> ConstantCocycle:
    """β_{x,y} = ρ(s(x▷y)⁻¹ φ_x s(y)) for a section s: X -> Inn(X), s(x)·x0 = x.

    ``rho`` maps the stabiliser of x0 into Sym(m).
    """
    G = generate([X.phi(k) for k in range(X.size)], X.size)
    s: list = [None] * X.size
    for g in G.elements:
        y = g(x0)
        if s[y] is None:
            s[y] = g
    if any(v is None for v in s):
        raise ValidationError("rack is not indecomposable", condition="indecomposable")
    T = X.table
    beta = []
    for x in range(X.size):
        row = []
        for y in range(X.size):
            t = s[T[x][y]].inverse() * X.phi(x) * s[y]
            p = rho(t)
            if p.degree != m:
                raise InputError("rho returns permutations of the wrong degree")
            row.append(p)
        beta.append(row)
    return ConstantCocycle(X, beta)


# ---------------------------------------------------------------------
# X-modules


class XModule:
    """η (automorphisms) and τ (endomorphisms) of a finite abelian group A, indexed by X × X."""

    def __init__(self, base: Rack, A: FinAbGroup, eta, tau):
        self.base, self.A = base, A
        n = base.size
        try:
            self.eta = [[A.normalize(eta[i][j]) for j in range(n)] for i in range(n)]
            self.tau = [[A.normalize(tau[i][j]) for j in range(n)] for i in range(n)]
        except (IndexError, TypeError) as exc:
            raise InputError("η/τ tables have the wrong shape") from exc

    @classmethod
    def affine(cls, X: Rack, A: FinAbGroup, g) -> "XModule":
        """η = g, τ = id - g for every pair."""
        f = A.sub_maps(A.identity(), g)
        return cls(X, A, [[g] * X.size for _ in range(X.size)], [[f] * X.size for _ in range(X.size)])

    def alpha(self, kappa=None) -> DynamicalCocycle:
        """α_ij(a, b) = η_ij(b) + τ_ij(a) + κ_ij on indices of A.elements()."""
        A, n = self.A, self.base.size
        els = A.elements()
        kap = kappa if kappa is not None else [[A.zero()] * n for _ in range(n)]
        table = [[[[A.index(A.add(A.add(A.apply(self.eta[i][j], b), A.apply(self.tau[i][j], a)), kap[i][j]))
                    for b in els] for a in els] for j in range(n)] for i in range(n)]
        return DynamicalCocycle(self.base, len(els), table)

    def validate(self, level: str | None = None) -> Report:
        X, A = self.base, self.A
        level = _level_of(X, level)
        T, n, eta, tau = X.table, X.size, self.eta, self.tau
        r = Report()
        r.add("endomorphism", next(((i, j) for i in range(n) for j in range(n)
                                    if not (A.is_endomorphism(eta[i][j]) and A.is_endomorphism(tau[i][j]))), None))
        r.add("automorphism", next(((i, j) for i in range(n) for j in range(n)
                                    if not A.is_automorphism(eta[i][j])), None))
        w2 = w3 = w5 = None
        for i, j, k in itertools.product(range(n), repeat=3):
            ij, ik, jk = T[i][j], T[i][k], T[j][k]
            if w2 is None and not A.maps_equal(A.compose(eta[i][jk], eta[j][k]), A.compose(eta[ij][ik], eta[i][k])):
                w2 = (i, j, k)
            if w3 is None and not A.maps_equal(tau[i][jk], A.add_maps(A.compose(eta[ij][ik], tau[i][k]),
                                                                      A.compose(tau[ij][ik], tau[i][j]))):
                w3 = (i, j, k)
            if w5 is None and not A.maps_equal(A.compose(eta[i][jk], tau[j][k]), A.compose(tau[ij][ik], eta[i][j])):
                w5 = (i, j, k)
        r.add("xmod2", w2)
        r.add("xmod3", w3)
        r.add("xmod5", w5)
        if level in (QUANDLE, CROSSED_SET):
            r.add("xmod1", next(((i,) for i in range(n)
                                 if not A.maps_equal(A.add_maps(eta[i][i], tau[i][i]), A.identity())), None))
        if level == CROSSED_SET:
            pw, ex = self.xmod4_readings()
            r.add("xmod4", pw)
            r.add("xmod4 (existential reading)", ex)
        return r

    def xmod4_readings(self):
        """Witnesses against the crossed-set axiom under its two readings.

        pointwise: for each pair (s, t) meeting the hypothesis, that pair
        meets the conclusion.  existential: if some pair meets the
        hypothesis, every pair (s, t) meets the conclusion.
        """
        X, A = self.base, self.A
        T, n = X.table, X.size
        els = A.elements()
        ident = A.identity()
        pw = ex = None
        for i, j in itertools.product(range(n), repeat=2):
            if T[i][j] != j:
                continue
            h1, h2 = A.sub_maps(ident, self.eta[i][j]), self.tau[i][j]
            c1, c2 = A.sub_maps(ident, self.eta[j][i]), self.tau[j][i]
            hyp = [(s, t) for s in els for t in els if A.apply(h1, t) == A.apply(h2, s)]
            if pw is None:
                for s, t in hyp:
                    if A.apply(c1, s) != A.apply(c2, t):
                        pw = (i, j, s, t)
                        break
            if ex is None and hyp:
                for s in els:
                    for t in els:
                        if A.apply(c1, s) != A.apply(c2, t):
                            ex = (i, j, s, t)
                            break
                    if ex:
                        break
        return pw, ex


def validate_xmodule(X: Rack, A: FinAbGroup, eta, tau, level: str | None = None) -> Report:
    n = X.size
    if len(eta) != n or len(tau) != n or any(len(r) != n for r in list(eta) + list(tau)):
        raise InputError("η/τ must be |X| × |X| tables")
    return XModule(X, A, eta, tau).validate(level)


def validate_mod2cocycle(M: XModule, kappa) -> Report:
    """η_{i,j▷k}(κ_jk) + κ_{i,j▷k} = η_{i▷j,i▷k}(κ_ik) + τ_{i▷j,i▷k}(κ_ij) + κ_{i▷j,i▷k}."""
    X, A = M.base, M.A
    T, n = X.table, X.size
    try:
        kap = [[A.reduce(kappa[i][j]) for j in range(n)] for i in range(n)]
    except (IndexError, TypeError) as exc:
        raise InputError("κ must be an |X| × |X| table of group elements") from exc
    r = Report()
    w = None
    for i, j, k in itertools.product(range(n), repeat=3):
        ij, ik, jk = T[i][j], T[i][k], T[j][k]
        lhs = A.add(A.apply(M.eta[i][jk], kap[j][k]), kap[i][jk])
        rhs = A.add(A.add(A.apply(M.eta[ij][ik], kap[i][k]), A.apply(M.tau[ij][ik], kap[i][j])), kap[ij][ik])
        if lhs != rhs:
            w = (i, j, k)
            break
    r.add("2-cocycle", w)
    return r


def cohomologous_mod(M: XModule, kappa, kappa2, f) -> bool:
    """κ'_ij = κ_ij - η_ij(f(j)) + f(i▷j) - τ_ij(f(i))."""
    A, X = M.A, M.base
    T, n = X.table, X.size
    for i, j in itertools.product(range(n), repeat=2):
        v = A.sub(A.add(A.sub(A.reduce(kappa[i][j]), A.apply(M.eta[i][j], f[j])), f[T[i][j]]),
                  A.apply(M.tau[i][j], f[i]))
        if v != A.reduce(kappa2[i][j]):
            return False
    return True


def find_mod_coboundary(M: XModule, kappa, kappa2, budget: int = DEFAULT_SEARCH_BUDGET):
    """Some f: X -> A with κ' = κ + δf, or None (exhaustive)."""
    A, n = M.A, M.base.size
    total = A.order ** n
    if total > budget:
        raise BudgetExceeded(f"{total} candidate maps exceed budget {budget}", total)
    for f in itertools.product(A.elements(), repeat=n):
        if cohomologous_mod(M, kappa, kappa2, f):
            return list(f)
    return None


# ---------------------------------------------------------------------
# recognition


def recognize_extension(X: Rack, Y: Rack, f: Sequence[int]):
    """Write X as Y ×_α S along a surjective morphism f with equal fibers.

    Returns ``(alpha, g)`` with ``g[y]`` the list of elements of the fiber
    over y in the order used for S, so that x = g[y][s] corresponds to (y, s).
    """
    f = [int(v) for v in f]
    if not is_morphism(X, Y, f):
        raise ValidationError("map is not a rack morphism", condition="morphism")
    fibers: list[list[int]] = [[] for _ in range(Y.size)]
    for x, y in enumerate(f):
        fibers[y].append(x)
    sizes = {len(F) for F in fibers}
    if 0 in sizes:
        raise ValidationError("map is not surjective", condition="surjective")
    if len(sizes) != 1:
        raise ValidationError("fibers have different sizes", condition="equal fibers")
    m = sizes.pop()
    pos = {x: (f[x], k) for y in range(Y.size) for k, x in enumerate(fibers[y])}
    T = X.table
    alpha = [[[[pos[T[fibers[i][s]][fibers[j][t]]][1] for t in range(m)] for s in range(m)]
              for j in range(Y.size)] for i in range(Y.size)]
    return DynamicalCocycle(Y, m, alpha), fibers


def extension_isomorphism(X: Rack, fibers: Sequence[Sequence[int]]) -> list[int]:
    """The map X -> Y ×_α S, x = fibers[y][s] ↦ y*m + s."""
    m = len(fibers[0])
    out = [0] * X.size
    for y, F in enumerate(fibers):
        for s, x in enumerate(F):
            out[x] = y * m + s
    return out


# ---------------------------------------------------------------------
# named module data


def z3_module_example(a: int = 1, tilde: bool = False):
    """X = (Z/3, ▷²), A = Z/2, η = id, τ_ij = id - δ_ij, with κ or κ̃."""
    from .racks import cyclic_affine
    X = cyclic_affine(3, 2)
    A = FinAbGroup([2])
    ident, zero = A.identity(), A.zero_map()
    eta = [[ident] * 3 for _ in range(3)]
    tau = [[zero if i == j else ident for j in range(3)] for i in range(3)]
    M = XModule(X, A, eta, tau)
    if tilde:
        kappa = [[(a,) if i == (j + 1) % 3 else (0,) for j in range(3)] for i in range(3)]
    else:
        kappa = [[(0,) if i == j else (a,) for j in range(3)] for i in range(3)]
    return M, kappa
