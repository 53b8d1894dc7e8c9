"""Fourier transform on affine-module extensions Y = X ×_κ A.

The vectors (i, ψ) = Σ_a ψ(a) (i, a), ψ ∈ Â, diagonalise the fiber
part of a braiding c^𝔮 whose cocycle splits as
𝔮_{ij}^{a,b} = χ_ij(b) μ_ij(a) q_ij; in that basis c^𝔮 becomes a
set-theoretic braiding S^F on X × Â.

Characters are tuples c with c(a) = ζ_e^{pairing_exponent(c, a)},
e the exponent of A.  An element (i, ψ) of X × Â is numbered
i·|A| + index(ψ).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd
from typing import Callable, Sequence

from .abelian import FinAbGroup
from .braided import BraidedSpace, SetSolution, is_rack_cocycle, t_equivalence_failure
from .cyclotomic import CycScalar, simplify
from .errors import BudgetExceeded, InputError, ValidationError
from .extensions import Report, XModule, extend, validate_mod2cocycle
from .permgroups import Perm, generate
from .racks import Rack, trivial

INTERTWINER_CAP = 5
GAMMA_CAP = 10**5


def char_value(A: FinAbGroup, c, a):
    return simplify(CycScalar.zeta(A.exponent, A.pairing_exponent(c, a)))


def char_mul(A: FinAbGroup, c, d):
    return A.add(c, d)


def char_inv(A: FinAbGroup, c):
    return A.neg(c)


def char_compose(A: FinAbGroup, c, M):
    return tuple(A.character_compose_exponents(c, M))


class SplitCocycle:
    """Module data (η, τ, κ) with characters χ, μ and scalars q on X."""

    def __init__(self, module: XModule, kappa, chi, mu, q):
        self.module = module
        A, n = module.A, module.base.size
        self.A = A
        try:
            self.kappa = [[A.reduce(kappa[i][j]) for j in range(n)] for i in range(n)]
            self.chi = [[A.reduce(chi[i][j]) for j in range(n)] for i in range(n)]
            self.mu = [[A.reduce(mu[i][j]) for j in range(n)] for i in range(n)]
            self.q = [[q[i][j] for j in range(n)] for i in range(n)]
        except (IndexError, TypeError) as exc:
            raise InputError("split cocycle tables have the wrong shape") from exc

    @property
    def base(self) -> Rack:
        return self.module.base

    def extension(self) -> Rack:
        return extend(self.base, self.module.alpha(self.kappa), level="Rack")

    def frak_q(self):
        """𝔮 on Y = X ×_κ A, indexed like ``extension()``."""
        A, n = self.A, self.base.size
        els = A.elements()
        m = len(els)
        out = [[None] * (n * m) for _ in range(n * m)]
        for i, a in itertools.product(range(n), range(m)):
            for j, b in itertools.product(range(n), range(m)):
                out[i * m + a][j * m + b] = (char_value(A, self.chi[i][j], els[b])
                                             * char_value(A, self.mu[i][j], els[a]) * self.q[i][j])
        return out


def validate_split(sc: SplitCocycle) -> Report:
    """The four closure conditions, plus the cocycle law of 𝔮 on X ×_κ A."""
    A, X, M = sc.A, sc.base, sc.module
    T, n = X.table, X.size
    chi, mu, q, kap = sc.chi, sc.mu, sc.q, sc.kappa
    eta, tau = M.eta, M.tau
    cv = lambda c, a: char_value(A, c, a)
    r = Report()
    w = [None] * 4
    for i, j, k in itertools.product(range(n), repeat=3):
        ij, ik, jk = T[i][j], T[i][k], T[j][k]
        if w[0] is None:
            lhs = cv(chi[i][jk], kap[j][k]) * q[i][jk] * q[j][k]
            rhs = cv(chi[ij][ik], kap[i][k]) * cv(mu[ij][ik], kap[i][j]) * q[ij][ik] * q[i][k]
            if lhs != rhs:
                w[0] = (i, j, k)
        for a in A.elements():
            if w[1] is None and cv(chi[i][jk], A.apply(eta[j][k], a)) * cv(chi[j][k], a) != \
                    cv(chi[ij][ik], A.apply(eta[i][k], a)) * cv(chi[i][k], a):
                w[1] = (i, j, k, a)
            if w[2] is None and cv(mu[i][jk], a) != \
                    cv(chi[ij][ik], A.apply(tau[i][k], a)) * cv(mu[ij][ik], A.apply(tau[i][j], a)) * cv(mu[i][k], a):
                w[2] = (i, j, k, a)
            if w[3] is None and cv(mu[ij][ik], A.apply(eta[i][j], a)) != \
                    cv(chi[i][jk], A.apply(tau[j][k], a)) * cv(mu[j][k], a):
                w[3] = (i, j, k, a)
    for name, wit in zip(("kappa-q", "chi", "mu-tau", "mu-eta"), w):
        r.add(name, wit)
    r.add("module", None if M.validate(level="Rack").ok else ("module",))
    r.add("2-cocycle", validate_mod2cocycle(M, kap).failures().get("2-cocycle"))
    if r.ok:
        Y = sc.extension()
        r.add("frak q cocycle", None if is_rack_cocycle(Y, sc.frak_q()) else ("frak q",))
    return r


@dataclass
class FourierResult:
    solution: SetSolution
    F: list
    braided: BraidedSpace
    source: BraidedSpace
    labels: list
    characters: list

    def element(self, i: int, psi) -> int:
        return i * len(self.characters) + self.characters.index(tuple(psi))


def fourier_transform(sc: SplitCocycle, verify: bool = True) -> FourierResult:
    """(S, F) on X × Â with c^𝔮 ∘ (P⊗P) = (P⊗P) ∘ S^F, P(i,ψ) = Σ_a ψ(a)(i,a)."""
    rep = validate_split(sc)
    rep.raise_if_failed("invalid split cocycle")
    A, X, M = sc.A, sc.base, sc.module
    T, n = X.table, X.size
    chars = [tuple(c) for c in A.characters()]
    cidx = {c: k for k, c in enumerate(chars)}
    m = len(chars)
    N = n * m
    g = [[0] * N for _ in range(N)]
    f = [[0] * N for _ in range(N)]
    F = [[None] * N for _ in range(N)]
    for i, j in itertools.product(range(n), repeat=2):
        eta_inv = A.inverse_map(M.eta[i][j])
        tau_t = A.compose(eta_inv, M.tau[i][j])
        kap_t = A.apply(eta_inv, sc.kappa[i][j])
        chi = sc.chi[i][j]
        for psi, phi in itertools.product(chars, repeat=2):
            pc = char_mul(A, phi, chi)
            theta = char_compose(A, pc, eta_inv)
            nu = char_mul(A, char_mul(A, psi, sc.mu[i][j]), char_inv(A, char_compose(A, pc, tau_t)))
            x, y = i * m + cidx[psi], j * m + cidx[phi]
            g[x][y] = T[i][j] * m + cidx[theta]
            f[y][x] = i * m + cidx[nu]
            F[x][y] = sc.q[i][j] / (char_value(A, phi, kap_t) * char_value(A, chi, kap_t))
    labels = [f"{X.label(i)}:{''.join(map(str, c))}" for i in range(n) for c in chars]
    S = SetSolution(g, f, labels)
    B = BraidedSpace.set_type(S, F, check=False)
    Y = sc.extension()
    src = BraidedSpace.rack_type(Y, sc.frak_q(), check=False)
    res = FourierResult(S, F, B, src, labels, chars)
    if verify:
        bad = conjugation_failure(res, A)
        if bad is not None:
            raise ValidationError("Fourier conjugation identity fails", condition="(P⊗P)S^F = c^q(P⊗P)",
                                  witness=bad)
    return res


def _P(A: FinAbGroup, chars, x: int) -> dict:
    m = len(chars)
    els = A.elements()
    i, c = divmod(x, m)
    return {i * m + a: char_value(A, chars[c], els[a]) for a in range(m)}


def conjugation_failure(res: FourierResult, A: FinAbGroup):
    """First basis pair where c^𝔮(P⊗P) and (P⊗P)S^F differ, else None."""
    chars, B, src = res.characters, res.braided, res.source
    N = B.n
    for x, y in itertools.product(range(N), repeat=2):
        lhs: dict = {}
        for u, cu in _P(A, chars, x).items():
            for v, cv in _P(A, chars, y).items():
                (s, t), c = src.target[u][v], src.coef[u][v]
                lhs[(s, t)] = lhs.get((s, t), 0) + cu * cv * c
        (x2, y2), F = B.target[x][y], B.coef[x][y]
        rhs: dict = {}
        for u, cu in _P(A, chars, x2).items():
            for v, cv in _P(A, chars, y2).items():
                rhs[(u, v)] = rhs.get((u, v), 0) + F * cu * cv
        keys = set(lhs) | set(rhs)
        if any(lhs.get(k, 0) != rhs.get(k, 0) for k in keys):
            return (x, y)
    return None


def derived_rack_formula(sc: SplitCocycle) -> list[list[int]]:
    """(i,ψ)▷(j,φ) = (i▷j, [(φχ_ij)∘η_ij⁻¹] [(ψχ_{i▷j,i})∘τ̃_{i▷j,i}]⁻¹ μ_{i▷j,i})."""
    A, X, M = sc.A, sc.base, sc.module
    T, n = X.table, X.size
    chars = [tuple(c) for c in A.characters()]
    cidx = {c: k for k, c in enumerate(chars)}
    m = len(chars)
    out = [[0] * (n * m) for _ in range(n * m)]
    for i, j in itertools.product(range(n), repeat=2):
        k = T[i][j]
        eta_inv = A.inverse_map(M.eta[i][j])
        tau_t = A.compose(A.inverse_map(M.eta[k][i]), M.tau[k][i])
        for psi, phi in itertools.product(chars, repeat=2):
            first = char_compose(A, char_mul(A, phi, sc.chi[i][j]), eta_inv)
            second = char_compose(A, char_mul(A, psi, sc.chi[k][i]), tau_t)
            res = char_mul(A, char_mul(A, first, char_inv(A, second)), sc.mu[k][i])
            out[i * m + cidx[psi]][j * m + cidx[phi]] = k * m + cidx[res]
    return out


# ---------------------------------------------------------------------
# named examples


def omega_twist(sigma: Sequence, omega, q, A: FinAbGroup) -> SplitCocycle:
    """Trivial X, κ_ij = σ_i - σ_j, η = id, τ = 0, χ_ij = ω = μ_ij⁻¹."""
    n = len(sigma)
    X = trivial(n)
    M = XModule(X, A, [[A.identity()] * n for _ in range(n)], [[A.zero_map()] * n for _ in range(n)])
    sig = [A.reduce(s) for s in sigma]
    kappa = [[A.sub(sig[i], sig[j]) for j in range(n)] for i in range(n)]
    om = A.reduce(omega)
    return SplitCocycle(M, kappa, [[om] * n for _ in range(n)], [[A.neg(om)] * n for _ in range(n)], q)


def z3_split(q, tilde: bool = False, a: int = 1) -> SplitCocycle:
    """X = (Z/3, ▷²), A = Z/2, η = id, τ_ij = id - δ_ij, χ = μ = ε, κ or κ̃."""
    from .extensions import z3_module_example
    M, kappa = z3_module_example(a, tilde)
    eps = [[(0,)] * 3 for _ in range(3)]
    return SplitCocycle(M, kappa, eps, eps, q)


# ---------------------------------------------------------------------
# t-equivalences


def _trivial_rack_space(n: int, Q) -> BraidedSpace:
    return BraidedSpace.rack_type(trivial(n), Q, check=False)


def ej_uno(sigma: Sequence, omega, q, A: FinAbGroup):
    """(S^F, c^Q, U) for the ω-twist on a trivial rack with constant ω."""
    sc = omega_twist(sigma, omega, q, A)
    res = fourier_transform(sc)
    chars = res.characters
    m, n = len(chars), len(sigma)
    els = A.elements()
    sig = [A.reduce(s) for s in sigma]
    om = A.reduce(omega)
    Q = [[None] * (n * m) for _ in range(n * m)]
    for x, y in itertools.product(range(n * m), repeat=2):
        i, j, phi = x // m, y // m, chars[y % m]
        Q[x][y] = q[i][j] * char_value(A, phi, sig[j]) / char_value(A, phi, sig[i])
    target = _trivial_rack_space(n * m, Q)
    cidx = {c: k for k, c in enumerate(chars)}

    def U(word):
        L = len(word)
        p = [0, 1]
        for h in range(1, L):
            p.append(p[h] + L - h)
        lam = 1
        out = []
        for h, x in enumerate(word, start=1):
            i, psi = x // m, chars[x % m]
            lam = lam * char_value(A, A.scale(p[h], om), sig[i])
            out.append(i * m + cidx[A.add(psi, A.scale(h - L, om))])
        return {tuple(out): lam}

    return res.braided, target, U


def _hat_y(m_chars: list, A: FinAbGroup) -> Rack:
    """Ŷ on (Z/3,▷²) × Â: (i,ψ)▷(j,φ) = (i▷j, φψ^{1-δ_ij})."""
    from .racks import cyclic_affine
    X = cyclic_affine(3, 2)
    cidx = {c: k for k, c in enumerate(m_chars)}
    m = len(m_chars)
    t = [[0] * (3 * m) for _ in range(3 * m)]
    for x, y in itertools.product(range(3 * m), repeat=2):
        i, j = x // m, y // m
        psi, phi = m_chars[x % m], m_chars[y % m]
        v = phi if i == j else A.add(phi, psi)
        t[x][y] = X.table[i][j] * m + cidx[tuple(v)]
    return Rack(t)


def ej_dos(q, variant: int = 1, a: int = 1, r_mode: str = "solved", gamma_cap: int = GAMMA_CAP):
    """(S^F, c^Q, U) for the (Z/3,▷²) example with κ (variant 1) or κ̃ (variant 2).

    For variant 2, ``r_mode="literal"`` takes phases from the group-integral
    R-functions and ``"solved"`` propagates signs along braid orbits.
    """
    A = FinAbGroup([2])
    sc = z3_split(q, tilde=(variant == 2), a=a)
    res = fourier_transform(sc)
    chars = res.characters
    m = len(chars)
    Yhat = _hat_y(chars, A)
    Q = [[q[x // m][y // m] for y in range(3 * m)] for x in range(3 * m)]
    target = BraidedSpace.rack_type(Yhat, Q)
    S = res.solution
    aa = A.reduce((a,))
    if variant == 1:
        def U(word):
            tot = A.zero()
            for x in word:
                tot = A.add(tot, chars[x % m])
            return {S.T(word): char_value(A, tot, aa)}
        return res.braided, target, U
    if r_mode == "solved":
        cache: dict = {}

        def U3(word):
            n = len(word)
            if n not in cache:
                cache[n] = solve_phase_intertwiner(res.braided, target, S.T, n)
                if cache[n] is None:
                    raise ValidationError("no sign intertwiner", condition="U S^F = c^Q U", witness=n)
            return {S.T(word): cache[n][tuple(word)]}

        return res.braided, target, U3
    if r_mode != "literal":
        raise InputError(f"unknown r_mode {r_mode!r}")
    R = RFunctions(gamma_cap)

    def U2(word):
        idx = tuple(x // m for x in word)
        coef = 1
        for t, x in enumerate(word, start=1):
            coef = coef * char_value(A, chars[x % m], A.scale(R(len(word), t, idx), aa))
        return {S.T(word): coef}

    return res.braided, target, U2


def _z3_swap(T, idx: tuple, j: int) -> tuple:
    """(.., i_j, i_{j+1}, ..) -> (.., i_j▷i_{j+1}, i_j, ..), j 1-based."""
    return idx[:j - 1] + (T[idx[j - 1]][idx[j]], idx[j - 1]) + idx[j + 1:]


def _z3_table():
    from .racks import cyclic_affine
    return cyclic_affine(3, 2).table


class RFunctions:
    """R^n_t(i_1..i_n) ∈ Z/2 (multiples of a) from the integral of Γ_{n-1}.

    Γ_k is the image of B_k in Sym(X^k) for X = (Z/3,▷²), σ_h acting by
    (.., i_h, i_{h+1}, ..) -> (.., i_h▷i_{h+1}, i_h, ..).  R^n_1 counts the
    g ∈ Γ_{n-1} with i_1 ▷ (g·v)_1 = i_1 + 1, v = (i_2..i_n).
    """

    def __init__(self, gamma_cap: int = GAMMA_CAP):
        self.T = _z3_table()
        self.cap = gamma_cap
        self._orbits: dict = {}
        self._cache: dict = {}

    def _orbit_data(self, k: int):
        if k in self._orbits:
            return self._orbits[k]
        pts = list(itertools.product(range(3), repeat=k))
        pidx = {p: n for n, p in enumerate(pts)}
        gens = [Perm([pidx[_z3_swap(self.T, p, h)] for p in pts]) for h in range(1, k)]
        order = generate(gens, len(pts), cap=self.cap).order() if gens else 1
        orbit_of: dict = {}
        for p in pts:
            if p in orbit_of:
                continue
            orb, frontier = {pidx[p]}, [pidx[p]]
            while frontier:
                frontier = [g(u) for u in frontier for g in gens if g(u) not in orb]
                orb.update(frontier)
            members = [pts[u] for u in orb]
            for mbr in members:
                orbit_of[mbr] = members
        self._orbits[k] = (orbit_of, order)
        return self._orbits[k]

    def R1(self, idx: tuple) -> int:
        if idx not in self._cache:
            T = self.T
            i1, rest = idx[0], idx[1:]
            orbit_of, order = self._orbit_data(len(rest))
            orb = orbit_of[rest]
            count = (order // len(orb)) * sum(1 for w in orb if T[i1][w[0]] == (i1 + 1) % 3)
            self._cache[idx] = count % 2
        return self._cache[idx]

    def __call__(self, n: int, t: int, idx: tuple) -> int:
        idx = tuple(idx)
        if t == 1:
            return self.R1(idx)
        it = idx[t - 1]
        return self.R1((it,) + tuple(self.T[it][x] for x in idx[:t - 1]) + idx[t:])


def r_identity_failure(n: int, R) -> tuple | None:
    """First witness against the identities U^n S^F_j = c^Q_j U^n reduces to.

    With i' the swap of i at slot j:
    R_t(i) = R_t(i') for t ∉ {j, j+1};  R_j(i) = R_{j+1}(i');
    R_{j+1}(i) = δ_{i_j, i_{j+1}+1} + R_j(i') + (1 - δ_{i_j, i_{j+1}}) R_{j+1}(i').
    """
    T = _z3_table()
    for i in itertools.product(range(3), repeat=n):
        for j in range(1, n):
            ip = _z3_swap(T, i, j)
            for t in range(1, n + 1):
                if t not in (j, j + 1) and R(n, t, i) != R(n, t, ip):
                    return ("invariance", i, j, t)
            if R(n, j, i) != R(n, j + 1, ip):
                return ("shift", i, j)
            d, e = int(i[j - 1] == (i[j] + 1) % 3), int(i[j - 1] == i[j])
            if R(n, j + 1, i) != (d + R(n, j, ip) + (1 - e) * R(n, j + 1, ip)) % 2:
                return ("recursion", i, j)
    return None


def solve_phase_intertwiner(B1: BraidedSpace, B2: BraidedSpace, T: Callable, n: int):
    """Signs ε on words of length n with U(w) = ε(w) T(w) intertwining B1 and B2.

    Each braiding step links ε(w) and ε(σ_j w) by a fixed ratio, so ε is
    propagated along braid orbits of words.  Returns a dict word -> scalar,
    or None when some orbit closes up inconsistently.
    """
    eps: dict = {}
    for w0 in itertools.product(range(B1.n), repeat=n):
        if w0 in eps:
            continue
        eps[w0] = 1
        stack = [w0]
        while stack:
            w = stack.pop()
            Tw = T(w)
            for j in range(n - 1):
                cf, w1 = B1.act(w, j)
                c2, _ = B2.act(Tw, j)
                val = eps[w] * c2 / cf
                if w1 in eps:
                    if eps[w1] != val:
                        return None
                else:
                    eps[w1] = val
                    stack.append(w1)
    return eps


def intertwiner_check(case: str, n_max: int = 3, cap: int = INTERTWINER_CAP, **kw):
    """Build a named t-equivalence and verify U^n c1 = c2 U^n for n <= n_max.

    Returns the first failing (n, word, slot) or None.
    """
    if n_max > cap:
        raise BudgetExceeded(f"degree {n_max} exceeds intertwiner cap {cap}", n_max)
    if case == "ej-uno":
        B1, B2, U = ej_uno(**kw)
    elif case == "ej-dos-1":
        B1, B2, U = ej_dos(variant=1, **kw)
    elif case == "ej-dos-2":
        B1, B2, U = ej_dos(variant=2, **kw)
    else:
        raise InputError(f"unknown intertwiner case {case!r}")
    return t_equivalence_failure(B1, B2, U, n_max)


@dataclass
class IntertwinerResult:
    case: str
    n: int
    source: BraidedSpace
    target: BraidedSpace
    U: Callable
    failure: tuple | None

    @property
    def ok(self) -> bool:
        return self.failure is None


def paper_intertwiners(case: str, n: int, cap: int = INTERTWINER_CAP, **kw) -> IntertwinerResult:
    """The named U^n maps with their verification up to degree n."""
    if n > cap:
        raise BudgetExceeded(f"degree {n} exceeds intertwiner cap {cap}", n)
    builders = {"ej-uno": lambda: ej_uno(**kw),
                "ej-dos-1": lambda: ej_dos(variant=1, **kw),
                "ej-dos-2": lambda: ej_dos(variant=2, **kw)}
    if case not in builders:
        raise InputError(f"unknown intertwiner case {case!r}")
    B1, B2, U = builders[case]()
    return IntertwinerResult(case, n, B1, B2, U, t_equivalence_failure(B1, B2, U, n))


def basis_change_matrix(res: FourierResult, A: FinAbGroup) -> list[list]:
    """M[(i,a)][(i,ψ)] = ψ(a); columns are the Fourier vectors."""
    N = res.braided.n
    M = [[0] * N for _ in range(N)]
    for x in range(N):
        for u, c in _P(A, res.characters, x).items():
            M[u][x] = c
    return M
