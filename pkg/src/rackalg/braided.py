"""Braided vector spaces with monomial braidings.

All braidings used here send a basis tensor to a scalar multiple of a
basis tensor, c(i ⊗ j) = coef[i][j] · a ⊗ b, so they are stored as two
n×n tables (targets and coefficients):

* rack type:  c(i ⊗ j) = q_ij  (i▷j) ⊗ i
* set type:   c(i ⊗ j) = F_ij  g_i(j) ⊗ f_j(i)
* diagonal:   c(i ⊗ j) = q_ij  j ⊗ i
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, Sequence

from .cyclotomic import CycScalar, as_scalar, simplify
from .errors import InputError, ValidationError
from .linalg import rank
from .permgroups import Perm
from .racks import Rack

Word = tuple[int, ...]


def _lcm(a, b):
    return a * b // gcd(a, b)


# ---------------------------------------------------------------------
# cocycles on racks


def constant_cocycle(X: Rack, value) -> list[list]:
    return [[value for _ in range(X.size)] for _ in range(X.size)]


def cocycle_from_exponents(N: int, exponents) -> list[list]:
    """q_ij = zeta_N^e_ij, simplified to Fractions when rational."""
    return [[simplify(CycScalar.zeta(N, e)) for e in row] for row in exponents]


def cocycle_from_dict(X: Rack, d: dict) -> list[list]:
    """Parse {"conductor": N, "exponents": [[...]]} or {"constant_exponent": e}.

    With the constant shorthand the conductor defaults to 2, so
    {"constant_exponent": 1} is q ≡ -1.
    """
    if not isinstance(d, dict):
        raise InputError("cocycle JSON must be an object")
    N = d.get("conductor", 2)
    if not isinstance(N, int) or N < 1:
        raise InputError("conductor must be a positive integer")
    if "constant_exponent" in d:
        e = d["constant_exponent"]
        return constant_cocycle(X, simplify(CycScalar.zeta(N, int(e))))
    if "exponents" in d:
        ex = d["exponents"]
        if len(ex) != X.size or any(len(r) != X.size for r in ex):
            raise InputError("exponent table has the wrong shape")
        return cocycle_from_exponents(N, ex)
    raise InputError("cocycle JSON needs 'exponents' or 'constant_exponent'")


def cocycle_failure(X: Rack, q) -> tuple[int, int, int] | None:
    """First (i,j,k) violating q_{i,j▷k} q_{j,k} = q_{i▷j,i▷k} q_{i,k}."""
    t = X.table
    n = X.size
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if q[i][t[j][k]] * q[j][k] != q[t[i][j]][t[i][k]] * q[i][k]:
                    return (i, j, k)
    return None


def is_rack_cocycle(X: Rack, q) -> bool:
    return cocycle_failure(X, q) is None


# ---------------------------------------------------------------------
# braided spaces


class BraidedSpace:
    """A braided vector space with basis {0..n-1} and a monomial braiding."""

    def __init__(self, n: int, target, coef, kind: str, labels=None, source=None):
        self.n = n
        self.target = [[tuple(target[i][j]) for j in range(n)] for i in range(n)]
        self.coef = [[coef[i][j] for j in range(n)] for i in range(n)]
        self.kind = kind
        self.labels = list(labels) if labels is not None else [str(i) for i in range(n)]
        self.source = source
        for i in range(n):
            for j in range(n):
                if self.coef[i][j] == 0:
                    raise ValidationError("braiding coefficients must be nonzero", condition="invertible")
        if len({self.target[i][j] for i in range(n) for j in range(n)}) != n * n:
            raise ValidationError("braiding does not permute basis tensors", condition="bijective")

    # constructors ------------------------------------------------------

    @classmethod
    def rack_type(cls, X: Rack, q, check: bool = True) -> "BraidedSpace":
        if check:
            bad = cocycle_failure(X, q)
            if bad is not None:
                raise ValidationError("q is not a rack 2-cocycle", condition="q_{i,j▷k}q_{j,k}=q_{i▷j,i▷k}q_{i,k}",
                                      witness=bad)
        n = X.size
        target = [[(X.table[i][j], i) for j in range(n)] for i in range(n)]
        labels = [X.label(i) for i in range(n)]
        return cls(n, target, q, "rack", labels=labels, source=(X, q))

    @classmethod
    def set_type(cls, S: "SetSolution", F=None, check: bool = True) -> "BraidedSpace":
        n = S.n
        if F is None:
            F = [[1] * n for _ in range(n)]
        target = [[S(i, j) for j in range(n)] for i in range(n)]
        B = cls(n, target, F, "set", labels=S.labels, source=(S, F))
        if check and not check_braid_equation(B):
            raise ValidationError("S^F does not satisfy the braid equation", condition="braid equation")
        return B

    @classmethod
    def diagonal(cls, q) -> "BraidedSpace":
        n = len(q)
        target = [[(j, i) for j in range(n)] for i in range(n)]
        return cls(n, target, q, "diagonal", source=q)

    # action ------------------------------------------------------------

    def c(self, i: int, j: int):
        a, b = self.target[i][j]
        return self.coef[i][j], a, b

    def c_inv_target(self):
        inv = {}
        for i in range(self.n):
            for j in range(self.n):
                inv[self.target[i][j]] = (i, j)
        return inv

    def act(self, word: Word, slot: int):
        """c at positions (slot, slot+1), 0-based; returns (coef, word)."""
        i, j = word[slot], word[slot + 1]
        a, b = self.target[i][j]
        w = word[:slot] + (a, b) + word[slot + 2:]
        return self.coef[i][j], w

    def act_vector(self, vec: dict, slot: int) -> dict:
        out: dict = {}
        for w, v in vec.items():
            cf, w2 = self.act(w, slot)
            x = out.get(w2, 0) + v * cf
            if x == 0:
                out.pop(w2, None)
            else:
                out[w2] = x
        return out

    def conductor(self) -> int:
        N = 1
        for row in self.coef:
            for x in row:
                if isinstance(x, CycScalar) and not x.is_rational():
                    N = _lcm(N, x.N)
        return N

    def is_rational(self) -> bool:
        return all(not isinstance(x, CycScalar) or x.is_rational() for row in self.coef for x in row)

    def is_rigid(self) -> bool:
        return rigidity_check(self)

    def word_label(self, w: Word, sep: str = "") -> str:
        return sep.join(self.labels[x] for x in w)

    def parse_word(self, text: str) -> Word:
        """Parse a word of single-character labels, or space-separated labels."""
        pos = {lab: k for k, lab in enumerate(self.labels)}
        parts = text.split() if " " in text.strip() else list(text)
        try:
            return tuple(pos[p] for p in parts)
        except KeyError as exc:
            raise InputError(f"unknown basis label {exc.args[0]!r}") from exc

    def __repr__(self):
        return f"<BraidedSpace {self.kind} dim={self.n}>"


def check_braid_equation(B: BraidedSpace) -> bool:
    """(c⊗id)(id⊗c)(c⊗id) = (id⊗c)(c⊗id)(id⊗c) on all basis triples."""
    return braid_equation_failure(B) is None


def braid_equation_failure(B: BraidedSpace):
    n = B.n
    for w in itertools.product(range(n), repeat=3):
        c1, w1 = B.act(w, 0)
        c2, w2 = B.act(w1, 1)
        c3, w3 = B.act(w2, 0)
        d1, v1 = B.act(w, 1)
        d2, v2 = B.act(v1, 0)
        d3, v3 = B.act(v2, 1)
        if w3 != v3 or c1 * c2 * c3 != d1 * d2 * d3:
            return w
    return None


def rigidity_check(B: BraidedSpace) -> bool:
    """Invertibility of c♭: V*⊗V -> V⊗V*, c♭(δ_i⊗j) = Σ_{h: c(j⊗h) = k·i⊗b} k·b⊗δ_h."""
    n = B.n
    cols = []
    for i in range(n):
        for j in range(n):
            col: dict = {}
            for h in range(n):
                cf, a, b = B.c(j, h)
                if a == i:
                    col[b * n + h] = col.get(b * n + h, 0) + cf
            cols.append({k: v for k, v in col.items() if v != 0})
    return rank(cols, n * n) == n * n


# ---------------------------------------------------------------------
# set-theoretic solutions


class SetSolution:
    """S(i, j) = (g_i(j), f_j(i)), stored as tables g[i][j] and f[j][i]."""

    def __init__(self, g, f, labels=None):
        self.n = len(g)
        self.g = [list(r) for r in g]
        self.f = [list(r) for r in f]
        self.labels = list(labels) if labels is not None else [str(i) for i in range(self.n)]
        if len({self(i, j) for i in range(self.n) for j in range(self.n)}) != self.n ** 2:
            raise ValidationError("S is not a bijection of X×X", condition="S bijective")

    @classmethod
    def from_map(cls, n: int, S: Callable[[int, int], tuple[int, int]], labels=None) -> "SetSolution":
        g = [[S(i, j)[0] for j in range(n)] for i in range(n)]
        f = [[S(i, j)[1] for i in range(n)] for j in range(n)]
        return cls(g, f, labels)

    @classmethod
    def from_rack(cls, X: Rack) -> "SetSolution":
        """c(i, j) = (i▷j, i)."""
        return cls.from_map(X.size, lambda i, j: (X.table[i][j], i), labels=[X.label(i) for i in range(X.size)])

    def __call__(self, i: int, j: int) -> tuple[int, int]:
        return self.g[i][j], self.f[j][i]

    def is_nondegenerate(self) -> bool:
        full = set(range(self.n))
        return all(set(r) == full for r in self.g) and all(set(r) == full for r in self.f)

    def is_solution(self) -> bool:
        for i, j, k in itertools.product(range(self.n), repeat=3):
            a, b = self(i, j)
            b2, c2 = self(b, k)
            lhs = self(a, b2) + (c2,)
            x, y = self(j, k)
            a2, x2 = self(i, x)
            y2, z2 = self(x2, y)
            rhs = (a2, y2, z2)
            if lhs != rhs:
                return False
        return True

    def f_inv(self, j: int, x: int) -> int:
        return self.f[j].index(x)

    def derived_rack_table(self) -> list[list[int]]:
        """i ▷ j = f_i(g_{f_j^-1(i)}(j))."""
        n = self.n
        return [[self.f[i][self.g[self.f_inv(j, i)][j]] for j in range(n)] for i in range(n)]

    def T(self, word: Word) -> Word:
        """T^n(i_1..i_n) = (f_{i_n}…f_{i_2}(i_1), …, f_{i_n}(i_{n-1}), i_n)."""
        w = list(word)
        out = list(word)
        for pos in range(len(w) - 1):
            x = w[pos]
            for k in range(pos + 1, len(w)):
                x = self.f[w[k]][x]
            out[pos] = x
        return tuple(out)

    def T_recursive(self, word: Word) -> Word:
        """T^n through T^2(i,j) = (f_j(i), j), T^{n+1} = Q_n (T^n × id)."""
        if len(word) == 1:
            return tuple(word)
        if len(word) == 2:
            i, j = word
            return (self.f[j][i], j)
        head = self.T_recursive(word[:-1])
        last = word[-1]
        return tuple(self.f[last][x] for x in head) + (last,)


@dataclass
class DerivedSolution:
    rack: Rack
    verified_degrees: list[int]


def derived_solution(S: SetSolution, n_max: int = 4) -> DerivedSolution:
    """Derived rack of a non-degenerate solution, with T^n S = c T^n checked."""
    if not S.is_nondegenerate():
        raise ValidationError("solution is degenerate", condition="non-degenerate")
    X = Rack(S.derived_rack_table(), labels=S.labels)
    c = lambda i, j: (X.table[i][j], i)
    done = []
    for n in range(2, n_max + 1):
        for w in itertools.product(range(S.n), repeat=n):
            Tw = S.T(w)
            if Tw != S.T_recursive(w):
                raise AssertionError("closed and recursive T^n disagree")
            for h in range(n - 1):
                a, b = S(w[h], w[h + 1])
                lhs = S.T(w[:h] + (a, b) + w[h + 2:])
                x, y = c(Tw[h], Tw[h + 1])
                rhs = Tw[:h] + (x, y) + Tw[h + 2:]
                if lhs != rhs:
                    raise ValidationError("T^n does not intertwine S and c", condition="T^n S = c T^n",
                                          witness=(n, w, h))
        done.append(n)
    return DerivedSolution(X, done)


# ---------------------------------------------------------------------
# t-equivalence


def t_equivalence_check(B1: BraidedSpace, B2: BraidedSpace, U: Callable[[Word], dict], n_max: int,
                        n_min: int = 2) -> bool:
    """U^n c1_{j,j+1} = c2_{j,j+1} U^n on every basis word, 2 <= n <= n_max.

    ``U`` maps a word of B1 to a sparse vector {word of B2: coefficient}.
    """
    return t_equivalence_failure(B1, B2, U, n_max, n_min) is None


def t_equivalence_failure(B1, B2, U, n_max, n_min=2):
    for n in range(n_min, n_max + 1):
        for w in itertools.product(range(B1.n), repeat=n):
            Uw = U(w)
            for j in range(n - 1):
                cf, w1 = B1.act(w, j)
                lhs = {k: v * cf for k, v in U(w1).items()}
                rhs = B2.act_vector(Uw, j)
                if not _vec_equal(lhs, rhs):
                    return (n, w, j)
    return None


def _vec_equal(a: dict, b: dict) -> bool:
    keys = set(a) | set(b)
    return all(a.get(k, 0) == b.get(k, 0) for k in keys)


# ---------------------------------------------------------------------
# Cartan matrices of diagonal braidings


@dataclass
class CartanResult:
    matrix: list[list[int]]
    tag: str
    components: list[list[int]]
    component_types: list[str]
    positive_roots: int | None

    def predicted_dimension(self) -> int | None:
        return 2 ** self.positive_roots if self.positive_roots is not None else None


def _is_minus_one(x) -> bool:
    return x == -1


def cartan_matrix(q) -> CartanResult:
    """Simply laced matrix from q_ii = -1 and q_ij q_ji = (-1)^{A_ij}."""
    n = len(q)
    A = [[0] * n for _ in range(n)]
    for i in range(n):
        if not _is_minus_one(q[i][i]):
            raise ValidationError(f"q_{i}{i} != -1", condition="q_ii=-1", witness=(i, i))
        A[i][i] = 2
    for i in range(n):
        for j in range(i + 1, n):
            p = q[i][j] * q[j][i]
            if p == 1:
                continue
            if p == -1:
                A[i][j] = A[j][i] = -1
            else:
                raise ValidationError(f"q_{i}{j} q_{j}{i} is not ±1", condition="q_ij q_ji = ±1", witness=(i, j))
    adj = {i: [j for j in range(n) if j != i and A[i][j]] for i in range(n)}
    seen, comps = set(), []
    for s in range(n):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(sorted(comp))
    types = []
    for comp in comps:
        k = len(comp)
        edges = sum(len(adj[x]) for x in comp) // 2
        degs = sorted(len(adj[x]) for x in comp)
        if edges >= k:
            types.append("cycle")
        elif max(degs) <= 2:
            types.append(f"A{k}")
        elif k == 4 and degs == [1, 1, 1, 3]:
            types.append("D4")
        else:
            types.append("other")
    if any(t == "cycle" for t in types):
        tag = "contains-cycle"
    elif all(t.startswith("A") for t in types):
        tag = "A-chains"
    elif all(t.startswith("A") or t == "D4" for t in types):
        tag = "D4"
    else:
        tag = "other"
    roots = None
    if tag == "A-chains":
        roots = sum(len(c) * (len(c) + 1) // 2 for c in comps)
    return CartanResult(A, tag, comps, types, roots)
