"""Nichols algebras of rack-type braided vector spaces, degree by degree.

The engine keeps, for every computed degree n,

* ``basis[n]``: representative words of a basis of B^n,
* ``mult[n][x]``: left multiplication by x, B^{n-1} -> B^n,
* ``deriv[n][a]``: the skew derivation ∂_a, B^n -> B^{n-1},
* ``action[n][y]``: the inner action w -> Q(y, w) (y ▷ w) on B^n,

with every linear map stored column-wise as sparse dicts.  An element of
degree >= 1 vanishes in B(V) exactly when all ∂_a kill it, so B^{n+1} is
the image of V ⊗ B^n under b -> (∂_a b)_a, where

    ∂_a(x·b) = x·∂_a(b) + δ_{a,x} Q(x, b) (x ▷ b).

This is the right-hand derivation (id ⊗ a*)Δ_{n,1}; ``tensor_derivation``
and ``delta_derivation`` compute it in T(V) for cross-checks.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .braided import BraidedSpace
from .errors import BudgetExceeded, InputError, ValidationError
from .linalg import USE_FLINT, column_rref, rank, row_rref
from .permgroups import Perm
from .racks import Rack

Word = tuple[int, ...]
Tensor = dict  # {word: scalar}

DEFAULT_MAX_DEGREE = 20
DEFAULT_MAX_COLUMNS = 10**4
SYMMETRIZER_CAP = 6


# ---------------------------------------------------------------------
# sparse helpers


def _axpy(out: dict, a, vec: dict):
    for k, v in vec.items():
        x = out.get(k, 0) + a * v
        if x == 0:
            out.pop(k, None)
        else:
            out[k] = x


def _apply(cols: Sequence[dict], vec: dict) -> dict:
    out: dict = {}
    for k, v in vec.items():
        _axpy(out, v, cols[k])
    return out


def _clean(vec: dict) -> dict:
    return {k: v for k, v in vec.items() if v != 0}


# ---------------------------------------------------------------------
# rack-type data


def _rack_data(B: BraidedSpace):
    """(op table, q) for a rack or diagonal braiding."""
    if B.kind == "rack":
        X, q = B.source
        return X.table, B.coef
    if B.kind == "diagonal":
        n = B.n
        return tuple(tuple(range(n)) for _ in range(n)), B.coef
    raise ValidationError("Nichols engine needs a rack-type or diagonal braiding; "
                          "convert set-type data through the derived solution first",
                          condition="rack type")


# ---------------------------------------------------------------------
# T(V)-level operations (oracles)


def tensor_derivation(B: BraidedSpace, a: int, t: Tensor) -> Tensor:
    """∂_a in T(V) by the product rule ∂_a(x w) = x ∂_a(w) + δ_{a,x} Q(x,w)(x▷w)."""
    table, q = _rack_data(B)
    out: dict = {}
    for w, v in t.items():
        for pos, x in enumerate(w):
            if x != a:
                continue
            # move letter at pos to the far right
            coef = v
            rest = []
            for y in w[pos + 1:]:
                coef = coef * q[x][y]
                rest.append(table[x][y])
            nw = w[:pos] + tuple(rest)
            _axpy(out, coef, {nw: 1})
    return out


def delta_derivation(B: BraidedSpace, a: int, t: Tensor) -> Tensor:
    """(id ⊗ a*) Δ_{n-1,1} computed literally with braid operators c_{n-1}…c_k."""
    out: dict = {}
    for w, v in t.items():
        n = len(w)
        for k in range(n):
            vec = {w: v}
            for slot in range(k, n - 1):
                vec = B.act_vector(vec, slot)
            for w2, v2 in vec.items():
                if w2[-1] == a:
                    _axpy(out, v2, {w2[:-1]: 1})
    return out


def is_zero_by_descent(B: BraidedSpace, t: Tensor) -> bool:
    """Decide t = 0 in B(V) by exhausting derivations down to degree 0."""
    t = _clean(t)
    if not t:
        return True
    n = len(next(iter(t)))
    if n == 0:
        return False
    if n == 1:
        return False
    for a in range(B.n):
        d = tensor_derivation(B, a, t)
        if d and not is_zero_by_descent(B, d):
            return False
    return True


def _permutation_reduced_word(perm: Sequence[int]) -> list[int]:
    """Reduced word s_{i1}…s_{ik} (applied right to left) via bubble sort."""
    p = list(perm)
    word = []
    n = len(p)
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            if p[i] > p[i + 1]:
                p[i], p[i + 1] = p[i + 1], p[i]
                word.append(i)
                changed = True
    return word


def matsumoto_symmetrizer(B: BraidedSpace, n: int, cap: int = SYMMETRIZER_CAP) -> list[dict]:
    """Columns of Q_n = Σ_σ M(σ) on V^{⊗n}, words indexed in base dim V.

    M(σ) is the product of braid operators along a reduced word of σ.
    """
    if n > cap:
        raise BudgetExceeded(f"symmetrizer degree {n} exceeds cap {cap}", n)
    words = list(itertools.product(range(B.n), repeat=n))
    index = {w: k for k, w in enumerate(words)}
    red = [_permutation_reduced_word(p) for p in itertools.permutations(range(n))]
    cols = []
    for w in words:
        acc: dict = {}
        for rw in red:
            vec = {w: 1}
            for slot in reversed(rw):
                vec = B.act_vector(vec, slot)
            _axpy(acc, 1, vec)
        cols.append({index[k]: v for k, v in acc.items()})
    return cols


def symmetrizer_rank(B: BraidedSpace, n: int, cap: int = SYMMETRIZER_CAP) -> int:
    if n == 0:
        return 1
    cols = matsumoto_symmetrizer(B, n, cap)
    return rank(cols, B.n ** n)


def symmetrizer_factored(B: BraidedSpace, n: int) -> list[dict]:
    """Q_n via Q_n = (Q_{n-1} ⊗ id)(1 + c_{n-1} + c_{n-1}c_{n-2} + … + c_{n-1}⋯c_1)."""
    words = list(itertools.product(range(B.n), repeat=n))
    index = {w: k for k, w in enumerate(words)}

    def apply_Q(m, vec):
        if m <= 1:
            return dict(vec)
        acc: dict = {}
        for k in range(m):
            v = dict(vec)
            for slot in range(k, m - 1):
                v = B.act_vector(v, slot)
            _axpy(acc, 1, v)
        # apply Q_{m-1} on the first m-1 factors
        out: dict = {}
        grouped: dict = {}
        for w, c in acc.items():
            grouped.setdefault(w[-1], {})[w[:-1]] = c
        for last, sub in grouped.items():
            res = apply_Q(m - 1, sub)
            for w, c in res.items():
                _axpy(out, c, {w + (last,): 1})
        return out

    return [{index[k]: v for k, v in apply_Q(n, {w: 1}).items()} for w in words]


# ---------------------------------------------------------------------
# the incremental engine


@dataclass
class NicholsGraded:
    braided: BraidedSpace
    dims: list[int] = field(default_factory=list)
    basis: list[list[Word]] = field(default_factory=list)
    mult: list = field(default_factory=list)
    deriv: list = field(default_factory=list)
    action: list = field(default_factory=list)
    complete: bool = False

    @property
    def total(self) -> int:
        return sum(self.dims)

    @property
    def top_degree(self) -> int:
        return len(self.dims) - 1

    def hilbert(self) -> list[int]:
        return list(self.dims)

    def poincare_ok(self) -> bool:
        return self.complete and self.dims == self.dims[::-1]

    # coordinates -------------------------------------------------------

    def word_coords(self, w: Word) -> dict:
        n = len(w)
        if n >= len(self.dims):
            if self.complete:
                return {}
            raise BudgetExceeded(f"degree {n} beyond computed data", n)
        v = {0: 1}
        for pos in range(n - 1, -1, -1):
            deg = n - pos
            v = _apply(self.mult[deg][w[pos]], v)
            if not v:
                return {}
        return v

    def coords(self, t: Tensor) -> tuple[int, dict]:
        t = _clean(t)
        if not t:
            return 0, {}
        degs = {len(w) for w in t}
        if len(degs) != 1:
            raise InputError("tensor is not homogeneous")
        n = degs.pop()
        out: dict = {}
        for w, v in t.items():
            _axpy(out, v, self.word_coords(w))
        return n, out

    def is_zero(self, t: Tensor) -> bool:
        return not self.coords(t)[1]

    def derivation(self, a: int, degree: int, vec: dict) -> dict:
        if degree == 0:
            return {}
        return _apply(self.deriv[degree][a], vec)

    def derivation_chain(self, word: Word, derivations: Sequence[int]) -> tuple[int, dict]:
        """∂_{a1}⋯∂_{ak}(word), rightmost derivation first; (degree, coords)."""
        n, vec = len(word), self.word_coords(tuple(word))
        if len(derivations) > n:
            raise InputError("more derivations than letters")
        deg = n
        for a in reversed(derivations):
            vec = self.derivation(a, deg, vec)
            deg -= 1
        return deg, vec

    def integral_evaluate(self, word: Word, derivations: Sequence[int]):
        """The scalar ∂_{a1}⋯∂_{an}(word); lengths must agree."""
        if len(derivations) != len(word):
            raise InputError(f"{len(derivations)} derivations for a word of length {len(word)}")
        return self.derivation_chain(word, derivations)[1].get(0, 0)

    def element_tensor(self, degree: int, vec: dict) -> Tensor:
        """A representative in T(V) of a coordinate vector (basis words)."""
        return {self.basis[degree][k]: v for k, v in vec.items()}


def nichols_graded(B: BraidedSpace, n_max: int = DEFAULT_MAX_DEGREE,
                   max_columns: int = DEFAULT_MAX_COLUMNS, backend: str = "auto") -> NicholsGraded:
    """Compute B^0, B^1, … until a zero degree appears or n_max is reached."""
    table, q = _rack_data(B)
    m = B.n
    X = range(m)
    N = NicholsGraded(B)
    N.dims = [1, m]
    N.basis = [[()], [(x,) for x in X]]
    N.mult = [None, [[{x: 1}] for x in X]]
    N.deriv = [None, [[{0: 1} if a == k else {} for k in X] for a in X]]
    N.action = [None, [[{table[y][k]: q[y][k]} for k in X] for y in X]]
    if n_max < 1:
        raise InputError("n_max must be >= 1")
    n = 1
    while n < n_max:
        d = N.dims[n]
        ncols = m * d
        if ncols > max_columns:
            raise BudgetExceeded(f"degree {n + 1} needs {ncols} columns (cap {max_columns})",
                                 n, partial=N)
        mult_n, deriv_n, act_n = N.mult[n], N.deriv[n], N.action[n]
        columns = []
        for x in X:
            Lx = mult_n[x]
            for j in range(d):
                col: dict = {}
                for a in X:
                    part = _apply(Lx, deriv_n[a][j]) if deriv_n[a][j] else {}
                    if a == x:
                        _axpy(part, 1, act_n[x][j])
                    off = a * d
                    for k, v in part.items():
                        col[off + k] = v
                columns.append(col)
        pivots, coords = column_rref(columns, m * d, backend=backend)
        dn = len(pivots)
        if dn == 0:
            N.complete = True
            break
        N.dims.append(dn)
        N.basis.append([(piv // d,) + N.basis[n][piv % d] for piv in pivots])
        mult_new = [[coords[x * d + j] for j in range(d)] for x in X]
        deriv_new = [[None] * dn for _ in X]
        for p, piv in enumerate(pivots):
            col = columns[piv]
            blocks = [dict() for _ in X]
            for r, v in col.items():
                blocks[r // d][r % d] = v
            for a in X:
                deriv_new[a][p] = blocks[a]
        act_new = []
        for y in X:
            row = []
            for piv in pivots:
                x, j = piv // d, piv % d
                yx = table[y][x]
                row.append({k: v * q[y][x] for k, v in _apply(mult_new[yx], act_n[y][j]).items()})
            act_new.append(row)
        N.mult.append(mult_new)
        N.deriv.append(deriv_new)
        N.action.append(act_new)
        n += 1
    return N


def symmetrizer_crosscheck(N: NicholsGraded, n_max: int = 4) -> dict[int, tuple[int, int]]:
    """{n: (incremental dim, rank Q_n)} for n <= n_max."""
    out = {}
    for n in range(1, n_max + 1):
        dim = N.dims[n] if n < len(N.dims) else 0
        out[n] = (dim, symmetrizer_rank(N.braided, n))
    return out


# ---------------------------------------------------------------------
# Hilbert polynomials


def poly_divmod(num: Sequence[int], den: Sequence[int]) -> tuple[list[Fraction], list[Fraction]]:
    """Polynomial division over Q, coefficients lowest degree first."""
    num = [Fraction(x) for x in num]
    den = [Fraction(x) for x in den]
    while den and den[-1] == 0:
        den.pop()
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    q = [Fraction(0)] * max(1, len(num) - len(den) + 1)
    r = num[:]
    for k in range(len(num) - len(den), -1, -1):
        c = r[k + len(den) - 1] / den[-1]
        q[k] = c
        for i, d in enumerate(den):
            r[k + i] -= c * d
    while len(r) > 1 and r[-1] == 0:
        r.pop()
    return q, r


def poly_divides(den: Sequence[int], num: Sequence[int]) -> bool:
    _, r = poly_divmod(num, den)
    return all(x == 0 for x in r)


def poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


# ---------------------------------------------------------------------
# relations and presentations


_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+)\s*\*\s*)?([^\s+\-^*]+)(?:\^(\d+))?\s*")


def parse_relation(text: str, labels: Sequence[str]) -> Tensor:
    """Parse e.g. '31 + 23 + 12', '1^2', 'xy - 2*yx' using single-character labels.

    An exponent applies to the whole word it follows ('ab^2' is 'abab').
    """
    pos = {str(l): k for k, l in enumerate(labels)}
    out: dict = {}
    s = text.strip()
    idx = 0
    first = True
    while idx < len(s):
        m = _TERM.match(s, idx)
        if not m or m.end() == idx:
            raise InputError(f"cannot parse relation {text!r}")
        sign, coef, word, power = m.groups()
        if sign is None and not first:
            raise InputError(f"missing operator in {text!r}")
        first = False
        c = int(coef) if coef else 1
        if sign == "-":
            c = -c
        try:
            w = tuple(pos[ch] for ch in word)
        except KeyError as exc:
            raise InputError(f"unknown label {exc.args[0]!r} in {text!r}") from exc
        if power:
            w = w * int(power)
        _axpy(out, Fraction(c), {w: 1})
        idx = m.end()
    return out


def format_tensor(t: Tensor, labels: Sequence[str]) -> str:
    parts = []
    for w in sorted(t):
        v = t[w]
        word = "".join(labels[x] for x in w)
        if v == 1:
            parts.append(f"+{word}")
        elif v == -1:
            parts.append(f"-{word}")
        else:
            parts.append(f"+{v}*{word}")
    s = "".join(parts)
    return s[1:] if s.startswith("+") else s


@dataclass
class QuotientAlgebra:
    """Graded pieces of T(V)/J built with left-multiplication maps."""

    dims: list[int]
    basis: list[list[Word]]
    complete: bool


def presentation_check(B: BraidedSpace, relations: Sequence[Tensor], n_max: int,
                       max_columns: int = DEFAULT_MAX_COLUMNS) -> QuotientAlgebra:
    """Dimensions of T(V)/J up to degree n_max, J generated by ``relations``.

    Degree n of the quotient is V ⊗ A^{n-1} modulo the span of r·b for
    every relation r of degree d <= n and basis element b of A^{n-d}.
    Pivots are taken from the right so the surviving basis consists of
    the smallest words.
    """
    m = B.n
    rels = []
    for r in relations:
        r = _clean(r)
        if not r:
            continue
        degs = {len(w) for w in r}
        if len(degs) != 1:
            raise InputError("relations must be homogeneous")
        rels.append((degs.pop(), r))
    dims = [1]
    basis: list[list[Word]] = [[()]]
    mult: list = [None]  # mult[n][x][j]: coords in A^n of x·b_j
    complete = False
    for n in range(1, n_max + 1):
        d = dims[n - 1]
        ncols = m * d
        if ncols > max_columns:
            raise BudgetExceeded(f"degree {n} needs {ncols} columns", n,
                                 partial=QuotientAlgebra(dims, basis, False))

        def left_word(word, vec, top):
            # x_1 ⊗ (x_2 ⋯ x_k · vec) with vec in A^{top-k+1}; returns coords in V ⊗ A^{top-1}
            deg = top - len(word)
            v = vec
            for x in reversed(word[1:]):
                deg += 1
                v = _apply(mult[deg][x], v)
                if not v:
                    return {}
            off = word[0] * d
            return {off + k: c for k, c in v.items()}

        rows = []
        for deg_r, r in rels:
            if deg_r > n:
                continue
            for k in range(dims[n - deg_r]):
                row: dict = {}
                for w, c in r.items():
                    _axpy(row, c, left_word(w, {k: 1}, n))
                if row:
                    rows.append(row)
        # reverse column order: pivots land on the largest words
        rev = [{ncols - 1 - c: v for c, v in row.items()} for row in rows]
        pivots_rev, prows = row_rref(rev, ncols)
        pivset = {ncols - 1 - p for p in pivots_rev}
        free = [c for c in range(ncols) if c not in pivset]
        fpos = {c: k for k, c in enumerate(free)}
        coords = [None] * ncols
        for c in free:
            coords[c] = {fpos[c]: 1}
        for p_rev, prow in zip(pivots_rev, prows):
            p = ncols - 1 - p_rev
            vec = {}
            for c_rev, v in prow.items():
                c = ncols - 1 - c_rev
                if c != p:
                    vec[fpos[c]] = -v
            coords[p] = vec
        dn = len(free)
        dims.append(dn)
        basis.append([(c // d,) + basis[n - 1][c % d] for c in free])
        mult.append([[coords[x * d + j] for j in range(d)] for x in range(m)])
        if dn == 0:
            complete = True
            break
    return QuotientAlgebra(dims, basis, complete)


RELATION_SETS = {
    "tetrahedron": ["1^2", "2^2", "3^2", "4^2", "31+23+12", "41+34+13", "42+21+14", "43+32+24",
                    "321321+213213+132132"],
    "transpositions": ["a^2", "b^2", "c^2", "d^2", "e^2", "f^2", "dc+cd", "eb+be", "fa+af",
                       "da+bd+ab", "db+ad+ba", "ea+ce+ac", "ec+ae+ca",
                       "fb+cf+bc", "fc+bf+cb", "fd+ef+de", "fe+df+ed"],
    "cube_faces": ["a^2", "b^2", "c^2", "d^2", "e^2", "f^2", "ec+ce", "db+bd", "fa+af",
                   "ca+bc+ab", "da+cd+ac", "eb+ba+ae", "fb+ef+be",
                   "fc+cb+bf", "fd+dc+cf", "fe+ed+df", "ea+de+ad"],
    "z5_2": ["0^2", "1^2", "2^2", "3^2", "4^2", "32+20+13+01", "40+21+14+02", "41+34+10+03",
             "42+30+23+04", "43+31+24+12", "1010+0101"],
}


def word_labels(X: Rack) -> list[str]:
    return [str(X.label(i)) for i in range(X.size)]


def relation_set(name: str, X: Rack) -> list[Tensor]:
    """Defining relations of B(V), q ≡ -1, for the named racks with known presentations."""
    if name not in RELATION_SETS:
        raise InputError(f"no relation set stored for {name!r}")
    labels = word_labels(X)
    return [parse_relation(r, labels) for r in RELATION_SETS[name]]


# (word, derivation letters left to right, printed value); the rightmost
# derivation is applied first
PRINTED_INTEGRALS = {
    "tetrahedron": ("121321324", "12342434", 2),
    "transpositions": ("abacabacdedf", "abacabacdedf", 1),
    "z5_2": ("0101201020303124", "1041423424323434", 1),
}


@dataclass
class ChainValue:
    word: str
    chain: str
    degree: int
    coords: dict
    expected: object

    @property
    def value(self):
        return self.coords.get(0, 0) if self.degree == 0 else None

    @property
    def ok(self) -> bool:
        return self.degree == 0 and self.value == self.expected


def evaluate_chain(N: NicholsGraded, word: str, chain: str, expected=None) -> ChainValue:
    B = N.braided
    deg, coords = N.derivation_chain(B.parse_word(word), B.parse_word(chain))
    return ChainValue(word, chain, deg, coords, expected)


def printed_chain(name: str, N: NicholsGraded, completion: str = "") -> ChainValue:
    """The stored chain for ``name``; ``completion`` letters are appended on the right."""
    if name not in PRINTED_INTEGRALS:
        raise InputError(f"no integral chain stored for {name!r}")
    word, chain, expected = PRINTED_INTEGRALS[name]
    return evaluate_chain(N, word, chain + completion, expected)


# ---------------------------------------------------------------------
# affine degree-2 relations


@dataclass
class AffineDegree2:
    chains: list[list[int]]
    relations: list[Tensor]
    dimension_B2: int
    formula_dimension: Fraction | None
    symmetrizer_dimension: int


def affine_chains(X: Rack) -> list[list[int]]:
    """Chains x_i = x_{i-1} ▷ x_{i-2}, as cycles of (x1, x2) -> (x2, x2 ▷ x1)... closed orbits.

    Each pair (x1, x2) with x1 != x2 starts a sequence x3 = x2 ▷ x1, x4 = x3 ▷ x2, …;
    on a finite crossed set it is periodic and we return one cycle per orbit
    of the map (x_{i-1}, x_i) -> (x_i, x_{i+1}).
    """
    n = X.size
    seen = set()
    chains = []
    for a in range(n):
        for b in range(n):
            if a == b or (a, b) in seen:
                continue
            chain = [a, b]
            seen.add((a, b))
            while True:
                nxt = X.table[chain[-1]][chain[-2]]
                pair = (chain[-1], nxt)
                if pair == (a, b):
                    break
                seen.add(pair)
                chain.append(nxt)
            chain.pop()  # last element equals a again (closing the cycle)
            chains.append(chain)
    return chains


def chain_relation(chain: Sequence[int], q=-1) -> Tensor:
    """x2x1 + x3x2 + … + x1xn with (-q)-weights; for q=-1 all weights are 1."""
    n = len(chain)
    out: dict = {}
    w = Fraction(1)
    for i in range(n):
        xi, xnext = chain[i], chain[(i + 1) % n]
        _axpy(out, w, {(xnext, xi): 1})
        w = w * (-q)
    return out


def affine_degree2_relations(X: Rack, B: BraidedSpace | None = None, p: int | None = None,
                             t: int | None = None, n_order: int | None = None) -> AffineDegree2:
    """Degree-2 relations of B(V) for an affine crossed set with q ≡ -1.

    Relations are x^2 for every x, and one chain relation per chain of
    length > 1.  The dimension of B^2 is compared against the closed
    formula (n-1)/n (p^{2t} - p^t) when p, t and n are given, and
    against rank(1 + c).
    """
    if B is None:
        from .braided import constant_cocycle
        B = BraidedSpace.rack_type(X, constant_cocycle(X, -1))
    chains = affine_chains(X)
    rels = [{(x, x): Fraction(1)} for x in range(X.size)]
    canon = set()
    for ch in chains:
        rel = chain_relation(ch, -1)
        key = tuple(sorted(rel.items()))
        if key not in canon:
            canon.add(key)
            rels.append(rel)
    # B^2 = T^2 / span(relations) when these span ker(1+c)
    cols = []
    idx = {w: k for k, w in enumerate(itertools.product(range(X.size), repeat=2))}
    for r in rels:
        cols.append({idx[w]: v for w, v in r.items()})
    dim_rel = rank(cols, X.size ** 2)
    dim_b2 = X.size ** 2 - dim_rel
    formula = None
    if p is not None and t is not None and n_order is not None:
        formula = Fraction(n_order - 1, n_order) * (p ** (2 * t) - p ** t)
    sym = symmetrizer_rank(B, 2)
    return AffineDegree2(chains, rels, dim_b2, formula, sym)


def quartic_relation(x: int, y: int) -> Tensor:
    return {(x, y, x, y): Fraction(1), (y, x, y, x): Fraction(1)}


def sextic_relation(x: int, y: int, z: int) -> Tensor:
    return {(x, y, z, x, y, z): Fraction(1), (y, z, x, y, z, x): Fraction(1), (z, x, y, z, x, y): Fraction(1)}


def phi_word(X: Rack, w: Word) -> Perm:
    p = Perm.identity(X.size)
    for x in w:
        p = p * X.phi(x)
    return p


def is_inner_homogeneous(X: Rack, t: Tensor) -> bool:
    """All words of t have the same product φ_{x1}⋯φ_{xn} in Inn(X)."""
    vals = {phi_word(X, w) for w in t}
    return len(vals) <= 1


def higher_affine_relations(X: Rack, A, g, kind: str, elems: Sequence[int]) -> Tensor:
    """Quartic xyxy+yxyx or sextic xyzxyz+yzxyzx+zxyzxy after checking the hypothesis.

    Elements of X are indexed like ``A.elements()``; the hypotheses are
    (1-g+g^2-g^3)(x-y) = 0 for the quartic and (1-g+g^2) killing all
    pairwise differences for the sextic.
    """
    els = A.elements()
    ident = A.identity()
    g2 = A.compose(g, g)
    g3 = A.compose(g2, g)
    if kind == "quartic":
        x, y = elems
        op = A.add_maps(A.sub_maps(ident, g), A.sub_maps(g2, g3))
        if A.apply(op, A.sub(els[x], els[y])) != A.zero():
            raise ValidationError("(1-g+g²-g³)(x-y) != 0", condition="quartic hypothesis")
        return quartic_relation(x, y)
    if kind == "sextic":
        x, y, z = elems
        op = A.add_maps(A.sub_maps(ident, g), g2)
        for u, v in ((x, y), (y, z), (x, z)):
            if A.apply(op, A.sub(els[u], els[v])) != A.zero():
                raise ValidationError("(1-g+g²) does not kill the differences", condition="sextic hypothesis")
        return sextic_relation(x, y, z)
    raise InputError(f"unknown relation kind {kind!r}")


# ---------------------------------------------------------------------
# divisibility of Hilbert polynomials


@dataclass
class DivisibilityReport:
    fiber_polynomial: list[int]
    base_polynomial: list[int] | None
    total_polynomial: list[int]
    fiber_divides: bool
    base_divides: bool | None


def divisibility_checks(X: Rack, q, projection: Sequence[int], N: NicholsGraded | None = None,
                        base: Rack | None = None, constant: bool = False) -> DivisibilityReport:
    """P_S | P_V for an extension X -> Y with q pulled back from Y.

    The fiber braided space is C S with the constant cocycle q_ii and the
    fiber operation; only trivial fiber operations are supported.  When
    ``constant`` is set (constant cocycle α) also P_{V'} | P_V is tested.
    """
    from .braided import constant_cocycle
    from .racks import is_morphism
    if base is not None and not is_morphism(X, base, list(projection)):
        raise ValidationError("projection is not a rack morphism", condition="morphism")
    fibers: dict[int, list[int]] = {}
    for x, y in enumerate(projection):
        fibers.setdefault(y, []).append(x)
    sizes = {len(f) for f in fibers.values()}
    if len(sizes) != 1:
        raise ValidationError("fibers of unequal size", condition="equal fibers")
    fib = next(iter(fibers.values()))
    for a in fib:
        for b in fib:
            if X.table[a][b] != b:
                raise ValidationError("non-trivial fiber operation is unsupported", condition="trivial fiber")
    qii = q[fib[0]][fib[0]]
    T = Rack([list(range(len(fib))) for _ in fib])
    BS = BraidedSpace.rack_type(T, constant_cocycle(T, qii))
    PS = nichols_graded(BS).dims
    if N is None:
        N = nichols_graded(BraidedSpace.rack_type(X, q))
    PV = N.dims
    res_base = None
    PB = None
    if constant and base is not None:
        inv = {}
        for x, y in enumerate(projection):
            inv.setdefault(y, x)
        qb = [[q[inv[i]][inv[j]] for j in range(base.size)] for i in range(base.size)]
        PB = nichols_graded(BraidedSpace.rack_type(base, qb)).dims
        res_base = poly_divides(PB, PV)
    return DivisibilityReport(PS, PB, PV, poly_divides(PS, PV), res_base)
