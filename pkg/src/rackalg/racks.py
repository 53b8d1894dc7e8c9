"""Finite racks, quandles and crossed sets.

A rack on {0, ..., n-1} is stored as its operation table,
``table[i][j] = i ▷ j``.  Optional labels are kept for display only.
"""
from __future__ import annotations

import itertools
import json
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .abelian import FinAbGroup
from .errors import InputError, ValidationError
from .permgroups import DEFAULT_GROUP_CAP, Perm, PermGroup, alternating_group, generate, symmetric_group

NOT_RACK = "NotRack"
RACK = "Rack"
QUANDLE = "Quandle"
CROSSED_SET = "CrossedSet"
KIND_LEVEL = {NOT_RACK: 0, RACK: 1, QUANDLE: 2, CROSSED_SET: 3}


def _normalize_table(table) -> tuple[tuple[int, ...], ...]:
    try:
        rows = [list(r) for r in table]
    except TypeError as exc:
        raise InputError("table must be a list of rows") from exc
    n = len(rows)
    if n == 0:
        raise InputError("empty table")
    out = []
    for r in rows:
        if len(r) != n:
            raise InputError("table is not square")
        row = []
        for x in r:
            if isinstance(x, bool) or not isinstance(x, int):
                try:
                    if int(x) != x:
                        raise InputError(f"non-integer entry {x!r}")
                    x = int(x)
                except (TypeError, ValueError) as exc:
                    raise InputError(f"non-integer entry {x!r}") from exc
            if not 0 <= x < n:
                raise InputError(f"entry {x} out of range 0..{n - 1}")
            row.append(x)
        out.append(tuple(row))
    return tuple(out)


def check_structure(table) -> str:
    """Strongest axiom level satisfied by an operation table."""
    t = _normalize_table(table)
    return _kind(t)


def _kind(t) -> str:
    n = len(t)
    full = set(range(n))
    for row in t:
        if set(row) != full:
            return NOT_RACK
    for i in range(n):
        ti = t[i]
        for j in range(n):
            tij = ti[j]
            tj = t[j]
            ttij = t[tij]
            for k in range(n):
                if ti[tj[k]] != ttij[ti[k]]:
                    return NOT_RACK
    if any(t[i][i] != i for i in range(n)):
        return RACK
    for i in range(n):
        for j in range(n):
            if t[i][j] == j and t[j][i] != i:
                return QUANDLE
    return CROSSED_SET


def failing_triple(table) -> tuple[int, int, int] | None:
    """First (i, j, k) violating self-distributivity, if any."""
    t = _normalize_table(table)
    n = len(t)
    for i, j, k in itertools.product(range(n), repeat=3):
        if t[i][t[j][k]] != t[t[i][j]][t[i][k]]:
            return (i, j, k)
    return None


class Rack:
    """A finite rack; raises ``ValidationError`` if the table is not one."""

    def __init__(self, table, labels: Sequence | None = None, name: str | None = None):
        t = _normalize_table(table)
        kind = _kind(t)
        if kind == NOT_RACK:
            raise ValidationError("table does not define a rack", condition="rack axioms",
                                  witness=failing_triple(t))
        self.table = t
        self.kind = kind
        self.labels = list(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != len(t):
            raise InputError("label count does not match size")
        self.name = name
        self._inv = None

    # -- basics --------------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.table)

    def __len__(self):
        return len(self.table)

    def op(self, i: int, j: int) -> int:
        return self.table[i][j]

    def op_inv(self, i: int, j: int) -> int:
        """The unique k with i ▷ k = j."""
        if self._inv is None:
            inv = []
            for row in self.table:
                r = [0] * len(row)
                for k, x in enumerate(row):
                    r[x] = k
                inv.append(tuple(r))
            self._inv = tuple(inv)
        return self._inv[i][j]

    def phi(self, i: int) -> Perm:
        return Perm._raw(self.table[i])

    def is_quandle(self) -> bool:
        return KIND_LEVEL[self.kind] >= KIND_LEVEL[QUANDLE]

    def is_crossed_set(self) -> bool:
        return self.kind == CROSSED_SET

    def is_trivial(self) -> bool:
        return all(self.table[i][j] == j for i in range(self.size) for j in range(self.size))

    def label(self, i: int) -> str:
        return str(self.labels[i]) if self.labels is not None else str(i)

    def index_of(self, label) -> int:
        if self.labels is None:
            return int(label)
        labels = [str(x) for x in self.labels]
        return labels.index(str(label))

    def bracket(self, word: Sequence[int]) -> int:
        """[x1 ... xn] = x1 ▷ (x2 ▷ (... ▷ xn))."""
        r = word[-1]
        for x in reversed(word[:-1]):
            r = self.table[x][r]
        return r

    def __eq__(self, other):
        return isinstance(other, Rack) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        nm = f" {self.name}" if self.name else ""
        return f"<Rack{nm} size={self.size} kind={self.kind}>"

    # -- serialization -------------------------------------------------

    def to_dict(self) -> dict:
        d = {"size": self.size, "table": [list(r) for r in self.table]}
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> "Rack":
        if not isinstance(d, dict) or "table" not in d:
            raise InputError("rack JSON must be an object with a 'table' field")
        t = _normalize_table(d["table"])
        if "size" in d and d["size"] != len(t):
            raise InputError("'size' does not match the table")
        return cls(t, labels=d.get("labels"))

    @classmethod
    def from_json(cls, text: str) -> "Rack":
        try:
            d = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc}") from exc
        return cls.from_dict(d)

    def relabeled(self, perm: Sequence[int]) -> "Rack":
        """Transport the structure along the bijection i -> perm[i]."""
        n = self.size
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        t = [[perm[self.table[inv[a]][inv[b]]] for b in range(n)] for a in range(n)]
        labels = None
        if self.labels is not None:
            labels = [self.labels[inv[a]] for a in range(n)]
        return Rack(t, labels=labels)

    def subrack(self, elements: Sequence[int]) -> tuple["Rack", list[int]]:
        """Subrack on a ▷-closed subset, with the inclusion map."""
        elements = sorted(elements)
        pos = {x: i for i, x in enumerate(elements)}
        try:
            t = [[pos[self.table[a][b]] for b in elements] for a in elements]
        except KeyError as exc:
            raise ValidationError("subset is not closed under ▷", condition="closure") from exc
        labels = [self.labels[a] for a in elements] if self.labels is not None else None
        return Rack(t, labels=labels), list(elements)


# ---------------------------------------------------------------------
# morphisms and presentations


@dataclass
class RackMorphism:
    source: Rack
    target: Rack
    map: list[int]

    def __post_init__(self):
        self.map = [int(x) for x in self.map]
        if len(self.map) != self.source.size:
            raise InputError("map length does not match source size")
        bad = morphism_failure(self.source, self.target, self.map)
        if bad is not None:
            raise ValidationError("map is not a rack morphism", condition="map(i▷j)=map(i)▷map(j)",
                                  witness=bad)

    def __call__(self, i: int) -> int:
        return self.map[i]

    def is_surjective(self) -> bool:
        return set(self.map) == set(range(self.target.size))

    def fibers(self) -> list[list[int]]:
        fib = [[] for _ in range(self.target.size)]
        for i, y in enumerate(self.map):
            fib[y].append(i)
        return fib


def morphism_failure(X: Rack, Y: Rack, f: Sequence[int]):
    for i in range(X.size):
        for j in range(X.size):
            if f[X.table[i][j]] != Y.table[f[i]][f[j]]:
                return (i, j)
    return None


def is_morphism(X: Rack, Y: Rack, f: Sequence[int]) -> bool:
    return len(f) == X.size and morphism_failure(X, Y, f) is None


@dataclass
class FPPresentation:
    """Finitely presented group; a word is a list of (generator, ±1)."""

    generator_count: int
    relators: list[list[tuple[int, int]]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"generators": self.generator_count,
                "relators": [[g if e == 1 else -(g + 1) for g, e in r] for r in self.relators]}


def enveloping_presentation(X: Rack, drop_trivial: bool = False):
    """Presentation of the enveloping group G_X and the surjection onto Inn(X).

    Relators are x y x^-1 (x▷y)^-1.  With ``drop_trivial`` the relators that
    freely reduce to the empty word (x▷y = y with x = y) are omitted.
    Returns (presentation, pi) with pi[x] = phi_x.
    """
    rels = []
    for x in range(X.size):
        for y in range(X.size):
            z = X.table[x][y]
            w = [(x, 1), (y, 1), (x, -1), (z, -1)]
            if drop_trivial and _free_reduce(w) == []:
                continue
            rels.append(w)
    return FPPresentation(X.size, rels), [X.phi(x) for x in range(X.size)]


def _free_reduce(word):
    out = []
    for g, e in word:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    # cyclic reduction
    while len(out) >= 2 and out[0][0] == out[-1][0] and out[0][1] == -out[-1][1]:
        out = out[1:-1]
    return out


def evaluate_in_group(word, images: Sequence[Perm]) -> Perm:
    r = images[0] * images[0].inverse()
    for g, e in word:
        r = r * (images[g] if e == 1 else images[g].inverse())
    return r


# ---------------------------------------------------------------------
# inner group, orbits, components


@dataclass
class InnerGroup:
    group: PermGroup
    phi: list[Perm]
    faithful: bool


def inner_group(X: Rack, cap: int = DEFAULT_GROUP_CAP) -> InnerGroup:
    phis = [X.phi(i) for i in range(X.size)]
    G = generate(phis, degree=X.size, cap=cap)
    return InnerGroup(G, phis, len(set(phis)) == len(phis))


def orbits(X: Rack) -> list[list[int]]:
    n = X.size
    seen = [False] * n
    out = []
    for s in range(n):
        if seen[s]:
            continue
        block, queue = [s], deque([s])
        seen[s] = True
        while queue:
            y = queue.popleft()
            for x in range(n):
                for z in (X.table[x][y], X.op_inv(x, y)):
                    if not seen[z]:
                        seen[z] = True
                        block.append(z)
                        queue.append(z)
        out.append(sorted(block))
    return out


def is_indecomposable(X: Rack) -> bool:
    return len(orbits(X)) == 1


def _generated_subrack(X: Rack, seed: Iterable[int]) -> set[int]:
    sub = set(seed)
    changed = True
    while changed:
        changed = False
        for y in list(sub):
            for z in list(sub):
                for w in (X.table[y][z], X.op_inv(y, z)):
                    if w not in sub:
                        sub.add(w)
                        changed = True
    return sub


def _restricted_orbit(X: Rack, x: int, movers: Sequence[int]) -> set[int]:
    seen = {x}
    queue = deque([x])
    while queue:
        y = queue.popleft()
        for u in movers:
            for z in (X.table[u][y], X.op_inv(u, y)):
                if z not in seen:
                    seen.add(z)
                    queue.append(z)
    return seen


def component_of(X: Rack, x: int) -> list[int]:
    """Largest indecomposable subrack containing x.

    Start from Y = X and replace Y by the orbit of x under the group
    generated by the translations of Y, until it stabilizes.  Every
    indecomposable subrack through x stays inside each iterate, and the
    fixed point is itself an indecomposable subrack.
    """
    Y = set(range(X.size))
    while True:
        Z = _restricted_orbit(X, x, sorted(Y))
        if Z == Y:
            return sorted(Y)
        Y = Z


def indecomposable_components(X: Rack) -> list[list[int]]:
    """Partition of X into maximal indecomposable subracks."""
    done: set[int] = set()
    out = []
    for x in range(X.size):
        if x not in done:
            c = component_of(X, x)
            done.update(c)
            out.append(c)
    return sorted(out)


# ---------------------------------------------------------------------
# derived constructions


def associated_quandle(X: Rack) -> tuple[Rack, list[int]]:
    """(X, ▷^ι) with a ▷ ι(a) = a and x ▷^ι y = x ▷ ι(y)."""
    iota = [X.op_inv(a, a) for a in range(X.size)]
    t = [[X.table[x][iota[y]] for y in range(X.size)] for x in range(X.size)]
    return Rack(t, labels=X.labels), iota


def quotient_by_partition(X: Rack, blocks: Sequence[Sequence[int]]) -> tuple[Rack, list[int]]:
    """Quotient by a congruence given as blocks; blocks are ordered by minimum."""
    blocks = sorted(sorted(b) for b in blocks)
    proj = [0] * X.size
    for k, b in enumerate(blocks):
        for x in b:
            proj[x] = k
    m = len(blocks)
    t = [[None] * m for _ in range(m)]
    for i in range(X.size):
        for j in range(X.size):
            a, b, c = proj[i], proj[j], proj[X.table[i][j]]
            if t[a][b] is None:
                t[a][b] = c
            elif t[a][b] != c:
                raise ValidationError("partition is not a congruence", condition="compatibility",
                                      witness=(i, j))
    return Rack(t), proj


def crossed_set_quotient(X: Rack) -> tuple[Rack, list[int]]:
    """Iterated quotient by x ~ x' iff exists y: x▷y = y and y▷x = x'."""
    if not X.is_quandle():
        raise ValidationError("crossed-set quotient requires a quandle", condition="quandle")
    current, proj = X, list(range(X.size))
    while not current.is_crossed_set():
        n = current.size
        t = current.table
        parent = list(range(n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for x in range(n):
            for y in range(n):
                if t[x][y] == y:
                    a, b = find(x), find(t[y][x])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        # close up to a congruence
        blocks = congruence_closure(current, [(x, find(x)) for x in range(n)])
        current, p = quotient_by_partition(current, blocks)
        proj = [p[v] for v in proj]
    return current, proj


def congruence_closure(X: Rack, pairs: Iterable[tuple[int, int]]) -> list[list[int]]:
    """Smallest congruence containing the given pairs."""
    n = X.size
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    queue = deque()

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra == rb:
            return
        parent[max(ra, rb)] = min(ra, rb)
        queue.append((a, b))

    for a, b in pairs:
        union(a, b)
    t = X.table
    while queue:
        a, b = queue.popleft()
        for z in range(n):
            union(t[a][z], t[b][z])
            union(t[z][a], t[z][b])
    blocks: dict[int, list[int]] = {}
    for a in range(n):
        blocks.setdefault(find(a), []).append(a)
    return sorted(blocks.values())


# ---------------------------------------------------------------------
# isomorphism


def _fingerprint(X: Rack, orbit_of: list[int], orbit_sizes: list[int], fiber: Counter):
    n = X.size
    fps = []
    for i in range(n):
        row = X.table[i]
        cyc = tuple(sorted(len(c) for c in X.phi(i).cycles()))
        fixed = sum(1 for j in range(n) if row[j] == j)
        col_fixed = sum(1 for j in range(n) if X.table[j][i] == i)
        fps.append((orbit_sizes[orbit_of[i]], fiber[row], cyc, fixed, col_fixed, row[i] == i))
    return fps


def _invariants(X: Rack):
    orb = orbits(X)
    orbit_of = [0] * X.size
    for k, b in enumerate(orb):
        for x in b:
            orbit_of[x] = k
    fiber = Counter(X.table)
    fps = _fingerprint(X, orbit_of, [len(b) for b in orb], fiber)
    return fps


def is_isomorphic(X: Rack, Y: Rack, check_inner_order: bool = True) -> list[int] | None:
    """A bijection f with f(i▷j) = f(i)▷f(j), or None."""
    if X.size != Y.size or X.kind != Y.kind:
        return None
    fx, fy = _invariants(X), _invariants(Y)
    if sorted(fx) != sorted(fy):
        return None
    if check_inner_order and X.size <= 64:
        try:
            if inner_group(X, cap=10**5).group.order() != inner_group(Y, cap=10**5).group.order():
                return None
        except Exception:
            pass
    n = X.size
    cands = {i: [j for j in range(n) if fy[j] == fx[i]] for i in range(n)}
    tx, ty = X.table, Y.table

    def propagate(fmap, finv, a, b):
        work = [(a, b)]
        while work:
            a, b = work.pop()
            if a in fmap:
                if fmap[a] != b:
                    return False
                continue
            if b in finv or fy[b] != fx[a]:
                return False
            fmap[a] = b
            finv[b] = a
            for c, d in list(fmap.items()):
                work.append((tx[a][c], ty[b][d]))
                work.append((tx[c][a], ty[d][b]))
                work.append((X.op_inv(c, a), Y.op_inv(d, b)))
                work.append((X.op_inv(a, c), Y.op_inv(b, d)))
        return True

    def search(fmap, finv):
        if len(fmap) == n:
            return [fmap[i] for i in range(n)]
        a = min((i for i in range(n) if i not in fmap), key=lambda i: len(cands[i]))
        for b in cands[a]:
            if b in finv:
                continue
            f2, g2 = dict(fmap), dict(finv)
            if propagate(f2, g2, a, b):
                res = search(f2, g2)
                if res is not None:
                    return res
        return None

    res = search({}, {})
    if res is not None:
        assert is_morphism(X, Y, res)
    return res


# ---------------------------------------------------------------------
# constructors


def trivial(n: int) -> Rack:
    return Rack([list(range(n)) for _ in range(n)], name=f"trivial({n})")


def permutation_rack(f: Sequence[int]) -> Rack:
    f = list(f)
    return Rack([f[:] for _ in f], name="permutation")


def cycle_rack(n: int) -> Rack:
    """Permutation rack of the n-cycle i -> i+1."""
    return permutation_rack([(i + 1) % n for i in range(n)])


def cyclic_affine(n: int, q: int) -> Rack:
    """(Z/n, ▷^q): i ▷ j = q j + (1 - q) i."""
    t = [[(q * j + (1 - q) * i) % n for j in range(n)] for i in range(n)]
    return Rack(t, name=f"(Z/{n},▷^{q})")


def affine_rack(A: FinAbGroup, g, f=None) -> Rack:
    """x ▷ y = f(x) + g(y) on the elements of A; f defaults to id - g."""
    if not A.is_automorphism(g):
        raise ValidationError("g is not an automorphism of A", condition="g invertible")
    g = A.normalize(g)
    if f is None:
        f = A.sub_maps(A.identity(), g)
    else:
        if not A.is_endomorphism(f):
            raise ValidationError("f is not an endomorphism of A", condition="f endomorphism")
        f = A.normalize(f)
        if A.compose(f, g) != A.compose(g, f):
            raise ValidationError("f and g do not commute", condition="fg=gf")
        h = A.sub_maps(A.sub_maps(A.identity(), g), f)
        if A.compose(f, h) != A.zero_map():
            raise ValidationError("f(id-g-f) != 0", condition="f(id-g-f)=0")
    els = A.elements()
    fx = [A.apply(f, x) for x in els]
    gy = [A.apply(g, y) for y in els]
    t = [[A.index(A.add(fx[i], gy[j])) for j in range(len(els))] for i in range(len(els))]
    labels = ["".join(map(str, e)) for e in els]
    return Rack(t, labels=labels, name="affine")


def product(X: Rack, Y: Rack) -> Rack:
    m, n = X.size, Y.size
    t = [[X.table[a // n][b // n] * n + Y.table[a % n][b % n] for b in range(m * n)] for a in range(m * n)]
    return Rack(t, labels=[f"({X.label(a)},{Y.label(b)})" for a in range(m) for b in range(n)])


def product_projections(X: Rack, Y: Rack) -> tuple[list[int], list[int]]:
    n = Y.size
    return [a // n for a in range(X.size * n)], [a % n for a in range(X.size * n)]


def disjoint_sum(X: Rack, Y: Rack) -> Rack:
    m, n = X.size, Y.size
    t = []
    for a in range(m + n):
        row = []
        for b in range(m + n):
            if a < m and b < m:
                row.append(X.table[a][b])
            elif a >= m and b >= m:
                row.append(m + Y.table[a - m][b - m])
            else:
                row.append(b)
        t.append(row)
    labels = [X.label(a) for a in range(m)] + [Y.label(b) + "'" for b in range(n)]
    return Rack(t, labels=labels)


def amalgamated_sum(Y: Rack, Z: Rack, sigma: Sequence[Sequence[int]], tau: Sequence[Sequence[int]]) -> Rack:
    """Y ∪ Z with y▷z = σ_y(z), z▷y = τ_z(y).

    ``sigma[y]`` is a permutation of Z, ``tau[z]`` a permutation of Y.
    """
    m, n = Y.size, Z.size
    if len(sigma) != m or len(tau) != n:
        raise InputError("sigma/tau have wrong length")
    sig = [Perm(s) for s in sigma]
    ta = [Perm(s) for s in tau]
    for y, s in enumerate(sig):
        if not is_morphism(Z, Z, s.images):
            raise ValidationError(f"sigma_{y} is not an automorphism of Z", condition="sigma in Aut(Z)", witness=(y,))
    for z, s in enumerate(ta):
        if not is_morphism(Y, Y, s.images):
            raise ValidationError(f"tau_{z} is not an automorphism of Y", condition="tau in Aut(Y)", witness=(z,))
    for y in range(m):
        for u in range(m):
            if sig[Y.table[y][u]] != sig[y] * sig[u] * sig[y].inverse():
                raise ValidationError("sigma is not a rack morphism", condition="σ_{y▷u}=σ_yσ_uσ_y^-1", witness=(y, u))
    for z in range(n):
        for w in range(n):
            if ta[Z.table[z][w]] != ta[z] * ta[w] * ta[z].inverse():
                raise ValidationError("tau is not a rack morphism", condition="τ_{z▷w}=τ_zτ_wτ_z^-1", witness=(z, w))
    for y in range(m):
        for z in range(n):
            for u in range(m):
                if Y.table[y][ta[z](u)] != ta[sig[y](z)](Y.table[y][u]):
                    raise ValidationError("condition φ_yτ_z=τ_{σ_y(z)}φ_y fails",
                                          condition="φ_yτ_z=τ_{σ_y(z)}φ_y", witness=(y, z, u))
            for w in range(n):
                if Z.table[z][sig[y](w)] != sig[ta[z](y)](Z.table[z][w]):
                    raise ValidationError("condition φ_zσ_y=σ_{τ_z(y)}φ_z fails",
                                          condition="φ_zσ_y=σ_{τ_z(y)}φ_z", witness=(y, z, w))
    t = []
    for a in range(m + n):
        row = []
        for b in range(m + n):
            if a < m and b < m:
                row.append(Y.table[a][b])
            elif a >= m and b >= m:
                row.append(m + Z.table[a - m][b - m])
            elif a < m:
                row.append(m + sig[a](b - m))
            else:
                row.append(ta[a - m](b))
        t.append(row)
    return Rack(t, labels=[Y.label(a) for a in range(m)] + [Z.label(b) + "'" for b in range(n)])


def amalgamated_crossed_condition(sigma, tau) -> bool:
    """σ_y(z) = z iff τ_z(y) = y for all y, z."""
    return all((sigma[y][z] == z) == (tau[z][y] == y) for y in range(len(sigma)) for z in range(len(tau)))


def conjugation_crossed_set(G: PermGroup, seeds: Iterable[Perm]) -> tuple[Rack, list[Perm]]:
    """Union of conjugacy classes of the seeds with i ▷ j = i j i^-1."""
    elems: set[Perm] = set()
    for s in seeds:
        elems.update(G.conjugacy_class(s))
    elems = sorted(elems)
    idx = {e: k for k, e in enumerate(elems)}
    t = [[idx[b.conjugate(a)] for b in elems] for a in elems]
    return Rack(t, labels=[repr(e)[5:-1] for e in elems]), elems


def core(G: PermGroup) -> Rack:
    """x ▷ y = x y^-1 x on the elements of G."""
    els = G.elements
    idx = {e: k for k, e in enumerate(els)}
    t = [[idx[x * y.inverse() * x] for y in els] for x in els]
    return Rack(t, name="core")


def core_abelian(A: FinAbGroup) -> Rack:
    """Core of an abelian group: x ▷ y = 2x - y."""
    els = A.elements()
    t = [[A.index(A.sub(A.scale(2, x), y)) for y in els] for x in els]
    return Rack(t, name="core")


def homogeneous(G: PermGroup, s) -> Rack:
    """x ▷ y = s(y x^-1) x for an automorphism s of G (given as a callable or dict)."""
    els = G.elements
    idx = {e: k for k, e in enumerate(els)}
    s = _as_map(s)
    _check_automorphism(G, s)
    t = [[idx[s(y * x.inverse()) * x] for y in els] for x in els]
    return Rack(t, name="homogeneous")


def twisted_homogeneous(G: PermGroup, s, seed: Perm | None = None) -> Rack:
    """x ▷ y = x s(y x^-1), restricted to the orbit of ``seed`` if given.

    The orbit is taken for the twisted conjugation h -> y·h = y h s(y)^-1, which
    is the subrack-closed piece used in simplicity constructions.
    """
    els = G.elements
    s = _as_map(s)
    _check_automorphism(G, s)
    if seed is None:
        dom = list(els)
    else:
        dom_set = {seed}
        queue = deque([seed])
        gens = G.generators
        while queue:
            h = queue.popleft()
            for y in gens:
                k = y * h * s(y).inverse()
                if k not in dom_set:
                    dom_set.add(k)
                    queue.append(k)
        dom = sorted(dom_set)
    idx = {e: k for k, e in enumerate(dom)}
    t = [[idx[x * s(y * x.inverse())] for y in dom] for x in dom]
    return Rack(t, name="twisted homogeneous")


def _as_map(s):
    if callable(s):
        return s
    return lambda g: s[g]


def _check_automorphism(G: PermGroup, s):
    gens = G.generators
    for a in gens:
        for b in gens:
            if s(a * b) != s(a) * s(b):
                raise ValidationError("s is not a homomorphism", condition="s in Aut(G)")
    if len({s(g) for g in G.elements}) != G.order():
        raise ValidationError("s is not bijective", condition="s in Aut(G)")


# polyhedral crossed sets --------------------------------------------

_CUBE_FACES = {
    "a": "bcde", "b": "aefc", "c": "abfd", "d": "acfe", "e": "adfb", "f": "bedc",
}


def _letters_perm(cycle: str, letters: str) -> Perm:
    pos = {c: k for k, c in enumerate(letters)}
    return Perm.from_cycles([[pos[c] for c in cycle]], len(letters))


def polyhedral(name: str) -> Rack:
    """Crossed set of vertex rotations of a regular polyhedron.

    Built from conjugacy classes of rotation groups: tetrahedron (class of a
    3-cycle in A4, labels 1..4 by fixed point), cube_faces / octahedron
    (4-cycles in S4 realized on the six faces a..f), cube (3-cycles in S4),
    icosahedron (5-cycles in A5), dodecahedron (3-cycles in A5).
    """
    name = name.lower()
    if name == "tetrahedron":
        A4 = alternating_group(4)
        seed = Perm.from_cycles([(2, 3, 4)], 4, one_based=True)
        X, elems = conjugation_crossed_set(A4, [seed])
        fixed = [next(v for v in range(4) if e(v) == v) for e in elems]
        # relabel so that element k is the rotation fixing vertex k
        X = X.relabeled(fixed)
        return Rack(X.table, labels=["1", "2", "3", "4"], name="tetrahedron")
    if name in ("cube_faces", "octahedron"):
        letters = "abcdef"
        rots = [_letters_perm(_CUBE_FACES[c], letters) for c in letters]
        G = generate(rots)
        X, elems = conjugation_crossed_set(G, [rots[0]])
        if sorted(elems) != sorted(rots):
            raise AssertionError("face rotations do not form a conjugacy class")
        pos = [elems.index(r) for r in rots]
        t = [[pos.index(X.table[pos[i]][pos[j]]) for j in range(6)] for i in range(6)]
        labels = list(letters) if name == "cube_faces" else [str(k) for k in range(1, 7)]
        return Rack(t, labels=labels, name=name)
    if name == "cube":
        S4 = symmetric_group(4)
        X, _ = conjugation_crossed_set(S4, [Perm.from_cycles([(0, 1, 2)], 4)])
        return Rack(X.table, labels=X.labels, name="cube")
    if name == "icosahedron":
        A5 = alternating_group(5)
        X, _ = conjugation_crossed_set(A5, [Perm.from_cycles([(0, 1, 2, 3, 4)], 5)])
        return Rack(X.table, labels=X.labels, name="icosahedron")
    if name == "dodecahedron":
        A5 = alternating_group(5)
        X, _ = conjugation_crossed_set(A5, [Perm.from_cycles([(0, 1, 2)], 5)])
        return Rack(X.table, labels=X.labels, name="dodecahedron")
    raise InputError(f"unknown polyhedron {name!r}")


def transpositions_s4() -> Rack:
    """Transpositions of S4 labelled a=(12), b=(13), c=(14), d=(23), e=(24), f=(34)."""
    pairs = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    perms = [Perm.from_cycles([p], 4, one_based=True) for p in pairs]
    idx = {p: k for k, p in enumerate(perms)}
    t = [[idx[perms[j].conjugate(perms[i])] for j in range(6)] for i in range(6)]
    return Rack(t, labels=list("abcdef"), name="transpositions")


def quandle_x_plus_minus() -> Rack:
    """X = {x, +, -} with x ▷ ± = ∓ and φ_± = id."""
    t = [[0, 2, 1], [0, 1, 2], [0, 1, 2]]
    return Rack(t, labels=["x", "+", "-"], name="{x,+,-}")


NAMED = {
    "tetrahedron": lambda: polyhedral("tetrahedron"),
    "cube_faces": lambda: polyhedral("cube_faces"),
    "octahedron": lambda: polyhedral("octahedron"),
    "cube": lambda: polyhedral("cube"),
    "icosahedron": lambda: polyhedral("icosahedron"),
    "dodecahedron": lambda: polyhedral("dodecahedron"),
    "transpositions": transpositions_s4,
    "z3": lambda: cyclic_affine(3, 2),
    "z5_2": lambda: cyclic_affine(5, 2),
    "z5_3": lambda: cyclic_affine(5, 3),
    "xpm": quandle_x_plus_minus,
}
