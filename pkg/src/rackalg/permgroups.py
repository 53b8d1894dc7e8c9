"""Small permutation-group engine based on full enumeration.

Permutations act on {0, ..., m-1}.  The product ``p * q`` is the
composite "first q, then p", so ``(p * q)(x) == p(q(x))``.
"""
from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

DEFAULT_GROUP_CAP = 10**6


class CapExceeded(RuntimeError):
    """Raised when an enumeration exceeds its cap; ``count`` is the partial size."""

    def __init__(self, message: str, count: int = 0):
        super().__init__(message)
        self.count = count


class Perm:
    __slots__ = ("images", "_hash")

    def __init__(self, images: Sequence[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _raw(cls, images: tuple) -> "Perm":
        p = object.__new__(cls)
        p.images = images
        p._hash = hash(images)
        return p

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls._raw(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int, one_based: bool = False) -> "Perm":
        img = list(range(degree))
        shift = 1 if one_based else 0
        for cyc in cycles:
            cyc = [c - shift for c in cyc]
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a] = b
        return cls(img)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Perm") -> "Perm":
        a = self.images
        return Perm._raw(tuple(a[i] for i in other.images))

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Perm._raw(tuple(inv))

    def __pow__(self, k: int) -> "Perm":
        if k < 0:
            return self.inverse() ** (-k)
        result = Perm.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self, g: "Perm") -> "Perm":
        """g self g^-1."""
        return g * self * g.inverse()

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for i in range(self.degree):
            if i in seen or self.images[i] == i:
                continue
            cyc, j = [], i
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        from math import lcm
        return lcm(1, *(len(c) for c in self.cycles()))

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return self._hash

    def __repr__(self):
        cyc = self.cycles()
        if not cyc:
            return "Perm(())"
        return "Perm(" + "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) + ")"

    def to_json(self) -> list[int]:
        return list(self.images)


class PermGroup:
    """A permutation group, enumerated lazily by breadth-first closure."""

    def __init__(self, degree: int, generators: Iterable[Perm], cap: int = DEFAULT_GROUP_CAP):
        self.degree = degree
        self.generators = [g for g in generators]
        for g in self.generators:
            if g.degree != degree:
                raise ValueError("generators of different degrees")
        self.cap = cap
        self._elements: list[Perm] | None = None
        self._set: set[Perm] | None = None

    @property
    def elements(self) -> list[Perm]:
        if self._elements is None:
            self._enumerate()
        return self._elements

    def _enumerate(self):
        e = Perm.identity(self.degree)
        seen = {e}
        order = [e]
        queue = deque([e])
        gens = [g for g in self.generators if not g.is_identity()]
        while queue:
            h = queue.popleft()
            for g in gens:
                k = g * h
                if k not in seen:
                    seen.add(k)
                    order.append(k)
                    if len(seen) > self.cap:
                        raise CapExceeded(f"group enumeration exceeded cap {self.cap}", len(seen))
                    queue.append(k)
        self._elements = sorted(order)
        self._set = seen

    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return self.order()

    def __contains__(self, g: Perm) -> bool:
        self.elements
        return g in self._set

    def __iter__(self):
        return iter(self.elements)

    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for a in gens for b in gens)

    def center(self) -> list[Perm]:
        gens = self.generators
        return [z for z in self.elements if all(z * g == g * z for g in gens)]

    def conjugacy_class(self, g: Perm) -> list[Perm]:
        # closure under conjugation by generators suffices
        seen = {g}
        queue = deque([g])
        gens = self.generators + [h.inverse() for h in self.generators]
        while queue:
            x = queue.popleft()
            for h in gens:
                y = x.conjugate(h)
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return sorted(seen)

    def conjugacy_classes(self) -> list[list[Perm]]:
        done: set[Perm] = set()
        out = []
        for g in self.elements:
            if g not in done:
                cls = self.conjugacy_class(g)
                done.update(cls)
                out.append(cls)
        return out

    def centralizer(self, g: Perm) -> "PermGroup":
        elems = [h for h in self.elements if h * g == g * h]
        sub = PermGroup(self.degree, elems, cap=self.cap)
        sub._elements = sorted(elems)
        sub._set = set(elems)
        return sub

    def normal_closure(self, gens: Iterable[Perm]) -> "PermGroup":
        conj = set()
        for g in gens:
            conj.update(self.conjugacy_class(g))
        return generate(sorted(conj), degree=self.degree, cap=self.cap)

    def is_simple(self) -> bool:
        """Simple iff the normal closure of every non-identity element is everything."""
        if self.order() == 1:
            return False
        n = self.order()
        for cls in self.conjugacy_classes():
            if cls[0].is_identity():
                continue
            if self.normal_closure([cls[0]]).order() != n:
                return False
        return True

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, gens={len(self.generators)})"


def generate(gens: Sequence[Perm], degree: int | None = None, cap: int = DEFAULT_GROUP_CAP) -> PermGroup:
    gens = list(gens)
    if degree is None:
        if not gens:
            raise ValueError("degree required for empty generator list")
        degree = gens[0].degree
    G = PermGroup(degree, gens, cap=cap)
    G.elements  # force enumeration so cap errors surface here
    return G


def symmetric_group(m: int) -> PermGroup:
    if m <= 1:
        return generate([], degree=max(m, 1))
    gens = [Perm.from_cycles([(0, 1)], m), Perm(list(range(1, m)) + [0])]
    return generate(gens)


def alternating_group(m: int) -> PermGroup:
    gens = [Perm.from_cycles([(0, 1, k)], m) for k in range(2, m)]
    return generate(gens, degree=m)


def semidirect_product(N, action: Sequence, cap: int = DEFAULT_GROUP_CAP) -> PermGroup:
    """N x| C where C is generated by the automorphism matrices in ``action``.

    The group is realized on the set N x C (C enumerated as matrix words)
    through left translations (h,g)(h',g') = (h + g(h'), g g').
    """
    for M in action:
        if not N.is_automorphism(M):
            raise ValueError("action matrix is not an automorphism")
    ident = N.normalize(N.identity())
    C = [ident]
    seen = {ident}
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        for M in action:
            k = N.compose(N.normalize(M), g)
            if k not in seen:
                seen.add(k)
                C.append(k)
                queue.append(k)
    C.sort()
    elems = N.elements()
    pairs = [(h, g) for h in elems for g in C]
    pidx = {p: i for i, p in enumerate(pairs)}

    def left_mult(h, g):
        return Perm([pidx[(N.add(h, N.apply(g, h2)), N.compose(g, g2))] for h2, g2 in pairs])

    gens = [left_mult(h, ident) for h in _basis(N)] + [left_mult(N.zero(), N.normalize(M)) for M in action]
    if len(pairs) > cap:
        raise CapExceeded("semidirect product exceeds cap", len(pairs))
    return generate(gens, degree=len(pairs), cap=cap)


def _basis(N):
    k = N.rank
    return [tuple(1 if u == v else 0 for u in range(k)) for v in range(k)]


def quaternion_group() -> tuple[PermGroup, dict[str, Perm]]:
    """Q8 in its regular representation, with named elements.

    Elements are encoded as (sign, unit) with unit in 1, i, j, k;
    the returned dict maps '1', '-1', 'i', '-i', ... to permutations.
    """
    units = ["1", "i", "j", "k"]
    # unit products: table[a][b] = (sign, unit)
    mult = {
        ("1", u): (1, u) for u in units
    }
    mult.update({(u, "1"): (1, u) for u in units})
    mult.update({("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
                 ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
                 ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j")})
    elems = [(s, u) for s in (1, -1) for u in units]
    idx = {e: n for n, e in enumerate(elems)}

    def times(a, b):
        s, u = mult[(a[1], b[1])]
        return (a[0] * b[0] * s, u)

    perms = {}
    for e in elems:
        name = ("" if e[0] == 1 else "-") + e[1]
        perms[name] = Perm([idx[times(e, b)] for b in elems])
    G = generate([perms["i"], perms["j"]])
    return G, perms
