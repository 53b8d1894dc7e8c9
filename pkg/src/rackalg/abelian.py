"""Finite abelian groups given as products of cyclic groups.

Elements are integer tuples reduced modulo the cyclic orders.  Group
homomorphisms are integer matrices acting on column vectors; an entry
``a[u][v]`` is the image in the u-th factor of the generator of the
v-th factor, so it must satisfy ``m_u | a[u][v] * m_v``.
"""
from __future__ import annotations

import itertools
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

Matrix = tuple[tuple[int, ...], ...]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


class FinAbGroup:
    """The group Z/m_1 x ... x Z/m_k."""

    def __init__(self, orders: Sequence[int]):
        orders = tuple(int(m) for m in orders)
        if any(m < 1 for m in orders):
            raise ValueError("cyclic orders must be >= 1")
        self.orders = orders
        self._elements: list[tuple[int, ...]] | None = None
        self._index: dict[tuple[int, ...], int] | None = None

    def __repr__(self):
        return f"FinAbGroup({list(self.orders)})"

    def __eq__(self, other):
        return isinstance(other, FinAbGroup) and self.orders == other.orders

    def __hash__(self):
        return hash(self.orders)

    @property
    def rank(self) -> int:
        return len(self.orders)

    @property
    def order(self) -> int:
        return reduce(lambda a, b: a * b, self.orders, 1)

    @property
    def exponent(self) -> int:
        return reduce(_lcm, self.orders, 1)

    def elements(self) -> list[tuple[int, ...]]:
        if self._elements is None:
            self._elements = [tuple(e) for e in itertools.product(*(range(m) for m in self.orders))]
            self._index = {e: i for i, e in enumerate(self._elements)}
        return self._elements

    def index(self, a: Sequence[int]) -> int:
        self.elements()
        return self._index[self.reduce(a)]

    def zero(self) -> tuple[int, ...]:
        return tuple(0 for _ in self.orders)

    def reduce(self, a: Iterable[int] | int) -> tuple[int, ...]:
        if isinstance(a, int):
            a = (a,) + (0,) * (len(self.orders) - 1)
        return tuple(int(x) % m for x, m in zip(a, self.orders))

    def add(self, a, b) -> tuple[int, ...]:
        return tuple((x + y) % m for x, y, m in zip(a, b, self.orders))

    def sub(self, a, b) -> tuple[int, ...]:
        return tuple((x - y) % m for x, y, m in zip(a, b, self.orders))

    def neg(self, a) -> tuple[int, ...]:
        return tuple((-x) % m for x, m in zip(a, self.orders))

    def scale(self, k: int, a) -> tuple[int, ...]:
        return tuple((k * x) % m for x, m in zip(a, self.orders))

    # -- endomorphisms -------------------------------------------------

    def identity(self) -> Matrix:
        k = self.rank
        return tuple(tuple(1 if u == v else 0 for v in range(k)) for u in range(k))

    def zero_map(self) -> Matrix:
        k = self.rank
        return tuple(tuple(0 for _ in range(k)) for _ in range(k))

    def scalar(self, c: int) -> Matrix:
        k = self.rank
        return tuple(tuple(c if u == v else 0 for v in range(k)) for u in range(k))

    def normalize(self, M) -> Matrix:
        """Reduce entries of an endomorphism matrix modulo the target orders."""
        return tuple(tuple(int(x) % self.orders[u] for x in row) for u, row in enumerate(M))

    def is_endomorphism(self, M) -> bool:
        k = self.rank
        if len(M) != k or any(len(row) != k for row in M):
            return False
        return all((M[u][v] * self.orders[v]) % self.orders[u] == 0
                   for u in range(k) for v in range(k))

    def apply(self, M, a) -> tuple[int, ...]:
        k = self.rank
        return tuple(sum(M[u][v] * a[v] for v in range(k)) % self.orders[u] for u in range(k))

    def compose(self, M, N) -> Matrix:
        """Matrix of M o N."""
        k = self.rank
        return self.normalize(
            [[sum(M[u][w] * N[w][v] for w in range(k)) for v in range(k)] for u in range(k)])

    def add_maps(self, M, N) -> Matrix:
        k = self.rank
        return self.normalize([[M[u][v] + N[u][v] for v in range(k)] for u in range(k)])

    def sub_maps(self, M, N) -> Matrix:
        k = self.rank
        return self.normalize([[M[u][v] - N[u][v] for v in range(k)] for u in range(k)])

    def maps_equal(self, M, N) -> bool:
        return self.normalize(M) == self.normalize(N)

    def map_table(self, M) -> list[int]:
        """Images of all elements, as element indices."""
        return [self.index(self.apply(M, a)) for a in self.elements()]

    def is_automorphism(self, M) -> bool:
        if not self.is_endomorphism(M):
            return False
        return len(set(self.map_table(M))) == self.order

    def inverse_map(self, M) -> Matrix:
        """Inverse automorphism, found as a power of M."""
        if not self.is_automorphism(M):
            raise ValueError("not an automorphism")
        ident = self.normalize(self.identity())
        P = self.normalize(M)
        prev = ident
        while P != ident:
            prev = P
            P = self.compose(P, M)
        return prev

    def map_order(self, M) -> int:
        ident = self.normalize(self.identity())
        P, k = self.normalize(M), 1
        while P != ident:
            P = self.compose(P, M)
            k += 1
        return k

    def image(self, M) -> list[tuple[int, ...]]:
        return sorted({self.apply(M, a) for a in self.elements()})

    # -- characters ----------------------------------------------------

    def characters(self) -> list[tuple[int, ...]]:
        """The dual group, identified with A: the tuple c gives
        a -> zeta_e^{sum_u c_u a_u e/m_u} with e the exponent."""
        return self.elements()

    def pairing_exponent(self, c, a) -> int:
        """Exponent k with c(a) = zeta_e^k, e = self.exponent."""
        e = self.exponent
        return sum(cu * au * (e // m) for cu, au, m in zip(c, a, self.orders)) % e

    def character_compose_exponents(self, c, M) -> tuple[int, ...]:
        """Character c o M, returned as a character tuple."""
        # (c o M)(a) = sum_u c_u (M a)_u e/m_u; coefficient of a_v is
        # sum_u c_u M[u][v] e/m_u, which must be read back modulo e/m_v.
        e = self.exponent
        out = []
        for v, mv in enumerate(self.orders):
            s = sum(c[u] * M[u][v] * (e // self.orders[u]) for u in range(self.rank))
            out.append((s // (e // mv)) % mv)
        return tuple(out)


def cyclic(m: int) -> FinAbGroup:
    return FinAbGroup((m,))
