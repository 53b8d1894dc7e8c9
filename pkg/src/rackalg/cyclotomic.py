"""Exact arithmetic in the cyclotomic field Q(zeta_N).

Elements are rational coefficient vectors on the power basis
1, z, ..., z^(phi(N)-1), reduced modulo the N-th cyclotomic polynomial.
Rationals (conductor 1) interoperate with every conductor; mixing two
different conductors > 2 lifts both to their lcm.
"""
from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    # x^n - 1 divided by Phi_d for every proper divisor d
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _poly_exact_div(num, list(cyclotomic_poly(d)))
    return tuple(num)


def _poly_exact_div(a: list[int], b: list[int]) -> list[int]:
    a = a[:]
    q = [0] * (len(a) - len(b) + 1)
    lead = b[-1]
    for k in range(len(q) - 1, -1, -1):
        c = a[k + len(b) - 1] // lead
        q[k] = c
        for i, bi in enumerate(b):
            a[k + i] -= c * bi
    assert all(x == 0 for x in a), "non-exact polynomial division"
    return q


def euler_phi(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


def _lcm(a, b):
    return a * b // gcd(a, b)


class CycScalar:
    """An element of Q(zeta_N) with fixed conductor N."""

    __slots__ = ("N", "c")

    def __init__(self, N: int, coeffs):
        self.N = int(N)
        d = euler_phi(self.N)
        v = [Fraction(x) for x in coeffs]
        self.c = tuple(_reduce(v, self.N)) if len(v) > d else tuple(v + [Fraction(0)] * (d - len(v)))

    @classmethod
    def _make(cls, N, c):
        s = object.__new__(cls)
        s.N = N
        s.c = c
        return s

    # -- constructors --------------------------------------------------

    @classmethod
    def rational(cls, x, N: int = 1) -> "CycScalar":
        d = euler_phi(N)
        return cls._make(N, (Fraction(x),) + (Fraction(0),) * (d - 1))

    @classmethod
    def zeta(cls, N: int, k: int = 1) -> "CycScalar":
        """zeta_N ** k, with zeta_N = exp(2 pi i / N)."""
        k %= N
        v = [Fraction(0)] * (k + 1)
        v[k] = Fraction(1)
        return cls._make(N, tuple(_reduce(v, N)))

    # -- structure -----------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.c)

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational number")
        return self.c[0]

    def lift(self, M: int) -> "CycScalar":
        """The same element seen in Q(zeta_M), N | M."""
        if M == self.N:
            return self
        if M % self.N:
            raise ValueError(f"conductor {self.N} does not divide {M}")
        step = M // self.N
        v = [Fraction(0)] * ((len(self.c) - 1) * step + 1)
        for i, x in enumerate(self.c):
            v[i * step] = x
        return CycScalar(M, v)

    def _coerce(self, other):
        if isinstance(other, CycScalar):
            if other.N == self.N:
                return self, other
            if other.is_rational():
                return self, CycScalar.rational(other.c[0], self.N)
            if self.is_rational():
                return CycScalar.rational(self.c[0], other.N), other
            M = _lcm(self.N, other.N)
            return self.lift(M), other.lift(M)
        if isinstance(other, (int, Fraction)):
            return self, CycScalar.rational(other, self.N)
        return NotImplemented, NotImplemented

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return CycScalar._make(a.N, tuple(x + y for x, y in zip(a.c, b.c)))

    __radd__ = __add__

    def __neg__(self):
        return CycScalar._make(self.N, tuple(-x for x in self.c))

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return CycScalar._make(a.N, tuple(x - y for x, y in zip(a.c, b.c)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycScalar._make(self.N, tuple(x * other for x in self.c))
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        if b.is_rational():
            r = b.c[0]
            return CycScalar._make(a.N, tuple(x * r for x in a.c))
        if a.is_rational():
            r = a.c[0]
            return CycScalar._make(a.N, tuple(x * r for x in b.c))
        prod = [Fraction(0)] * (len(a.c) + len(b.c) - 1)
        for i, x in enumerate(a.c):
            if x:
                for j, y in enumerate(b.c):
                    if y:
                        prod[i + j] += x * y
        return CycScalar._make(a.N, tuple(_reduce(prod, a.N)))

    __rmul__ = __mul__

    def inverse(self) -> "CycScalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return CycScalar.rational(1 / self.c[0], self.N)
        # extended Euclid in Q[x] against Phi_N
        phi = [Fraction(x) for x in cyclotomic_poly(self.N)]
        a = _trim(list(self.c))
        r0, r1 = phi, a
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1 or r1[0] != 0:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _trim(_poly_sub(s0, _poly_mul(q, s1)))
            if len(r1) == 1 and r1[0] == 0:
                break
        # r0 is a nonzero constant gcd
        g = r0[0]
        inv = [x / g for x in s0]
        return CycScalar(self.N, _reduce(inv, self.N) if len(inv) > euler_phi(self.N) else inv)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycScalar._make(self.N, tuple(x / other for x in self.c))
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycScalar.rational(1, self.N)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "CycScalar":
        """Complex conjugation, z -> z^-1."""
        out = CycScalar.rational(0, self.N)
        for i, x in enumerate(self.c):
            if x:
                out = out + CycScalar.zeta(self.N, -i) * x
        return out

    # -- comparison ----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.c[0] == other
        if isinstance(other, CycScalar):
            if self.N == other.N:
                return self.c == other.c
            a, b = self._coerce(other)
            return a.c == b.c
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.c[0])
        return hash((self.N, self.c))

    def __bool__(self):
        return not self.is_zero()

    def __complex__(self):
        z = cmath.exp(2j * cmath.pi / self.N)
        return sum(complex(float(x)) * z ** i for i, x in enumerate(self.c))

    def __repr__(self):
        if self.is_rational():
            return f"CycScalar({self.c[0]})"
        terms = []
        for i, x in enumerate(self.c):
            if x:
                terms.append(f"{x}*z^{i}" if i else f"{x}")
        return f"CycScalar[N={self.N}](" + " + ".join(terms) + ")"

    def to_json(self):
        if self.is_rational():
            x = self.c[0]
            return int(x) if x.denominator == 1 else str(x)
        return {"conductor": self.N, "coeffs": [str(x) for x in self.c]}


def _reduce(v: list, N: int) -> list:
    phi = cyclotomic_poly(N)
    d = len(phi) - 1
    v = list(v)
    for k in range(len(v) - 1, d - 1, -1):
        c = v[k]
        if c:
            # Phi_N is monic
            for i in range(d + 1):
                v[k - d + i] -= c * phi[i]
    out = v[:d] + [Fraction(0)] * max(0, d - len(v))
    return out


def _trim(p):
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]


def _poly_divmod(a, b):
    a = _trim([Fraction(x) for x in a])
    b = _trim([Fraction(x) for x in b])
    if len(a) < len(b):
        return [Fraction(0)], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    r = a[:]
    for k in range(len(q) - 1, -1, -1):
        c = r[k + len(b) - 1] / b[-1]
        q[k] = c
        for i, bi in enumerate(b):
            r[k + i] -= c * bi
    r = _trim(r[:len(b) - 1] or [Fraction(0)])
    return q, r


def root_of_unity(N: int, k: int) -> CycScalar:
    return CycScalar.zeta(N, k)


def as_scalar(x, N: int = 1):
    """Coerce int/Fraction/CycScalar to CycScalar."""
    if isinstance(x, CycScalar):
        return x
    return CycScalar.rational(x, N)


def simplify(x):
    """Return a Fraction when x is rational, else x unchanged."""
    if isinstance(x, CycScalar) and x.is_rational():
        return x.c[0]
    return x
