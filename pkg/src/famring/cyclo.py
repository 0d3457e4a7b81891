"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are polynomials in zeta_N reduced modulo the N-th cyclotomic
polynomial, so two elements are equal iff their coefficient tuples are.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@lru_cache(maxsize=None)
def totient(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # integer polynomials, lowest degree first, den monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        q = num[i + len(den) - 1]
        out[i] = q
        if q:
            for j, d in enumerate(den):
                num[i + j] -= q * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first."""
    p = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            p = _poly_divexact(p, list(cyclotomic_poly(d)))
    return tuple(p)


def _reduce(coeffs: Sequence[Scalar], n: int) -> tuple[Fraction, ...]:
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    c = [Fraction(x) for x in coeffs]
    for i in range(len(c) - 1, deg - 1, -1):
        q = c[i]
        if q:
            c[i] = Fraction(0)
            base = i - deg
            for j in range(deg):
                if phi[j]:
                    c[base + j] -= q * phi[j]
    c = c[:deg] + [Fraction(0)] * (deg - len(c))
    return tuple(c)


class CycloNumber:
    """An element of Q(zeta_N) in canonical (reduced power-basis) form."""

    __slots__ = ("conductor", "coeffs", "_hash")

    def __init__(self, conductor: int, coeffs: Iterable[Scalar] = (), *, reduced: bool = False):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        self.conductor = conductor
        self.coeffs = tuple(coeffs) if reduced else _reduce(list(coeffs), conductor)
        self._hash = None

    # -- constructors ----------------------------------------------------

    @classmethod
    def rational(cls, value: Scalar, conductor: int = 1) -> "CycloNumber":
        return cls(conductor, [value])

    @classmethod
    def zeta(cls, conductor: int, k: int = 1) -> "CycloNumber":
        k %= conductor
        c = [0] * (k + 1)
        c[k] = 1
        return cls(conductor, c)

    @classmethod
    def zero(cls, conductor: int = 1) -> "CycloNumber":
        return cls(conductor, ())

    @classmethod
    def one(cls, conductor: int = 1) -> "CycloNumber":
        return cls(conductor, [1])

    # -- conversions -----------------------------------------------------

    def embed(self, M: int) -> "CycloNumber":
        """Image under zeta_N -> zeta_M^(M/N); requires N | M."""
        N = self.conductor
        if M % N:
            raise ValueError(f"conductor {N} does not divide {M}")
        if M == N:
            return self
        step = M // N
        c = [Fraction(0)] * (step * (len(self.coeffs) - 1) + 1) if self.coeffs else []
        for i, a in enumerate(self.coeffs):
            if a:
                c[i * step] = a
        return CycloNumber(M, c)

    def _aligned(self, other) -> tuple["CycloNumber", "CycloNumber"]:
        if not isinstance(other, CycloNumber):
            other = CycloNumber.rational(other, self.conductor)
        if other.conductor == self.conductor:
            return self, other
        M = lcm(self.conductor, other.conductor)
        return self.embed(M), other.embed(M)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def to_int(self) -> int:
        q = self.to_rational()
        if q.denominator != 1:
            raise ValueError(f"{q} is not an integer")
        return q.numerator

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        a, b = self._aligned(other)
        return CycloNumber(a.conductor, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)), reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber(self.conductor, tuple(-x for x in self.coeffs), reduced=True)

    def __sub__(self, other):
        return self + (-other if isinstance(other, CycloNumber) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, CycloNumber):
            q = Fraction(other)
            return CycloNumber(self.conductor, tuple(x * q for x in self.coeffs), reduced=True)
        a, b = self._aligned(other)
        ac = [(i, x) for i, x in enumerate(a.coeffs) if x]
        bc = [(j, y) for j, y in enumerate(b.coeffs) if y]
        prod = [Fraction(0)] * (2 * len(a.coeffs))
        for i, x in ac:
            for j, y in bc:
                prod[i + j] += x * y
        return CycloNumber(a.conductor, prod)

    __rmul__ = __mul__

    def inverse(self) -> "CycloNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        n = self.conductor
        # extended Euclid in Q[x]; Phi_n is irreducible so the gcd is a constant
        r0 = [Fraction(c) for c in cyclotomic_poly(n)]
        r1 = _trim(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _polydivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _polysub(s0, _polymul(q, s1))
        return CycloNumber(n, [x / r1[0] for x in s1])

    def __truediv__(self, other):
        if not isinstance(other, CycloNumber):
            q = Fraction(other)
            return CycloNumber(self.conductor, tuple(x / q for x in self.coeffs), reduced=True)
        a, b = self._aligned(other)
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloNumber.one(self.conductor)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def galois(self, k: int) -> "CycloNumber":
        """Apply the field automorphism zeta -> zeta^k (gcd(k, N) = 1)."""
        n = self.conductor
        if gcd(k, n) != 1:
            raise ValueError(f"{k} is not a unit modulo {n}")
        k %= n
        c = [Fraction(0)] * n
        for i, a in enumerate(self.coeffs):
            if a:
                c[(i * k) % n] += a
        return CycloNumber(n, c)

    def conj(self) -> "CycloNumber":
        return self.galois(-1)

    # -- comparison ------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, CycloNumber):
            try:
                other = CycloNumber.rational(Fraction(other), self.conductor)
            except (TypeError, ValueError):
                return NotImplemented
        a, b = self._aligned(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self._hash is None:
            # normalized trace does not depend on the conductor used
            if self.is_rational():
                self._hash = hash(self.to_rational())
            else:
                self._hash = hash(self.normalized_trace())
        return self._hash

    def normalized_trace(self) -> Fraction:
        """Tr(x) / [Q(zeta_N):Q], which is independent of the conductor N."""
        n = self.conductor
        total = Fraction(0)
        for i, a in enumerate(self.coeffs):
            if a:
                m = n // gcd(i, n)
                total += a * Fraction(mobius(m), totient(m))
        return total

    def key(self) -> tuple:
        """Total order key used for deterministic sorting."""
        return tuple(self.coeffs)

    def __repr__(self):
        if self.is_rational():
            return str(self.to_rational())
        terms = []
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            mono = "1" if i == 0 else (f"z{self.conductor}" if i == 1 else f"z{self.conductor}^{i}")
            if i and a == 1:
                terms.append(mono)
            elif i and a == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{a}" if i == 0 else f"{a}*{mono}")
        return " + ".join(terms).replace("+ -", "- ") or "0"

    def to_json(self) -> list:
        return [str(x) if x.denominator != 1 else x.numerator for x in self.coeffs]


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    result, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    return -result if m > 1 else result


def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _polymul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _polysub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _trim([Fraction(x) for x in out])


def _polydivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = _trim(list(a))
    b = _trim(list(b))
    if len(a) < len(b):
        return [], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1] / lead
        q[i] = c
        if c:
            for j, y in enumerate(b):
                a[i + j] -= c * y
    return _trim(q), _trim(a[: len(b) - 1])
