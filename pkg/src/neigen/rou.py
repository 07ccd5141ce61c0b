"""Roots of unity and exact arithmetic in cyclotomic fields.

A :class:`RootOfUnity` stores an angle ``num/den`` and stands for
``exp(i*pi*num/den)``; angles live in ``[0, 2)``.  A :class:`Cyclotomic`
is an element of ``Q(zeta_M)`` with ``zeta_M = exp(2*pi*i/M)``, kept as
rational coefficients on the power basis reduced modulo the M-th
cyclotomic polynomial, so equal values have equal coefficient vectors.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence


class DomainError(ValueError):
    """Raised when an input is outside the domain of an operation."""


@dataclass(frozen=True, order=True)
class RootOfUnity:
    num: int
    den: int

    def __post_init__(self) -> None:
        if self.den <= 0:
            raise DomainError("denominator must be positive")
        g = math.gcd(self.num, self.den)
        num, den = self.num // g, self.den // g
        num %= 2 * den
        if num == 0:
            den = 1
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def from_angle(cls, t: Fraction | int) -> "RootOfUnity":
        t = Fraction(t)
        return cls(t.numerator, t.denominator)

    @property
    def angle(self) -> Fraction:
        return Fraction(self.num, self.den)

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        return rou_mul(self, other)

    def __pow__(self, k: int) -> "RootOfUnity":
        return rou_pow(self, k)

    def inverse(self) -> "RootOfUnity":
        return rou_pow(self, -1)

    def order(self) -> int:
        return rou_order(self)

    def to_complex(self) -> complex:
        return cmath.exp(1j * math.pi * self.num / self.den)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"

    @classmethod
    def parse(cls, text: str) -> "RootOfUnity":
        try:
            return cls.from_angle(Fraction(text.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"bad angle {text!r}") from exc


def rou_make(num: int, den: int) -> RootOfUnity:
    return RootOfUnity(num, den)


def rou_mul(x: RootOfUnity, y: RootOfUnity) -> RootOfUnity:
    return RootOfUnity.from_angle(x.angle + y.angle)


def rou_pow(x: RootOfUnity, k: int) -> RootOfUnity:
    return RootOfUnity.from_angle(x.angle * k)


def rou_order(x: RootOfUnity) -> int:
    # k*num/den is even  <=>  2*den | k*num, and gcd(num, den) = 1
    return 2 * x.den // math.gcd(2 * x.den, x.num) if x.num else 1


# polynomials over Q: lists of Fractions, lowest degree first

def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim(out)


def _poly_divmod(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    while len(a) >= len(b):
        c = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = c
        for j, bj in enumerate(b):
            a[shift + j] -= c * bj
        _trim(a)
    return _trim(q), a


def _poly_sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, v in enumerate(a):
        out[i] += v
    for i, v in enumerate(b):
        out[i] -= v
    return _trim(out)


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Integer coefficients of the m-th cyclotomic polynomial, low degree first."""
    if m < 1:
        raise DomainError("conductor must be positive")
    p = [Fraction(-1)] + [Fraction(0)] * (m - 1) + [Fraction(1)]
    for d in range(1, m):
        if m % d == 0:
            p, r = _poly_divmod(p, [Fraction(c) for c in cyclotomic_poly(d)])
            assert not r
    return tuple(int(c) for c in p)


def euler_phi(m: int) -> int:
    return len(cyclotomic_poly(m)) - 1


def _reduce(coeffs: Iterable[Fraction], m: int) -> tuple[Fraction, ...]:
    phi = cyclotomic_poly(m)
    n = len(phi) - 1
    c = [Fraction(v) for v in coeffs]
    # phi is monic: fold high powers down
    for k in range(len(c) - 1, n - 1, -1):
        v = c[k]
        if v:
            c[k] = Fraction(0)
            for j in range(n):
                c[k - n + j] -= v * phi[j]
    c = c[:n] + [Fraction(0)] * (n - len(c))
    return tuple(c)


class Cyclotomic:
    """Element of the M-th cyclotomic field."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs: Iterable[Fraction | int] = ()):
        self.conductor = conductor
        self.coeffs = _reduce(coeffs, conductor)

    @classmethod
    def zero(cls, m: int) -> "Cyclotomic":
        return cls(m)

    @classmethod
    def one(cls, m: int) -> "Cyclotomic":
        return cls(m, [1])

    @classmethod
    def scalar(cls, m: int, value: Fraction | int) -> "Cyclotomic":
        return cls(m, [Fraction(value)])

    @classmethod
    def zeta_power(cls, m: int, k: int) -> "Cyclotomic":
        k %= m
        return cls(m, [0] * k + [1])

    def _coerce(self, other) -> "Cyclotomic":
        if isinstance(other, Cyclotomic):
            if other.conductor != self.conductor:
                raise DomainError("conductor mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.scalar(self.conductor, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclotomic(self.conductor, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic(self.conductor, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclotomic(self.conductor, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclotomic(self.conductor, _poly_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        # extended Euclid: find s with s*a = 1 mod phi
        r0 = [Fraction(c) for c in cyclotomic_poly(self.conductor)]
        r1 = _trim(list(self.coeffs))
        s0: list[Fraction] = []
        s1: list[Fraction] = [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        c = r1[0]
        return Cyclotomic(self.conductor, [v / c for v in s1])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int) -> "Cyclotomic":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = Cyclotomic.one(self.conductor)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "Cyclotomic":
        m = self.conductor
        out = [Fraction(0)] * m
        for k, c in enumerate(self.coeffs):
            out[(-k) % m] += c
        return Cyclotomic(m, out)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.conductor, self.coeffs))

    def to_complex(self) -> complex:
        z = cmath.exp(2j * math.pi / self.conductor)
        return sum((float(c) * z**k for k, c in enumerate(self.coeffs)), 0j)

    def to_json(self) -> dict:
        return {"conductor": self.conductor, "coeffs": [str(c) for c in self.coeffs]}

    def __repr__(self) -> str:
        terms = [f"{c}*z^{k}" for k, c in enumerate(self.coeffs) if c]
        return f"Cyclotomic({self.conductor}: {' + '.join(terms) or '0'})"


def cyc_from_rou(x: RootOfUnity, m: int) -> Cyclotomic:
    """Embed a root of unity into ``Q(zeta_m)``; its order must divide ``m``."""
    if m % rou_order(x):
        raise DomainError(f"order {rou_order(x)} does not divide conductor {m}")
    # exp(i*pi*num/den) = zeta_m ** (num*m/(2*den))
    return Cyclotomic.zeta_power(m, x.num * m // (2 * x.den))
