"""Spectra of irreducible representations at torus elements and one-parameter subgroups.

A :class:`TorusElement` assigns a rational angle to each fundamental weight;
the weight with Dynkin labels ``m`` then acts by ``exp(i*pi*sum(m_i t_i))``.
A :class:`Cocharacter` assigns integers instead, giving integer exponents.
The eigenvalue-set predicates (no-cycle, geometric progression, sumset) work
on plain sets of :class:`~neigen.rou.RootOfUnity`.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .rootsys import RootSystem, Weight, build, weight_set, weyl_orbit
from .rou import DomainError, RootOfUnity, rou_mul


@dataclass(frozen=True)
class TorusElement:
    system: RootSystem
    t: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        t = tuple(Fraction(x) for x in self.t)
        if len(t) != self.system.rank:
            raise DomainError(f"torus element has {len(t)} entries, expected {self.system.rank}")
        object.__setattr__(self, "t", t)


@dataclass(frozen=True)
class Cocharacter:
    system: RootSystem
    x: tuple[int, ...]

    def __post_init__(self) -> None:
        x = tuple(int(v) for v in self.x)
        if len(x) != self.system.rank:
            raise DomainError(f"cocharacter has {len(x)} entries, expected {self.system.rank}")
        object.__setattr__(self, "x", x)

    def pair(self, mu: Sequence[int]) -> int:
        return sum(m * v for m, v in zip(mu, self.x))

    def simple_root_values(self) -> tuple[int, ...]:
        """Exponents of the simple roots; all nonnegative iff x is dominant."""
        a = self.system.cartan
        r = self.system.rank
        return tuple(sum(a[k][j] * self.x[k] for k in range(r)) for j in range(r))

    def reflect(self, j: int) -> "Cocharacter":
        """Dual action of the simple reflection s_j (0-based)."""
        x = list(self.x)
        x[j] -= self.simple_root_values()[j]
        return Cocharacter(self.system, tuple(x))

    def at_angle(self, theta: Fraction) -> TorusElement:
        return TorusElement(self.system, tuple(theta * v for v in self.x))


def eval_weight(t: TorusElement, mu: Sequence[int]) -> RootOfUnity:
    if len(mu) != len(t.t):
        raise DomainError("rank mismatch between weight and torus element")
    return RootOfUnity.from_angle(sum((m * a for m, a in zip(mu, t.t)), Fraction(0)))


def spectrum(rs: RootSystem, lam: Sequence[int], t: TorusElement) -> frozenset[RootOfUnity]:
    if t.system != rs:
        raise DomainError("torus element belongs to another root system")
    return frozenset(eval_weight(t, mu) for mu in weight_set(rs, lam))


def exponent_spectrum(rs: RootSystem, lam: Sequence[int], x: Cocharacter) -> frozenset[int]:
    if x.system != rs:
        raise DomainError("cocharacter belongs to another root system")
    return frozenset(x.pair(mu) for mu in weight_set(rs, lam))


def su_cochar(e: Sequence[int]) -> Cocharacter:
    """Cocharacter of A_{n-1} acting on the standard basis vector j with exponent e_j.

    When ``n`` divides ``sum(e)`` the exponents are ``e_j - sum(e)/n``, a common
    shift of ``e``.  Otherwise the affine image ``n*e_j - sum(e)`` is used, which
    keeps integrality and preserves the count of distinct values, progression
    structure and the no-cycle status at generic angles.
    """
    e = [int(v) for v in e]
    n = len(e)
    if n < 2:
        raise DomainError("need at least two diagonal exponents")
    s = sum(e)
    if s % n:
        e = [n * v - s for v in e]
        s = 0
    shift = s // n
    partial = list(itertools.accumulate(v - shift for v in e))
    return Cocharacter(build("A", n - 1), tuple(partial[:-1]))


def _coset_in(u: RootOfUnity, p: int, xs: frozenset[RootOfUnity]) -> bool:
    step = RootOfUnity(2, p)
    v = u
    for _ in range(p - 1):
        v = rou_mul(v, step)
        if v not in xs:
            return False
    return True


def _primes_upto(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if all(p % d for d in range(2, int(p**0.5) + 1))]


def no_cycle(xs: Iterable[RootOfUnity]) -> bool:
    """True if the set contains no coset of a nontrivial finite subgroup of the circle.

    It suffices to test subgroups of prime order p <= |X|, since every cyclic
    group of order n contains one of order p for each prime p dividing n.
    """
    xs = frozenset(xs)
    if not xs:
        raise DomainError("empty eigenvalue set")
    for p in _primes_upto(len(xs)):
        if any(_coset_in(u, p, xs) for u in xs):
            return False
    return True


def is_geom_prog(xs: Iterable[RootOfUnity]) -> bool:
    xs = frozenset(xs)
    if len(xs) != 3:
        raise DomainError("geometric progression test needs exactly three values")
    for a, b, c in itertools.permutations(xs):
        if rou_mul(a, b) == rou_mul(c, c):
            return True
    return False


def sumset(x1: Iterable[RootOfUnity], x2: Iterable[RootOfUnity]) -> frozenset[RootOfUnity]:
    return frozenset(rou_mul(a, b) for a in x1 for b in x2)


@dataclass(frozen=True)
class NEigenReport:
    count: int
    no_cycle_ok: bool
    geom_prog: Optional[bool] = None

    def satisfied(self, n: int) -> bool:
        return self.count == n and self.no_cycle_ok

    def to_json(self) -> dict:
        out = {"count": self.count, "noCycle": self.no_cycle_ok}
        if self.geom_prog is not None:
            out["geomProg"] = self.geom_prog
        return out


def n_eigen_report(rs: RootSystem, lam: Sequence[int], t: TorusElement) -> NEigenReport:
    spec = spectrum(rs, lam, t)
    gp = is_geom_prog(spec) if len(spec) == 3 else None
    return NEigenReport(len(spec), no_cycle(spec), gp)


def format_spectrum(xs: Iterable[RootOfUnity]) -> list[str]:
    return [str(x) for x in sorted(xs, key=lambda r: r.angle)]


def dual_weight(rs: RootSystem, lam: Weight) -> Weight:
    """Highest weight of the dual module, -w0(lam), via the lowest weight of the orbit."""
    low = next(mu for mu in weyl_orbit(rs, lam) if all(v <= 0 for v in mu))
    return tuple(-v for v in low)


def class_order(rs: RootSystem, lam: Sequence[int]) -> int:
    """Smallest k >= 1 with k*lam in the root lattice."""
    k = 1
    for c in rs.root_coords(tuple(lam)):
        k = math.lcm(k, c.denominator)
    return k


@dataclass(frozen=True)
class Coweight:
    """Cocharacter of the adjoint torus, in fundamental-coweight coordinates.

    ``y_j`` is the exponent of the simple root ``alpha_j``, so ``y`` is dominant
    exactly when every entry is nonnegative.  On a weight ``mu`` the pairing is
    the rational number ``sum_j y_j c_j`` with ``c`` the simple-root coordinates
    of ``mu``; :func:`coweight_exponents` clears denominators by the order of
    the highest weight modulo the root lattice.
    """

    system: RootSystem
    y: tuple[int, ...]

    def __post_init__(self) -> None:
        y = tuple(int(v) for v in self.y)
        if len(y) != self.system.rank:
            raise DomainError(f"coweight has {len(y)} entries, expected {self.system.rank}")
        object.__setattr__(self, "y", y)

    def is_dominant(self) -> bool:
        return all(v >= 0 for v in self.y)

    def pair(self, mu: Sequence[int]) -> Fraction:
        return sum((c * v for c, v in zip(self.system.root_coords(tuple(mu)), self.y)), Fraction(0))


def coweight_exponents(rs: RootSystem, lam: Sequence[int], y: Coweight) -> frozenset[int]:
    k = class_order(rs, lam)
    out = set()
    for mu in weight_set(rs, lam):
        v = k * y.pair(mu)
        assert v.denominator == 1
        out.add(int(v))
    return frozenset(out)
