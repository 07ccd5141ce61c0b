"""Root systems in Bourbaki numbering, and Dynkin-label weight combinatorics.

Conventions
-----------
* ``cartan[i][j] = <alpha_i^vee, alpha_j> = 2(alpha_i, alpha_j)/(alpha_i, alpha_i)``.
* Short roots have squared length 2, so ``(alpha_i, alpha_i) = 2*d_i`` with
  ``d_i`` in ``{1, 2, 3}``.
* Roots are integer vectors in simple-root coordinates; weights are tuples of
  Dynkin labels.  Node indices in the public API are 1-based, as in the usual
  Dynkin diagrams; tuple positions are 0-based.

Node diagrams::

    A_r  1 - 2 - ... - r
    B_r  1 - 2 - ... - (r-1) => r          (r short)
    C_r  1 - 2 - ... - (r-1) <= r          (r long)
    D_r  1 - 2 - ... - (r-2) < (r-1), r
    E_r  1 - 3 - 4 - 5 - ... - r, with 2 attached to 4
    F4   1 - 2 => 3 - 4                    (1, 2 long)
    G2   1 <= 2                            (1 short)
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Iterable, Sequence

from .rou import DomainError

Weight = tuple[int, ...]
Root = tuple[int, ...]

_ADMISSIBLE = {
    "A": lambda r: r >= 1,
    "B": lambda r: r >= 2,
    "C": lambda r: r >= 2,
    "D": lambda r: r >= 4,
    "E": lambda r: r in (6, 7, 8),
    "F": lambda r: r == 4,
    "G": lambda r: r == 2,
}


def _cartan(series: str, r: int) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(r)] for i in range(r)]

    def link(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i - 1][j - 1] = aij
        a[j - 1][i - 1] = aji

    if series in "ABC":
        for i in range(1, r):
            link(i, i + 1)
        if series == "B":
            link(r - 1, r, -1, -2)
        elif series == "C":
            link(r - 1, r, -2, -1)
    elif series == "D":
        for i in range(1, r - 1):
            link(i, i + 1)
        link(r - 2, r)
    elif series == "E":
        link(1, 3)
        link(2, 4)
        for i in range(3, r):
            link(i, i + 1)
    elif series == "F":
        link(1, 2)
        link(2, 3, -1, -2)
        link(3, 4)
    elif series == "G":
        link(1, 2, -3, -1)
    return a


def _symmetrizer(a: list[list[int]]) -> tuple[int, ...]:
    r = len(a)
    d: list[Fraction | None] = [None] * r
    d[0] = Fraction(1)
    todo = [0]
    while todo:
        i = todo.pop()
        for j in range(r):
            if a[i][j] and d[j] is None:
                d[j] = d[i] * a[i][j] / a[j][i]
                todo.append(j)
    low = min(d)
    return tuple(int(x / low) for x in d)


def _inverse(m: Sequence[Sequence[Fraction | int]]) -> list[list[Fraction]]:
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


@dataclass(frozen=True)
class RootSystem:
    series: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]
    positive_roots: tuple[Root, ...]
    highest_root: Root
    highest_short_root: Root
    _gram_inv: tuple[tuple[Fraction, ...], ...] = field(repr=False, compare=False)
    _cartan_inv: tuple[tuple[Fraction, ...], ...] = field(repr=False, compare=False)

    @property
    def name(self) -> str:
        return f"{self.series}{self.rank}"

    @property
    def simply_laced(self) -> bool:
        return self.series in "ADE"

    def zero(self) -> Weight:
        return (0,) * self.rank

    def fundamental(self, i: int) -> Weight:
        """The i-th fundamental weight, 1-based."""
        if not 1 <= i <= self.rank:
            raise DomainError(f"node {i} out of range for {self.name}")
        return tuple(int(j == i - 1) for j in range(self.rank))

    def rho(self) -> Weight:
        return (1,) * self.rank

    def root_labels(self, root: Root) -> Weight:
        """Dynkin labels of a root given in simple-root coordinates."""
        return tuple(sum(root[j] * self.cartan[i][j] for j in range(self.rank))
                     for i in range(self.rank))

    def root_coords(self, w: Weight) -> tuple[Fraction, ...]:
        """Simple-root coordinates of a weight (rational in general)."""
        return tuple(sum(self._cartan_inv[i][j] * w[j] for j in range(self.rank))
                     for i in range(self.rank))

    def root_norm(self, root: Root) -> int:
        r = self.rank
        return sum(root[i] * root[j] * self.symmetrizer[i] * self.cartan[i][j]
                   for i in range(r) for j in range(r))

    def is_dominant(self, w: Weight) -> bool:
        return all(x >= 0 for x in w)

    def reflect(self, w: Weight, i: int) -> Weight:
        """Simple reflection s_i (0-based) acting on Dynkin labels."""
        a = w[i]
        if not a:
            return w
        return tuple(w[k] - a * self.cartan[k][i] for k in range(self.rank))

    def dominates(self, lam: Weight, mu: Weight) -> bool:
        """True if lam - mu is a nonnegative integer combination of simple roots."""
        diff = self.root_coords(tuple(x - y for x, y in zip(lam, mu)))
        return all(c >= 0 and c.denominator == 1 for c in diff)

    def check_weight(self, w: Sequence[int]) -> Weight:
        w = tuple(int(x) for x in w)
        if len(w) != self.rank:
            raise DomainError(f"weight {w} has length {len(w)}, expected {self.rank}")
        return w


def _positive_roots(a: list[list[int]]) -> list[Root]:
    r = len(a)
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(r):
                pair = sum(beta[j] * a[i][j] for j in range(r))
                # p = how far the i-string extends downward from beta
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                if p - pair > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(roots, key=lambda x: (sum(x), x))


@lru_cache(maxsize=None)
def build(series: str, rank: int) -> RootSystem:
    series = series.upper()
    ok = _ADMISSIBLE.get(series)
    if ok is None or not ok(rank):
        raise DomainError(f"unsupported root system {series}{rank}")
    a = _cartan(series, rank)
    d = _symmetrizer(a)
    pos = _positive_roots(a)
    gram = [[d[i] * a[i][j] for j in range(rank)] for i in range(rank)]
    norm = lambda b: sum(b[i] * b[j] * gram[i][j] for i in range(rank) for j in range(rank))
    theta = max(pos, key=sum)
    short = [b for b in pos if norm(b) == 2]
    gamma = max(short, key=sum)
    return RootSystem(
        series=series,
        rank=rank,
        cartan=tuple(tuple(row) for row in a),
        symmetrizer=d,
        positive_roots=tuple(pos),
        highest_root=theta,
        highest_short_root=gamma,
        _gram_inv=tuple(tuple(row) for row in _inverse(gram)),
        _cartan_inv=tuple(tuple(row) for row in _inverse(a)),
    )


def parse_system(text: str) -> RootSystem:
    """Parse names such as ``"B3"`` or ``"E6"``."""
    text = text.strip()
    try:
        return build(text[0], int(text[1:]))
    except (IndexError, ValueError) as exc:
        if isinstance(exc, DomainError):
            raise
        raise DomainError(f"bad root system name {text!r}") from exc


def parse_weight(text: str) -> Weight:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise DomainError(f"bad weight {text!r}") from exc


def format_weight(w: Iterable[int]) -> str:
    return ",".join(str(x) for x in w)


def string_bounds(rs: RootSystem) -> tuple[int, ...]:
    """Pairings of each fundamental weight with the coroot of the highest short root."""
    g = rs.highest_short_root
    return tuple(g[i] * rs.symmetrizer[i] for i in range(rs.rank))


def inner(rs: RootSystem, mu: Sequence[int], nu: Sequence[int]) -> Fraction:
    """Invariant form on weights; short roots have squared length 2."""
    d = rs.symmetrizer
    r = rs.rank
    u = [d[i] * mu[i] for i in range(r)]
    v = [d[i] * nu[i] for i in range(r)]
    return sum((u[i] * rs._gram_inv[i][j] * v[j] for i in range(r) for j in range(r)),
               Fraction(0))


def _with_root(rs: RootSystem, mu: Sequence[int], alpha: Root) -> Fraction:
    return Fraction(sum(alpha[j] * rs.symmetrizer[j] * mu[j] for j in range(rs.rank)))


def pairing(rs: RootSystem, mu: Sequence[int], alpha: Sequence[int]) -> int:
    """<mu, alpha> = 2(mu, alpha)/(alpha, alpha) for a root alpha in simple-root coordinates."""
    alpha = tuple(alpha)
    neg = tuple(-x for x in alpha)
    if alpha not in rs.positive_roots and neg not in rs.positive_roots:
        raise DomainError(f"{alpha} is not a root of {rs.name}")
    val = 2 * _with_root(rs, mu, alpha) / rs.root_norm(alpha)
    assert val.denominator == 1
    return int(val)


def weyl_orbit(rs: RootSystem, w: Sequence[int]) -> frozenset[Weight]:
    w = rs.check_weight(w)
    seen = {w}
    queue = deque([w])
    while queue:
        x = queue.popleft()
        for i in range(rs.rank):
            y = rs.reflect(x, i)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def dominant_weights(rs: RootSystem, lam: Sequence[int]) -> frozenset[Weight]:
    """Dominant weights mu with lam - mu in the positive root cone."""
    lam = rs.check_weight(lam)
    if not rs.is_dominant(lam):
        raise DomainError(f"{lam} is not dominant")
    pos_labels = [rs.root_labels(b) for b in rs.positive_roots]
    seen = {lam}
    queue = deque([lam])
    while queue:
        mu = queue.popleft()
        for b in pos_labels:
            nu = tuple(x - y for x, y in zip(mu, b))
            if nu not in seen and all(x >= 0 for x in nu):
                seen.add(nu)
                queue.append(nu)
    return frozenset(seen)


def weight_set(rs: RootSystem, lam: Sequence[int]) -> frozenset[Weight]:
    """Weights of the irreducible module with highest weight lam (multiplicities dropped)."""
    return _weight_set(rs, rs.check_weight(lam))


@lru_cache(maxsize=256)
def _weight_set(rs: RootSystem, lam: Weight) -> frozenset[Weight]:
    out: set[Weight] = set()
    for mu in dominant_weights(rs, lam):
        out |= weyl_orbit(rs, mu)
    return frozenset(out)


def weyl_dim(rs: RootSystem, lam: Sequence[int]) -> int:
    lam = rs.check_weight(lam)
    if not rs.is_dominant(lam):
        raise DomainError(f"{lam} is not dominant")
    shifted = tuple(x + 1 for x in lam)
    rho = rs.rho()
    num = prod(_with_root(rs, shifted, b) for b in rs.positive_roots)
    den = prod(_with_root(rs, rho, b) for b in rs.positive_roots)
    val = Fraction(num) / den
    assert val.denominator == 1
    return int(val)
