"""Two- and three-eigenvalue classification of (root system, highest weight) pairs.

The tables below are data.  Each row names a series, a rank condition and a
family of dominant weights written as ``{node: coefficient}`` with 1-based
nodes.  :func:`classify_pair` looks a weight up in these rows; the bound
test and the witness search are independent checks against them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Optional, Sequence

from .rootsys import RootSystem, Weight, build, string_bounds, weight_set
from .rou import DomainError
from .spectra import Coweight, class_order, exponent_spectrum, su_cochar


class Status(str, Enum):
    TWO = "TwoEigenSolution"
    THREE = "ThreeEigenSolution"
    EXCLUDED = "ExcludedByPaper"
    FAILS_BOUND = "FailsBound"
    UNCLASSIFIED = "Unclassified"


@dataclass(frozen=True)
class PairStatus:
    status: Status
    note: Optional[str] = None


@dataclass(frozen=True)
class Row:
    series: str
    item: str
    pattern: str
    weights: Callable[[int], list[dict[int, int]]]
    note: Optional[str] = None
    ranks: Callable[[int], bool] = lambda r: True


G2_NOTE = ("often labelled the second fundamental weight; under Bourbaki numbering the "
           "7-dimensional representation is the first")
E6_NOTE = ("the third and fifth fundamental weights of E6 are dual, yet one is listed "
           "as a solution and the other as excluded")

TWO_EIGEN = [
    Row("A", "A", "w_i, 1 <= i <= r", lambda r: [{i: 1} for i in range(1, r + 1)]),
    Row("B", "B", "w_r", lambda r: [{r: 1}]),
    Row("C", "C", "w_1", lambda r: [{1: 1}]),
    Row("D", "D", "w_1, w_(r-1), w_r", lambda r: [{1: 1}, {r - 1: 1}, {r: 1}]),
]

THREE_EIGEN = [
    Row("A", "1", "w_i + w_j, 1 <= i <= j <= r",
        lambda r: [_sum(i, j) for i in range(1, r + 1) for j in range(i, r + 1)]),
    Row("B", "2", "w_i, 1 <= i <= r-1", lambda r: [{i: 1} for i in range(1, r)]),
    Row("B", "3", "2 w_r", lambda r: [{r: 2}]),
    Row("C", "4", "w_i, 2 <= i <= r", lambda r: [{i: 1} for i in range(2, r + 1)]),
    Row("C", "5", "2 w_1", lambda r: [{1: 2}]),
    Row("D", "6", "w_i, 2 <= i <= r-2", lambda r: [{i: 1} for i in range(2, r - 1)]),
    Row("D", "7", "2 w_(r-1), w_(r-1) + w_r, 2 w_r",
        lambda r: [{r - 1: 2}, {r - 1: 1, r: 1}, {r: 2}]),
    Row("E", "8", "w_1, w_6", lambda r: [{1: 1}, {6: 1}], ranks=lambda r: r == 6),
    Row("E", "8", "w_3", lambda r: [{3: 1}], note=E6_NOTE, ranks=lambda r: r == 6),
    Row("E", "9", "w_1, w_7", lambda r: [{1: 1}, {7: 1}], ranks=lambda r: r == 7),
    Row("F", "10", "w_4", lambda r: [{4: 1}]),
    Row("G", "11", "w_1 (7-dimensional)", lambda r: [{1: 1}], note=G2_NOTE),
]

EXCLUDED = [
    Row("D", "12", "2 w_1, w_1 + w_(r-1), w_1 + w_r",
        lambda r: [{1: 2}, {1: 1, r - 1: 1}, {1: 1, r: 1}]),
    Row("E", "13", "2 w_1, w_2, 2 w_6, w_1 + w_6",
        lambda r: [{1: 2}, {2: 1}, {6: 2}, {1: 1, 6: 1}], ranks=lambda r: r == 6),
    Row("E", "13", "w_5", lambda r: [{5: 1}], note=E6_NOTE, ranks=lambda r: r == 6),
    Row("E", "14", "w_2, w_6, 2 w_7", lambda r: [{2: 1}, {6: 1}, {7: 2}], ranks=lambda r: r == 7),
    Row("E", "15", "w_1, w_8", lambda r: [{1: 1}, {8: 1}], ranks=lambda r: r == 8),
    Row("F", "16", "w_1", lambda r: [{1: 1}]),
]


def _sum(i: int, j: int) -> dict[int, int]:
    return {i: 2} if i == j else {i: 1, j: 1}


def _labels(rank: int, spec: dict[int, int]) -> Weight:
    w = [0] * rank
    for node, c in spec.items():
        w[node - 1] += c
    return tuple(w)


def table(rows: Iterable[Row], rs: RootSystem) -> dict[Weight, Row]:
    """Expand the rows that apply to ``rs`` into a weight -> row map."""
    out: dict[Weight, Row] = {}
    for row in rows:
        if row.series == rs.series and row.ranks(rs.rank):
            for spec in row.weights(rs.rank):
                out[_labels(rs.rank, spec)] = row
    return out


def bound_ok(rs: RootSystem, lam: Sequence[int], n: int) -> bool:
    return sum(a * b for a, b in zip(lam, string_bounds(rs))) <= n - 1


def candidates(rs: RootSystem, n: int) -> frozenset[Weight]:
    if n < 2:
        raise DomainError("eigenvalue count must be at least 2")
    b = string_bounds(rs)
    out = []

    def grow(prefix: list[int], budget: int) -> None:
        i = len(prefix)
        if i == rs.rank:
            if any(prefix):
                out.append(tuple(prefix))
            return
        for a in range(budget // b[i] + 1):
            grow(prefix + [a], budget - a * b[i])

    grow([], n - 1)
    return frozenset(out)


def classify_pair(rs: RootSystem, lam: Sequence[int], n: int) -> PairStatus:
    lam = rs.check_weight(lam)
    if not rs.is_dominant(lam) or not any(lam):
        raise DomainError("highest weight must be dominant and nonzero")
    if n not in (2, 3):
        raise DomainError("only two- and three-eigenvalue tables exist")
    row = table(TWO_EIGEN, rs).get(lam)
    if row is not None:
        return PairStatus(Status.TWO, row.note)
    if n == 3:
        row = table(THREE_EIGEN, rs).get(lam)
        if row is not None:
            return PairStatus(Status.THREE, row.note)
        row = table(EXCLUDED, rs).get(lam)
        if row is not None:
            return PairStatus(Status.EXCLUDED, row.note)
    if not bound_ok(rs, lam, n):
        return PairStatus(Status.FAILS_BOUND)
    return PairStatus(Status.UNCLASSIFIED)


@dataclass(frozen=True)
class Witness:
    cochar: Coweight
    scale: int
    exponents: tuple[int, ...]


def witness_search(rs: RootSystem, lam: Sequence[int], bound: int, target: int = 3) -> Optional[Witness]:
    """Lexicographically smallest dominant coweight with exactly ``target`` exponents.

    Coordinates range over ``0..bound``.  ``None`` means no witness at this
    bound, not that none exists.
    """
    if bound < 1:
        raise DomainError("search bound must be positive")
    lam = rs.check_weight(lam)
    if not rs.is_dominant(lam):
        raise DomainError(f"{lam} is not dominant")
    k = class_order(rs, lam)
    rows = []
    for mu in weight_set(rs, lam):
        c = [k * v for v in rs.root_coords(mu)]
        rows.append(tuple(int(v) for v in c))
    rows = sorted(set(rows))
    for y in itertools.product(range(bound + 1), repeat=rs.rank):
        if not any(y):
            continue
        seen: set[int] = set()
        for row in rows:
            seen.add(sum(a * b for a, b in zip(row, y)))
            if len(seen) > target:
                break
        if len(seen) == target:
            return Witness(Coweight(rs, y), k, tuple(sorted(seen)))
    return None


# structural cases for SU(n)

NOT_THREE = "NotThreeEigen"
UNMATCHED = "Unmatched"


@dataclass(frozen=True)
class AnCase:
    label: int | str
    exponents: tuple[int, ...]


def _pattern(e: Sequence[int]) -> list[int]:
    counts: dict[int, int] = {}
    for v in e:
        counts[v] = counts.get(v, 0) + 1
    return sorted(counts.values(), reverse=True)


def an_classify(n: int, e: Sequence[int], lam: Sequence[int]) -> AnCase:
    """Match a diagonal SU(n) element and a weight with at most two boxes to a case 1-8.

    ``e`` lists the exponents of the diagonal entries with multiplicity.
    Returns ``NotThreeEigen`` when the image has more than three eigenvalues or
    is scalar, and ``Unmatched`` if no case fits (which would be a counterexample).
    """
    e = [int(v) for v in e]
    lam = tuple(int(v) for v in lam)
    if n < 3 or len(e) != n:
        raise DomainError("need n >= 3 exponents")
    if len(lam) != n - 1 or any(v < 0 for v in lam) or not 0 < sum(lam) <= 2:
        raise DomainError("weight must be dominant with one or two boxes")
    x = su_cochar(e)
    spec = tuple(sorted(exponent_spectrum(x.system, lam, x)))
    if len(spec) > 3 or len(spec) < 2:
        return AnCase(NOT_THREE, spec)
    pat = _pattern(e)
    nodes = [i + 1 for i, a in enumerate(lam) for _ in range(a)]
    two_big = len(pat) == 2 and min(pat) >= 2
    if len(nodes) == 1:
        i = nodes[0]
        if pat == [n - 1, 1]:
            return AnCase(1, spec)
        if pat == [n - 2, 2]:
            return AnCase(2, spec)
        if len(pat) == 2 and i in (1, 2, n - 2, n - 1):
            return AnCase(3, spec)
        if pat == [n - 2, 1, 1] and _balanced(e):
            return AnCase(4, spec)
        if len(pat) == 3 and i in (1, n - 1):
            return AnCase(5, spec)
    else:
        i, j = nodes
        if i == j and i in (1, n - 1) and two_big:
            return AnCase(6, spec)
        if (i, j) == (1, n - 1) and two_big:
            return AnCase(7, spec)
        if pat == [n - 1, 1]:
            return AnCase(8, spec)
    return AnCase(UNMATCHED, spec)


def _balanced(e: Sequence[int]) -> bool:
    # the two simple exponents sit symmetrically about the repeated one
    counts: dict[int, int] = {}
    for v in e:
        counts[v] = counts.get(v, 0) + 1
    big = max(counts, key=counts.get)
    singles = [v for v, c in counts.items() if c == 1]
    return len(singles) == 2 and sum(singles) == 2 * big
