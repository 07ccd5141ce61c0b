"""Braid eigenvalues from quantum-group tensor squares.

For a highest weight ``w`` with multiplicity-free tensor square, the braiding
acts on the summand ``V_nu`` by ``+-q**e`` with
``e = (nu, nu + 2 rho)/2 - (w, w + 2 rho)`` and sign ``+`` on the symmetric
part.  Exponents are exact rationals; ``q = exp(i*pi/ell)``.

Six families are supported, keyed by ``(series, weight tag)``:
``("A", "w2")``, ``("A", "2w1")``, ``("B", "w1")``, ``("C", "w1")``,
``("D", "w1")`` and ``("E", "w1")`` (E6 only).  Weights in the stored
decompositions use 1-based node indices; node ``r + 1`` of ``A_r`` stands for
the zero weight, which keeps the small-rank members of the type A families
uniform.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .rootsys import RootSystem, Weight, build, format_weight, inner, pairing
from .rou import DomainError, RootOfUnity
from .spectra import is_geom_prog, no_cycle

SYM = "sym"
ANTISYM = "antisym"


@dataclass(frozen=True)
class TensorSquareDecomp:
    sym: tuple[Weight, ...]
    antisym: tuple[Weight, ...]

    def __post_init__(self) -> None:
        if set(self.sym) & set(self.antisym):
            raise DomainError("a summand cannot be both symmetric and antisymmetric")
        if len(self.sym) + len(self.antisym) < 2:
            raise DomainError("tensor square needs at least two summands")
        if any(v < 0 for w in self.sym + self.antisym for v in w):
            raise DomainError("summands must be dominant")

    def summands(self) -> list[tuple[Weight, str]]:
        return [(w, SYM) for w in self.sym] + [(w, ANTISYM) for w in self.antisym]


@dataclass(frozen=True, order=True)
class REigenvalue:
    """The value ``sign * q**exponent``."""

    exponent: Fraction
    sign: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise DomainError("sign must be +1 or -1")
        object.__setattr__(self, "exponent", Fraction(self.exponent))

    def at(self, ell: int) -> RootOfUnity:
        shift = 0 if self.sign == 1 else 1
        return RootOfUnity.from_angle(self.exponent / ell + shift)

    def scaled(self, shift: Fraction) -> "REigenvalue":
        return REigenvalue(self.exponent + shift, self.sign)

    def __str__(self) -> str:
        return f"{'-' if self.sign < 0 else ''}q^{self.exponent}"

    def to_json(self) -> dict:
        return {"sign": self.sign, "exponent": f"{self.exponent.numerator}/{self.exponent.denominator}"}

    @classmethod
    def from_json(cls, d: dict) -> "REigenvalue":
        return cls(Fraction(d["exponent"]), int(d["sign"]))


@dataclass(frozen=True)
class Family:
    series: str
    tag: str
    weight: dict[int, int]
    sym: Callable[[int], list[dict[int, int]]]
    antisym: Callable[[int], list[dict[int, int]]]
    ranks: Callable[[int], bool]
    tabulated: Callable[[int], list[tuple[int, Fraction]]]
    sector: Optional[dict[int, int]] = None
    min_ell: Optional[Callable[[int], int]] = None
    unresolved: frozenset[int] = frozenset()
    finite: frozenset[int] = frozenset()


def _pre(shift: Fraction, values: list[tuple[int, int]]) -> list[tuple[int, Fraction]]:
    return [(s, shift + e) for s, e in values]


def _b_antisym(r: int) -> list[dict[int, int]]:
    # the second exterior power of the vector module is adjoint; for B2 that is 2*w2
    return [{2: 2}] if r == 2 else [{2: 1}]


FAMILIES: dict[tuple[str, str], Family] = {
    ("A", "w2"): Family(
        "A", "w2", {2: 1},
        sym=lambda r: [{2: 2}],
        antisym=lambda r: [{1: 1, 3: 1}, {4: 1}],
        ranks=lambda r: r >= 3,
        tabulated=lambda r: _pre(Fraction(4, r + 1) + 1, [(1, 1), (-1, -1), (-1, -5)]),
        sector={2: 1, 4: 1},
        min_ell=lambda r: max(r + 3, 7),
        unresolved=frozenset({10}),
        finite=frozenset({14}),
    ),
    ("A", "2w1"): Family(
        "A", "2w1", {1: 2},
        sym=lambda r: [{1: 4}, {2: 2}],
        antisym=lambda r: [{1: 2, 2: 1}],
        ranks=lambda r: r >= 1,
        tabulated=lambda r: _pre(Fraction(4, r + 1) - 1, [(1, -1), (1, 5), (-1, 1)]),
        sector={1: 2, 2: 2},
        min_ell=lambda r: r + 5,
        unresolved=frozenset({6, 10}),
    ),
    ("B", "w1"): Family(
        "B", "w1", {1: 1},
        sym=lambda r: [{1: 2}, {}],
        antisym=_b_antisym,
        ranks=lambda r: r >= 2,
        tabulated=lambda r: _pre(Fraction(0), [(1, 2), (1, -4 * r), (-1, -2)]),
    ),
    ("C", "w1"): Family(
        "C", "w1", {1: 1},
        sym=lambda r: [{1: 2}],
        antisym=lambda r: [{2: 1}, {}],
        ranks=lambda r: r >= 2,
        tabulated=lambda r: _pre(Fraction(0), [(1, 1), (-1, -1), (-1, -2 * r - 1)]),
    ),
    ("D", "w1"): Family(
        "D", "w1", {1: 1},
        sym=lambda r: [{1: 2}, {}],
        antisym=lambda r: [{2: 1}],
        ranks=lambda r: r >= 4,
        tabulated=lambda r: _pre(Fraction(0), [(1, 1), (1, 2 * r - 1), (-1, -1)]),
    ),
    ("E", "w1"): Family(
        "E", "w1", {1: 1},
        sym=lambda r: [{1: 2}, {6: 1}],
        antisym=lambda r: [{3: 1}],
        ranks=lambda r: r == 6,
        tabulated=lambda r: _pre(Fraction(1, 3), [(1, 1), (1, -9), (-1, -1)]),
        sector={1: 1, 6: 1},
        min_ell=lambda r: 14,
        unresolved=frozenset({18}),
    ),
}


def _labels(rank: int, spec: dict[int, int]) -> Weight:
    w = [0] * rank
    for node, c in spec.items():
        if node <= rank:
            w[node - 1] += c
        elif node > rank + 1:
            raise DomainError(f"node {node} out of range for rank {rank}")
    return tuple(w)


def family_of(series: str, rank: int, lam: Sequence[int]) -> Family:
    series = series.upper()
    lam = tuple(lam)
    for fam in FAMILIES.values():
        if fam.series != series:
            continue
        if len(lam) == rank and _labels(rank, fam.weight) == lam:
            if not fam.ranks(rank):
                raise DomainError(f"{series}{rank} is outside the rank range of this family")
            return fam
    raise DomainError(f"no tensor-square data for {series}{rank} with weight {format_weight(lam)}")


def table1_decomp(series: str, rank: int, lam: Sequence[int]) -> TensorSquareDecomp:
    fam = family_of(series, rank, lam)
    return TensorSquareDecomp(
        tuple(_labels(rank, s) for s in fam.sym(rank)),
        tuple(_labels(rank, s) for s in fam.antisym(rank)),
    )


def casimir(rs: RootSystem, nu: Sequence[int]) -> Fraction:
    """(nu, nu + 2 rho)."""
    return inner(rs, nu, [v + 2 for v in nu])


def r_exponent(rs: RootSystem, w: Sequence[int], nu: Sequence[int], side: str) -> REigenvalue:
    if side not in (SYM, ANTISYM):
        raise DomainError(f"side must be {SYM!r} or {ANTISYM!r}")
    w = rs.check_weight(w)
    nu = rs.check_weight(nu)
    if not rs.is_dominant(nu):
        raise DomainError("summand weight must be dominant")
    return REigenvalue(casimir(rs, nu) / 2 - casimir(rs, w), 1 if side == SYM else -1)


def rmatrix_eigenvalues(series: str, rank: int, lam: Sequence[int]) -> frozenset[REigenvalue]:
    rs = build(series.upper(), rank)
    dec = table1_decomp(series, rank, lam)
    return frozenset(r_exponent(rs, lam, nu, side) for nu, side in dec.summands())


def tabulated_eigenvalues(series: str, rank: int, lam: Sequence[int]) -> frozenset[REigenvalue]:
    """The eigenvalue column as tabulated, independent of the formula."""
    fam = family_of(series, rank, lam)
    return frozenset(REigenvalue(e, s) for s, e in fam.tabulated(rank))


def alcove_ok(rs: RootSystem, nu: Sequence[int], ell: int) -> bool:
    """<nu + rho, theta> < ell, pairing against the coroot of the highest root."""
    if ell < 2:
        raise DomainError("ell must be at least 2")
    nu = rs.check_weight(nu)
    if not rs.is_dominant(nu):
        raise DomainError("weight must be dominant")
    return pairing(rs, [v + 1 for v in nu], rs.highest_root) < ell


def instantiate(eigs: frozenset[REigenvalue], ell: int) -> frozenset[RootOfUnity]:
    return frozenset(x.at(ell) for x in eigs)


def min_ell(series: str, rank: int, lam: Sequence[int]) -> int:
    """Smallest ell at which the verdict can be anything but AlcoveFail."""
    fam = family_of(series, rank, lam)
    if fam.min_ell is not None:
        return fam.min_ell(rank)
    rs = build(series.upper(), rank)
    dec = table1_decomp(series, rank, lam)
    return 1 + max(pairing(rs, [v + 1 for v in nu], rs.highest_root) for nu, _ in dec.summands())


DENSE = "Dense"
FINITE = "FiniteImage"
GEOM = "GeomProgUnresolved"
ALCOVE = "AlcoveFail"


def qgroup_verdict(series: str, rank: int, lam: Sequence[int], ell: int) -> str:
    """Density verdict for the braid image on the three-eigenvalue sector.

    Families with a stated lower bound and exceptional set use them verbatim.
    The orthogonal and symplectic families use the alcove bound on the
    decomposition, and their exceptional levels are read off the instantiated
    eigenvalues (repeated values or a failed no-cycle test count as outside the
    bound, a geometric progression as unresolved).
    """
    if ell < 2:
        raise DomainError("ell must be at least 2")
    fam = family_of(series, rank, lam)
    if ell < min_ell(series, rank, lam):
        return ALCOVE
    if fam.min_ell is not None:
        if ell in fam.finite:
            return FINITE
        if ell in fam.unresolved:
            return GEOM
        return DENSE
    vals = instantiate(rmatrix_eigenvalues(series, rank, lam), ell)
    if len(vals) != 3 or not no_cycle(vals):
        return ALCOVE
    if is_geom_prog(vals):
        return GEOM
    return DENSE


@dataclass(frozen=True)
class QgroupResult:
    series: str
    rank: int
    weight: Weight
    ell: int
    eigenvalues: frozenset[REigenvalue]
    verdict: str

    def to_json(self) -> dict:
        return {
            "series": self.series,
            "rank": self.rank,
            "weight": list(self.weight),
            "ell": self.ell,
            "eigenvalues": [e.to_json() for e in sorted(self.eigenvalues)],
            "verdict": self.verdict,
        }

    @classmethod
    def from_json(cls, d: dict) -> "QgroupResult":
        return cls(d["series"], d["rank"], tuple(d["weight"]), d["ell"],
                   frozenset(REigenvalue.from_json(e) for e in d["eigenvalues"]), d["verdict"])


def analyse(series: str, rank: int, lam: Sequence[int], ell: int) -> QgroupResult:
    series = series.upper()
    lam = tuple(lam)
    return QgroupResult(series, rank, lam, ell, rmatrix_eigenvalues(series, rank, lam),
                        qgroup_verdict(series, rank, lam, ell))
