"""Braid group representations from BMW algebras at q = exp(i*pi/ell), r = q**n."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .rou import Cyclotomic, DomainError, RootOfUnity, cyc_from_rou, rou_order
from .spectra import is_geom_prog, no_cycle

# ---------------------------------------------------------------- parameters


@dataclass(frozen=True)
class BMWParams:
    n: int
    ell: int

    def __post_init__(self) -> None:
        if self.n == -1:
            raise DomainError("n = -1 is not allowed")
        if self.ell < 3:
            raise DomainError("ell must be at least 3")

    @property
    def q(self) -> RootOfUnity:
        return RootOfUnity(1, self.ell)

    @property
    def conductor(self) -> int:
        return math.lcm(4, 2 * self.ell)


def eigenvalue_triple(p: BMWParams) -> frozenset[RootOfUnity]:
    """The eigenvalues q**-n, q and -q**-1 of a braid generator."""
    return frozenset({RootOfUnity(-p.n, p.ell), RootOfUnity(1, p.ell), RootOfUnity(p.ell - 1, p.ell)})


def case_of(p: BMWParams) -> Optional[str]:
    n, ell = p.n, p.ell
    if n == 1 and ell >= 3:
        return "a"
    if n == 2 and ell >= 4:
        return "b"
    if 3 <= n <= ell - 3:
        return "c"
    if 4 - ell <= n <= -4 and n % 2 == 0 and ell % 2 == 1:
        return "d"
    if 5 - ell <= n <= -5 and n % 2 == 1 and ell % 2 == 0:
        return "e"
    return None


ISOMORPHISM_HINT = ("no case matches; C(q^n, q), C(-q^-n, q), C(-q^n, -q) and C(q^-n, q^-1) "
                    "are isomorphic, but only the first keeps q on the unitary ray")


def _require_case(p: BMWParams) -> str:
    c = case_of(p)
    if c is None:
        raise DomainError(f"(n, ell) = ({p.n}, {p.ell}): {ISOMORPHISM_HINT}")
    return c


# ---------------------------------------------------------------- diagrams


@dataclass(frozen=True, order=True)
class YoungDiagram:
    rows: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        rows = tuple(int(r) for r in self.rows if r != 0)
        if any(r < 0 for r in rows) or any(a < b for a, b in zip(rows, rows[1:])):
            raise DomainError(f"rows {self.rows} are not a partition")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def parse(cls, text: str) -> "YoungDiagram":
        m = re.fullmatch(r"\s*\[\s*([0-9,\s]*)\]\s*", text)
        if not m:
            raise DomainError(f"bad Young diagram {text!r}")
        body = [x for x in m.group(1).replace(" ", "").split(",") if x]
        return cls(tuple(int(x) for x in body))

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.rows or (0,))) + "]"

    def size(self) -> int:
        return sum(self.rows)

    def row(self, i: int) -> int:
        """Length of row i (1-based), zero past the end."""
        return self.rows[i - 1] if i <= len(self.rows) else 0

    def col(self, j: int) -> int:
        """Length of column j (1-based)."""
        return sum(1 for r in self.rows if r >= j)

    def add_remove(self) -> list["YoungDiagram"]:
        """All diagrams differing from this one by a single box."""
        out = []
        rows = list(self.rows)
        for i in range(len(rows) + 1):
            cur = rows[i] if i < len(rows) else 0
            if i == 0 or rows[i - 1] > cur:
                new = rows[:i] + [cur + 1] + rows[i + 1:]
                out.append(YoungDiagram(tuple(new)))
        for i, r in enumerate(rows):
            if i == len(rows) - 1 or rows[i + 1] < r:
                new = rows[:i] + [r - 1] + rows[i + 1:]
                out.append(YoungDiagram(tuple(new)))
        return out


def admissible(p: BMWParams, lam: YoungDiagram) -> bool:
    c = _require_case(p)
    n, ell = p.n, p.ell
    if lam.size() == 0:
        return True
    r1, r2, c1, c2 = lam.row(1), lam.row(2), lam.col(1), lam.col(2)
    if c == "a":
        return lam.rows == (1, 1) or len(lam.rows) == 1
    if c == "b":
        if lam.rows == (1, 1, 1):
            return True
        return 1 <= r1 <= ell - 1 and lam.rows in ((r1,), (r1, 1))
    if c == "c":
        hook = YoungDiagram((ell - n + 1,) + (1,) * (n - 1))
        return (r1 + r2 <= ell - n + 1 and c1 + c2 <= n + 1) or lam == hook
    if c == "d":
        return r1 + r2 <= 1 - n and 2 * c1 <= ell + n - 1
    return 2 * r1 <= -1 - n and 2 * c1 <= ell + n - 1


@dataclass
class Bratteli:
    params: BMWParams
    levels: list[dict[YoungDiagram, int]] = field(default_factory=list)
    edges: list[set[tuple[YoungDiagram, YoungDiagram]]] = field(default_factory=list)

    def dim(self, m: int, lam: YoungDiagram) -> int:
        return self.levels[m].get(lam, 0)


def _blocked_edge(p: BMWParams, a: YoungDiagram, b: YoungDiagram) -> bool:
    if p.n != 2:
        return False
    pair = {YoungDiagram((p.ell - 1, 1)), YoungDiagram((p.ell - 1,))}
    return {a, b} == pair


def bratteli(p: BMWParams, top: int) -> Bratteli:
    _require_case(p)
    if top < 1:
        raise DomainError("need at least one level")
    empty = YoungDiagram()
    b = Bratteli(p, [{empty: 1}], [set()])
    for m in range(1, top + 1):
        level: dict[YoungDiagram, int] = {}
        edges = set()
        for mu, d in b.levels[m - 1].items():
            for lam in mu.add_remove():
                if not admissible(p, lam) or _blocked_edge(p, mu, lam):
                    continue
                edges.add((mu, lam))
                level[lam] = level.get(lam, 0) + d
        b.levels.append(level)
        b.edges.append(edges)
    return b


# ---------------------------------------------------------------- eigenvalue predicates


def no_cycle_closed(p: BMWParams) -> bool:
    _require_case(p)
    return not (p.n == 1 or (p.n, p.ell) == (3, 6))


def geom_prog_closed(p: BMWParams) -> bool:
    _require_case(p)
    special = {3, p.ell - 3}
    if p.ell % 2 == 0:
        special |= {p.ell // 2, -p.ell // 2}
    return p.n in special


def theorem_hypotheses(p: BMWParams) -> bool:
    """Cases (b), (c), (e) with eigenvalues not in geometric progression."""
    return case_of(p) in ("b", "c", "e") and not geom_prog_closed(p)


def projective_order(p: BMWParams) -> int:
    """Piecewise closed form for the projective order of a braid generator."""
    if not theorem_hypotheses(p):
        raise DomainError(f"({p.n}, {p.ell}) is outside the density theorem's hypotheses")
    n, ell = p.n, p.ell
    if ell % 4 == 2 and n % 4 == 3:
        return ell // 2
    if (ell % 4 == 0 and n % 2 == 0) or (ell % 4 == 2 and n % 4 == 1):
        return ell
    return 2 * ell


def projective_order_oracle(p: BMWParams) -> int:
    """lcm of the orders of the pairwise eigenvalue ratios."""
    a, b, c = sorted(eigenvalue_triple(p))
    return math.lcm(*(rou_order(x * y.inverse()) for x, y in ((a, b), (a, c), (b, c))))


# ---------------------------------------------------------------- 3x3 matrices

Matrix = list[list[Cyclotomic]]


def mat_identity(m: int, size: int = 3) -> Matrix:
    return [[Cyclotomic.scalar(m, int(i == j)) for j in range(size)] for i in range(size)]


def mat_mul(x: Matrix, y: Matrix) -> Matrix:
    k = len(y)
    return [[sum((x[i][t] * y[t][j] for t in range(1, k)), x[i][0] * y[0][j])
             for j in range(len(y[0]))] for i in range(len(x))]


def mat_add(x: Matrix, y: Matrix) -> Matrix:
    return [[a + b for a, b in zip(rx, ry)] for rx, ry in zip(x, y)]


def mat_scale(c: Cyclotomic, x: Matrix) -> Matrix:
    return [[c * a for a in row] for row in x]


def mat_pow(x: Matrix, k: int) -> Matrix:
    base = x if k >= 0 else mat_inverse(x)
    out = mat_identity(x[0][0].conductor, len(x))
    for _ in range(abs(k)):
        out = mat_mul(out, base)
    return out


def mat_inverse(x: Matrix) -> Matrix:
    size = len(x)
    m = x[0][0].conductor
    aug = [list(row) + [Cyclotomic.scalar(m, int(i == j)) for j in range(size)]
           for i, row in enumerate(x)]
    for col in range(size):
        piv = next((r for r in range(col, size) if not aug[r][col].is_zero()), None)
        if piv is None:
            raise DomainError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [v * inv for v in aug[col]]
        for r in range(size):
            if r != col and not aug[r][col].is_zero():
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[size:] for row in aug]


def charpoly3(x: Matrix) -> tuple[Cyclotomic, Cyclotomic, Cyclotomic]:
    """Coefficients (c2, c1, c0) of det(t*I - x) = t^3 + c2 t^2 + c1 t + c0."""
    tr = x[0][0] + x[1][1] + x[2][2]
    minors = (x[0][0] * x[1][1] - x[0][1] * x[1][0]
              + x[0][0] * x[2][2] - x[0][2] * x[2][0]
              + x[1][1] * x[2][2] - x[1][2] * x[2][1])
    det = (x[0][0] * (x[1][1] * x[2][2] - x[1][2] * x[2][1])
           - x[0][1] * (x[1][0] * x[2][2] - x[1][2] * x[2][0])
           + x[0][2] * (x[1][0] * x[2][1] - x[1][1] * x[2][0]))
    return -tr, minors, -det


def is_projective_identity(x: Matrix) -> bool:
    c = x[0][0]
    if c.is_zero():
        return False
    size = len(x)
    return all(x[i][j] == (c if i == j else 0) for i in range(size) for j in range(size))


@dataclass(frozen=True)
class Field:
    """Handles to q, q**-n and i inside the cyclotomic field of conductor lcm(4, 2*ell)."""

    m: int
    q: Cyclotomic
    qn_inv: Cyclotomic
    i: Cyclotomic


def field_of(p: BMWParams) -> Field:
    m = p.conductor
    return Field(m, cyc_from_rou(p.q, m), cyc_from_rou(RootOfUnity(-p.n, p.ell), m),
                 cyc_from_rou(RootOfUnity(1, 2), m))


def rep3(p: BMWParams) -> tuple[Matrix, Matrix]:
    f = field_of(p)
    q, i, r_inv = f.q, f.i, f.qn_inv
    zero = Cyclotomic.zero(f.m)
    s = (q * q - 1) / q
    a = [[r_inv, s, zero],
         [zero, s, i],
         [zero, -i, zero]]
    b = [[zero, zero, -i],
         [zero, r_inv, -i * s * r_inv],
         [i, zero, s]]
    return a, b


def e_from(p: BMWParams, g: Matrix) -> Matrix:
    """The element e defined by (q - q^-1)(1 - e) = g - g^-1."""
    f = field_of(p)
    d = f.q - f.q.inverse()
    diff = mat_add(g, mat_scale(Cyclotomic.scalar(f.m, -1), mat_inverse(g)))
    return mat_add(mat_identity(f.m), mat_scale(-d.inverse(), diff))


def psl27_relators(p: BMWParams) -> dict[str, Matrix]:
    a, b = rep3(p)
    s = mat_inverse(b)
    t = mat_mul(mat_mul(b, a), b)
    return {
        "S^7": mat_pow(s, 7),
        "(S^4T)^4": mat_pow(mat_mul(mat_pow(s, 4), t), 4),
        "(ST)^3": mat_pow(mat_mul(s, t), 3),
        "T^2": mat_pow(t, 2),
    }


def psl27_witness(p: BMWParams) -> bool:
    return all(is_projective_identity(x) for x in psl27_relators(p).values())


# ---------------------------------------------------------------- verdicts


@dataclass(frozen=True)
class Verdict:
    kind: str
    dim: Optional[int] = None

    def to_json(self) -> dict:
        out: dict = {"verdict": self.kind}
        if self.dim is not None:
            out["dim"] = self.dim
        return out


PSL27_PARAMS = {(-5, 14), (-9, 14)}
PSL27_SECTORS = {(3, YoungDiagram((1,))), (4, YoungDiagram())}


def density_verdict(p: BMWParams, m: int, lam: YoungDiagram) -> Verdict:
    if m < 3:
        raise DomainError("need m >= 3")
    if lam.size() >= m or (m - lam.size()) % 2:
        raise DomainError("need |lambda| < m with |lambda| = m mod 2")
    c = case_of(p)
    if c is None or not admissible(p, lam):
        return Verdict("NotAdmissible")
    if c == "d":
        return Verdict("NonUnitary")
    if not no_cycle_closed(p):
        return Verdict("FailsNoCycle")
    if geom_prog_closed(p):
        return Verdict("GeomProgUnresolved")
    if (p.n, p.ell) in PSL27_PARAMS and (m, lam) in PSL27_SECTORS:
        return Verdict("FinitePSL27")
    d = bratteli(p, m).dim(m, lam)
    if d == 0:
        return Verdict("NotAdmissible")
    return Verdict("Dense", d)


@dataclass(frozen=True)
class BlichfeldtRow:
    group: str
    orders: tuple[int, ...]
    element_orders: frozenset[int]


def blichfeldt_orders() -> tuple[BlichfeldtRow, ...]:
    return (
        BlichfeldtRow("Hessian", (36, 72, 216), frozenset({1, 2, 3, 4, 6})),
        BlichfeldtRow("PSL(2,7)", (168,), frozenset({1, 2, 3, 4, 7})),
        BlichfeldtRow("A5", (60,), frozenset({1, 2, 3, 5})),
        BlichfeldtRow("A6", (360,), frozenset({1, 2, 3, 4, 5})),
    )


def oracle_no_cycle(p: BMWParams) -> bool:
    return no_cycle(eigenvalue_triple(p))


def oracle_geom_prog(p: BMWParams) -> bool:
    return is_geom_prog(eigenvalue_triple(p))
