import random
from fractions import Fraction
from math import lcm

import pytest

from neigen.bmw import (
    PSL27_PARAMS,
    BMWParams,
    YoungDiagram,
    admissible,
    blichfeldt_orders,
    bratteli,
    case_of,
    charpoly3,
    density_verdict,
    e_from,
    eigenvalue_triple,
    field_of,
    geom_prog_closed,
    is_projective_identity,
    mat_identity,
    mat_inverse,
    mat_mul,
    mat_scale,
    no_cycle_closed,
    oracle_geom_prog,
    oracle_no_cycle,
    projective_order,
    projective_order_oracle,
    psl27_relators,
    psl27_witness,
    rep3,
    theorem_hypotheses,
)
from neigen.rou import Cyclotomic, DomainError, RootOfUnity, rou_order

Y = YoungDiagram.parse
P = BMWParams


def grid(max_ell=60):
    for ell in range(3, max_ell + 1):
        for n in range(-ell, ell + 1):
            if n != -1 and case_of(P(n, ell)):
                yield P(n, ell)


def test_params_validation():
    with pytest.raises(DomainError):
        P(-1, 7)
    with pytest.raises(DomainError):
        P(2, 2)
    assert P(2, 9).q == RootOfUnity(1, 9)
    assert P(2, 9).conductor == 36


def test_eigenvalue_triple_examples():
    def ang(p):
        return {x.angle for x in eigenvalue_triple(p)}
    assert ang(P(2, 9)) == {Fraction(16, 9), Fraction(1, 9), Fraction(8, 9)}
    assert ang(P(3, 6)) == {Fraction(3, 2), Fraction(1, 6), Fraction(5, 6)}
    assert ang(P(-5, 14)) == {Fraction(5, 14), Fraction(1, 14), Fraction(13, 14)}


def test_case_of_examples():
    assert case_of(P(1, 3)) == "a"
    assert case_of(P(-4, 9)) == "d"
    assert case_of(P(2, 3)) is None
    assert case_of(P(2, 4)) == "b"
    assert case_of(P(4, 7)) == "c"
    assert case_of(P(-5, 10)) == "e"
    assert case_of(P(-4, 10)) is None
    assert case_of(P(5, 7)) is None


def test_case_ranges_disjoint():
    for ell in range(3, 40):
        for n in range(-ell, ell + 1):
            if n == -1:
                continue
            hits = [n == 1, n == 2 and ell >= 4, 3 <= n <= ell - 3,
                    4 - ell <= n <= -4 and n % 2 == 0 and ell % 2 == 1,
                    5 - ell <= n <= -5 and n % 2 == 1 and ell % 2 == 0]
            assert sum(hits) <= 1
            assert (case_of(P(n, ell)) is not None) == any(hits)


def test_admissible_examples():
    assert not admissible(P(1, 5), Y("[2,1]"))
    assert admissible(P(1, 5), Y("[1,1]"))
    assert admissible(P(1, 5), Y("[7]"))
    assert admissible(P(3, 7), Y("[5,1,1]"))
    assert admissible(P(3, 7), Y("[2,1]"))
    assert not admissible(P(3, 7), Y("[4,2]"))
    assert admissible(P(3, 7), Y("[0]"))
    with pytest.raises(DomainError):
        admissible(P(2, 3), Y("[1]"))


def test_young_diagram_parse_and_format():
    assert str(Y("[5,1,1]")) == "[5,1,1]"
    assert str(Y("[0]")) == "[0]" and Y("[]") == Y("[0]")
    with pytest.raises(DomainError):
        Y("[1,2]")
    with pytest.raises(DomainError):
        Y("5,1")


def _neighbours(rows):
    # independent single-box moves on a partition given as a tuple
    rows = list(rows)
    out = set()
    for i in range(len(rows) + 1):
        new = rows + [0]
        new[i] += 1
        if i == 0 or new[i - 1] >= new[i]:
            out.add(tuple(v for v in new if v))
    for i in range(len(rows)):
        new = list(rows)
        new[i] -= 1
        if i + 1 >= len(new) or new[i] >= new[i + 1]:
            out.add(tuple(v for v in new if v))
    return out


def _path_counts(p, top):
    blocked = {frozenset({(p.ell - 1, 1), (p.ell - 1,)})} if p.n == 2 else set()
    counts = [{(): 1}]
    for _ in range(top):
        nxt = {}
        for mu, d in counts[-1].items():
            for lam in _neighbours(mu):
                if not admissible(p, YoungDiagram(lam)) or frozenset({mu, lam}) in blocked:
                    continue
                nxt[lam] = nxt.get(lam, 0) + d
        counts.append(nxt)
    return counts


@pytest.mark.parametrize("n,ell", [(1, 5), (2, 7), (3, 8), (-4, 9), (-5, 10), (2, 4), (4, 11)])
def test_bratteli_matches_path_counting(n, ell):
    p = P(n, ell)
    b = bratteli(p, 10)
    ref = _path_counts(p, 10)
    for m in range(11):
        assert {lam.rows: d for lam, d in b.levels[m].items()} == ref[m]


@pytest.mark.parametrize("n,ell", [(2, 9), (3, 7), (-5, 14), (1, 5), (-4, 9), (-7, 12)])
def test_bratteli_invariants(n, ell):
    p = P(n, ell)
    b = bratteli(p, 8)
    assert b.levels[0] == {YoungDiagram(): 1}
    assert b.dim(3, Y("[1]")) == 3
    assert b.dim(2, Y("[0]")) == 1
    for m in range(1, 9):
        for lam, d in b.levels[m].items():
            assert lam.size() % 2 == m % 2
            assert d == sum(b.dim(m - 1, mu) for mu, nu in b.edges[m] if nu == lam)
        for mu, nu in b.edges[m]:
            assert abs(mu.size() - nu.size()) == 1


def test_bratteli_examples():
    assert bratteli(P(3, 7), 4).dim(4, Y("[0]")) == 3
    with pytest.raises(DomainError):
        bratteli(P(3, 7), 0)


def test_bratteli_n2_edge_removed():
    p = P(2, 7)
    b = bratteli(p, 9)
    pair = {Y("[6,1]"), Y("[6]")}
    assert all({a, c} != pair for edges in b.edges for a, c in edges)
    assert Y("[6]") in b.levels[6] and Y("[6,1]") in b.levels[7]


def test_case_a_top_vertices_count_standard_tableaux():
    # [m] and [1,1] each admit a single standard tableau
    b = bratteli(P(1, 5), 8)
    for m in range(1, 9):
        assert b.dim(m, Y(f"[{m}]")) == 1
    assert b.dim(2, Y("[1,1]")) == 1


def test_no_cycle_closed_examples():
    assert not no_cycle_closed(P(1, 5))
    assert not no_cycle_closed(P(3, 6))
    assert no_cycle_closed(P(2, 9))
    with pytest.raises(DomainError):
        no_cycle_closed(P(2, 3))


def test_geom_prog_closed_examples():
    assert geom_prog_closed(P(3, 12))
    assert geom_prog_closed(P(5, 8))
    assert not geom_prog_closed(P(2, 9))
    assert geom_prog_closed(P(-7, 14))


def test_closed_forms_match_oracles():
    points = list(grid())
    assert len(points) > 2000
    for p in points:
        assert no_cycle_closed(p) == oracle_no_cycle(p), p
        assert geom_prog_closed(p) == oracle_geom_prog(p), p


def test_projective_order_examples():
    assert projective_order(P(-5, 14)) == 7
    assert projective_order(P(2, 8)) == 8
    assert projective_order(P(2, 9)) == 18
    assert projective_order_oracle(P(2, 9)) == 18
    with pytest.raises(DomainError):
        projective_order(P(3, 12))
    with pytest.raises(DomainError):
        projective_order(P(-4, 9))


def test_projective_order_oracle_is_ratio_lcm():
    for p in [P(2, 9), P(-5, 14), P(4, 11), P(2, 8)]:
        a, b, c = eigenvalue_triple(p)
        want = lcm(rou_order(a * b.inverse()), rou_order(a * c.inverse()), rou_order(b * c.inverse()))
        assert projective_order_oracle(p) == want


def test_projective_order_formula_matches_oracle():
    # fails where the closed form is off by a factor of two; see the ledger
    bad = [(p.n, p.ell) for p in grid() if theorem_hypotheses(p)
           and projective_order(p) != projective_order_oracle(p)]
    assert bad == []


def test_projective_order_is_true_matrix_order():
    # the generator is diagonalizable, so its projective order is the ratio lcm
    for p in [P(2, 9), P(4, 11), P(-5, 14), P(2, 8)]:
        a, _ = rep3(p)
        k = projective_order_oracle(p)
        pw = mat_identity(p.conductor)
        for j in range(1, k + 1):
            pw = mat_mul(pw, a)
            assert is_projective_identity(pw) == (j == k)


def _samples(count=20, seed=1234):
    rng = random.Random(seed)
    pool = [p for p in grid(30) if case_of(p) in ("b", "c", "e")]
    return rng.sample(pool, count)


@pytest.mark.parametrize("p", _samples(), ids=lambda p: f"{p.n}_{p.ell}")
def test_rep3_braid_relation(p):
    a, b = rep3(p)
    assert mat_mul(mat_mul(a, b), a) == mat_mul(mat_mul(b, a), b)


def test_rep3_charpoly():
    p = P(4, 11)
    f = field_of(p)
    a, b = rep3(p)
    q, r_inv = f.q, f.qn_inv
    roots = [r_inv, q, -q.inverse()]
    c2 = -(roots[0] + roots[1] + roots[2])
    c1 = roots[0] * roots[1] + roots[0] * roots[2] + roots[1] * roots[2]
    c0 = -(roots[0] * roots[1] * roots[2])
    assert charpoly3(a) == (c2, c1, c0)
    assert charpoly3(b) == (c2, c1, c0)


def test_rep3_e_identities():
    p = P(2, 9)
    f = field_of(p)
    a, b = rep3(p)
    e = e_from(p, a)
    r = f.qn_inv.inverse()
    x = Cyclotomic.scalar(f.m, 1) + (r - r.inverse()) / (f.q - f.q.inverse())
    assert mat_mul(e, e) == mat_scale(x, e)
    assert mat_mul(a, e) == mat_scale(f.qn_inv, e) == mat_mul(e, a)
    assert mat_mul(mat_mul(e, a), e) == mat_scale(f.qn_inv * x, e)
    e2 = e_from(p, b)
    assert mat_mul(mat_mul(e, e2), e) == e


def test_rep3_invertible():
    for p in _samples(5, seed=9):
        a, b = rep3(p)
        m = p.conductor
        assert mat_mul(a, mat_inverse(a)) == mat_identity(m)
        assert mat_mul(b, mat_inverse(b)) == mat_identity(m)


def test_is_projective_identity_examples():
    p = P(2, 9)
    f = field_of(p)
    assert is_projective_identity(mat_identity(f.m))
    assert is_projective_identity(mat_scale(f.q, mat_identity(f.m)))
    assert not is_projective_identity(rep3(p)[0])
    assert not is_projective_identity(mat_scale(Cyclotomic.zero(f.m), mat_identity(f.m)))


def test_psl27_witness_examples():
    assert psl27_witness(P(-5, 14))
    assert psl27_witness(P(-9, 14))
    assert not psl27_witness(P(2, 9))
    rel = psl27_relators(P(2, 9))
    assert set(rel) == {"S^7", "(S^4T)^4", "(ST)^3", "T^2"}


def test_density_verdict_examples():
    v = density_verdict(P(2, 9), 4, Y("[2]"))
    assert v.kind == "Dense" and v.dim == bratteli(P(2, 9), 4).dim(4, Y("[2]")) and v.dim > 0
    assert density_verdict(P(-5, 14), 3, Y("[1]")).kind == "FinitePSL27"
    assert density_verdict(P(-9, 14), 4, Y("[0]")).kind == "FinitePSL27"
    assert density_verdict(P(1, 5), 5, Y("[3]")).kind == "FailsNoCycle"
    assert density_verdict(P(-4, 9), 3, Y("[1]")).kind == "NonUnitary"
    assert density_verdict(P(3, 12), 3, Y("[1]")).kind == "GeomProgUnresolved"
    assert density_verdict(P(2, 3), 3, Y("[1]")).kind == "NotAdmissible"
    assert density_verdict(P(3, 7), 8, Y("[3,3]")).kind == "NotAdmissible"
    assert density_verdict(P(-5, 14), 5, Y("[1]")).kind == "Dense"
    assert density_verdict(P(2, 9), 4, Y("[2]")).to_json() == {"verdict": "Dense", "dim": v.dim}
    assert density_verdict(P(1, 5), 5, Y("[3]")).to_json() == {"verdict": "FailsNoCycle"}


def test_density_verdict_preconditions():
    for m, lam in [(2, "[0]"), (3, "[3]"), (4, "[1]")]:
        with pytest.raises(DomainError):
            density_verdict(P(2, 9), m, Y(lam))


def test_blichfeldt_table():
    rows = {r.group: r for r in blichfeldt_orders()}
    assert 7 in rows["PSL(2,7)"].element_orders and rows["PSL(2,7)"].orders == (168,)
    assert all(max(r.element_orders) < 8 for r in rows.values())
    fits = [g for g, r in rows.items() if projective_order(P(-5, 14)) in r.element_orders]
    assert fits == ["PSL(2,7)"]


def test_element_order_screening():
    top = max(max(r.element_orders) for r in blichfeldt_orders())
    for p in grid():
        if theorem_hypotheses(p) and (p.n, p.ell) not in PSL27_PARAMS:
            assert projective_order(p) > top
            assert projective_order_oracle(p) > top
