from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from neigen.rootsys import (
    build,
    format_weight,
    inner,
    pairing,
    parse_system,
    parse_weight,
    string_bounds,
    weight_set,
    weyl_dim,
    weyl_orbit,
)
from neigen.rou import DomainError

SYSTEMS = ([("A", r) for r in range(1, 9)] + [("B", r) for r in range(2, 9)]
           + [("C", r) for r in range(2, 9)] + [("D", r) for r in range(4, 9)]
           + [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)])

# positive-root counts and Weyl group orders, standard tables
NPOS = {"A": lambda r: r * (r + 1) // 2, "B": lambda r: r * r, "C": lambda r: r * r,
        "D": lambda r: r * (r - 1)}
FIXED_NPOS = {("E", 6): 36, ("E", 7): 63, ("E", 8): 120, ("F", 4): 24, ("G", 2): 6}


def _weyl_order(s, r):
    from math import factorial
    return {"A": factorial(r + 1), "B": 2 ** r * factorial(r), "C": 2 ** r * factorial(r),
            "D": 2 ** (r - 1) * factorial(r), "E": {6: 51840, 7: 2903040, 8: 696729600}.get(r),
            "F": 1152, "G": 12}[s]


@pytest.mark.parametrize("s,r", SYSTEMS)
def test_structure(s, r):
    rs = build(s, r)
    a, d = rs.cartan, rs.symmetrizer
    for i in range(r):
        for j in range(r):
            assert d[i] * a[i][j] == d[j] * a[j][i]
    n = FIXED_NPOS.get((s, r)) or NPOS[s](r)
    assert len(rs.positive_roots) == n
    theta = rs.root_labels(rs.highest_root)
    gamma = rs.root_labels(rs.highest_short_root)
    assert rs.is_dominant(theta) and rs.is_dominant(gamma)
    if rs.simply_laced:
        assert rs.highest_root == rs.highest_short_root
        assert string_bounds(rs) == rs.highest_root
    assert inner(rs, gamma, gamma) == 2
    for i in range(r):
        assert string_bounds(rs)[i] == pairing(rs, rs.fundamental(i + 1), rs.highest_short_root)


def test_examples():
    a2 = build("A", 2)
    assert a2.cartan == ((2, -1), (-1, 2)) and len(a2.positive_roots) == 3
    g2 = build("G", 2)
    assert g2.highest_root == (3, 2) and g2.highest_short_root == (2, 1)
    assert build("E", 8).highest_root == (2, 3, 4, 6, 5, 4, 3, 2)


def test_string_bounds():
    assert string_bounds(build("A", 5)) == (1,) * 5
    assert string_bounds(build("B", 4)) == (2, 2, 2, 1)
    assert string_bounds(build("G", 2)) == (2, 3)
    assert string_bounds(build("C", 3)) == (1, 2, 2)
    assert string_bounds(build("F", 4)) == (2, 4, 3, 2)
    assert string_bounds(build("E", 7)) == (2, 2, 3, 4, 3, 2, 1)


def test_inner_pairing():
    assert inner(build("A", 1), (1,), (1,)) == Fraction(1, 2)
    assert inner(build("B", 3), (1, 0, 0), (1, 0, 0)) == 2
    g2 = build("G", 2)
    gam = g2.root_labels(g2.highest_short_root)
    assert inner(g2, gam, gam) == 2
    assert pairing(g2, (0, 1), g2.highest_short_root) == 3
    b3 = build("B", 3)
    assert pairing(b3, (1, 0, 0), b3.highest_short_root) == 2
    for s, r in SYSTEMS[:6]:
        rs = build(s, r)
        for i in range(r):
            alpha = tuple(int(j == i) for j in range(r))
            assert pairing(rs, rs.fundamental(i + 1), alpha) == 1
    with pytest.raises(DomainError):
        pairing(b3, (1, 0, 0), (1, 0, 1))


def test_orbits():
    assert weyl_orbit(build("B", 3), (0, 0, 0)) == {(0, 0, 0)}
    assert len(weyl_orbit(build("A", 2), (1, 0))) == 3
    assert weyl_orbit(build("A", 1), (2,)) == {(2,), (-2,)}


def test_weight_sets():
    assert len(weight_set(build("A", 2), (1, 1))) == 7
    assert len(weight_set(build("B", 3), (1, 0, 0))) == 7
    assert len(weight_set(build("E", 6), (1, 0, 0, 0, 0, 0))) == 27
    with pytest.raises(DomainError):
        weight_set(build("A", 2), (1, -1))


def test_weyl_dim():
    assert weyl_dim(build("A", 1), (1,)) == 2
    assert weyl_dim(build("E", 6), (1, 0, 0, 0, 0, 0)) == 27
    assert weyl_dim(build("E", 7), (0, 0, 0, 0, 0, 0, 1)) == 56
    assert weyl_dim(build("E", 8), (0, 0, 0, 0, 0, 0, 0, 1)) == 248
    assert weyl_dim(build("E", 8), (1, 0, 0, 0, 0, 0, 0, 0)) == 3875
    assert weyl_dim(build("F", 4), (0, 0, 0, 1)) == 26
    assert weyl_dim(build("G", 2), (1, 0)) == 7
    assert weyl_dim(build("B", 3), (0, 0, 1)) == 8


@pytest.mark.parametrize("s,r", [x for x in SYSTEMS if x not in {("E", 8), ("E", 7)}] + [("E", 7)])
def test_orbit_sizes_divide_weyl_order(s, r):
    rs = build(s, r)
    order = _weyl_order(s, r)
    for i in range(1, r + 1):
        assert order % len(weyl_orbit(rs, rs.fundamental(i))) == 0


MINUSCULE = ([("A", r, i) for r in range(1, 6) for i in range(1, r + 1)]
             + [("D", r, i) for r in (4, 5, 6) for i in (1, r - 1, r)]
             + [("E", 6, 1), ("E", 6, 6), ("E", 7, 7)])
NON_MINUSCULE = [("B", 3, 2), ("C", 3, 2), ("D", 5, 2), ("E", 6, 2), ("F", 4, 4), ("G", 2, 2),
                 ("A", 3, None)]


@pytest.mark.parametrize("s,r,i", MINUSCULE)
def test_minuscule_dim_equals_weight_count(s, r, i):
    rs = build(s, r)
    lam = rs.fundamental(i)
    assert weyl_dim(rs, lam) == len(weight_set(rs, lam))


@pytest.mark.parametrize("s,r,i", NON_MINUSCULE)
def test_non_minuscule_dim_exceeds_weight_count(s, r, i):
    rs = build(s, r)
    lam = rs.fundamental(i) if i else (1, 0, 1)
    assert weyl_dim(rs, lam) > len(weight_set(rs, lam))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([("A", 3), ("B", 3), ("C", 3), ("G", 2), ("D", 4)]),
       st.lists(st.integers(0, 2), min_size=4, max_size=4))
def test_weight_set_weyl_stable_and_highest(sr, labels):
    rs = build(*sr)
    lam = tuple(labels[: rs.rank])
    ws = weight_set(rs, lam)
    assert lam in ws
    for mu in ws:
        for i in range(rs.rank):
            assert rs.reflect(mu, i) in ws
        assert rs.dominates(lam, mu)


def test_build_errors_and_parsing():
    for s, r in [("D", 3), ("E", 5), ("G", 3), ("B", 1), ("X", 2)]:
        with pytest.raises(DomainError):
            build(s, r)
    assert parse_system("B3").name == "B3"
    with pytest.raises(DomainError):
        parse_system("Q")
    assert parse_weight("0,1,-2") == (0, 1, -2)
    assert format_weight((0, 1, -2)) == "0,1,-2"
    with pytest.raises(DomainError):
        parse_weight("a,b")


def test_multiplicity_free_non_minuscule():
    # the short-root modules have a single zero weight, so dim equals the weight count
    assert weyl_dim(build("B", 3), (1, 0, 0)) == len(weight_set(build("B", 3), (1, 0, 0))) == 7
    assert weyl_dim(build("G", 2), (1, 0)) == len(weight_set(build("G", 2), (1, 0))) == 7
