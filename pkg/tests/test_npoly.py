from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from npcurves.errors import AsymmetricSlopes, CapExceeded, InvalidPolygon, NonIntegralBreakPoint
from npcurves.npoly import (
    NewtonPolygon,
    enumerate_symmetric,
    hull_points,
    lower_hull,
    newton_polygon,
    np_leq,
    ordinary,
    p_adic_valuation,
    supersingular,
    two_slope,
    xi_plus_e,
)
from npcurves.zeta import LPolynomial
from oracles import brute_hull

F = Fraction


def symmetric_polygons_oracle(g):
    """Every multiset of slopes a/b in [0,1] whose multiplicities are multiples of
    b and sum to 2g, filtered for symmetry."""
    slopes = sorted({F(a, b) for b in range(1, 2 * g + 1) for a in range(0, b + 1)})
    found = set()

    def rec(i, left, chosen):
        if left == 0:
            mult = {}
            for s in chosen:
                mult[s] = mult.get(s, 0) + 1
            if all(mult.get(1 - s) == m for s, m in mult.items()):
                found.add(tuple(chosen))
            return
        if i == len(slopes):
            return
        s = slopes[i]
        rec(i + 1, left, chosen)
        k = s.denominator
        while k <= left:
            rec(i + 1, left - k, chosen + [s] * k)
            k += s.denominator

    rec(0, 2 * g, [])
    return found


def test_valuation():
    assert p_adic_valuation(48, 2) == 4
    assert p_adic_valuation(-27, 3) == 3
    assert p_adic_valuation(0, 5) is None


@pytest.mark.parametrize("g", [1, 2, 3, 4, 5])
def test_enumeration_matches_oracle(g):
    got = {xi.slopes for xi in enumerate_symmetric(g)}
    assert got == symmetric_polygons_oracle(g)
    assert len(got) == len(enumerate_symmetric(g))


def test_enumeration_counts():
    assert [len(enumerate_symmetric(g)) for g in (2, 3, 4)] == [3, 5, 8]
    with pytest.raises(CapExceeded):
        enumerate_symmetric(13)


@settings(max_examples=150, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 12), st.fractions(0, 10, max_denominator=6)), min_size=1, max_size=9))
def test_lower_hull_matches_brute_force(raw):
    pts = {}
    for x, y in raw:
        pts[x] = min(pts.get(x, y), y)
    points = sorted(pts.items())
    hull = lower_hull(points)
    oracle = brute_hull(points)
    for x in range(points[0][0], points[-1][0] + 1):
        # linear interpolation along the computed hull
        for (x0, y0), (x1, y1) in zip(hull, hull[1:]):
            if x0 <= x <= x1:
                assert y0 + (y1 - y0) * F(x - x0, x1 - x0) == oracle[x]
                break
        else:
            assert len(hull) == 1 and oracle[x] == hull[0][1]


def test_blache_style_polygon():
    xi = newton_polygon(LPolynomial(2, 2, (1, 1, 1, 2, 4)))
    assert xi.slopes == (0, 0, 1, 1)
    assert xi.p_rank == 2
    xi = newton_polygon(LPolynomial(2, 2, (1, 1, 2, 2, 4)))
    assert xi.slopes == (0, F(1, 2), F(1, 2), 1)
    assert newton_polygon(LPolynomial(2, 1, (1, 0, 2))).slopes == (F(1, 2), F(1, 2))
    assert newton_polygon(LPolynomial(2, 1, (1, 2, 2))).slopes == (F(1, 2), F(1, 2))
    assert hull_points(LPolynomial(4, 1, (1, 0, 4))) == [(0, 0), (2, 1)]


def test_hull_defects_raise():
    with pytest.raises(NonIntegralBreakPoint):
        newton_polygon(LPolynomial(4, 2, (1, 0, 2, 0, 16)))  # vertex (2, 1/2)
    with pytest.raises(InvalidPolygon):
        newton_polygon(LPolynomial(2, 1, (1, 2, 8)))  # ends at (2, 3)
    with pytest.raises(AsymmetricSlopes):
        NewtonPolygon.from_slopes([0, 0, F(1, 2), F(1, 2)])
    with pytest.raises(NonIntegralBreakPoint):
        NewtonPolygon.from_slopes([F(1, 3), F(2, 3)])
    with pytest.raises(InvalidPolygon):
        NewtonPolygon.from_slopes([0, 1, 2])


def test_constructors_and_accessors():
    xi = two_slope(3, 1)
    assert xi.multiplicities() == {F(1, 4): 4, F(3, 4): 4}
    assert xi.break_points() == [(0, 0), (4, 1), (8, 4)]
    assert xi.hull_at(2) == F(1, 2)
    assert str(xi) == "NP{(1/4)^4, (3/4)^4}"
    assert NewtonPolygon.from_breaks([(0, 0), (4, 1), (8, 4)]) == xi
    assert xi_plus_e(xi, 1).p_rank == 1
    assert ordinary(3).p_rank == 3 and supersingular(3).is_supersingular
    assert xi.to_json()["slopes"] == [["1", "4", "4"], ["3", "4", "4"]]
    assert "breaks:" in xi.ascii()


@pytest.mark.parametrize("g", [1, 2, 3, 4, 5])
def test_np_leq_partial_order(g):
    polys = enumerate_symmetric(g)
    for a in polys:
        assert np_leq(a, a)
        assert np_leq(supersingular(g), a)
        assert np_leq(a, ordinary(g))
        for b in polys:
            if np_leq(a, b) and np_leq(b, a):
                assert a == b
            for c in polys:
                if np_leq(a, b) and np_leq(b, c):
                    assert np_leq(a, c)
