from fractions import Fraction

import pytest

from npcurves.eo import add_ordinary, enumerate_eo
from npcurves.errors import DomainError, NotTwoSlope
from npcurves.npoly import NewtonPolygon, enumerate_symmetric, ordinary, supersingular, two_slope, xi_plus_e
from npcurves.strata import (
    all_reports,
    central_leaf_dim,
    codim,
    codim_invariance_check,
    delta_g,
    first_g_exceeding_moduli_dim,
    isogeny_leaf_dim,
    moduli_dim,
    p_rank_stratum_dims,
    report,
    sdim,
    two_slope_shape,
)


def sdim_oracle(xi):
    """Direct count over a generous box of lattice points."""
    g = xi.g
    total = 0
    for x in range(-2 * g, 2 * g + 1):
        for y in range(-2 * g, 2 * g + 1):
            if 0 <= x <= 2 * g and y < x <= g and y >= xi.hull_at(x):
                total += 1
    return total


def central_oracle(m, n, g):
    total = 0
    for x in range(0, g + 1):
        for y in range(-g, g + 1):
            if Fraction(n, m + n) * x <= y < Fraction(m, m + n) * x:
                total += 1
    return total


@pytest.mark.parametrize("g", range(1, 7))
def test_sdim_matches_oracle(g):
    for xi in enumerate_symmetric(g):
        assert sdim(xi) == sdim_oracle(xi)


def test_leaf_dimensions_examples():
    r4 = report(two_slope(3, 1))
    assert (r4.sdim, r4.c, r4.i) == (6, 5, 1)
    r5 = report(two_slope(3, 2))
    assert (r5.sdim, r5.c, r5.i) == (7, 3, 4)
    assert r4.codim == 4


@pytest.mark.parametrize("m,n,copies", [(2, 1, 1), (3, 1, 1), (3, 2, 1), (4, 1, 1), (5, 2, 1), (2, 1, 2), (4, 3, 1)])
def test_central_leaf_oracle(m, n, copies):
    xi = two_slope(m, n, copies)
    assert two_slope_shape(xi) == (m, n)
    assert central_leaf_dim(xi) == central_oracle(m, n, xi.g)
    assert central_leaf_dim(xi) + isogeny_leaf_dim(xi) == sdim(xi)


def test_two_slope_shape_rejects():
    with pytest.raises(NotTwoSlope):
        two_slope_shape(supersingular(2))
    with pytest.raises(NotTwoSlope):
        two_slope_shape(NewtonPolygon.from_slopes([0, Fraction(1, 2), Fraction(1, 2), 1]))
    # the ordinary polygon is the two-slope case (m, n) = (1, 0): a single central leaf
    rep = report(ordinary(3))
    assert two_slope_shape(ordinary(3)) == (1, 0)
    assert (rep.c, rep.i) == (moduli_dim(3), 0)
    assert report(supersingular(3)).c is None


def test_extreme_strata():
    for g in range(1, 13):
        assert sdim(supersingular(g)) == g * g // 4
        assert sdim(ordinary(g)) == moduli_dim(g)
        assert codim(ordinary(g)) == 0


def test_delta_g():
    assert [delta_g(g) for g in range(1, 6)] == [1, 2, 4, 6, 9]
    assert first_g_exceeding_moduli_dim() == 9
    assert delta_g(8) <= 3 * 8 - 3 and delta_g(9) > 3 * 9 - 3
    for g in range(9, 200):
        assert delta_g(g) > 3 * g - 3


def test_p_rank_strata():
    assert p_rank_stratum_dims(4, 0) == (6, 5, 3)
    assert p_rank_stratum_dims(3, 3) == (6, 6, 5)
    with pytest.raises(DomainError):
        p_rank_stratum_dims(3, 4)
    with pytest.raises(DomainError):
        p_rank_stratum_dims(1, 0)


@pytest.mark.parametrize("g", range(1, 6))
def test_codim_invariance(g):
    for xi in enumerate_symmetric(g):
        rep = codim_invariance_check(xi, 3)
        assert rep.ok and rep.verified_upto == 3
        for e in range(4):
            assert codim(xi_plus_e(xi, e)) == codim(xi)
    for t in enumerate_eo(g):
        for e in range(4):
            assert add_ordinary(t, e).codim == t.codim


def test_reports_json():
    reps = all_reports(4)
    assert len(reps) == 8
    assert {"slopes", "g", "sdim", "codim"} <= set(reps[0].to_json())
