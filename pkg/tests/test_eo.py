import json

import pytest
from hypothesis import given, strategies as st

from npcurves.eo import (
    EOType,
    add_ordinary,
    enumerate_eo,
    eo_a_number,
    eo_codim,
    eo_dim,
    eo_p_rank,
    format_table,
    from_young,
    golden_tables,
    name,
    table,
    young_type,
)
from npcurves.errors import InvalidEOType

# Name, cod, f, a, nu, mu, Dieudonne module, copied row by row from the published tables
G2 = [
    ("L^2", 0, 2, 0, (1, 2), (), "D(L)^2"),
    ("L ⊕ I_{1,1}", 1, 1, 1, (1, 1), (1,), "D(L) ⊕ D_{1,1}"),
    ("I_{2,1}", 2, 0, 1, (0, 1), (2,), "E/E(F^2+V^2)"),
    ("(I_{1,1})^2", 3, 0, 2, (0, 0), (2, 1), "(D_{1,1})^2"),
]
G2_NEWTON = ["0,0,1,1", "0,1/2,1/2,1", "1/2,1/2,1/2,1/2", "1/2,1/2,1/2,1/2"]
G3 = [
    ("L^3", 0, 3, 0, (1, 2, 3), (), "D(L)^3"),
    ("L^2 ⊕ I_{1,1}", 1, 2, 1, (1, 2, 2), (1,), "D(L)^2 ⊕ D_{1,1}"),
    ("L ⊕ I_{2,1}", 2, 1, 1, (1, 1, 2), (2,), "D(L) ⊕ E/E(F^2+V^2)"),
    ("L ⊕ (I_{1,1})^2", 3, 1, 2, (1, 1, 1), (2, 1), "D(L) ⊕ (D_{1,1})^2"),
    ("I_{3,1}", 3, 0, 1, (0, 1, 2), (3,), "E/E(F^3+V^3)"),
    ("I_{3,2}", 4, 0, 2, (0, 1, 1), (3, 1), "E/E(F^2+V) ⊕ E/E(V^2+F)"),
    ("I_{1,1} ⊕ I_{2,1}", 5, 0, 2, (0, 0, 1), (3, 2), "D_{1,1} ⊕ E/E(F^2+V^2)"),
    ("(I_{1,1})^3", 6, 0, 3, (0, 0, 0), (3, 2, 1), "(D_{1,1})^3"),
]


@pytest.mark.parametrize("g,published", [(2, G2), (3, G3)])
def test_golden_tables(g, published):
    rows = golden_tables(g)
    assert len(rows) == len(published)
    for row, (nm, cod, f, a, nu, mu, dm) in zip(rows, published):
        assert (row.name, row.codim, row.f, row.a, row.nu, row.mu, row.dieudonne) == (nm, cod, f, a, nu, mu, dm)


def test_g2_newton_column():
    assert [r.newton for r in golden_tables(2)] == G2_NEWTON


def test_golden_tables_only_small_genus():
    with pytest.raises(ValueError):
        golden_tables(4)


@pytest.mark.parametrize("g", range(0, 9))
def test_enumeration(g):
    types = enumerate_eo(g)
    assert len(types) == 2**g
    assert len({t.nu for t in types}) == 2**g
    assert [t.nu for t in types] == sorted(t.nu for t in types)


@pytest.mark.parametrize("g", range(1, 9))
def test_young_roundtrip_and_invariants(g):
    for t in enumerate_eo(g):
        mu = young_type(t).mu
        assert from_young(mu, g) == t
        assert all(a > b for a, b in zip(mu, mu[1:]))
        # the Young diagram has as many boxes as the codimension
        assert sum(mu) == eo_codim(t)
        assert eo_dim(t) + eo_codim(t) == g * (g + 1) // 2
        assert 0 <= eo_p_rank(t) <= g and 0 <= eo_a_number(t) <= g
        assert eo_p_rank(t) + eo_a_number(t) <= g


@given(st.integers(1, 7), st.integers(0, 3), st.data())
def test_add_ordinary(g, e, data):
    t = data.draw(st.sampled_from(enumerate_eo(g)))
    s = add_ordinary(t, e)
    assert s.g == g + e
    assert s.p_rank == t.p_rank + e
    assert s.a_number == t.a_number
    assert s.codim == t.codim
    assert young_type(s) == young_type(t)


def test_p_rank_zero_a_number_one():
    for r in range(1, 10):
        t = EOType(tuple(range(r)))
        assert young_type(t).mu == (r,)
        assert t.p_rank == 0 and t.a_number == 1
        assert name(t) == "I_{%d,1}" % r


def test_add_ordinary_example():
    assert add_ordinary(EOType((0, 1, 2, 3)), 1).nu == (1, 1, 2, 3, 4)
    assert name(add_ordinary(EOType((0, 1, 2, 3)), 1)) == "L ⊕ I_{4,1}"


def test_invalid():
    with pytest.raises(InvalidEOType):
        EOType((0, 2))
    with pytest.raises(InvalidEOType):
        EOType((1, 0))
    with pytest.raises(InvalidEOType):
        from_young((1, 2), 3)
    with pytest.raises(InvalidEOType):
        from_young((4,), 3)


def test_names_fall_back_to_sequence():
    assert name(EOType((0, 1, 1, 1))) == "[0,1,1,1]"
    assert name(EOType((1, 1, 1, 1))) == "L ⊕ (I_{1,1})^3"


def test_format_and_json():
    text = format_table(table(3))
    assert text.splitlines()[0].startswith("Name")
    assert len(text.splitlines()) == 2 + 8
    payload = [r.to_json() for r in table(2)]
    json.dumps(payload)
    assert payload[0]["nu"] == [1, 2] and payload[0]["newton"] == "0,0,1,1"
