"""Published reference values, re-derived by the library.

``run_all`` is what ``npcurves selftest`` executes.  Each check returns
normally on success; any exception or false assertion is reported as a
failure with its message.
"""

from __future__ import annotations

import traceback
from dataclasses import dataclass
from fractions import Fraction

from . import construct, curves, eo, npoly, strata, zeta
from .ffield import DEFAULT_CAP, make_field, norm_fibers

CHECKS = []


def check(fn):
    CHECKS.append(fn)
    return fn


@dataclass(frozen=True)
class Result:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


def _L(text: str, cap: int):
    return zeta.l_polynomial(curves.parse_curve(text), cap=cap)


def _binom_power(q: int, g: int) -> tuple:
    """Coefficients of (1 + q T^2)^g."""
    from math import comb

    out = [0] * (2 * g + 1)
    for k in range(g + 1):
        out[2 * k] = comb(g, k) * q**k
    return tuple(out)


# --- finite fields -----------------------------------------------------------


@check
def trace_fibers_f4(cap):
    F = make_field(2, 2)
    fib = [0, 0]
    for x in F.codes(cap):
        fib[F.trace(x)] += 1
    assert fib == [2, 2], fib


@check
def norm_fibers_q2(cap):
    fib = norm_fibers(make_field(2, 1), make_field(2, 2), cap)
    assert fib == {1: 3}, fib


# --- curves and zeta -----------------------------------------------------------


@check
def genus_examples(cap):
    assert curves.parse_curve("as p=3 f=x*x^3").genus == 3
    assert curves.parse_curve("hermitian q=4").genus == 6
    assert curves.parse_curve("hermitian q=3").genus == 3


@check
def hermitian_q2_affine_count(cap):
    spec = curves.parse_curve("hermitian q=2")
    assert curves.affine_count(spec, 2, cap) == 8
    assert curves.point_count(spec, 2, cap) == 9


@check
def y0_char2_lpoly(cap):
    L = _L("as p=2 q=2 f=x^3", cap)
    assert L.coeffs == (1, 0, 2), L.coeffs
    assert zeta.is_supersingular_elliptic(L)


@check
def hermitian_lpolys(cap):
    for q in (2, 3, 4):
        L = _L(f"hermitian q={q}", cap)
        g = q * (q - 1) // 2
        assert L.coeffs == _binom_power(q, g), (q, L.coeffs)
        assert npoly.newton_polygon(L).is_supersingular


@check
def j1728_and_j0(cap):
    assert zeta.is_supersingular_elliptic(_L("hyp p=3 f=x^3+x", cap))
    assert zeta.is_supersingular_elliptic(_L("hyp p=5 f=x^3+1", cap))


# --- Newton polygons -------------------------------------------------------


@check
def newton_examples(cap):
    half = Fraction(1, 2)
    assert npoly.newton_polygon(zeta.LPolynomial(2, 1, (1, 0, 2))).slopes == (half, half)
    assert npoly.newton_polygon(zeta.LPolynomial(3, 3, _binom_power(3, 3))).slopes == (half,) * 6
    assert npoly.supersingular(5).p_rank == 0
    xi = npoly.NewtonPolygon.from_slopes([0] + [Fraction(1, 4)] * 4 + [Fraction(3, 4)] * 4 + [1])
    assert xi.p_rank == 1
    assert npoly.xi_plus_e(npoly.two_slope(3, 1), 1) == xi


@check
def newton_enumeration(cap):
    assert len(npoly.enumerate_symmetric(2)) == 3
    assert len(npoly.enumerate_symmetric(3)) == 5
    for g in range(1, 6):
        sg = npoly.supersingular(g)
        assert all(npoly.np_leq(sg, xi) for xi in npoly.enumerate_symmetric(g))


@check
def blache_curves(cap):
    p1 = npoly.newton_polygon(_L("as p=2 q=2 f=x^23+x^21+x^17+x^7+x^5", cap))
    assert p1.multiplicities() == {Fraction(5, 11): 11, Fraction(6, 11): 11}, str(p1)
    assert not p1.is_supersingular
    p2 = npoly.newton_polygon(_L("as p=2 q=2 f=x^25+x^9", cap))
    assert p2.multiplicities() == {Fraction(5, 12): 12, Fraction(7, 12): 12}, str(p2)


# --- Ekedahl-Oort ------------------------------------------------------------

# (name, cod, f, a, nu, mu) as published for g = 2 and g = 3
PUBLISHED_G2 = [
    ("L^2", 0, 2, 0, (1, 2), ()),
    ("L ⊕ I_{1,1}", 1, 1, 1, (1, 1), (1,)),
    ("I_{2,1}", 2, 0, 1, (0, 1), (2,)),
    ("(I_{1,1})^2", 3, 0, 2, (0, 0), (2, 1)),
]
PUBLISHED_G3 = [
    ("L^3", 0, 3, 0, (1, 2, 3), ()),
    ("L^2 ⊕ I_{1,1}", 1, 2, 1, (1, 2, 2), (1,)),
    ("L ⊕ I_{2,1}", 2, 1, 1, (1, 1, 2), (2,)),
    ("L ⊕ (I_{1,1})^2", 3, 1, 2, (1, 1, 1), (2, 1)),
    ("I_{3,1}", 3, 0, 1, (0, 1, 2), (3,)),
    ("I_{3,2}", 4, 0, 2, (0, 1, 1), (3, 1)),
    ("I_{1,1} ⊕ I_{2,1}", 5, 0, 2, (0, 0, 1), (3, 2)),
    ("(I_{1,1})^3", 6, 0, 3, (0, 0, 0), (3, 2, 1)),
]


@check
def eo_tables(cap):
    for g, published in ((2, PUBLISHED_G2), (3, PUBLISHED_G3)):
        rows = [(r.name, r.codim, r.f, r.a, r.nu, r.mu) for r in eo.golden_tables(g)]
        assert rows == published, rows


@check
def eo_examples(cap):
    assert len(eo.enumerate_eo(3)) == 8
    for r in range(1, 8):
        t = eo.EOType(tuple(range(r)))
        assert eo.young_type(t).mu == (r,)
        assert t.p_rank == 0 and t.a_number == 1
    assert eo.add_ordinary(eo.EOType((0, 1, 2, 3)), 1).nu == (1, 1, 2, 3, 4)
    assert eo.add_ordinary(eo.EOType((0,)), 2).nu == (1, 2, 2)


# --- strata ------------------------------------------------------------------


@check
def leaf_dimensions(cap):
    for (m, n), expect in (((3, 1), (6, 5, 1)), ((3, 2), (7, 3, 4))):
        r = strata.report(npoly.two_slope(m, n))
        assert (r.sdim, r.c, r.i) == expect, (r.sdim, r.c, r.i)


@check
def supersingular_locus_dims(cap):
    for g in range(1, 13):
        assert strata.sdim(npoly.supersingular(g)) == g * g // 4
        assert strata.sdim(npoly.ordinary(g)) == g * (g + 1) // 2


@check
def delta_g_threshold(cap):
    assert strata.first_g_exceeding_moduli_dim() == 9


@check
def xi4_codimension(cap):
    rep = strata.codim_invariance_check(npoly.two_slope(3, 1), 5)
    assert rep.ok and rep.codim == 4


# --- construction --------------------------------------------------------------


@check
def ckp_factors_supersingular(cap):
    for p, delta in ((2, 1), (2, 2), (2, 3), (3, 1)):
        plan = construct.ckp_plan(p, delta)
        specs = construct.instantiate_factors(plan, cap=cap)
        construct.verify_supersingular_factors(specs, cap=cap)


@check
def deuring_shafarevich(cap):
    for p in (2, 3, 5, 7):
        assert construct.ds_p_rank(p, 0, [p]) == 0


@check
def igusa(cap):
    for p, lam, classes in ((3, 1, 1), (5, 2, 1), (7, 3, 1), (11, 5, 2), (13, 6, 1)):
        assert construct.igusa_counts(p, cap) == (lam, classes), p
        assert construct.supersingular_class_count(p) == classes


@check
def catalog_consistent(cap):
    data = construct.catalog()
    blache = {c["name"]: c for c in data["curves"]}["blache-1"]
    assert blache["slopes"] == [["5", "11", "11"], ["6", "11", "11"]]
    assert {r["p"]: r["lambda_count"] for r in data["igusa"]}[5] == 2


def run_all(cap: int = DEFAULT_CAP) -> list[Result]:
    results = []
    for fn in CHECKS:
        try:
            fn(cap)
        except Exception as exc:  # noqa: BLE001 - report every failure
            detail = f"{type(exc).__name__}: {exc}" or traceback.format_exc(limit=1)
            results.append(Result(fn.__name__, False, detail))
        else:
            results.append(Result(fn.__name__, True))
    return results
