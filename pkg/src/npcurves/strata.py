"""Dimension counts for p-rank, Newton polygon and Ekedahl-Oort strata."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, gcd

from .errors import DomainError, NotTwoSlope
from .npoly import NewtonPolygon, enumerate_symmetric, xi_plus_e


def moduli_dim(g: int) -> int:
    """dim A_g = g(g+1)/2."""
    return g * (g + 1) // 2


def sdim(xi: NewtonPolygon) -> int:
    """#{(x, y) in Z^2 : y < x <= g, y >= xi(x)}.

    Only 1 <= x <= g contributes: for x <= 0 the conditions y < x and
    y >= xi(x) >= 0 are incompatible.
    """
    total = 0
    for x in range(1, xi.g + 1):
        lo = ceil(xi.hull_at(x))
        if lo < x:
            total += x - lo
    return total


def codim(xi: NewtonPolygon) -> int:
    return moduli_dim(xi.g) - sdim(xi)


def two_slope_shape(xi: NewtonPolygon) -> tuple[int, int]:
    """(m, n) when xi has exactly the slopes n/(m+n) < m/(m+n), else raise."""
    mult = xi.multiplicities()
    if len(mult) != 2:
        raise NotTwoSlope(f"{xi} does not have exactly two slopes")
    low, high = sorted(mult)
    if low + high != 1:
        raise NotTwoSlope(f"{xi} is not symmetric with two slopes")
    n, total = low.numerator, low.denominator
    m = total - n
    if not (m > n and gcd(m, n) == 1):
        raise NotTwoSlope(f"{xi}: need m > n with gcd(m, n) = 1")
    return m, n


def central_leaf_dim(xi: NewtonPolygon) -> int:
    """#{(x, y) : 0 <= x <= g, n/(m+n) x <= y < m/(m+n) x} for a two-slope polygon."""
    m, n = two_slope_shape(xi)
    lo_slope = Fraction(n, m + n)
    hi_slope = Fraction(m, m + n)
    total = 0
    for x in range(0, xi.g + 1):
        lo = ceil(lo_slope * x)
        hi = hi_slope * x
        # y < hi with hi rational: largest admissible y is ceil(hi) - 1
        top = ceil(hi) - 1
        if top >= lo:
            total += top - lo + 1
    return total


def isogeny_leaf_dim(xi: NewtonPolygon) -> int:
    return sdim(xi) - central_leaf_dim(xi)


@dataclass(frozen=True)
class StratumReport:
    xi: NewtonPolygon
    sdim: int
    codim: int
    c: int | None = None
    i: int | None = None

    def to_json(self) -> dict:
        out = {"slopes": str(self.xi), "g": self.xi.g, "sdim": self.sdim, "codim": self.codim}
        if self.c is not None:
            out["c"] = self.c
            out["i"] = self.i
        return out


def report(xi: NewtonPolygon) -> StratumReport:
    s = sdim(xi)
    try:
        c = central_leaf_dim(xi)
    except NotTwoSlope:
        return StratumReport(xi, s, moduli_dim(xi.g) - s)
    return StratumReport(xi, s, moduli_dim(xi.g) - s, c, s - c)


def all_reports(g: int) -> list[StratumReport]:
    return [report(xi) for xi in enumerate_symmetric(g)]


def delta_g(g: int) -> int:
    """Length g(g+1)/2 - floor(g^2/4) of a maximal chain from ordinary to supersingular."""
    return moduli_dim(g) - g * g // 4


def first_g_exceeding_moduli_dim(search_limit: int = 1000) -> int:
    """Least g >= 2 with delta_g > 3g - 3 = dim M_g.

    g = 1 is skipped because dim M_1 = 1, not 3g - 3 = 0.  delta_g - (3g - 3)
    grows like g^2/4, so once positive it stays positive.
    """
    for g in range(2, search_limit + 1):
        if delta_g(g) > 3 * g - 3:
            return g
    raise AssertionError("no g found below the search limit")  # pragma: no cover


def p_rank_stratum_dims(g: int, f: int) -> tuple[int, int, int]:
    """(dim A_g^f, dim M_g^f, dim H_g^f) = (g(g+1)/2 - (g-f), 2g-3+f, g-1+f)."""
    if not 0 <= f <= g:
        raise DomainError(f"need 0 <= f <= g, got f={f}, g={g}")
    if g < 2:
        raise DomainError("curve strata need g >= 2")
    return moduli_dim(g) - (g - f), 2 * g - 3 + f, g - 1 + f


@dataclass(frozen=True)
class InvarianceReport:
    xi: NewtonPolygon
    codim: int
    verified_upto: int
    counterexample: int | None = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None


def codim_invariance_check(xi: NewtonPolygon, e_max: int) -> InvarianceReport:
    """Check codim(xi^{+e}) = codim(xi) for e = 0..e_max."""
    base = codim(xi)
    for e in range(e_max + 1):
        if codim(xi_plus_e(xi, e)) != base:
            return InvarianceReport(xi, base, e - 1, e)
    return InvarianceReport(xi, base, e_max)
