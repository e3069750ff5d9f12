"""Newton polygons of L-polynomials and symmetric slope sequences.

A polygon of height 2g is stored as its sorted multiset of slopes; the break
points and the piecewise-linear hull function are derived from it.  All
arithmetic is over :class:`fractions.Fraction`.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import AsymmetricSlopes, CapExceeded, InvalidPolygon, NonIntegralBreakPoint
from .zeta import LPolynomial

ENUMERATION_CAP = 12


def p_adic_valuation(n: int, p: int) -> int | None:
    """v_p(n), or None for n = 0 (valuation +infinity)."""
    if n == 0:
        return None
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _cross(o, a, b) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def lower_hull(points) -> list[tuple]:
    """Monotone-chain lower convex hull; collinear interior points are dropped."""
    pts = sorted(set(points))
    hull: list[tuple] = []
    for pt in pts:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    return hull


@dataclass(frozen=True)
class NewtonPolygon:
    g: int
    slopes: tuple  # 2g Fractions, non-decreasing

    @classmethod
    def from_slopes(cls, slopes, check: bool = True) -> "NewtonPolygon":
        sl = tuple(sorted(Fraction(s) for s in slopes))
        if len(sl) % 2:
            raise InvalidPolygon("a symmetric polygon has an even number of slopes")
        np_ = cls(len(sl) // 2, sl)
        if check:
            np_.validate()
        return np_

    @classmethod
    def from_breaks(cls, breaks) -> "NewtonPolygon":
        pts = [(Fraction(x), Fraction(y)) for x, y in breaks]
        slopes = []
        for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
            w = x1 - x0
            if w <= 0 or w.denominator != 1:
                raise InvalidPolygon("break abscissae must be increasing integers")
            slopes.extend([(y1 - y0) / w] * int(w))
        return cls.from_slopes(slopes)

    def validate(self) -> None:
        if any(s < 0 or s > 1 for s in self.slopes):
            raise InvalidPolygon("slopes must lie in [0, 1]")
        mult = self.multiplicities()
        for lam, m in mult.items():
            if mult.get(1 - lam, 0) != m:
                raise AsymmetricSlopes(f"slope {lam} has multiplicity {m} but 1-{lam} has {mult.get(1 - lam, 0)}")
        for x, y in self.break_points():
            if y.denominator != 1:
                raise NonIntegralBreakPoint(f"break point ({x}, {y}) is not a lattice point")

    # structure -----------------------------------------------------------
    def multiplicities(self) -> dict:
        return dict(sorted(Counter(self.slopes).items()))

    def break_points(self) -> list[tuple]:
        pts = [(0, Fraction(0))]
        x, y = 0, Fraction(0)
        for lam, m in self.multiplicities().items():
            x += m
            y += lam * m
            pts.append((x, y))
        return pts

    def hull_at(self, x) -> Fraction:
        """Ordinate of the polygon at abscissa x in [0, 2g]."""
        x = Fraction(x)
        if x < 0 or x > 2 * self.g:
            raise ValueError(f"x={x} outside [0, {2 * self.g}]")
        y = Fraction(0)
        pos = 0
        for lam, m in self.multiplicities().items():
            if x <= pos + m:
                return y + lam * (x - pos)
            y += lam * m
            pos += m
        return y

    # invariants ------------------------------------------------------------
    @property
    def p_rank(self) -> int:
        return sum(1 for s in self.slopes if s == 0)

    @property
    def is_supersingular(self) -> bool:
        return all(s == Fraction(1, 2) for s in self.slopes)

    # formats -----------------------------------------------------------------
    def __str__(self) -> str:
        parts = []
        for lam, m in self.multiplicities().items():
            base = str(lam.numerator) if lam.denominator == 1 else f"({lam.numerator}/{lam.denominator})"
            parts.append(f"{base}^{m}")
        return "NP{" + ", ".join(parts) + "}"

    def to_json(self) -> dict:
        return {
            "g": self.g,
            "slopes": [
                [str(l.numerator), str(l.denominator), str(m)] for l, m in self.multiplicities().items()
            ],
            "breaks": [[int(x), _jsonable(y)] for x, y in self.break_points()],
        }

    def ascii(self) -> str:
        """Rough plot, one column per unit of x, with exact labels at the breaks."""
        g = self.g
        width = 2 * g + 1
        rows = []
        marks = {int(x): y for x, y in self.break_points()}
        for level in range(g, -1, -1):
            line = []
            for x in range(width):
                y = self.hull_at(x)
                if round(y) == level:
                    line.append("o" if x in marks else "*")
                else:
                    line.append(" ")
            rows.append(f"{level:>3} |" + "".join(line).rstrip())
        rows.append("    +" + "-" * width)
        rows.append("breaks: " + " ".join(f"({x},{y})" for x, y in self.break_points()))
        return "\n".join(rows)


def _jsonable(y: Fraction):
    return int(y) if y.denominator == 1 else str(y)


# ---------------------------------------------------------------------------


def hull_points(L: LPolynomial) -> list[tuple]:
    """The points (i, v_p(c_i)/r) with zero coefficients omitted."""
    p, r = L.p, L.r
    pts = []
    for i, c in enumerate(L.coeffs):
        v = p_adic_valuation(c, p)
        if v is not None:
            pts.append((i, Fraction(v, r)))
    return pts


def newton_polygon(L: LPolynomial) -> NewtonPolygon:
    if L.g == 0:
        return NewtonPolygon(0, ())
    hull = lower_hull(hull_points(L))
    if hull[0] != (0, 0) or hull[-1] != (2 * L.g, L.g):
        raise InvalidPolygon(f"hull runs from {hull[0]} to {hull[-1]}, expected (0,0) to ({2 * L.g},{L.g})")
    for x, y in hull:
        if y.denominator != 1:
            raise NonIntegralBreakPoint(f"hull vertex ({x}, {y}) is not a lattice point")
    slopes = []
    for (x0, y0), (x1, y1) in zip(hull, hull[1:]):
        slopes.extend([Fraction(y1 - y0, x1 - x0)] * (x1 - x0))
    return NewtonPolygon.from_slopes(slopes)


def p_rank(np_: NewtonPolygon) -> int:
    return np_.p_rank


def is_supersingular(np_: NewtonPolygon) -> bool:
    return np_.is_supersingular


def np_leq(a: NewtonPolygon, b: NewtonPolygon) -> bool:
    """True when a lies on or above b everywhere (a is 'smaller')."""
    if a.g != b.g:
        raise InvalidPolygon(f"cannot compare polygons of dimension {a.g} and {b.g}")
    # both hulls are linear between integer abscissae
    return all(a.hull_at(x) >= b.hull_at(x) for x in range(2 * a.g + 1))


def xi_plus_e(np_: NewtonPolygon, e: int) -> NewtonPolygon:
    if e < 0:
        raise ValueError("e must be non-negative")
    return NewtonPolygon.from_slopes(list(np_.slopes) + [Fraction(0)] * e + [Fraction(1)] * e)


def ordinary(g: int) -> NewtonPolygon:
    return NewtonPolygon.from_slopes([0] * g + [1] * g)


def supersingular(g: int) -> NewtonPolygon:
    return NewtonPolygon.from_slopes([Fraction(1, 2)] * (2 * g))


def two_slope(c: int, d: int, copies: int = 1) -> NewtonPolygon:
    """G_{c,d} + G_{d,c}, repeated ``copies`` times (slopes d/(c+d), c/(c+d))."""
    n = c + d
    return NewtonPolygon.from_slopes([Fraction(d, n)] * (n * copies) + [Fraction(c, n)] * (n * copies))


def _blocks_below_half(limit: int) -> list[tuple[int, int]]:
    """(c, d) with d < c, gcd 1, c + d <= limit: the slopes d/(c+d) below 1/2."""
    out = []
    for n in range(1, limit + 1):
        for d in range(0, n):
            c = n - d
            if d < c and gcd(c, d) == 1:
                out.append((c, d))
    return out


def enumerate_symmetric(g: int, cap: int = ENUMERATION_CAP) -> list[NewtonPolygon]:
    """All symmetric Newton polygons of height 2g, sorted by slope sequence."""
    if g < 0:
        raise ValueError("g must be non-negative")
    if g > cap:
        raise CapExceeded(f"g={g} exceeds the enumeration cap {cap}")
    blocks = _blocks_below_half(g)
    results = []

    def rec(start: int, budget: int, chosen: list):
        # the remaining budget is filled by supersingular blocks of height 2
        slopes = []
        for c, d in chosen:
            n = c + d
            slopes += [Fraction(d, n)] * n + [Fraction(c, n)] * n
        slopes += [Fraction(1, 2)] * (2 * budget)
        results.append(NewtonPolygon.from_slopes(slopes))
        for k in range(start, len(blocks)):
            c, d = blocks[k]
            if c + d <= budget:
                rec(k, budget - (c + d), chosen + [(c, d)])

    rec(0, g, [])
    results.sort(key=lambda np_: np_.slopes)
    return results
