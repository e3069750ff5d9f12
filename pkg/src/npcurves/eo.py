"""Ekedahl-Oort types as final-type sequences nu = [nu_1, ..., nu_g].

With nu_0 = 0 each step nu_{i+1} - nu_i is 0 or 1, so there are 2^g types of
length g.  The Young type is mu_j = #{i : i - nu_i >= j} with zero rows removed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import InvalidEOType


@dataclass(frozen=True)
class EOType:
    nu: tuple

    def __post_init__(self):
        nu = tuple(int(v) for v in self.nu)
        object.__setattr__(self, "nu", nu)
        prev = 0
        for i, v in enumerate(nu, start=1):
            if not (prev <= v <= prev + 1):
                raise InvalidEOType(f"nu={list(nu)} violates nu_i <= nu_(i+1) <= nu_i + 1 at i={i}")
            prev = v

    @property
    def g(self) -> int:
        return len(self.nu)

    @property
    def p_rank(self) -> int:
        return max((i for i, v in enumerate(self.nu, start=1) if v == i), default=0)

    @property
    def a_number(self) -> int:
        return self.g - (self.nu[-1] if self.nu else 0)

    @property
    def dim(self) -> int:
        return sum(self.nu)

    @property
    def codim(self) -> int:
        g = self.g
        return g * (g + 1) // 2 - self.dim

    @property
    def young(self) -> "YoungType":
        return young_type(self)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.nu)) + "]"


@dataclass(frozen=True)
class YoungType:
    mu: tuple

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.mu)) + "}" if self.mu else "{}"


def enumerate_eo(g: int) -> list[EOType]:
    """All 2^g types of length g, ascending lexicographically."""
    if g < 0:
        raise ValueError("g must be non-negative")
    out = []
    for steps in product((0, 1), repeat=g):
        nu, v = [], 0
        for st in steps:
            v += st
            nu.append(v)
        out.append(EOType(tuple(nu)))
    return out


def young_type(t: EOType) -> YoungType:
    g = t.g
    w = [i - v for i, v in enumerate(t.nu, start=1)]
    mu = [sum(1 for x in w if x >= j) for j in range(1, g + 1)]
    return YoungType(tuple(m for m in mu if m))


def from_young(mu, g: int) -> EOType:
    """Inverse of :func:`young_type` for a given length g."""
    mu = tuple(mu)
    if any(a <= b for a, b in zip(mu, mu[1:])) or any(m <= 0 for m in mu) or (mu and mu[0] > g):
        raise InvalidEOType(f"{mu} is not a strictly decreasing sequence bounded by g={g}")
    # i - nu_i is non-decreasing, so {i : i - nu_i >= j} is the final segment of length mu_j
    w = [sum(1 for m in mu if m >= g - i + 1) for i in range(1, g + 1)]
    return EOType(tuple(i - x for i, x in enumerate(w, start=1)))


def eo_p_rank(t: EOType) -> int:
    return t.p_rank


def eo_a_number(t: EOType) -> int:
    return t.a_number


def eo_dim(t: EOType) -> int:
    return t.dim


def eo_codim(t: EOType) -> int:
    return t.codim


def add_ordinary(t: EOType, e: int) -> EOType:
    """L^e + t: the type [1, 2, ..., e, nu_1 + e, ..., nu_g + e]."""
    if e < 0:
        raise ValueError("e must be non-negative")
    return EOType(tuple(range(1, e + 1)) + tuple(v + e for v in t.nu))


# ---------------------------------------------------------------------------
# names and the small-genus tables

# p-rank 0 types with a conventional name; larger ones are printed as raw nu
_LOCAL_NAMES = {
    (0, 1, 1): "I_{3,2}",
    (0, 0, 1): "I_{1,1} ⊕ I_{2,1}",
}

# display-only Dieudonne module strings for g <= 3, keyed by nu
DIEUDONNE = {
    (1,): "D(L)",
    (0,): "D_{1,1}",
    (1, 2): "D(L)^2",
    (1, 1): "D(L) ⊕ D_{1,1}",
    (0, 1): "E/E(F^2+V^2)",
    (0, 0): "(D_{1,1})^2",
    (1, 2, 3): "D(L)^3",
    (1, 2, 2): "D(L)^2 ⊕ D_{1,1}",
    (1, 1, 2): "D(L) ⊕ E/E(F^2+V^2)",
    (1, 1, 1): "D(L) ⊕ (D_{1,1})^2",
    (0, 1, 2): "E/E(F^3+V^3)",
    (0, 1, 1): "E/E(F^2+V) ⊕ E/E(V^2+F)",
    (0, 0, 1): "D_{1,1} ⊕ E/E(F^2+V^2)",
    (0, 0, 0): "(D_{1,1})^3",
}

# display-only Newton polygon column of the genus-2 table
NEWTON_G2 = {
    (1, 2): "0,0,1,1",
    (1, 1): "0,1/2,1/2,1",
    (0, 1): "1/2,1/2,1/2,1/2",
    (0, 0): "1/2,1/2,1/2,1/2",
}


def _power(name: str, k: int) -> str:
    if k == 1:
        return name
    if "_" in name:
        return f"({name})^{k}"
    return f"{name}^{k}"


def _local_name(nu: tuple) -> str | None:
    h = len(nu)
    if h == 0:
        return ""
    if nu == tuple(range(h)):
        return "I_{%d,1}" % h
    if all(v == 0 for v in nu):
        return _power("I_{1,1}", h)
    return _LOCAL_NAMES.get(nu)


def name(t: EOType) -> str:
    """Conventional name: L^f plus the p-rank 0 part, or the raw sequence."""
    f = t.p_rank
    rest = tuple(v - f for v in t.nu[f:])
    local = _local_name(rest)
    if local is None:
        return str(t)
    parts = []
    if f:
        parts.append(_power("L", f))
    if local:
        parts.append(local)
    return " ⊕ ".join(parts)


@dataclass(frozen=True)
class TableRow:
    name: str
    codim: int
    f: int
    a: int
    nu: tuple
    mu: tuple
    dieudonne: str
    newton: str | None = None

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "cod": self.codim,
            "f": self.f,
            "a": self.a,
            "nu": list(self.nu),
            "mu": list(self.mu),
            "dieudonne": self.dieudonne,
        }
        if self.newton is not None:
            out["newton"] = self.newton
        return out


def table(g: int) -> list[TableRow]:
    """One row per type, ordered by codimension then by descending nu."""
    rows = []
    for t in enumerate_eo(g):
        rows.append(
            TableRow(
                name=name(t),
                codim=t.codim,
                f=t.p_rank,
                a=t.a_number,
                nu=t.nu,
                mu=young_type(t).mu,
                dieudonne=DIEUDONNE.get(t.nu, ""),
                newton=NEWTON_G2.get(t.nu) if g == 2 else None,
            )
        )
    rows.sort(key=lambda r: (r.codim, tuple(-v for v in r.nu)))
    return rows


def golden_tables(g: int) -> list[TableRow]:
    if g not in (2, 3):
        raise ValueError("tables are available for g = 2 and g = 3")
    return table(g)


def format_table(rows: list[TableRow]) -> str:
    header = ("Name", "cod", "f", "a", "nu", "mu", "Dieudonne module")
    body = [
        (r.name, str(r.codim), str(r.f), str(r.a), "[" + ",".join(map(str, r.nu)) + "]",
         "{" + ",".join(map(str, r.mu)) + "}" if r.mu else "{}", r.dieudonne)
        for r in rows
    ]
    widths = [max(len(h), *(len(b[i]) for b in body)) for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for b in body:
        lines.append("  ".join(c.ljust(w) for c, w in zip(b, widths)).rstrip())
    return "\n".join(lines)
