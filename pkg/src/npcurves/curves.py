"""Curve families and their point counts over extensions of the base field.

Supported families::

    LinearizedAS   y^(p^h) + e*y = f(x), e = -1 for Artin-Schreier (h = 1)
    Hermitian      y^q + y = x^(q+1) over F_q
    Hyperelliptic  y^2 = f(x), p odd, f squarefree of odd degree
    Legendre       y^2 = x(x-1)(x-lambda), p odd

Affine counts for the additive families use the linear structure of
A(y) = y^(p^h) + e*y: every x with f(x) defined contributes #ker(A) when
f(x) lies in the image of A and nothing otherwise.  For Artin-Schreier curves
the image of y^p - y is exactly the trace-zero hyperplane.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from .errors import (
    DegenerateLambda,
    EvenDegreeModel,
    IrrationalPole,
    NotSquarefree,
    ParseError,
    ReducibleCurve,
    UnsupportedCurve,
    WildPoleOrder,
)
from .ffield import DEFAULT_CAP, Field, embedding, is_prime, make_field
from .poly import (
    RationalFunction,
    degree,
    parse_expression,
    pderiv,
    pdivmod,
    pformat,
    pgcd,
    pmap,
    pmul,
    parse_poly,
)

LINEARIZED_AS = "LinearizedAS"
HERMITIAN = "Hermitian"
HYPERELLIPTIC = "Hyperelliptic"
LEGENDRE = "Legendre"
FAMILIES = (LINEARIZED_AS, HERMITIAN, HYPERELLIPTIC, LEGENDRE)


@dataclass(frozen=True)
class Pole:
    location: int | None  # code in the base field, None for infinity
    order: int


@dataclass(frozen=True)
class CurveSpec:
    family: str
    base: Field
    f: RationalFunction
    h: int = 1
    sign: int = -1
    lam: int | None = None
    poles: tuple = dc_field(default=(), compare=False)
    genus: int = dc_field(default=-1, compare=False)

    def __post_init__(self):
        validate(self)

    @property
    def p(self) -> int:
        return self.base.p

    @property
    def q(self) -> int:
        return self.base.size

    def describe(self) -> str:
        F = self.base
        if self.family == HERMITIAN:
            return f"hermitian q={self.q}"
        if self.family == LEGENDRE:
            return f"legendre q={self.q} lambda={F.format(self.lam)}"
        if self.family == HYPERELLIPTIC:
            return f"hyp q={self.q} f={self.f}"
        if self.h == 1 and self.sign == -1:
            return f"as p={self.p} q={self.q} f={self.f}"
        return f"lin h={self.h} q={self.q} f={self.f}"

    def equation(self) -> str:
        if self.family in (HYPERELLIPTIC, LEGENDRE):
            return f"y^2 = {self.f}"
        Q = self.p**self.h
        if self.p == 2:
            return f"y^{Q} + y = {self.f}"
        op = "+" if self.sign == 1 else "-"
        return f"y^{Q} {op} y = {self.f}"

    def __str__(self) -> str:
        return self.describe()

    def points_at_infinity(self, s: int) -> int:
        """Points of the smooth model over F_{q^s} that the affine chart misses.

        For the additive families this includes the single totally ramified
        point over each finite pole of f as well as the fiber over infinity.
        """
        if self.family in (HYPERELLIPTIC, LEGENDRE):
            return 1
        finite = sum(1 for pl in self.poles if pl.location is not None)
        if any(pl.location is None for pl in self.poles):
            return finite + 1
        E = make_field(self.p, self.base.r * s)
        emb = embedding(self.base, E)
        num, den = self.f.num, self.f.den
        if len(num) == len(den):
            c = self.base.div(num[-1], den[-1])
        else:
            c = 0
        kappa, funcs = _additive_image(E, self.h, self.sign)
        return finite + (kappa if _in_image(E, funcs, emb(c)) else 0)


# ---------------------------------------------------------------------------
# validation and genus


def _poles_of(F: Field, f: RationalFunction) -> list[Pole]:
    poles: list[Pole] = []
    den = list(f.den)
    rest = den
    if degree(den) > 0:
        for b in range(F.size):
            m = 0
            lin = [F.neg(b), 1]
            while degree(rest) > 0:
                quo, rem = pdivmod(F, rest, lin)
                if rem:
                    break
                rest = quo
                m += 1
            if m:
                poles.append(Pole(b, m))
            if degree(rest) == 0:
                break
        if degree(rest) > 0:
            raise IrrationalPole(
                f"denominator of f has a factor without roots in {F!r}; poles must be rational"
            )
    d_inf = degree(list(f.num)) - degree(den)
    if d_inf > 0:
        poles.append(Pole(None, d_inf))
    return poles


def validate(spec: CurveSpec) -> None:
    """Check the family invariants and fill in poles and genus (raises on failure)."""
    F = spec.base
    p = F.p
    fam = spec.family
    if fam not in FAMILIES:
        raise UnsupportedCurve(f"unknown family {fam!r}")
    if spec.f.field != F:
        raise UnsupportedCurve("f is defined over a different field")
    if fam in (HYPERELLIPTIC, LEGENDRE):
        if p == 2:
            raise UnsupportedCurve("y^2 = f(x) models need odd characteristic")
        if fam == LEGENDRE:
            if spec.lam is None or spec.lam in (0, 1):
                raise DegenerateLambda("lambda must avoid 0 and 1")
        if not spec.f.is_polynomial:
            raise UnsupportedCurve("hyperelliptic f must be a polynomial")
        f = list(spec.f.num)
        d = degree(f)
        if d < 1:
            raise UnsupportedCurve("hyperelliptic f must be non-constant")
        if degree(pgcd(F, f, pderiv(F, f))) > 0:
            raise NotSquarefree(f"f = {spec.f} has a repeated root (gcd(f, f') != 1)")
        if d % 2 == 0:
            raise EvenDegreeModel("only odd-degree models y^2 = f(x) are supported")
        object.__setattr__(spec, "poles", (Pole(None, d),))
        object.__setattr__(spec, "genus", (d - 1) // 2)
        return

    if spec.h < 1:
        raise UnsupportedCurve("h must be >= 1")
    if spec.sign not in (1, -1):
        raise UnsupportedCurve("sign must be +1 or -1")
    if spec.f.is_constant:
        raise ReducibleCurve("constant f gives a geometrically reducible curve")
    if spec.h > 1:
        Q = p**spec.h
        expect = RationalFunction.make(F, [0] * (Q + 1) + [1])
        if spec.f != expect or spec.sign != 1:
            raise UnsupportedCurve(f"for h > 1 only y^{Q} + y = x^{Q + 1} is supported")
    poles = _poles_of(F, spec.f)
    for pl in poles:
        if pl.order % p == 0:
            where = "infinity" if pl.location is None else F.format(pl.location)
            raise WildPoleOrder(f"pole of order {pl.order} at {where} is divisible by p={p}")
    two_g = (p**spec.h - 1) * (sum(pl.order + 1 for pl in poles) - 2)
    object.__setattr__(spec, "poles", tuple(poles))
    object.__setattr__(spec, "genus", two_g // 2)


def genus(spec: CurveSpec) -> int:
    return spec.genus


# ---------------------------------------------------------------------------
# constructors


def artin_schreier(base: Field, f: RationalFunction | str) -> CurveSpec:
    """y^p - y = f(x) over ``base``."""
    if isinstance(f, str):
        f = parse_expression(f, base)
    return CurveSpec(LINEARIZED_AS, base, f, h=1, sign=-1)


def linearized(base: Field, h: int, f: RationalFunction | str, sign: int = 1) -> CurveSpec:
    if isinstance(f, str):
        f = parse_expression(f, base)
    return CurveSpec(LINEARIZED_AS, base, f, h=h, sign=sign)


def hermitian(q: int) -> CurveSpec:
    p, r = prime_power(q)
    F = make_field(p, r)
    f = RationalFunction.make(F, [0] * (q + 1) + [1])
    return CurveSpec(HERMITIAN, F, f, h=r, sign=1)


def hyperelliptic(base: Field, f: list | str) -> CurveSpec:
    if isinstance(f, str):
        f = parse_poly(f, base)
    return CurveSpec(HYPERELLIPTIC, base, RationalFunction.make(base, f))


def legendre(base: Field, lam: int) -> CurveSpec:
    F = base
    cubic = pmul(F, pmul(F, [0, 1], [F.neg(1), 1]), [F.neg(lam), 1])
    return CurveSpec(LEGENDRE, F, RationalFunction.make(F, cubic), lam=lam)


def prime_power(q: int) -> tuple[int, int]:
    if not isinstance(q, int) or q < 2:
        raise ParseError(f"{q!r} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    r = 0
    n = q
    while n % p == 0:
        n //= p
        r += 1
    if n != 1 or not is_prime(p):
        raise ParseError(f"{q} is not a prime power")
    return p, r


# ---------------------------------------------------------------------------
# counting kernels


@lru_cache(maxsize=64)
def _additive_image(E: Field, h: int, sign: int) -> tuple[int, tuple]:
    """Kernel size of A(y) = y^(p^h) + sign*y on E and functionals cutting out its image.

    Returns (kappa, functionals); z is in the image iff every functional
    (a coordinate vector over F_p) has zero dot product with z.
    """
    p, m = E.p, E.r
    Q = p**h
    sgn = E.from_int(sign)
    cols = []
    for i in range(m):
        b = p**i
        cols.append(E.digits(E.add(E.pow(b, Q), E.mul(sgn, b))))
    # rows of M^T are the images of basis vectors; left null space of M is
    # the null space of M^T.
    mat = [[cols[j][i] for j in range(m)] for i in range(m)]  # mat[i][j] = M[i][j]
    null = _left_null_space(mat, p)
    rank = m - len(null)
    return p ** (m - rank), tuple(null)


def _left_null_space(mat: list[list[int]], p: int) -> list[list[int]]:
    """Basis of {w : w^T M = 0} over F_p for square M."""
    n = len(mat)
    # transpose, then compute null space of M^T by row reduction
    A = [[mat[i][j] % p for i in range(n)] for j in range(n)]
    pivots = []
    row = 0
    for col in range(n):
        piv = next((r for r in range(row, n) if A[r][col]), None)
        if piv is None:
            continue
        A[row], A[piv] = A[piv], A[row]
        inv = pow(A[row][col], p - 2, p)
        A[row] = [(v * inv) % p for v in A[row]]
        for r in range(n):
            if r != row and A[r][col]:
                c = A[r][col]
                A[r] = [(a - c * b) % p for a, b in zip(A[r], A[row])]
        pivots.append(col)
        row += 1
        if row == n:
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fcol in free:
        w = [0] * n
        w[fcol] = 1
        for r, pc in enumerate(pivots):
            w[pc] = (-A[r][fcol]) % p
        basis.append(w)
    return basis


def _in_image(E: Field, funcs: tuple, z: int) -> bool:
    if not funcs:
        return True
    p = E.p
    if p == 2:
        for w in funcs:
            mask = sum(1 << i for i, c in enumerate(w) if c)
            if (z & mask).bit_count() & 1:
                return False
        return True
    ds = E.digits(z)
    return all(sum(a * b for a, b in zip(w, ds)) % p == 0 for w in funcs)


@lru_cache(maxsize=32)
def _square_counts(E: Field) -> bytes:
    counts = bytearray(E.size)
    for y in range(E.size):
        counts[E.mul(y, y)] += 1
    return bytes(counts)


def _extension(spec: CurveSpec, s: int, cap: int) -> Field:
    E = make_field(spec.p, spec.base.r * s)
    E.codes(cap)  # raises when over the cap
    return E


def affine_count(spec: CurveSpec, s: int, cap: int = DEFAULT_CAP) -> int:
    """Number of affine solutions (x, y) over F_{q^s}."""
    if s < 1:
        raise ValueError("s must be >= 1")
    E = _extension(spec, s, cap)
    emb = embedding(spec.base, E)
    num = pmap(list(spec.f.num), emb)
    den = pmap(list(spec.f.den), emb)
    horner = E.horner

    if spec.family in (HYPERELLIPTIC, LEGENDRE):
        sq = _square_counts(E)
        return sum(sq[horner(num, x)] for x in range(E.size))

    if len(den) == 1:
        values = (horner(num, x) for x in range(E.size))
    else:
        values = _quotients(E, num, den)

    if spec.h == 1 and spec.sign == -1:
        # y^p - y = z is solvable (with p solutions) iff Tr(z) = 0
        tr = E.trace
        return spec.p * sum(1 for z in values if z is not None and tr(z) == 0)

    kappa, funcs = _additive_image(E, spec.h, spec.sign)
    return kappa * sum(1 for z in values if z is not None and _in_image(E, funcs, z))


def _quotients(E: Field, num, den):
    """num(x)/den(x) for every x in E, None at poles.

    Uses one field inversion for the whole batch (prefix products) instead of
    one per element.
    """
    horner, mul = E.horner, E.mul
    dens = [horner(den, x) for x in range(E.size)]
    prefix = []
    acc = 1
    for d in dens:
        if d:
            acc = mul(acc, d)
        prefix.append(acc)
    inv = E.inv(acc)
    out = [None] * E.size
    for x in range(E.size - 1, -1, -1):
        d = dens[x]
        if not d:
            continue
        before = prefix[x - 1] if x else 1
        out[x] = mul(horner(num, x), mul(inv, before))
        inv = mul(inv, d)
    return out


def point_count(spec: CurveSpec, s: int, cap: int = DEFAULT_CAP) -> int:
    """N_s = #X(F_{q^s}) for the smooth projective model."""
    return affine_count(spec, s, cap) + spec.points_at_infinity(s)


# ---------------------------------------------------------------------------
# grammar

_KEY = re.compile(r"(\w+)=")


def _kv(text: str) -> tuple[str, dict[str, str]]:
    text = text.strip()
    if not text:
        raise ParseError("empty curve description")
    head, _, rest = text.partition(" ")
    keys = list(_KEY.finditer(rest))
    out = {}
    if rest.strip() and (not keys or rest[: keys[0].start()].strip()):
        raise ParseError(f"malformed curve arguments {rest!r}")
    for i, m in enumerate(keys):
        end = keys[i + 1].start() if i + 1 < len(keys) else len(rest)
        out[m.group(1)] = rest[m.end() : end].strip()
    return head.lower(), out


def _int(opts: dict, key: str) -> int:
    try:
        return int(opts[key])
    except KeyError:
        raise ParseError(f"missing {key}=") from None
    except ValueError:
        raise ParseError(f"{key}= must be an integer, got {opts[key]!r}") from None


def _base(opts: dict) -> Field:
    if "q" in opts:
        p, r = prime_power(_int(opts, "q"))
        if "p" in opts and _int(opts, "p") != p:
            raise ParseError(f"q={opts['q']} is not a power of p={opts['p']}")
        return make_field(p, r)
    if "p" in opts:
        p = _int(opts, "p")
        if not is_prime(p):
            raise ParseError(f"p={p} is not prime")
        return make_field(p, 1)
    raise ParseError("need q= or p=")


def parse_curve(text: str) -> CurveSpec:
    """Parse the textual curve grammar, e.g. ``as p=2 q=2 f=x^3+x``."""
    head, opts = _kv(text)
    allowed = {
        "as": {"p", "q", "f"},
        "lin": {"h", "p", "q", "f"},
        "hermitian": {"q"},
        "hyp": {"p", "q", "f"},
        "legendre": {"p", "q", "lambda"},
    }
    if head not in allowed:
        raise ParseError(f"unknown curve family {head!r}; expected one of {sorted(allowed)}")
    extra = set(opts) - allowed[head]
    if extra:
        raise ParseError(f"unexpected keys for {head}: {sorted(extra)}")
    if head == "hermitian":
        return hermitian(_int(opts, "q"))
    F = _base(opts)
    if head == "legendre":
        if "lambda" not in opts:
            raise ParseError("missing lambda=")
        lam = parse_expression(opts["lambda"], F, allow_x=False).as_constant().code
        return legendre(F, lam)
    if "f" not in opts:
        raise ParseError("missing f=")
    if head == "as":
        return artin_schreier(F, opts["f"])
    if head == "lin":
        return linearized(F, _int(opts, "h"), opts["f"], sign=1)
    return hyperelliptic(F, opts["f"])


def format_poly(F: Field, a) -> str:
    return pformat(F, list(a))
