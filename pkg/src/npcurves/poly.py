"""Dense polynomials and rational functions over a :class:`Field`, plus the
small expression language used by the curve grammar.

Polynomials are lists of element codes, lowest degree first, with no trailing
zeros (the zero polynomial is ``[]``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError
from .ffield import Field, FieldElement

Poly = list


def trim(a: Poly) -> Poly:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def degree(a: Poly) -> int:
    return len(a) - 1 if a else -1


def padd(F: Field, a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    out = [F.add(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)]
    return trim(out)


def pneg(F: Field, a: Poly) -> Poly:
    return [F.neg(c) for c in a]


def psub(F: Field, a: Poly, b: Poly) -> Poly:
    return padd(F, a, pneg(F, b))


def pmul(F: Field, a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
    return trim(out)


def pscale(F: Field, c: int, a: Poly) -> Poly:
    return trim([F.mul(c, x) for x in a])


def pdivmod(F: Field, a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db = degree(b)
    inv_lead = F.inv(b[-1])
    quo = [0] * max(len(a) - db, 0)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c:
            c = F.mul(c, inv_lead)
            quo[k - db] = c
            for i in range(db + 1):
                a[k - db + i] = F.sub(a[k - db + i], F.mul(c, b[i]))
    return trim(quo), trim(a[:db])


def monic(F: Field, a: Poly) -> Poly:
    if not a:
        return a
    return pscale(F, F.inv(a[-1]), a)


def pgcd(F: Field, a: Poly, b: Poly) -> Poly:
    a, b = trim(a), trim(b)
    while b:
        a, b = b, pdivmod(F, a, b)[1]
    return monic(F, a)


def pderiv(F: Field, a: Poly) -> Poly:
    return trim([F.scale(i, c) for i, c in enumerate(a)][1:])


def ppow(F: Field, a: Poly, n: int) -> Poly:
    out: Poly = [1]
    while n:
        if n & 1:
            out = pmul(F, out, a)
        n >>= 1
        if n:
            a = pmul(F, a, a)
    return out


def peval(F: Field, a: Poly, x: int) -> int:
    return F.horner(a, x)


def pmap(a: Poly, emb) -> Poly:
    return [emb(c) for c in a]


def pformat(F: Field, a: Poly, var: str = "x") -> str:
    if not a:
        return "0"
    terms = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if c == 0:
            continue
        cs = F.format(c)
        if "+" in cs:
            cs = f"({cs})"
        if i == 0:
            terms.append(cs)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            terms.append(mono if c == 1 else f"{cs}*{mono}")
    return "+".join(terms)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RationalFunction:
    """num/den over ``field`` in lowest terms with monic denominator."""

    field: Field
    num: tuple
    den: tuple

    @classmethod
    def make(cls, F: Field, num: Poly, den: Poly = (1,)) -> "RationalFunction":
        num, den = trim(num), trim(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        g = pgcd(F, num, den) if num else list(monic(F, den))
        if degree(g) > 0:
            num = pdivmod(F, num, g)[0]
            den = pdivmod(F, den, g)[0]
        lead = F.inv(den[-1])
        return cls(F, tuple(pscale(F, lead, num)), tuple(pscale(F, lead, den)))

    @classmethod
    def constant(cls, F: Field, c: int) -> "RationalFunction":
        return cls.make(F, [c] if c else [])

    @property
    def is_polynomial(self) -> bool:
        return len(self.den) == 1

    @property
    def is_constant(self) -> bool:
        return self.is_polynomial and len(self.num) <= 1

    def as_constant(self) -> FieldElement:
        if not self.is_constant:
            raise ParseError("expected a constant, got an expression in x")
        return FieldElement(self.field, self.num[0] if self.num else 0)

    def __add__(self, o: "RationalFunction") -> "RationalFunction":
        F = self.field
        return RationalFunction.make(
            F,
            padd(F, pmul(F, list(self.num), list(o.den)), pmul(F, list(o.num), list(self.den))),
            pmul(F, list(self.den), list(o.den)),
        )

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(self.field, tuple(pneg(self.field, list(self.num))), self.den)

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o: "RationalFunction") -> "RationalFunction":
        F = self.field
        return RationalFunction.make(
            F, pmul(F, list(self.num), list(o.num)), pmul(F, list(self.den), list(o.den))
        )

    def __truediv__(self, o: "RationalFunction") -> "RationalFunction":
        if not o.num:
            raise ParseError("division by zero in expression")
        F = self.field
        return RationalFunction.make(
            F, pmul(F, list(self.num), list(o.den)), pmul(F, list(self.den), list(o.num))
        )

    def __pow__(self, n: int) -> "RationalFunction":
        F = self.field
        if n < 0:
            if not self.num:
                raise ParseError("zero raised to a negative power")
            return RationalFunction.make(F, ppow(F, list(self.den), -n), ppow(F, list(self.num), -n))
        return RationalFunction.make(F, ppow(F, list(self.num), n), ppow(F, list(self.den), n))

    def __str__(self) -> str:
        n = pformat(self.field, list(self.num))
        if self.is_polynomial:
            return n
        return f"({n})/({pformat(self.field, list(self.den))})"


# ---------------------------------------------------------------------------
# expression parser

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str) -> list[str]:
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r} in {text!r}")
        tok = m.group(1) or m.group(2) or m.group(3)
        out.append("^" if tok == "**" else tok)
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


class _Parser:
    def __init__(self, text: str, F: Field, allow_x: bool):
        self.toks = _tokenize(text)
        self.i = 0
        self.F = F
        self.allow_x = allow_x
        self.text = text

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise ParseError(f"unexpected end of expression {self.text!r}")
        self.i += 1
        return tok

    def parse(self) -> RationalFunction:
        if not self.toks:
            raise ParseError("empty expression")
        v = self.expr()
        if self.peek() is not None:
            raise ParseError(f"trailing input {self.peek()!r} in {self.text!r}")
        return v

    def expr(self):
        v = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.unary()
        while True:
            tok = self.peek()
            if tok in ("*", "/"):
                self.take()
                w = self.unary()
                v = v * w if tok == "*" else v / w
            elif tok is not None and (tok == "(" or tok[0].isalnum()):
                v = v * self.unary()  # implicit product, e.g. 2x or t x
            else:
                return v

    def unary(self):
        if self.peek() == "-":
            self.take()
            return -self.unary()
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            sign = 1
            if self.peek() == "-":
                self.take()
                sign = -1
            tok = self.take()
            if not tok.isdigit():
                raise ParseError(f"exponent must be an integer literal, got {tok!r}")
            return base ** (sign * int(tok))
        return base

    def atom(self):
        F = self.F
        tok = self.take()
        if tok.isdigit():
            return RationalFunction.constant(F, F.from_int(int(tok)))
        if tok == "x":
            if not self.allow_x:
                raise ParseError("variable x not allowed in an element expression")
            return RationalFunction.make(F, [0, 1])
        if tok == "t":
            if F.r == 1:
                raise ParseError(f"t is undefined over the prime field {F!r}")
            return RationalFunction.constant(F, F.gen().code)
        if tok == "(":
            v = self.expr()
            if self.take() != ")":
                raise ParseError(f"missing ')' in {self.text!r}")
            return v
        raise ParseError(f"unexpected token {tok!r} in {self.text!r}")


def parse_expression(text: str, F: Field, allow_x: bool = True) -> RationalFunction:
    return _Parser(text, F, allow_x).parse()


def parse_poly(text: str, F: Field) -> Poly:
    rf = parse_expression(text, F)
    if not rf.is_polynomial:
        raise ParseError(f"expected a polynomial in x, got {text!r}")
    return list(rf.num)
