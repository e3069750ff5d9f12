"""Finite fields F_{p^r} with integer-coded elements.

An element is stored as the integer ``sum(c_i * p**i)`` where ``c_0..c_{r-1}``
are its coordinates on the basis ``1, t, ..., t^{r-1}`` and ``t`` is the class
of the variable modulo the defining polynomial.  Code order is therefore the
canonical element order (coefficient tuple read as a base-p integer).

Hot loops work on raw codes through :class:`Field` methods; :class:`FieldElement`
is the user-facing wrapper with operator overloading.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, Sequence

from .errors import BadDegree, EnumerationCapExceeded, NoRootFound, NotPrime

DEFAULT_CAP = 1 << 26


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# polynomials over the prime field, used only to pick the modulus


def _polymod_p(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of a by monic b over F_p (lists, low degree first)."""
    a = a[:]
    db = len(b) - 1
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] % p
        if c:
            off = k - db
            for i in range(db + 1):
                a[off + i] = (a[off + i] - c * b[i]) % p
    rem = [x % p for x in a[:db]]
    while rem and rem[-1] == 0:
        rem.pop()
    return rem


def _bits_mod(a: int, b: int) -> int:
    db = b.bit_length() - 1
    while a and a.bit_length() - 1 >= db:
        a ^= b << (a.bit_length() - 1 - db)
    return a


def _monics(p: int, d: int) -> Iterator[list[int]]:
    for n in range(p**d):
        coeffs = []
        for _ in range(d):
            n, c = divmod(n, p)
            coeffs.append(c)
        yield coeffs + [1]


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Trial division by every monic of degree 1..deg/2 over F_p.

    ``coeffs`` is low-degree first and must be monic.
    """
    f = [c % p for c in coeffs]
    r = len(f) - 1
    if r < 1 or f[-1] != 1:
        return False
    if r == 1:
        return True
    if f[0] == 0:
        return False
    if p == 2:
        fb = sum(c << i for i, c in enumerate(f))
        for d in range(1, r // 2 + 1):
            for g in range(1 << d, 1 << (d + 1)):
                if _bits_mod(fb, g) == 0:
                    return False
        return True
    for d in range(1, r // 2 + 1):
        for g in _monics(p, d):
            if not _polymod_p(f, g, p):
                return False
    return True


def canonical_modulus(p: int, r: int) -> tuple[int, ...]:
    """Least monic irreducible of degree r, ordering (c_0..c_{r-1}) as base-p integer."""
    for n in range(p**r):
        low = []
        m = n
        for _ in range(r):
            m, c = divmod(m, p)
            low.append(c)
        cand = low + [1]
        if is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


def _poly_str(coeffs: Sequence[int], var: str) -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            mono = var if i == 1 else f"{var}^{i}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(terms) if terms else "0"


# ---------------------------------------------------------------------------


class Field:
    """The field F_{p^r}; elements are integer codes in ``range(p**r)``."""

    def __init__(self, p: int, r: int):
        if not isinstance(p, int) or not is_prime(p):
            raise NotPrime(f"characteristic {p!r} is not prime")
        if not isinstance(r, int) or r < 1:
            raise BadDegree(f"extension degree must be >= 1, got {r!r}")
        self.p = p
        self.r = r
        self.size = p**r
        self.modulus = canonical_modulus(p, r)
        self._pows = [p**i for i in range(r)]
        if p == 2:
            self._modbits = sum(c << i for i, c in enumerate(self.modulus))
        self._trace_basis = None
        self._trace_mask = 0
        if p > 2 and r > 1:
            self._init_packed()

    # identity -----------------------------------------------------------
    def __repr__(self) -> str:
        return f"GF({self.p}^{self.r}; modulus={_poly_str(self.modulus, 'x')})"

    __str__ = __repr__

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and (self.p, self.r) == (other.p, other.r)

    def __hash__(self) -> int:
        return hash((self.p, self.r))

    def __reduce__(self):
        return (make_field, (self.p, self.r))

    @property
    def q(self) -> int:
        return self.size

    # coordinates ----------------------------------------------------------
    def digits(self, a: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.r):
            a, c = divmod(a, p)
            out.append(c)
        return out

    def from_digits(self, ds: Sequence[int]) -> int:
        p = self.p
        if len(ds) > self.r:
            raise ValueError("too many coordinates for this field")
        return sum((c % p) * w for c, w in zip(ds, self._pows))

    def from_int(self, n: int) -> int:
        """Image of an integer in the prime subfield."""
        return n % self.p

    # arithmetic on codes --------------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.r == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        w = 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            out += ((x + y) % p) * w
            w *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.r == 1:
            return (-a) % self.p
        p = self.p
        out = 0
        w = 1
        while a:
            a, x = divmod(a, p)
            out += ((-x) % p) * w
            w *= p
        return out

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.r == 1:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def scale(self, c: int, a: int) -> int:
        """Multiply by the prime-field integer c."""
        c %= self.p
        if c == 0:
            return 0
        if c == 1:
            return a
        if self.r == 1:
            return (c * a) % self.p
        return self.from_digits([c * x for x in self.digits(a)])

    def mul(self, a: int, b: int) -> int:
        if self.p == 2:
            deg = self.r
            mod = self._modbits
            out = 0
            while b:
                if b & 1:
                    out ^= a
                b >>= 1
                a <<= 1
                if a >> deg:
                    a ^= mod
            return out
        p = self.p
        if self.r == 1:
            return (a * b) % p
        if a == 0 or b == 0:
            return 0
        # Kronecker substitution: coefficient vectors packed into byte-aligned
        # slots, one integer product, then reduction of the high slots.
        r, w = self.r, self._slot_bytes
        prod = self._pack(a) * self._pack(b)
        high = prod.to_bytes(w * (2 * r - 1), "little")
        acc = prod & self._low_mask
        red = self._reductions
        if w == 1:
            for j in range(r, 2 * r - 1):
                v = high[j] % p
                if v:
                    acc += red[j - r][v]
            low = acc.to_bytes(r, "little")
            return sum((low[i] % p) * pw for i, pw in enumerate(self._pows))
        for j in range(r, 2 * r - 1):
            v = int.from_bytes(high[j * w : (j + 1) * w], "little") % p
            if v:
                acc += red[j - r][v]
        low = acc.to_bytes(r * w, "little")
        return sum(
            (int.from_bytes(low[i * w : (i + 1) * w], "little") % p) * pw for i, pw in enumerate(self._pows)
        )

    def _init_packed(self) -> None:
        p, r = self.p, self.r
        # a slot holds at most r(p-1)^2 from the product plus (r-1)(p-1) from reduction
        bound = r * (p - 1) ** 2 + (r - 1) * (p - 1)
        w = (bound.bit_length() + 7) // 8
        k = 8 * w
        c = 1
        while c < r and p ** (c + 1) <= 4096:
            c += 1
        self._slot_bytes = w
        self._chunk = p**c
        self._chunk_shift = c * k
        self._chunk_table = []
        for ch in range(p**c):
            v, i = 0, 0
            while ch:
                ch, d = divmod(ch, p)
                v |= d << (k * i)
                i += 1
            self._chunk_table.append(v)
        # row j - r holds v * x^j mod the modulus, packed, for v = 0..p-1
        self._reductions = []
        vec = [0] * (r - 1) + [1]
        for _ in range(r, 2 * r - 1):
            top = vec[-1]
            vec = [(a - top * m) % p for a, m in zip([0] + vec[:-1], self.modulus)]
            self._reductions.append(
                [sum(((v * d) % p) << (k * i) for i, d in enumerate(vec)) for v in range(p)]
            )
        self._low_mask = (1 << (k * r)) - 1

    def _pack(self, a: int) -> int:
        out, shift = 0, 0
        table, chunk, step = self._chunk_table, self._chunk, self._chunk_shift
        while a:
            a, ch = divmod(a, chunk)
            out |= table[ch] << shift
            shift += step
        return out

    def _mul_schoolbook(self, a: int, b: int) -> int:
        """Reference product on digit lists (used to cross-check ``mul``)."""
        p, r = self.p, self.r
        da = self.digits(a)
        db = self.digits(b)
        prod = [0] * (2 * r - 1)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod[i + j] += x * y
        mod = self.modulus
        for k in range(2 * r - 2, r - 1, -1):
            c = prod[k] % p
            if c:
                off = k - r
                for i in range(r):
                    prod[off + i] -= c * mod[i]
        return sum((prod[i] % p) * w for i, w in enumerate(self._pows))

    def square(self, a: int) -> int:
        return self.mul(a, a)

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            a = self.inv(a)
            n = -n
        out = 1
        while n:
            if n & 1:
                out = self.mul(out, a)
            n >>= 1
            if n:
                a = self.mul(a, a)
        return out

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        return self.pow(a, self.size - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def frobenius(self, a: int, k: int = 1) -> int:
        """a -> a^(p^k)."""
        for _ in range(k):
            a = self.pow(a, self.p)
        return a

    # trace -------------------------------------------------------------------
    def _slow_trace(self, a: int) -> int:
        acc = 0
        x = a
        for _ in range(self.r):
            acc = self.add(acc, x)
            x = self.frobenius(x)
        if acc >= self.p:
            raise AssertionError("trace left the prime field")
        return acc

    def trace(self, a: int) -> int:
        """Absolute trace to F_p, returned as an integer residue."""
        if self._trace_basis is None:
            self._trace_basis = [self._slow_trace(w) for w in self._pows]
            if self.p == 2:
                self._trace_mask = sum(1 << i for i, t in enumerate(self._trace_basis) if t)
        if self.p == 2:
            return (a & self._trace_mask).bit_count() & 1
        if self.r == 1:
            return a
        p = self.p
        acc = 0
        for tb in self._trace_basis:
            a, c = divmod(a, p)
            acc += c * tb
        return acc % p

    # enumeration -------------------------------------------------------------
    def codes(self, cap: int = DEFAULT_CAP) -> range:
        if self.size > cap:
            raise EnumerationCapExceeded(
                f"{self!r} has {self.size} elements, above the enumeration cap {cap}"
            )
        return range(self.size)

    def element(self, code: int) -> "FieldElement":
        return FieldElement(self, code)

    def gen(self) -> "FieldElement":
        """The class t of the variable (equals a prime-field constant when r = 1)."""
        if self.r == 1:
            return FieldElement(self, (-self.modulus[0]) % self.p)
        return FieldElement(self, self.p)

    def format(self, a: int) -> str:
        return _poly_str(self.digits(a), "t")

    # polynomial evaluation on codes ------------------------------------------
    def horner(self, coeffs: Sequence[int], x: int) -> int:
        """Evaluate sum coeffs[i] x^i (codes, low degree first)."""
        acc = 0
        mul, add = self.mul, self.add
        for c in reversed(coeffs):
            acc = add(mul(acc, x), c)
        return acc


@lru_cache(maxsize=None)
def make_field(p: int, r: int) -> Field:
    """Canonical F_{p^r}; repeated calls return the same object."""
    return Field(p, r)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FieldElement:
    field: Field
    code: int

    def __post_init__(self):
        if not 0 <= self.code < self.field.size:
            raise ValueError(f"code {self.code} out of range for {self.field!r}")

    @classmethod
    def from_coeffs(cls, field: Field, coeffs: Sequence[int]) -> "FieldElement":
        return cls(field, field.from_digits(coeffs))

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(self.field.digits(self.code))

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise TypeError("elements of different fields")
            return other.code
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.add(self.code, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(self.code, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(b, self.code))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul(self.code, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.div(self.code, b))

    def __pow__(self, n: int):
        return FieldElement(self.field, self.field.pow(self.code, n))

    def __bool__(self) -> bool:
        return self.code != 0

    def is_zero(self) -> bool:
        return self.code == 0

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.code))

    def frobenius(self, k: int = 1) -> "FieldElement":
        return FieldElement(self.field, self.field.frobenius(self.code, k))

    def __str__(self) -> str:
        return self.field.format(self.code)

    def __repr__(self) -> str:
        return f"FieldElement({self}, GF({self.field.p}^{self.field.r}))"


def enumerate_field(field: Field, cap: int = DEFAULT_CAP) -> Iterator[FieldElement]:
    """Every element exactly once, in canonical order."""
    for c in field.codes(cap):
        yield FieldElement(field, c)


def trace_to_prime(x: FieldElement) -> int:
    return x.field.trace(x.code)


def norm_fibers(q_field: Field, ext: Field, cap: int = DEFAULT_CAP) -> dict[int, int]:
    """Fiber sizes of x -> x^(q+1) from ext* to q_field*, ext being the quadratic extension.

    Keys are codes in ``q_field``; the map is computed in ``ext`` and pulled back
    through the canonical embedding.
    """
    if ext.p != q_field.p or ext.r != 2 * q_field.r:
        raise BadDegree("norm fibers need F_{q^2} over F_q")
    q = q_field.size
    back = {v: k for k, v in _embedding_table(q_field, ext).items()}
    fibers: dict[int, int] = {}
    for x in ext.codes(cap):
        if x == 0:
            continue
        n = ext.pow(x, q + 1)
        if n not in back:
            raise AssertionError("norm value outside the subfield")
        fibers[back[n]] = fibers.get(back[n], 0) + 1
    return fibers


# ---------------------------------------------------------------------------
# embeddings F_{p^r} -> F_{p^{rs}}


@lru_cache(maxsize=None)
def _generator_image(source: Field, target: Field) -> int:
    if source.p != target.p or target.r % source.r:
        raise BadDegree(f"cannot embed {source!r} in {target!r}")
    if source.r == 1:
        return target.from_int(source.gen().code)
    mod = [target.from_int(c) for c in source.modulus]
    for z in range(target.size):
        if target.horner(mod, z) == 0:
            return z
    raise NoRootFound(f"minimal polynomial of {source!r} has no root in {target!r}")


def embedding(source: Field, target: Field) -> Callable[[int], int]:
    """Code-level ring embedding source -> target (t goes to the least root)."""
    if source.r == 1:
        if source.p != target.p:
            raise BadDegree(f"cannot embed {source!r} in {target!r}")
        return lambda a: a
    z = _generator_image(source, target)
    powers = [1]
    for _ in range(source.r - 1):
        powers.append(target.mul(powers[-1], z))

    def emb(a: int) -> int:
        acc = 0
        for c, w in zip(source.digits(a), powers):
            if c:
                acc = target.add(acc, target.scale(c, w))
        return acc

    return emb


def _embedding_table(source: Field, target: Field) -> dict[int, int]:
    emb = embedding(source, target)
    return {a: emb(a) for a in range(source.size)}


def embed(x: FieldElement, target: Field) -> FieldElement:
    return FieldElement(target, embedding(x.field, target)(x.code))


def parse_element(text: str, field: Field) -> FieldElement:
    """Parse ``c0+c1*t+...`` style expressions (any arithmetic in t and integers)."""
    from .poly import parse_expression

    return parse_expression(text, field, allow_x=False).as_constant()
