"""L-polynomials from point counts.

With a_s = q^s + 1 - N_s the power sums of the reciprocal roots, Newton's
identities ``i*c_i = -sum_{s=1..i} a_s c_{i-s}`` give c_1..c_g and the
functional equation ``c_{2g-i} = q^(g-i) c_i`` gives the rest.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np
import sympy

from .curves import CurveSpec, point_count
from .errors import (
    DomainError,
    NonIntegralNewtonStep,
    WeilBoundViolation,
    ZetaInconsistency,
)
from .ffield import DEFAULT_CAP


@dataclass(frozen=True)
class LPolynomial:
    q: int
    g: int
    coeffs: tuple  # c_0 .. c_{2g}
    counts: tuple = ()  # N_1 .. N_k used or verified

    @property
    def p(self) -> int:
        return _prime_of(self.q)

    @property
    def r(self) -> int:
        p, q, r = self.p, self.q, 0
        while q > 1:
            q //= p
            r += 1
        return r

    @property
    def power_sums(self) -> tuple:
        return tuple(self.q**s + 1 - n for s, n in enumerate(self.counts, start=1))

    @property
    def trace(self) -> int:
        """a = -c_1, so that N_1 = q + 1 - a."""
        return -self.coeffs[1] if self.g else 0

    def __str__(self) -> str:
        return format_lpoly(self.coeffs)

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "g": self.g,
            "N": list(self.counts),
            "L": [str(c) for c in self.coeffs],
        }


def _prime_of(q: int) -> int:
    return next(d for d in range(2, q + 1) if q % d == 0)


def format_lpoly(coeffs) -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "" if i == 0 else ("T" if i == 1 else f"T^{i}")
        if i == 0:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def _check_weil(q: int, g: int, s: int, a: int) -> None:
    # |a_s| <= 2g q^(s/2)  <=>  a_s^2 <= 4 g^2 q^s
    if a * a > 4 * g * g * q**s:
        raise WeilBoundViolation(f"|a_{s}| = {abs(a)} exceeds 2g q^(s/2) for g={g}, q={q}")


def from_counts(q: int, g: int, counts) -> LPolynomial:
    """Build L from N_1..N_g (extra counts beyond g are kept and checked)."""
    counts = tuple(int(n) for n in counts)
    if len(counts) < g:
        raise DomainError(f"need N_1..N_{g}, got {len(counts)} counts")
    a = [q**s + 1 - n for s, n in enumerate(counts, start=1)]
    for s, a_s in enumerate(a, start=1):
        _check_weil(q, g, s, a_s)
    c = [1]
    for i in range(1, g + 1):
        acc = -sum(a[s - 1] * c[i - s] for s in range(1, i + 1))
        ci, rem = divmod(acc, i)
        if rem:
            raise NonIntegralNewtonStep(f"{i}*c_{i} = {acc} is not divisible by {i}")
        c.append(ci)
    full = c + [q ** (g - i) * c[i] for i in range(g - 1, -1, -1)]
    L = LPolynomial(q, g, tuple(full), counts)
    for s in range(g + 1, len(counts) + 1):
        pred = predict_count(L, s)
        if pred != counts[s - 1]:
            raise ZetaInconsistency(s, pred, counts[s - 1])
    return L


def predict_power_sums(L: LPolynomial, upto: int) -> list[int]:
    """a_1..a_upto from the coefficients (c_s = 0 for s > 2g)."""
    c = L.coeffs
    n = len(c) - 1
    a: list[int] = []
    for s in range(1, upto + 1):
        cs = c[s] if s <= n else 0
        acc = s * cs + sum(a[j - 1] * c[s - j] for j in range(max(1, s - n), s))
        a.append(-acc)
    return a


def predict_count(L: LPolynomial, s: int) -> int:
    return L.q**s + 1 - predict_power_sums(L, s)[-1]


def _count_job(args):
    spec, s, cap = args
    return point_count(spec, s, cap)


def count_points(spec: CurveSpec, upto: int, cap: int = DEFAULT_CAP, workers: int = 1) -> list[int]:
    """N_1..N_upto, optionally in worker processes (order of results is fixed)."""
    jobs = [(spec, s, cap) for s in range(1, upto + 1)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            return list(ex.map(_count_job, jobs))
    return [_count_job(j) for j in jobs]


def l_polynomial(
    spec: CurveSpec, cap: int = DEFAULT_CAP, verify_extra: int = 0, workers: int = 1
) -> LPolynomial:
    g = spec.genus
    if g < 0:
        raise DomainError("curve has no valid genus")
    if g == 0:
        counts = count_points(spec, verify_extra, cap, workers) if verify_extra else []
        return from_counts(spec.q, 0, counts)
    counts = count_points(spec, g + verify_extra, cap, workers)
    return from_counts(spec.q, g, counts)


def predict_and_check(spec: CurveSpec, L: LPolynomial, s: int, cap: int = DEFAULT_CAP) -> int:
    """Compare N_s predicted from L with a direct count; returns the common value."""
    pred = predict_count(L, s)
    got = point_count(spec, s, cap)
    if pred != got:
        raise ZetaInconsistency(s, pred, got)
    return got


def functional_equation_holds(L: LPolynomial) -> bool:
    c, g, q = L.coeffs, L.g, L.q
    return len(c) == 2 * g + 1 and c[0] == 1 and all(c[2 * g - i] == q ** (g - i) * c[i] for i in range(g + 1))


def root_moduli_deviation(L: LPolynomial) -> float:
    """Max | |root| - q^(-1/2) | over complex roots of L (floating-point diagnostic).

    Roots are taken from the squarefree factors so repeated roots, as in
    (1 + qT^2)^g, stay well conditioned.
    """
    if L.g == 0:
        return 0.0
    T = sympy.Symbol("T")
    _, factors = sympy.Poly(list(reversed(L.coeffs)), T, domain="ZZ").sqf_list()
    target = L.q**-0.5
    dev = 0.0
    for fac, _mult in factors:
        for z in np.roots([float(c) for c in fac.all_coeffs()]):
            dev = max(dev, abs(abs(complex(z)) - target))
    return dev


def is_supersingular_elliptic(L: LPolynomial) -> bool:
    if L.g != 1:
        raise DomainError(f"expected genus 1, got {L.g}")
    return L.trace % L.p == 0


def weil_bound_ok(q: int, g: int, s: int, n: int) -> bool:
    a = q**s + 1 - n
    return a * a <= 4 * g * g * q**s


__all__ = [
    "LPolynomial",
    "from_counts",
    "l_polynomial",
    "predict_and_check",
    "predict_count",
    "predict_power_sums",
    "count_points",
    "functional_equation_holds",
    "root_moduli_deviation",
    "is_supersingular_elliptic",
    "format_lpoly",
]
