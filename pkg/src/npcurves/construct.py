"""Supersingular curves of genus delta*p*(p-1)^2/2 from fiber products of
Artin-Schreier curves y^p - y = x*f(x) with f additive.

``ckp_plan`` splits delta (base-p digits 0/1) into runs of consecutive ones,
assigns each run a space of additive polynomials of one fixed degree and
checks the genus bookkeeping.  ``instantiate_factors`` writes down the factor
curves C_f, and ``verify_supersingular_factors`` runs them through the zeta
pipeline.  The fiber product itself is never built; its Jacobian is isogenous
to the product of the factor Jacobians.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import reduce
from importlib import resources
from itertools import product
from math import lcm

from .curves import CurveSpec, artin_schreier, legendre, affine_count
from .errors import (
    BadDigits,
    DomainError,
    EnumerationCapExceeded,
    IdentityFailure,
    InconsistentBranchData,
    NotSupersingular,
)
from .ffield import DEFAULT_CAP, embedding, is_prime, make_field
from .npoly import NewtonPolygon, newton_polygon
from .poly import RationalFunction
from .zeta import LPolynomial, l_polynomial


@dataclass(frozen=True)
class Run:
    s: int  # exponent of the lowest digit in the run
    r: int  # run length minus one
    u: int
    count: int  # number of f whose top contribution comes from this run
    genus_each: int

    @property
    def d(self) -> int:
        return self.r + 1


@dataclass(frozen=True)
class CKPPlan:
    p: int
    delta: int
    runs: tuple

    @property
    def genus_target(self) -> int:
        return self.delta * self.p * (self.p - 1) ** 2 // 2

    @property
    def genus_sum(self) -> int:
        return sum(run.count * run.genus_each for run in self.runs)

    @property
    def factor_count(self) -> int:
        return sum(run.count for run in self.runs)

    @property
    def base_degree(self) -> int:
        return reduce(lcm, (run.d for run in self.runs), 1)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "delta": self.delta,
            "digits": base_p_digits(self.delta, self.p),
            "runs": [
                {
                    "s": run.s,
                    "r": run.r,
                    "u": run.u,
                    "d": run.d,
                    "degree": self.p**run.u,
                    "count": run.count,
                    "genus_each": run.genus_each,
                }
                for run in self.runs
            ],
            "genus_target": str(self.genus_target),
            "genus_sum": str(self.genus_sum),
            "factor_count": self.factor_count,
        }


def base_p_digits(n: int, p: int) -> list[int]:
    """Digits of n in base p, least significant first."""
    out = []
    while n:
        n, d = divmod(n, p)
        out.append(d)
    return out


def ckp_plan(p: int, delta: int) -> CKPPlan:
    if not is_prime(p):
        raise DomainError(f"p={p} is not prime")
    if delta < 1:
        raise DomainError("delta must be a positive integer")
    digits = base_p_digits(delta, p)
    if any(d > 1 for d in digits):
        raise BadDigits(f"delta={delta} has base-{p} digits {digits[::-1]}; only 0 and 1 are allowed")

    blocks = []  # (s, r)
    i = 0
    while i < len(digits):
        if digits[i] == 1:
            j = i
            while j + 1 < len(digits) and digits[j + 1] == 1:
                j += 1
            blocks.append((i, j - i))
            i = j + 1
        else:
            i += 1

    runs = []
    used = 0  # sum of d_j over earlier runs
    for k, (s, r) in enumerate(blocks):
        if k and s < blocks[k - 1][0] + blocks[k - 1][1] + 2:
            raise IdentityFailure(f"runs {blocks[k - 1]} and {(s, r)} are not separated")
        u = s + 1 - used
        d = r + 1
        count = (p**d - 1) * p**used
        runs.append(Run(s, r, u, count, p**u * (p - 1) // 2))
        used += d
    for a, b in zip(runs, runs[1:]):
        if b.u < a.u + 1:
            raise IdentityFailure(f"u sequence not increasing: {a.u}, {b.u}")
    plan = CKPPlan(p, delta, tuple(runs))
    if sum(run.count for run in runs) != p**used - 1:
        raise IdentityFailure("factor counts do not partition the nonzero elements")
    if 2 * plan.genus_sum != delta * p * (p - 1) ** 2:
        raise IdentityFailure(f"genus sum {plan.genus_sum} != delta*p*(p-1)^2/2 = {plan.genus_target}")
    return plan


def admissible_deltas(p: int, upto: int) -> list[int]:
    return [n for n in range(1, upto + 1) if all(d <= 1 for d in base_p_digits(n, p))]


# ---------------------------------------------------------------------------


def instantiate_factors(plan: CKPPlan, cap: int = DEFAULT_CAP) -> list[CurveSpec]:
    """The curves y^p - y = x*f(x), f ranging over the nonzero elements of the
    direct sum of the spaces F_{p^{d_i}} * x^(p^{u_i}).

    Refuses (EnumerationCapExceeded) when the zeta computation of the largest
    factor would enumerate a field above ``cap``.
    """
    p = plan.p
    D = plan.base_degree
    g_max = max(run.genus_each for run in plan.runs)
    if p ** (D * max(g_max, 1)) > cap:
        raise EnumerationCapExceeded(
            f"largest factor has genus {g_max} over F_{p}^{D}; counting needs F_{p}^{D * g_max} > cap {cap}"
        )
    F = make_field(p, D)
    coeff_spaces = []
    for run in plan.runs:
        sub = make_field(p, run.d)
        emb = embedding(sub, F)
        coeff_spaces.append([emb(c) for c in range(sub.size)])
    specs = []
    for choice in product(*coeff_spaces):
        if not any(choice):
            continue
        # x*f(x) has monomials x^(p^u + 1)
        top = max(p**run.u + 1 for run in plan.runs)
        num = [0] * (top + 1)
        for run, c in zip(plan.runs, choice):
            num[p**run.u + 1] = c
        specs.append(artin_schreier(F, RationalFunction.make(F, num)))
    if len(specs) != plan.factor_count:
        raise IdentityFailure(f"built {len(specs)} factors, plan expects {plan.factor_count}")
    if sum(c.genus for c in specs) != plan.genus_target:
        raise IdentityFailure("factor genera do not add up to the target genus")
    return specs


@dataclass(frozen=True)
class FactorCheck:
    curve: CurveSpec
    L: LPolynomial
    polygon: NewtonPolygon

    @property
    def supersingular(self) -> bool:
        return self.polygon.is_supersingular

    def to_json(self) -> dict:
        return {
            "curve": self.curve.describe(),
            "genus": self.curve.genus,
            "L": [str(c) for c in self.L.coeffs],
            "slopes": str(self.polygon),
            "supersingular": self.supersingular,
        }


def verify_supersingular_factors(specs, cap: int = DEFAULT_CAP, workers: int = 1) -> list[FactorCheck]:
    out = []
    for spec in specs:
        L = l_polynomial(spec, cap=cap, workers=workers)
        chk = FactorCheck(spec, L, newton_polygon(L))
        if not chk.supersingular:
            raise NotSupersingular(f"factor {spec} has Newton polygon {chk.polygon}")
        out.append(chk)
    return out


# ---------------------------------------------------------------------------


def _prime_of_power(n: int) -> int | None:
    if n < 2:
        return None
    p = next(d for d in range(2, n + 1) if n % d == 0)
    while n % p == 0:
        n //= p
    return p if n == 1 else None


def ds_p_rank(order: int, f_Z: int, ramification) -> int:
    """p-rank of X for a Galois cover X -> Z with p-group H of the given order:
    f_X = |H| (f_Z - 1) + sum (e_x - 1) + 1.
    """
    p = _prime_of_power(order)
    if p is None:
        raise InconsistentBranchData(f"|H|={order} is not a prime power")
    if f_Z < 0:
        raise InconsistentBranchData("f_Z must be non-negative")
    for e in ramification:
        if e < 1 or order % e or (e > 1 and _prime_of_power(e) != p):
            raise InconsistentBranchData(f"ramification index {e} is not a power of {p} dividing {order}")
    f_X = order * (f_Z - 1) + sum(e - 1 for e in ramification) + 1
    if f_X < 0:
        raise InconsistentBranchData(f"branch data gives negative p-rank {f_X}")
    return f_X


# ---------------------------------------------------------------------------


def j_invariant_legendre(F, lam: int) -> int:
    """j = 2^8 (l^2 - l + 1)^3 / (l^2 (l - 1)^2) as a code of F."""
    l2 = F.mul(lam, lam)
    num = F.add(F.sub(l2, lam), 1)
    num = F.scale(256, F.pow(num, 3))
    lm1 = F.sub(lam, 1)
    den = F.mul(l2, F.mul(lm1, lm1))
    return F.div(num, den)


def igusa_counts(p: int, cap: int = DEFAULT_CAP) -> tuple[int, int]:
    """(number of lambda in F_{p^2} with E_lambda supersingular, number of distinct j)."""
    if p == 2 or not is_prime(p):
        raise DomainError("Legendre form needs an odd prime")
    F = make_field(p, 2)
    F.codes(cap)
    q = F.size
    lams = []
    for lam in range(2, q):  # codes 0 and 1 are the field elements 0 and 1
        spec = legendre(F, lam)
        n1 = affine_count(spec, 1, cap) + 1
        if (q + 1 - n1) % p == 0:
            lams.append(lam)
    js = {j_invariant_legendre(F, lam) for lam in lams}
    return len(lams), len(js)


def supersingular_class_count(p: int) -> int:
    """floor(p/12) + eps with eps = 0, 1, 1, 2 for p = 1, 5, 7, 11 mod 12 (p = 2, 3 give 1)."""
    if p in (2, 3):
        return 1
    return p // 12 + {1: 0, 5: 1, 7: 1, 11: 2}[p % 12]


def catalog() -> dict:
    """Known examples with expected invariants (bundled JSON)."""
    text = resources.files("npcurves").joinpath("catalog.json").read_text(encoding="utf-8")
    return json.loads(text)
