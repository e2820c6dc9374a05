"""Terminating generalized hypergeometric series and the Karp–Prilepkina
unit-argument summation, in its original and reformulated shapes."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Sequence

from . import kernels
from .errors import (
    DenominatorPoleError,
    InvalidInstanceError,
    NonTerminatingError,
    PoleError,
)
from .exactnum import GammaScaled, as_rational, gamma_ratio, pochhammer

__all__ = [
    "HypergeomSpec",
    "KPInstance",
    "kp_lhs",
    "kp_rhs",
    "kp_rhs_original",
    "pfq_coefficients",
    "pfq_terminating",
    "reversal",
]


def _is_nonpos_int(a: Fraction) -> bool:
    return a.denominator == 1 and a <= 0


@dataclass(frozen=True)
class HypergeomSpec:
    """Parameters of ``pFq(numer; denom; argument)``."""

    numer: tuple
    denom: tuple
    argument: Fraction = Fraction(1)

    def __init__(self, numer: Sequence, denom: Sequence, argument=1):
        object.__setattr__(self, "numer", tuple(as_rational(a) for a in numer))
        object.__setattr__(self, "denom", tuple(as_rational(b) for b in denom))
        object.__setattr__(self, "argument", as_rational(argument))

    @property
    def termination_index(self) -> int | None:
        """Last index with a possibly nonzero term, or None if non-terminating."""
        stops = [int(-a) for a in self.numer if _is_nonpos_int(a)]
        return min(stops) if stops else None

    def check(self, max_terms: int | None = None) -> int:
        """Validate termination and denominators; return the number of sums."""
        stop = self.termination_index
        if stop is None:
            if max_terms is None:
                raise NonTerminatingError(f"series {self} does not terminate")
            stop = max_terms
        for b in self.denom:
            # (b)_l vanishes for l > -b
            if _is_nonpos_int(b) and int(-b) < stop:
                raise DenominatorPoleError(f"denominator parameter {b} vanishes before termination at {stop}")
        return stop

    def __str__(self):
        n = ", ".join(map(str, self.numer))
        d = ", ".join(map(str, self.denom))
        return f"{len(self.numer)}F{len(self.denom)}({n}; {d}; {self.argument})"


def _pairs(params):
    return [(a.numerator, a.denominator) for a in params]


def pfq_coefficients(numer: Sequence, denom: Sequence, stop: int | None = None) -> list[Fraction]:
    """Coefficients ``c_l`` of ``x^l`` in a terminating ``pFq(numer; denom; x)``.

    Trailing structural zeros beyond the termination index are not returned.
    """
    spec = HypergeomSpec(numer, denom, 1)
    stop = spec.check(stop)
    terms = kernels.series_terms(_pairs(spec.numer), _pairs(spec.denom), 1, 1, stop)
    out = [Fraction(n, d) for n, d in terms]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def pfq_terminating(spec: HypergeomSpec) -> GammaScaled:
    """Exact value of a terminating series (always a pure rational).

    >>> pfq_terminating(HypergeomSpec([-2, 3], [4], 1))
    GammaScaled('1/10')
    """
    stop = spec.check()
    x = spec.argument
    terms = kernels.series_terms(_pairs(spec.numer), _pairs(spec.denom), x.numerator, x.denominator, stop)
    total = Fraction(0)
    for n, d in terms:
        total += Fraction(n, d)
    return GammaScaled(total)


def reversal(spec: HypergeomSpec) -> tuple[GammaScaled, HypergeomSpec]:
    """Reverse the order of summation of a series led by ``-n``.

    Returns ``(prefactor, reversed_spec)`` with
    ``value(spec) == prefactor * value(reversed_spec)``.  For ``p+1Fq`` at
    argument ``x`` the reversed argument is ``(-1)^(p+q) / x``; with equal
    parameter counts at ``x = 1`` this is the classical unit-argument
    reversal.
    """
    if not spec.numer or not _is_nonpos_int(spec.numer[0]):
        raise ValueError("leading numerator parameter must be a non-positive integer")
    if spec.argument == 0:
        raise ValueError("reversal needs a nonzero argument")
    n = int(-spec.numer[0])
    tops, bottoms = spec.numer[1:], spec.denom
    spec.check()
    pref = Fraction((-1) ** n) * spec.argument**n
    for a in tops:
        pref *= pochhammer(a, n)
    for b in bottoms:
        pb = pochhammer(b, n)
        if pb == 0:
            raise PoleError(f"(b)_n vanishes for b={b}, n={n}")
        pref /= pb
    new_num = [Fraction(-n)] + [1 - b - n for b in bottoms]
    new_den = [1 - a - n for a in tops]
    sign = -1 if (len(tops) + len(bottoms)) % 2 else 1
    out = HypergeomSpec(new_num, new_den, Fraction(sign) / spec.argument)
    try:
        out.check()
    except DenominatorPoleError as exc:
        raise PoleError(str(exc)) from exc
    return GammaScaled(pref), out


@dataclass(frozen=True)
class KPInstance:
    """Data ``(a, f, m, b, k)`` of the unit-argument summation

    ``r+l+1Fr+l(a, f+m, b; f, b+k; 1)``.
    """

    a: Fraction
    f: tuple = field(default=())
    m: tuple = field(default=())
    b: tuple = field(default=())
    k: tuple = field(default=())

    def __init__(self, a, f=(), m=(), b=(), k=()):
        object.__setattr__(self, "a", as_rational(a))
        object.__setattr__(self, "f", tuple(as_rational(x) for x in f))
        object.__setattr__(self, "m", tuple(int(x) for x in m))
        object.__setattr__(self, "b", tuple(as_rational(x) for x in b))
        object.__setattr__(self, "k", tuple(int(x) for x in k))
        self.validate()

    def validate(self) -> None:
        if len(self.f) != len(self.m):
            raise InvalidInstanceError("f and m must have equal length")
        if len(self.b) != len(self.k):
            raise InvalidInstanceError("b and k must have equal length")
        if not self.b:
            raise InvalidInstanceError("at least one b parameter is required")
        if any(x < 1 for x in self.m + self.k):
            raise InvalidInstanceError("m and k entries must be positive integers")
        expanded = self.expanded_b()
        if len(set(expanded)) != len(expanded):
            raise InvalidInstanceError("expanded b vector has repeated components")
        if sum(self.k) - self.a - sum(self.m) <= 0:
            raise InvalidInstanceError("convergence condition sum(k) - a - sum(m) > 0 fails")

    def expanded_b(self) -> list[Fraction]:
        return [bq + s for bq, kq in zip(self.b, self.k) for s in range(kq)]

    def lhs_spec(self) -> HypergeomSpec:
        return HypergeomSpec(
            [self.a, *(fj + mj for fj, mj in zip(self.f, self.m)), *self.b],
            [*self.f, *(bj + kj for bj, kj in zip(self.b, self.k))],
            1,
        )

    def to_json(self) -> dict:
        return {
            "a": str(self.a),
            "f": [str(x) for x in self.f],
            "m": list(self.m),
            "b": [str(x) for x in self.b],
            "k": list(self.k),
        }


def _require_terminating(inst: KPInstance) -> None:
    if not _is_nonpos_int(inst.a):
        raise NonTerminatingError("exact evaluation needs a to be a non-positive integer")


def kp_lhs(inst: KPInstance) -> GammaScaled:
    _require_terminating(inst)
    return pfq_terminating(inst.lhs_spec())


def _outer_factor(inst: KPInstance) -> GammaScaled:
    # Gamma(1-a) (b_1)_{k_1}...(b_l)_{k_l} / ((f_1)_{m_1}...(f_r)_{m_r})
    c = Fraction(1)
    for bj, kj in zip(inst.b, inst.k):
        c *= pochhammer(bj, kj)
    for fj, mj in zip(inst.f, inst.m):
        pf = pochhammer(fj, mj)
        if pf == 0:
            raise DenominatorPoleError(f"(f)_m vanishes for f={fj}")
        c /= pf
    return GammaScaled(c) * GammaScaled(1, (1 - inst.a,))


def kp_rhs(inst: KPInstance) -> GammaScaled:
    """Right side of the reformulated identity, one inner series per ``b_q``."""
    _require_terminating(inst)
    a, f, m, b, k = inst.a, inst.f, inst.m, inst.b, inst.k
    total = GammaScaled(0)
    for q, (bq, kq) in enumerate(zip(b, k)):
        shift = bq + kq - 1
        ft = [fj - bq + 1 - kq + mj for fj, mj in zip(f, m)]
        c = Fraction((-1) ** (kq - 1), factorial(kq - 1))
        for ftj, mj in zip(ft, m):
            c *= pochhammer(ftj - mj, mj)
        for j, (bj, kj) in enumerate(zip(b, k)):
            if j != q:
                c /= pochhammer(bj - shift, kj)
        others = [j for j in range(len(b)) if j != q]
        inner = HypergeomSpec(
            [1 - kq, a - shift, *ft, *(b[j] - shift for j in others)],
            [1 - shift, *(x - mj for x, mj in zip(ft, m)), *(b[j] + k[j] - shift for j in others)],
            1,
        )
        term = gamma_ratio(shift, bq + kq - a) * c * pfq_terminating(inner)
        total = total + term
    return _outer_factor(inst) * total


def kp_rhs_original(inst: KPInstance) -> GammaScaled:
    """Right side summed over every component of the expanded ``b`` vector."""
    _require_terminating(inst)
    betas = inst.expanded_b()
    total = GammaScaled(0)
    for i, bi in enumerate(betas):
        c = Fraction(1)
        for fj, mj in zip(inst.f, inst.m):
            c *= pochhammer(fj - bi, mj)
        for j, bj in enumerate(betas):
            if j != i:
                c /= bj - bi
        total = total + gamma_ratio(bi, bi - inst.a + 1) * c
    return _outer_factor(inst) * total
