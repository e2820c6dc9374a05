"""Type I Laguerre polynomials of the first kind: weights ``e^-x x^alpha_i`` on
[0, inf), and their connection with Jacobi–Piñeiro as ``beta -> inf``."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Sequence

import mpmath

from .asymptotic import jp_scaled_coefficient
from .exactnum import GammaScaled, as_rational, gamma_ratio, gs_to_float, pochhammer
from .hypergeom import pfq_coefficients
from .jacobi_pineiro import JPWeightSystem, jp_type1
from .polynomials import Component, MultiIndex, TypeIVector, validate_alphas, weighted_pairing

__all__ = [
    "LaguerreWeightSystem",
    "LimitCheck",
    "lag_limit_check",
    "lag_limit_exact",
    "lag_moment",
    "lag_pairing",
    "lag_type1",
    "lag_type1_two_weights",
    "lag_type1_vector",
]


@dataclass(frozen=True)
class LaguerreWeightSystem:
    alphas: tuple
    _ratios: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    family = "laguerre1"

    def __init__(self, alphas: Sequence):
        object.__setattr__(self, "alphas", validate_alphas(alphas))
        object.__setattr__(self, "_ratios", {})

    @property
    def p(self) -> int:
        return len(self.alphas)

    def moment(self, i: int, k: int) -> GammaScaled:
        """``integral_0^inf x^(alpha_i + k) e^-x dx = Gamma(alpha_i + k + 1)``."""
        return GammaScaled(1, (self.alphas[i] + k + 1,))

    def moment_ratios(self, i: int, kmax: int) -> list:
        cached = self._ratios.get(i)
        if cached is None or len(cached) <= kmax:
            a = self.alphas[i]
            out = [Fraction(1)]
            for k in range(kmax if cached is None else max(kmax, 2 * len(cached))):
                out.append(out[-1] * (a + 1 + k))
            self._ratios[i] = cached = out
        return cached[: kmax + 1]

    def moment_ratio_pairs(self, i: int, kmax: int) -> list:
        """:meth:`moment_ratios` as ``(numerator, denominator)`` integer pairs."""
        cached = self._ratios.get(("pairs", i))
        if cached is None or len(cached) <= kmax:
            cached = [(r.numerator, r.denominator) for r in self.moment_ratios(i, max(kmax, 8))]
            self._ratios[("pairs", i)] = cached
        return cached

    def params(self) -> dict:
        return {"alphas": [str(a) for a in self.alphas]}


def lag_moment(ws: LaguerreWeightSystem, i: int, k: int) -> GammaScaled:
    return ws.moment(i, k)


def lag_type1(ws: LaguerreWeightSystem, n: MultiIndex | Sequence[int], i: int) -> Component:
    n = n if isinstance(n, MultiIndex) else MultiIndex(n)
    if len(n) != ws.p:
        raise ValueError(f"multi-index length {len(n)} does not match p={ws.p}")
    ni = n[i]
    if ni == 0:
        return Component.zero()
    a = ws.alphas
    ai = a[i]
    others = [k for k in range(ws.p) if k != i]
    c = Fraction((-1) ** (n.total - 1), factorial(ni - 1))
    for k in others:
        c /= pochhammer(a[k] - ai, n[k])
    prefactor = GammaScaled(c, (), (ai + 1,))
    numer = [1 - ni] + [ai + 1 - a[k] - n[k] for k in others]
    denom = [ai + 1] + [ai + 1 - a[k] for k in others]
    return Component(prefactor, tuple(pfq_coefficients(numer, denom)))


def lag_type1_vector(ws: LaguerreWeightSystem, n: MultiIndex | Sequence[int]) -> TypeIVector:
    n = n if isinstance(n, MultiIndex) else MultiIndex(n)
    return TypeIVector(tuple(lag_type1(ws, n, i) for i in range(ws.p)), ws, n)


def lag_type1_two_weights(ws: LaguerreWeightSystem, n: Sequence[int], i: int) -> Component:
    if ws.p != 2:
        raise ValueError("two-weight formula needs p == 2")
    n1, n2 = n
    ni = (n1, n2)[i]
    if ni == 0:
        return Component.zero()
    a1, a2 = ws.alphas
    ai, ahat = (a1, a2) if i == 0 else (a2, a1)
    nhat = n2 if i == 0 else n1
    c = Fraction((-1) ** (n1 + n2 - 1)) / (factorial(ni - 1) * pochhammer(ahat - ai, nhat))
    coeffs = [
        pochhammer(1 - ni, l)
        * pochhammer(ai - ahat - nhat + 1, l)
        / (pochhammer(ai + 1, l) * pochhammer(ai - ahat + 1, l) * factorial(l))
        for l in range(ni)
    ]
    return Component(GammaScaled(c, (), (ai + 1,)), tuple(coeffs))


def lag_pairing(v: TypeIVector, j: int) -> Fraction:
    if j < 0:
        raise ValueError("j must be nonnegative")
    return weighted_pairing(v, [0] * j + [1])


def _jp_scale(alphas, beta: Fraction, n: MultiIndex, i: int) -> GammaScaled:
    # Gamma(beta+|n|) / (prod_k (alpha_k+beta+|n|)_{n_k} Gamma(alpha_i+beta+|n|))
    N = n.total
    c = Fraction(1)
    for ak, nk in zip(alphas, n):
        c *= pochhammer(ak + beta + N, nk)
    return gamma_ratio(beta + N, alphas[i] + beta + N) / c


def scaled_jp_component(ws: LaguerreWeightSystem, n: MultiIndex, i: int, beta) -> Component:
    """The Jacobi–Piñeiro component at ``beta``, rescaled and read in the
    variable ``x = beta * t``; tends to :func:`lag_type1` as ``beta`` grows."""
    beta = as_rational(beta)
    jp = jp_type1(JPWeightSystem(ws.alphas, beta), n, i)
    pref = jp.prefactor * _jp_scale(ws.alphas, beta, n, i)
    coeffs = tuple(c / beta**l for l, c in enumerate(jp.coeffs))
    return Component(pref, coeffs)


@dataclass(frozen=True)
class LimitCheck:
    betas: tuple
    deviations: tuple

    @property
    def ratios(self) -> list:
        return [d0 / d1 if d1 else mpmath.inf for d0, d1 in zip(self.deviations, self.deviations[1:])]

    def rate_ok(self, factor: float = 2.0) -> bool:
        """Consecutive deviation ratios track the beta ratios within ``factor``."""
        for (b0, b1), r in zip(zip(self.betas, self.betas[1:]), self.ratios):
            expected = b1 / b0
            if not (expected / factor <= r <= expected * factor):
                return False
        return True


def _horner_mpf(comp: Component, x, precision: int):
    with mpmath.workprec(precision):
        coeffs = [gs_to_float(comp.coefficient(l), precision) for l in range(len(comp.coeffs))]
        acc = mpmath.mpf(0)
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc


def lag_limit_check(
    ws: LaguerreWeightSystem,
    n: MultiIndex | Sequence[int],
    i: int,
    x,
    betas: Sequence,
    precision: int = 128,
) -> LimitCheck:
    """``|scaled JP component(x) - L_i(x)|`` for each ``beta``, in ``precision``-bit floats."""
    n = n if isinstance(n, MultiIndex) else MultiIndex(n)
    x = as_rational(x)
    if x < 0:
        raise ValueError("sample point must be nonnegative")
    betas = tuple(as_rational(b) for b in betas)
    if any(b <= -1 for b in betas) or list(betas) != sorted(betas):
        raise ValueError("betas must be ascending and exceed -1")
    with mpmath.workprec(precision):
        xf = mpmath.mpf(x.numerator) / x.denominator
        target = _horner_mpf(lag_type1(ws, n, i), xf, precision)
        devs = []
        for beta in betas:
            value = _horner_mpf(scaled_jp_component(ws, n, i, beta), xf, precision)
            devs.append(abs(value - target))
    return LimitCheck(tuple(float(b) for b in betas), tuple(devs))


def lag_limit_exact(ws: LaguerreWeightSystem, n: MultiIndex | Sequence[int], i: int) -> list:
    """Coefficientwise ``beta -> inf`` limit of the rescaled JP component.

    Each coefficient is built as a rational function of a symbolic ``beta``;
    returns ``(l, limit, laguerre_coefficient)`` triples, which must agree.
    """
    n = n if isinstance(n, MultiIndex) else MultiIndex(n)
    lag = lag_type1(ws, n, i)
    out = []
    for l in range(n[i]):
        expr = jp_scaled_coefficient(ws.alphas, n, i, l)
        out.append((l, expr.limit_at_infinity(), lag.coefficient(l)))
    return out
