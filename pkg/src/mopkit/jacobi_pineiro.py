"""Type I Jacobi–Piñeiro polynomials: weights ``x^alpha_i (1-x)^beta`` on [0, 1]."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Sequence

from .errors import ATSystemError
from .exactnum import GammaScaled, as_rational, pochhammer
from .hypergeom import pfq_coefficients
from .polynomials import Component, MultiIndex, TypeIVector, validate_alphas, weighted_pairing

__all__ = [
    "JPWeightSystem",
    "jp_moment",
    "jp_pairing",
    "jp_type1",
    "jp_type1_two_weights",
    "jp_type1_vector",
]


@dataclass(frozen=True)
class JPWeightSystem:
    alphas: tuple
    beta: Fraction
    _ratios: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    family = "jacobi-pineiro"

    def __init__(self, alphas: Sequence, beta):
        object.__setattr__(self, "alphas", validate_alphas(alphas))
        beta = as_rational(beta)
        if beta <= -1:
            raise ATSystemError(f"beta={beta} must exceed -1")
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "_ratios", {})

    @property
    def p(self) -> int:
        return len(self.alphas)

    def moment(self, i: int, k: int) -> GammaScaled:
        """``integral_0^1 x^(alpha_i + k) (1-x)^beta dx``."""
        a, b = self.alphas[i], self.beta
        return GammaScaled(1, (b + 1, a + k + 1), (a + b + k + 2,))

    def moment_ratios(self, i: int, kmax: int) -> list:
        """``moment(i, k) / moment(i, 0) = (alpha_i+1)_k / (alpha_i+beta+2)_k``
        for ``k = 0..kmax``."""
        cached = self._ratios.get(i)
        if cached is None or len(cached) <= kmax:
            a, b = self.alphas[i], self.beta
            out = [Fraction(1)]
            for k in range(kmax if cached is None else max(kmax, 2 * len(cached))):
                out.append(out[-1] * (a + 1 + k) / (a + b + 2 + k))
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
        return {"alphas": [str(a) for a in self.alphas], "beta": str(self.beta)}


def jp_moment(ws: JPWeightSystem, i: int, k: int) -> GammaScaled:
    return ws.moment(i, k)


def jp_type1(ws: JPWeightSystem, n: MultiIndex | Sequence[int], i: int) -> Component:
    """Component ``i`` (0-based) of the type I vector for multi-index ``n``.

    Components with ``n_i = 0`` are the zero polynomial.
    """
    n = n if isinstance(n, MultiIndex) else MultiIndex(n)
    if len(n) != ws.p:
        raise ValueError(f"multi-index length {len(n)} does not match p={ws.p}")
    ni = n[i]
    if ni == 0:
        return Component.zero()
    N, a, b = n.total, ws.alphas, ws.beta
    ai = a[i]
    others = [k for k in range(ws.p) if k != i]

    c = Fraction((-1) ** (N - 1), factorial(ni - 1))
    for k in others:
        c *= pochhammer(a[k] + b + N, n[k]) / pochhammer(a[k] - ai, n[k])
    # (alpha_i+beta+N)_{n_i} Gamma(alpha_i+beta+N) folded into one Gamma, which
    # stays finite when alpha_i + beta + N = 0
    prefactor = GammaScaled(c, (ai + b + N + ni,), (b + N, ai + 1))

    numer = [1 - ni, ai + b + N] + [ai + 1 - a[k] - n[k] for k in others]
    denom = [ai + 1] + [ai + 1 - a[k] for k in others]
    return Component(prefactor, tuple(pfq_coefficients(numer, denom)))


def jp_type1_vector(ws: JPWeightSystem, n: MultiIndex | Sequence[int]) -> TypeIVector:
    n = n if isinstance(n, MultiIndex) else MultiIndex(n)
    return TypeIVector(tuple(jp_type1(ws, n, i) for i in range(ws.p)), ws, n)


def jp_type1_two_weights(ws: JPWeightSystem, n: Sequence[int], i: int) -> Component:
    """Two-weight closed form with a single companion weight ``(alpha_hat, n_hat)``,
    written out independently of :func:`jp_type1`."""
    if ws.p != 2:
        raise ValueError("two-weight formula needs p == 2")
    n1, n2 = n
    ni = (n1, n2)[i]
    if ni == 0:
        return Component.zero()
    a1, a2 = ws.alphas
    b = ws.beta
    ai, ahat = (a1, a2) if i == 0 else (a2, a1)
    nhat = n2 if i == 0 else n1
    s = n1 + n2
    c = Fraction((-1) ** (s - 1)) * pochhammer(ahat + b + s, nhat) / (factorial(ni - 1) * pochhammer(ahat - ai, nhat))
    prefactor = GammaScaled(c, (ai + b + s + ni,), (b + s, ai + 1))
    coeffs = []
    for l in range(ni):
        coeffs.append(
            pochhammer(1 - ni, l)
            * pochhammer(ai + b + s, l)
            * pochhammer(ai - ahat - nhat + 1, l)
            / (pochhammer(ai + 1, l) * pochhammer(ai - ahat + 1, l) * factorial(l))
        )
    return Component(prefactor, tuple(coeffs))


def jp_pairing(v: TypeIVector, j: int) -> Fraction:
    """``sum_i integral_0^1 x^j A_i(x) x^alpha_i (1-x)^beta dx`` as an exact rational."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    return weighted_pairing(v, [0] * j + [1])
