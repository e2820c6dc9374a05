"""Products of linear factors and Gamma values in one symbolic variable ``beta``.

Just enough symbolic algebra to write a Jacobi–Piñeiro coefficient as an
exact rational function of ``beta`` and read off its limit at infinity.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .exactnum import GammaScaled, as_rational, pochhammer

__all__ = ["BetaExpr", "jp_scaled_coefficient"]


class BetaExpr:
    """``const * prod(num linear) / prod(den linear) * prod Gamma(gnum) / prod Gamma(gden)``.

    Linear factors and Gamma arguments are ``(c1, c0)`` pairs meaning
    ``c1 * beta + c0`` with ``c1 != 0``.
    """

    __slots__ = ("const", "num", "den", "gnum", "gden")

    def __init__(self, const=1, num=(), den=(), gnum=(), gden=()):
        self.const = const if isinstance(const, GammaScaled) else GammaScaled(const)
        self.num = list(num)
        self.den = list(den)
        self.gnum = list(gnum)
        self.gden = list(gden)
        self._cancel_gammas()

    @classmethod
    def linear(cls, c1, c0) -> "BetaExpr":
        c1, c0 = as_rational(c1), as_rational(c0)
        if c1 == 0:
            return cls(c0)
        return cls(1, [(c1, c0)])

    @classmethod
    def poch(cls, c1, c0, n: int) -> "BetaExpr":
        """``(c1 beta + c0)_n``."""
        c1, c0 = as_rational(c1), as_rational(c0)
        if c1 == 0:
            return cls(pochhammer(c0, n))
        return cls(1, [(c1, c0 + s) for s in range(n)])

    @classmethod
    def gamma(cls, c1, c0) -> "BetaExpr":
        c1, c0 = as_rational(c1), as_rational(c0)
        if c1 == 0:
            return cls(GammaScaled(1, (c0,)))
        return cls(1, gnum=[(c1, c0)])

    def __mul__(self, other):
        if not isinstance(other, BetaExpr):
            other = BetaExpr(other)
        return BetaExpr(
            self.const * other.const,
            self.num + other.num,
            self.den + other.den,
            self.gnum + other.gnum,
            self.gden + other.gden,
        )

    def reciprocal(self) -> "BetaExpr":
        return BetaExpr(self.const.reciprocal(), self.den, self.num, self.gden, self.gnum)

    def __truediv__(self, other):
        if not isinstance(other, BetaExpr):
            other = BetaExpr(other)
        return self * other.reciprocal()

    def _cancel_gammas(self) -> None:
        # Gamma(X + d) / Gamma(X) = (X)_d for integral d
        i = 0
        while i < len(self.gnum):
            g1, g0 = self.gnum[i]
            for j, (h1, h0) in enumerate(self.gden):
                d = g0 - h0
                if h1 == g1 and d.denominator == 1:
                    del self.gnum[i]
                    del self.gden[j]
                    d = int(d)
                    if d >= 0:
                        self.num += [(g1, h0 + s) for s in range(d)]
                    else:
                        self.den += [(g1, g0 + s) for s in range(-d)]
                    break
            else:
                i += 1

    @property
    def is_rational_function(self) -> bool:
        return not self.gnum and not self.gden

    def degree(self) -> int:
        return len(self.num) - len(self.den)

    def evaluate(self, beta) -> GammaScaled:
        beta = as_rational(beta)
        v = self.const
        for c1, c0 in self.num:
            v = v * (c1 * beta + c0)
        for c1, c0 in self.den:
            v = v / (c1 * beta + c0)
        if self.gnum or self.gden:
            v = v * GammaScaled(1, [c1 * beta + c0 for c1, c0 in self.gnum], [c1 * beta + c0 for c1, c0 in self.gden])
        return v

    def limit_at_infinity(self) -> GammaScaled:
        """Exact limit as ``beta -> +inf``; raises if it is infinite or not a rational function."""
        if not self.is_rational_function:
            raise ValueError("expression still carries beta-dependent Gamma factors")
        if self.const.is_zero():
            return GammaScaled(0)
        d = self.degree()
        if d < 0:
            return GammaScaled(0)
        if d > 0:
            raise ValueError("expression diverges as beta -> inf")
        lead = Fraction(1)
        for c1, _ in self.num:
            lead *= c1
        for c1, _ in self.den:
            lead /= c1
        return self.const * lead


def jp_scaled_coefficient(alphas, n, i: int, l: int) -> BetaExpr:
    """Coefficient of ``x^l`` in the rescaled JP component
    ``Gamma(beta+N) / (prod_k (alpha_k+beta+N)_{n_k} Gamma(alpha_i+beta+N)) * P_i(x / beta)``
    as a function of symbolic ``beta``."""
    alphas = [as_rational(a) for a in alphas]
    p = len(alphas)
    N = sum(n)
    ni = n[i]
    ai = alphas[i]
    others = [k for k in range(p) if k != i]

    const = Fraction((-1) ** (N - 1), factorial(ni - 1))
    for k in others:
        const /= pochhammer(alphas[k] - ai, n[k])
    expr = BetaExpr(const) / BetaExpr.gamma(0, ai + 1)
    for k in range(p):
        expr = expr * BetaExpr.poch(1, alphas[k] + N, n[k])
    expr = expr * BetaExpr.gamma(1, ai + N) / BetaExpr.gamma(1, N)

    scale = BetaExpr.gamma(1, N) / BetaExpr.gamma(1, ai + N)
    for k in range(p):
        scale = scale / BetaExpr.poch(1, alphas[k] + N, n[k])
    expr = expr * scale

    term = Fraction(pochhammer(1 - ni, l), factorial(l)) / pochhammer(ai + 1, l)
    for k in others:
        term *= pochhammer(ai + 1 - alphas[k] - n[k], l) / pochhammer(ai + 1 - alphas[k], l)
    expr = expr * term * BetaExpr.poch(1, ai + N, l)
    return expr / BetaExpr(1, [(Fraction(1), Fraction(0))] * l)
