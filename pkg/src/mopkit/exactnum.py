"""Exact rationals, Pochhammer symbols and Gamma-scaled rationals.

A :class:`GammaScaled` is a rational number times a product of Gamma
values at rational arguments divided by another such product.  Every
Gamma argument ``a`` is rewritten through ``Gamma(a) = (r)_(a-r) Gamma(r)``
with ``r`` the representative of ``a`` modulo 1 in ``(0, 1]``, so equal
values always have equal canonical forms and integral Gamma values fold
into the rational part.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from fractions import Fraction
from typing import Iterable, Union

import mpmath

from .errors import IncompatibleGammaError, PoleError

BigRational = Fraction
RationalLike = Union[int, Fraction, str]

__all__ = [
    "BigRational",
    "GammaScaled",
    "as_rational",
    "gamma",
    "gamma_ratio",
    "gs_add",
    "gs_mul",
    "gs_to_float",
    "pochhammer",
]


def as_rational(x: RationalLike) -> Fraction:
    """Coerce ``x`` to a Fraction; floats are refused to keep results exact."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"refusing inexact value {x!r}; pass an int, Fraction or 'p/q' string")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as a rational")


def pochhammer(x: RationalLike, n: int) -> Fraction:
    """Rising factorial ``x (x+1) ... (x+n-1)``; ``(x)_0 = 1``.

    >>> pochhammer(3, 2)
    Fraction(12, 1)
    >>> pochhammer(-2, 3)
    Fraction(0, 1)
    """
    if n < 0:
        raise ValueError("pochhammer length must be nonnegative")
    x = as_rational(x)
    p, q = x.numerator, x.denominator
    num = 1
    for s in range(n):
        num *= p + s * q
        if num == 0:
            return Fraction(0)
    return Fraction(num, q**n)


def _is_pole(a: Fraction) -> bool:
    return a.denominator == 1 and a <= 0


def _shift_to_rep(a: Fraction) -> tuple[Fraction, Fraction]:
    """Return ``(r, c)`` with ``Gamma(a) = c * Gamma(r)`` and ``r`` in (0, 1]."""
    k = -((-a.numerator) // a.denominator) - 1  # ceil(a) - 1
    r = a - k
    if k >= 0:
        return r, pochhammer(r, k)
    return r, 1 / pochhammer(a, -k)


class GammaScaled:
    """``rational * prod Gamma(numer) / prod Gamma(denom)`` in canonical form.

    Residual arguments are kept as sorted tuples of non-integral
    representatives in (0, 1); a value is rational exactly when both
    tuples are empty.
    """

    __slots__ = ("rational", "numer", "denom")

    def __init__(
        self,
        rational: RationalLike = 1,
        numer: Iterable[RationalLike] = (),
        denom: Iterable[RationalLike] = (),
    ):
        r = as_rational(rational)
        counts: Counter = Counter()
        for sign, args in ((1, numer), (-1, denom)):
            for a in args:
                a = as_rational(a)
                if _is_pole(a):
                    raise PoleError(f"Gamma has a pole at {a}")
                rep, c = _shift_to_rep(a)
                r = r * c if sign > 0 else r / c
                if rep != 1:
                    counts[rep] += sign
        self._set(r, counts)

    def _set(self, r: Fraction, counts: Counter) -> None:
        if r == 0:
            numer: tuple = ()
            denom: tuple = ()
        else:
            numer = tuple(sorted(Counter({a: e for a, e in counts.items() if e > 0}).elements()))
            denom = tuple(sorted(Counter({a: -e for a, e in counts.items() if e < 0}).elements()))
        object.__setattr__(self, "rational", r)
        object.__setattr__(self, "numer", numer)
        object.__setattr__(self, "denom", denom)

    @classmethod
    def _from_counts(cls, r: Fraction, counts: Counter) -> "GammaScaled":
        obj = cls.__new__(cls)
        obj._set(r, counts)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("GammaScaled is immutable")

    def _counts(self) -> Counter:
        c = Counter(self.numer)
        c.subtract(self.denom)
        return c

    # -- predicates -------------------------------------------------------
    @property
    def is_rational(self) -> bool:
        return not self.numer and not self.denom

    def is_zero(self) -> bool:
        return self.rational == 0

    def residual_key(self) -> tuple[tuple, tuple]:
        return self.numer, self.denom

    def as_rational(self) -> Fraction:
        if not self.is_rational:
            raise IncompatibleGammaError(f"value {self} is not rational")
        return self.rational

    # -- arithmetic -------------------------------------------------------
    def __mul__(self, other):
        if not isinstance(other, GammaScaled):
            try:
                other = as_rational(other)
            except TypeError:
                return NotImplemented
            return GammaScaled._from_counts(self.rational * other, self._counts())
        counts = self._counts()
        counts.update(other._counts())
        return GammaScaled._from_counts(self.rational * other.rational, counts)

    __rmul__ = __mul__

    def reciprocal(self) -> "GammaScaled":
        if self.rational == 0:
            raise ZeroDivisionError("reciprocal of zero")
        counts = Counter(self.denom)
        counts.subtract(self.numer)
        return GammaScaled._from_counts(1 / self.rational, counts)

    def __truediv__(self, other):
        if not isinstance(other, GammaScaled):
            try:
                other = as_rational(other)
            except TypeError:
                return NotImplemented
            return GammaScaled._from_counts(self.rational / other, self._counts())
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        try:
            other = as_rational(other)
        except TypeError:
            return NotImplemented
        return self.reciprocal() * other

    def __neg__(self):
        return GammaScaled._from_counts(-self.rational, self._counts())

    def __add__(self, other):
        if not isinstance(other, GammaScaled):
            try:
                other = GammaScaled(as_rational(other))
            except TypeError:
                return NotImplemented
        if self.rational == 0:
            return other
        if other.rational == 0:
            return self
        if self.residual_key() != other.residual_key():
            raise IncompatibleGammaError(f"cannot add {self} and {other}: residual Gamma factors differ")
        return GammaScaled._from_counts(self.rational + other.rational, self._counts())

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __eq__(self, other):
        if isinstance(other, GammaScaled):
            return self.rational == other.rational and self.residual_key() == other.residual_key()
        try:
            other = as_rational(other)
        except TypeError:
            return NotImplemented
        return self.is_rational and self.rational == other

    def __hash__(self):
        if self.is_rational:
            return hash(self.rational)
        return hash((self.rational, self.numer, self.denom))

    # -- conversion -------------------------------------------------------
    def to_mpf(self, precision: int = 53):
        return gs_to_float(self, precision)

    def __float__(self) -> float:
        v = float(gs_to_float(self, 53))
        if math.isinf(v):
            raise OverflowError(f"{self} exceeds the double range")
        return v

    def __repr__(self):
        return f"GammaScaled({str(self)!r})"

    def __str__(self):
        parts = [str(self.rational)]
        parts += [f"* Γ({a})" for a in self.numer]
        parts += [f"/ Γ({b})" for b in self.denom]
        return " ".join(parts)

    _TEXT = re.compile(r"\s*([*/])\s*Γ\(\s*([^()]+?)\s*\)")

    @classmethod
    def parse(cls, text: str) -> "GammaScaled":
        """Inverse of ``str``: ``"-3/2 * Γ(1/3) / Γ(1/2)"``."""
        text = text.strip()
        m = re.match(r"[-+]?\d+(?:/\d+)?", text)
        if m is None:
            raise ValueError(f"malformed Gamma-scaled value {text!r}")
        rational = Fraction(m.group(0))
        pos = m.end()
        numer, denom = [], []
        while pos < len(text):
            g = cls._TEXT.match(text, pos)
            if g is None:
                raise ValueError(f"malformed Gamma factor in {text!r} at offset {pos}")
            (numer if g.group(1) == "*" else denom).append(Fraction(g.group(2)))
            pos = g.end()
        return cls(rational, numer, denom)


def gamma(a: RationalLike) -> GammaScaled:
    """``Gamma(a)`` as an exact Gamma-scaled value."""
    return GammaScaled(1, (a,))


def gamma_ratio(a: RationalLike, b: RationalLike) -> GammaScaled:
    """``Gamma(a) / Gamma(b)``; pure rational when ``a - b`` is an integer.

    >>> gamma_ratio(5, 2)
    GammaScaled('24')
    """
    a, b = as_rational(a), as_rational(b)
    if _is_pole(a) or _is_pole(b):
        raise PoleError(f"Gamma ratio with a pole: Γ({a})/Γ({b})")
    d = a - b
    if d.denominator == 1:
        return GammaScaled(pochhammer(b, int(d)) if d >= 0 else 1 / pochhammer(a, int(-d)))
    return GammaScaled(1, (a,), (b,))


def gs_mul(u: GammaScaled, v: GammaScaled) -> GammaScaled:
    return u * v


def gs_add(u: GammaScaled, v: GammaScaled) -> GammaScaled:
    return u + v


def gs_to_float(u: GammaScaled, precision: int = 53):
    """Numerical value as an :class:`mpmath.mpf` carrying ``precision`` bits.

    Residual arguments lie in (0, 1) so every Gamma factor is positive and
    the sign is the sign of the rational part; magnitudes go through
    log-Gamma to stay clear of intermediate overflow.
    """
    if precision < 53:
        raise ValueError("precision must be at least 53 bits")
    if not isinstance(u, GammaScaled):
        u = GammaScaled(u)
    r = u.rational
    with mpmath.workprec(precision):
        if u.is_rational:
            return mpmath.mpf(r.numerator) / r.denominator
    if r == 0:
        return mpmath.mpf(0)
    work = precision + 16 + 2 * (len(u.numer) + len(u.denom))
    with mpmath.workprec(work):
        log_mag = mpmath.log(abs(mpmath.mpf(r.numerator))) - mpmath.log(r.denominator)
        for a in u.numer:
            log_mag += mpmath.loggamma(mpmath.mpf(a.numerator) / a.denominator)
        for b in u.denom:
            log_mag -= mpmath.loggamma(mpmath.mpf(b.numerator) / b.denominator)
        val = mpmath.exp(log_mag)
        if r < 0:
            val = -val
    with mpmath.workprec(precision):
        return +val
