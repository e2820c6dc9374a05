"""Multi-indices, weight-system validation and type I polynomial vectors."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterator, Sequence

from . import kernels
from .errors import ATSystemError
from .exactnum import GammaScaled, as_rational

__all__ = [
    "Component",
    "MultiIndex",
    "TypeIVector",
    "multi_indices",
    "validate_alphas",
    "weighted_pairing",
]


@dataclass(frozen=True)
class MultiIndex:
    entries: tuple

    def __init__(self, entries: Sequence[int]):
        entries = tuple(int(x) for x in entries)
        if not entries:
            raise ValueError("multi-index needs at least one entry")
        if any(x < 0 for x in entries):
            raise ValueError(f"multi-index entries must be nonnegative, got {entries}")
        object.__setattr__(self, "entries", entries)

    @property
    def total(self) -> int:
        return sum(self.entries)

    def deleted(self, i: int) -> tuple:
        """Entries with the ``i``-th one removed."""
        return self.entries[:i] + self.entries[i + 1 :]

    def __len__(self):
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self):
        return "(" + ",".join(map(str, self.entries)) + ")"


def multi_indices(p: int, total_max: int, total_min: int = 1) -> Iterator[MultiIndex]:
    """All multi-indices of length ``p`` with ``total_min <= |n| <= total_max``,
    by increasing total and then lexicographically decreasing."""

    def compositions(total, parts):
        if parts == 1:
            yield (total,)
            return
        for first in range(total, -1, -1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    for total in range(total_min, total_max + 1):
        for c in compositions(total, p):
            yield MultiIndex(c)


def validate_alphas(alphas: Sequence) -> tuple:
    alphas = tuple(as_rational(a) for a in alphas)
    if not alphas:
        raise ATSystemError("at least one weight is required")
    for a in alphas:
        if a <= -1:
            raise ATSystemError(f"alpha={a} must exceed -1")
    for i, ai in enumerate(alphas):
        for aj in alphas[:i]:
            if (ai - aj).denominator == 1:
                raise ATSystemError(f"alpha difference {ai} - {aj} is an integer")
    return alphas


@dataclass(frozen=True)
class Component:
    """``prefactor * sum_l coeffs[l] x^l`` with rational ``coeffs``."""

    prefactor: GammaScaled
    coeffs: tuple

    @classmethod
    def zero(cls) -> "Component":
        return cls(GammaScaled(1), ())

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        for l in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[l] != 0:
                return l
        return -1

    def coefficient(self, l: int) -> GammaScaled:
        if l < len(self.coeffs):
            return self.prefactor * self.coeffs[l]
        return GammaScaled(0)

    def coefficients(self) -> list:
        return [self.coefficient(l) for l in range(self.degree + 1)]

    def evaluate(self, x) -> GammaScaled:
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return self.prefactor * acc

    @cached_property
    def coeff_pairs(self) -> list:
        return [(c.numerator, c.denominator) for c in self.coeffs]

    def max_bits(self) -> int:
        bits = [c.numerator.bit_length() + c.denominator.bit_length() for c in self.coeffs]
        r = self.prefactor.rational
        bits.append(r.numerator.bit_length() + r.denominator.bit_length())
        return max(bits)


@dataclass(frozen=True)
class TypeIVector:
    components: tuple
    weights: object
    index: MultiIndex

    def __getitem__(self, i) -> Component:
        return self.components[i]

    def __len__(self):
        return len(self.components)

    def matches(self, other: "TypeIVector") -> bool:
        """Coefficientwise equality of Gamma-scaled values."""
        if len(self) != len(other):
            return False
        for u, v in zip(self.components, other.components):
            size = max(len(u.coeffs), len(v.coeffs))
            if any(u.coefficient(l) != v.coefficient(l) for l in range(size)):
                return False
        return True

    def max_bits(self) -> int:
        return max(c.max_bits() for c in self.components)

    @cached_property
    def scales(self) -> tuple:
        """Rational ``prefactor_i * integral w_i dmu`` per component (None when empty)."""
        return tuple(
            (c.prefactor * self.weights.moment(i, 0)).as_rational() if c.coeffs else None
            for i, c in enumerate(self.components)
        )


def weighted_pairing(v: TypeIVector, poly: Sequence) -> Fraction:
    """``sum_i integral poly(x) A_i(x) w_i(x) dmu(x)`` exactly.

    ``poly`` lists rational monomial coefficients, lowest degree first.  The
    Gamma factors of each component prefactor must cancel against the base
    moment of its weight.
    """
    ws = v.weights
    poly = [as_rational(c) for c in poly]
    terms = [(t, q.numerator, q.denominator) for t, q in enumerate(poly) if q]
    total = Fraction(0)
    for i, (comp, scale) in enumerate(zip(v.components, v.scales)):
        if scale is None:
            continue
        cp = comp.coeff_pairs
        L = len(cp)
        ratios = ws.moment_ratio_pairs(i, L + len(poly) - 2)
        xs, ys = [], []
        for t, qn, qd in terms:
            xs += [(cn * qn, cd * qd) for cn, cd in cp]
            ys += ratios[t : t + L]
        sn, sd = kernels.rational_dot(xs, ys)
        total += scale * Fraction(sn, sd)
    return total
