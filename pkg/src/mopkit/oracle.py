"""Brute-force type I and type II polynomials from the moment linear systems.

Everything here is exact and independent of the closed forms: the unknowns
are monomial coefficients scaled by the base moment of their weight, which
makes every matrix entry a rational moment ratio.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from . import kernels
from .errors import SingularSystemError
from .exactnum import GammaScaled
from .polynomials import Component, MultiIndex, TypeIVector

__all__ = [
    "LinearSystem",
    "MomentTable",
    "MonicPolynomial",
    "biorthogonal_check",
    "oracle_type1_solve",
    "oracle_type2_solve",
    "solve_rational",
]


class MomentTable:
    """Cached moments ``integral x^k w_i dmu`` for one weight system.

    Reads are lock-free; insertions go through a lock so concurrent readers
    never observe a half-built list.
    """

    def __init__(self, weights):
        self.weights = weights
        self._base: dict = {}
        self._ratios: dict = {}
        self._lock = threading.Lock()

    def base(self, i: int) -> GammaScaled:
        v = self._base.get(i)
        if v is None:
            with self._lock:
                v = self._base.setdefault(i, self.weights.moment(i, 0))
        return v

    def values(self, i: int, k: int) -> GammaScaled:
        return self.base(i) * self.ratio(i, k)

    def ratio(self, i: int, k: int) -> Fraction:
        cached = self._ratios.get(i)
        if cached is None or len(cached) <= k:
            with self._lock:
                cached = self._ratios.get(i)
                if cached is None or len(cached) <= k:
                    cached = list(self.weights.moment_ratios(i, max(k, 8)))
                    self._ratios[i] = cached
        return cached[k]


@dataclass
class LinearSystem:
    matrix: list
    rhs: list

    def solve(self) -> list:
        return solve_rational(self.matrix, self.rhs)

    def residuals(self, x: Sequence) -> list:
        return [sum(a * xi for a, xi in zip(row, x)) - b for row, b in zip(self.matrix, self.rhs)]


def solve_rational(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> list:
    """Unique solution of a square rational system by Bareiss elimination."""
    n = len(matrix)
    if n == 0:
        return []
    int_rows, int_rhs = [], []
    for row, b in zip(matrix, rhs):
        if len(row) != n:
            raise ValueError("matrix must be square")
        scale = lcm(*(x.denominator for x in row), Fraction(b).denominator)
        int_rows.append([x.numerator * (scale // x.denominator) for x in row])
        b = Fraction(b)
        int_rhs.append(b.numerator * (scale // b.denominator))
    out = kernels.bareiss_solve(int_rows, int_rhs)
    if out is None:
        raise SingularSystemError(f"moment matrix of size {n} is singular")
    d, y = out
    return [Fraction(yi, d) for yi in y]


def _as_index(n) -> MultiIndex:
    return n if isinstance(n, MultiIndex) else MultiIndex(n)


def type1_system(ws, n: MultiIndex, table: MomentTable | None = None) -> tuple[LinearSystem, list]:
    table = table or MomentTable(ws)
    N = n.total
    unknowns = [(i, l) for i in range(len(n)) for l in range(n[i])]
    matrix = [[table.ratio(i, j + l) for i, l in unknowns] for j in range(N)]
    rhs = [Fraction(0)] * (N - 1) + [Fraction(1)]
    return LinearSystem(matrix, rhs), unknowns


def oracle_type1_solve(ws, n: MultiIndex | Sequence[int]) -> TypeIVector:
    """Type I vector solving the orthogonality conditions literally."""
    n = _as_index(n)
    if len(n) != ws.p:
        raise ValueError(f"multi-index length {len(n)} does not match p={ws.p}")
    if n.total < 1:
        raise ValueError("|n| must be at least 1")
    table = MomentTable(ws)
    system, unknowns = type1_system(ws, n, table)
    u = system.solve()
    comps = []
    pos = 0
    for i in range(ws.p):
        if n[i] == 0:
            comps.append(Component.zero())
            continue
        comps.append(Component(table.base(i).reciprocal(), tuple(u[pos : pos + n[i]])))
        pos += n[i]
    return TypeIVector(tuple(comps), ws, n)


@dataclass(frozen=True)
class MonicPolynomial:
    """Monic type II polynomial, coefficients lowest degree first."""

    coeffs: tuple
    index: MultiIndex

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def oracle_type2_solve(ws, n: MultiIndex | Sequence[int]) -> MonicPolynomial:
    """Monic ``B`` of degree ``|n|`` with ``integral x^j B w_i dmu = 0`` for ``j < n_i``."""
    n = _as_index(n)
    if len(n) != ws.p:
        raise ValueError(f"multi-index length {len(n)} does not match p={ws.p}")
    table = MomentTable(ws)
    N = n.total
    matrix, rhs = [], []
    for i in range(ws.p):
        for j in range(n[i]):
            matrix.append([table.ratio(i, j + t) for t in range(N)])
            rhs.append(-table.ratio(i, j + N))
    b = solve_rational(matrix, rhs)
    return MonicPolynomial(tuple(b) + (Fraction(1),), n)


def type2_residuals(ws, B: MonicPolynomial) -> list:
    """``integral x^j B w_i dmu / integral w_i dmu`` for every defining condition."""
    table = MomentTable(ws)
    out = []
    for i in range(ws.p):
        for j in range(B.index[i]):
            out.append(sum(c * table.ratio(i, j + t) for t, c in enumerate(B.coeffs)))
    return out


def biorthogonal_check(B: MonicPolynomial, v: TypeIVector) -> Fraction:
    """``sum_i integral B A_i w_i dmu`` by direct moment summation."""
    ws = v.weights
    table = MomentTable(ws)
    total = Fraction(0)
    for i, comp in enumerate(v.components):
        if not comp.coeffs:
            continue
        scale = (comp.prefactor * table.base(i)).as_rational()
        s = Fraction(0)
        for l, c in enumerate(comp.coeffs):
            for t, b in enumerate(B.coeffs):
                s += c * b * table.ratio(i, l + t)
        total += scale * s
    return total
