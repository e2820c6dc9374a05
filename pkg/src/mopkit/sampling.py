"""Random admissible parameters for sweeps and property tests."""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import InvalidInstanceError
from .hypergeom import HypergeomSpec, KPInstance

__all__ = ["random_alphas", "random_beta", "random_kp_instance", "random_reversal_spec"]


def _rational_in(rng: random.Random, lo: int, hi: int, max_den: int) -> Fraction:
    """Rational in (lo, hi] with denominator at most ``max_den``."""
    d = rng.randint(1, max_den)
    return Fraction(rng.randint(lo * d + 1, hi * d), d)


def random_alphas(rng: random.Random, p: int, max_den: int = 6) -> list:
    """``p`` values in (-1, 3] with pairwise non-integral differences."""
    if p > max_den * (max_den + 1) // 2:
        raise ValueError("too many weights for the requested denominator bound")
    out: list = []
    while len(out) < p:
        a = _rational_in(rng, -1, 3, max_den)
        if all((a - b).denominator != 1 for b in out):
            out.append(a)
    return out


def random_beta(rng: random.Random, max_den: int = 6) -> Fraction:
    return _rational_in(rng, -1, 3, max_den)


def _generic(rng: random.Random, max_den: int, avoid: list) -> Fraction:
    # non-integral and non-integrally separated from everything in ``avoid``
    while True:
        x = Fraction(rng.randint(-6 * max_den, 6 * max_den), rng.randint(2, max_den))
        if x.denominator != 1 and all((x - y).denominator != 1 for y in avoid):
            return x


def random_kp_instance(
    rng: random.Random,
    r_max: int = 2,
    l_max: int = 3,
    k_max: int = 3,
    m_max: int = 3,
    a_max: int = 4,
    max_den: int = 7,
) -> KPInstance:
    """Terminating instance away from every pole of both sides."""
    while True:
        r = rng.randint(0, r_max)
        l = rng.randint(1, l_max)
        a = Fraction(-rng.randint(0, a_max))
        k = [rng.randint(1, k_max) for _ in range(l)]
        m = [rng.randint(1, m_max) for _ in range(r)]
        b: list = []
        for _ in range(l):
            b.append(_generic(rng, max_den, b))
        f: list = []
        for _ in range(r):
            f.append(_generic(rng, max_den, b))
        try:
            return KPInstance(a, f, m, b, k)
        except InvalidInstanceError:
            continue


def random_reversal_spec(rng: random.Random, n_max: int = 6, extra_max: int = 3, max_den: int = 7) -> HypergeomSpec:
    """Balanced terminating unit-argument series ``q+1Fq(-n, a; b; 1)``."""
    n = rng.randint(0, n_max)
    q = rng.randint(0, extra_max)
    params: list = []
    for _ in range(2 * q):
        params.append(_generic(rng, max_den, []))
    return HypergeomSpec([-n, *params[:q]], params[q:], 1)
