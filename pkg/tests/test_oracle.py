import random
import threading
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mopkit.errors import SingularSystemError
from mopkit.jacobi_pineiro import JPWeightSystem, jp_type1_vector
from mopkit.laguerre_first import LaguerreWeightSystem, lag_type1_vector
from mopkit.oracle import (
    MomentTable,
    biorthogonal_check,
    oracle_type1_solve,
    oracle_type2_solve,
    solve_rational,
    type1_system,
    type2_residuals,
)
from mopkit.polynomials import MultiIndex
from mopkit.sampling import random_alphas, random_beta


def test_legendre_type1():
    v = oracle_type1_solve(JPWeightSystem([0], 0), [2])
    assert v[0].coefficients() == [-6, 12]


def test_legendre_type2():
    ws = JPWeightSystem([0], 0)
    assert oracle_type2_solve(ws, [1]).coeffs == (Fraction(-1, 2), 1)
    assert oracle_type2_solve(ws, [2]).coeffs == (Fraction(1, 6), -1, 1)


def test_system_residuals_vanish():
    ws = JPWeightSystem([Fraction(1, 3), Fraction(-1, 4), Fraction(2, 5)], Fraction(1, 2))
    n = MultiIndex([2, 1, 2])
    system, unknowns = type1_system(ws, n)
    x = system.solve()
    assert len(unknowns) == 5
    assert all(r == 0 for r in system.residuals(x))


def test_closed_form_example():
    ws = LaguerreWeightSystem([Fraction(1, 3), Fraction(-1, 4), Fraction(2, 5)])
    n = MultiIndex([2, 3, 1])
    assert oracle_type1_solve(ws, n).matches(lag_type1_vector(ws, n))


def test_singular_system():
    with pytest.raises(SingularSystemError):
        solve_rational([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]], [Fraction(1), Fraction(0)])


def test_type2_residuals():
    ws = JPWeightSystem([Fraction(1, 3), Fraction(-1, 4)], Fraction(1, 2))
    B = oracle_type2_solve(ws, [2, 3])
    assert B.degree == 5
    assert type2_residuals(ws, B) == [0] * 5


@settings(max_examples=20)
@given(st.integers(0, 2**32))
def test_biorthogonality(seed):
    rng = random.Random(seed)
    p = rng.randint(1, 3)
    ws = JPWeightSystem(random_alphas(rng, p), random_beta(rng))
    n = MultiIndex([rng.randint(1, 2) for _ in range(p)])
    v = jp_type1_vector(ws, n)
    # m below n with |m| = |n| - 1 pairs to 1; componentwise m <= n pairs to 0 below that
    k = rng.randrange(p)
    m = MultiIndex(n.entries[:k] + (n[k] - 1,) + n.entries[k + 1 :])
    assert biorthogonal_check(oracle_type2_solve(ws, m), v) == 1
    if m.total >= 1:
        smaller = MultiIndex([max(0, x - 1) for x in m])
        if 1 <= smaller.total < m.total:
            assert biorthogonal_check(oracle_type2_solve(ws, smaller), v) == 0


def test_moment_table_threads():
    ws = JPWeightSystem([Fraction(1, 3), Fraction(-1, 4)], Fraction(1, 2))
    table = MomentTable(ws)
    errors = []

    def work(seed):
        r = random.Random(seed)
        for _ in range(200):
            i, k = r.randrange(2), r.randrange(40)
            if table.ratio(i, k) != ws.moment_ratios(i, k)[k]:
                errors.append((i, k))
            if table.values(i, k) != ws.moment(i, k):
                errors.append((i, k))

    threads = [threading.Thread(target=work, args=(s,)) for s in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert not errors
