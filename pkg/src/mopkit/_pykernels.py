"""Pure-Python hot kernels; ``_ckernels.pyx`` mirrors these line for line."""

from math import gcd


def bareiss_solve(matrix, rhs):
    """Solve ``matrix @ x = rhs`` over the integers by fraction-free elimination.

    ``matrix`` is a square list of integer rows and ``rhs`` an integer list.
    Returns ``(d, y)`` with integer ``y`` and ``x = y / d``, or ``None`` when
    the matrix is singular.  Inputs are not modified.
    """
    n = len(matrix)
    a = [list(row) + [b] for row, b in zip(matrix, rhs)]
    prev = 1
    for k in range(n):
        if a[k][k] == 0:
            for s in range(k + 1, n):
                if a[s][k] != 0:
                    a[k], a[s] = a[s], a[k]
                    break
            else:
                return None
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n + 1):
                rowi[j] = (akk * rowi[j] - aik * rowk[j]) // prev
            rowi[k] = 0
        prev = akk
    d = a[n - 1][n - 1] if n else 1
    y = [0] * n
    for i in range(n - 1, -1, -1):
        row = a[i]
        s = d * row[n]
        for j in range(i + 1, n):
            s -= row[j] * y[j]
        y[i] = s // row[i]
    return d, y


def series_terms(num, den, xn, xd, stop):
    """Terms ``t_0 .. t_stop`` of a hypergeometric series as ``(N, D)`` pairs.

    ``num`` and ``den`` hold parameters as ``(p, q)`` integer pairs with
    ``q > 0``; the argument is ``xn / xd``.  Each term is reduced to lowest
    terms with a positive denominator.  Stops early after a zero term.
    """
    out = [(1, 1)]
    tn, td = 1, 1
    for l in range(stop):
        rn = xn
        rd = xd * (l + 1)
        for p, q in num:
            rn *= p + l * q
            rd *= q
        if rn == 0:
            out.append((0, 1))
            break
        for p, q in den:
            rd *= p + l * q
            rn *= q
        tn *= rn
        td *= rd
        if td < 0:
            tn, td = -tn, -td
        g = gcd(tn, td)
        if g != 1:
            tn //= g
            td //= g
        out.append((tn, td))
    return out


def rational_dot(xs, ys):
    """``sum x_i * y_i`` for ``(num, den)`` integer pairs with positive
    denominators; returns a reduced ``(num, den)`` pair."""
    tn, td = 0, 1
    for (an, ad), (bn, bd) in zip(xs, ys):
        if an == 0 or bn == 0:
            continue
        pn = an * bn
        pd = ad * bd
        g = gcd(td, pd)
        if g == 1:
            tn = tn * pd + pn * td
            td *= pd
        else:
            tn = tn * (pd // g) + pn * (td // g)
            td = (td // g) * pd
    g = gcd(tn, td)
    return tn // g, td // g
