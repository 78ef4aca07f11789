"""Slow, independent reference computations used by the tests.

Nothing here imports the algorithms under test; only plain dicts and
integers/Fractions are used.
"""

import itertools
from fractions import Fraction


def series_coefficients(t_values, n):
    """Expand ``prod_i (1 + sum_l a_l t_i^l)`` up to a-degree ``n``.

    Returns ``{omega: coefficient}`` with ``omega`` the exponent vector of
    ``a_1 .. a_n``; only graded degree ``<= n`` is kept.
    """
    acc = {(0,) * n: Fraction(1)}
    for t in t_values:
        nxt = {}
        for omega, c in acc.items():
            deg = sum(l * e for l, e in enumerate(omega, 1))
            nxt[omega] = nxt.get(omega, 0) + c
            for l in range(1, n - deg + 1):
                w = list(omega)
                w[l - 1] += 1
                w = tuple(w)
                nxt[w] = nxt.get(w, 0) + c * Fraction(t) ** l
        acc = nxt
    return acc


def semistandard_tableaux(shape, n):
    """All SSYT of ``shape`` with entries in ``1..n``, as lists of rows."""
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    out = []

    def fill(k, tab):
        if k == len(cells):
            out.append([row[:] for row in tab])
            return
        r, c = cells[k]
        lo = 1
        if c > 0:
            lo = max(lo, tab[r][c - 1])
        if r > 0:
            lo = max(lo, tab[r - 1][c] + 1)
        for v in range(lo, n + 1):
            tab[r].append(v)
            fill(k + 1, tab)
            tab[r].pop()

    fill(0, [[] for _ in shape])
    return out


def schur_by_tableaux(shape, n):
    """``{exponent tuple: coefficient}`` of the Schur polynomial in ``x1..xn``."""
    poly = {}
    for tab in semistandard_tableaux(shape, n):
        exp = [0] * n
        for row in tab:
            for v in row:
                exp[v - 1] += 1
        exp = tuple(exp)
        poly[exp] = poly.get(exp, 0) + 1
    return poly


def localize_by_hand(fixed_points, x, n):
    """Coefficients of ``t^0 .. t^n`` of the localized series, as ``{omega: Fraction}`` dicts.

    ``fixed_points`` is a list of ``(sign, [weight, ...])``.
    """
    coeffs = [dict() for _ in range(n + 1)]
    for sign, weights in fixed_points:
        tv = [sum(Fraction(w) * xi for w, xi in zip(wt, x)) for wt in weights]
        denom = Fraction(1)
        for v in tv:
            denom *= v
        for omega, c in series_coefficients(tv, n).items():
            deg = sum(l * e for l, e in enumerate(omega, 1))
            coeffs[deg][omega] = coeffs[deg].get(omega, 0) + sign * c / denom
    return [{w: c for w, c in d.items() if c} for d in coeffs]


def partitions_of(n):
    """Partitions of ``n`` via compositions, deduplicated (deliberately naive)."""
    seen = set()
    for k in range(1, n + 1):
        for comp in itertools.product(range(1, n + 1), repeat=k):
            if sum(comp) == n:
                seen.add(tuple(sorted(comp, reverse=True)))
    return seen
