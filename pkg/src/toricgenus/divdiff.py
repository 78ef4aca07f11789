"""Divided differences, the antisymmetrizer ``L`` and the closed-form
cobordism classes of flag manifolds and Grassmannians.

``L`` acts on polynomials in ``x1..xn`` (other variables are scalars)::

    L(p) = (1/Delta_n) * sum_{sigma in S_n} sign(sigma) sigma(p)
         = (d_1 d_2 ... d_{n-1}) (d_1 ... d_{n-2}) ... (d_1 d_2) d_1 (p)

with ``Delta_n = prod_{i<j} (x_i - x_j)`` and ``d_i`` the divided difference
in ``x_i, x_{i+1}``.  ``L(x^(lambda + delta)) = s_lambda``, the Schur
polynomial, where ``delta = (n-1, ..., 1, 0)``.

This module is an independent check on :mod:`toricgenus.genus`; its cost grows
like ``n!`` and the class computations are guarded accordingly.
"""

from __future__ import annotations

import enum
import itertools
from fractions import Fraction
from math import factorial
from typing import Sequence

from .errors import OutOfRange, TooManyParts, VanishingViolation
from .exactalg import (
    CobordismClass,
    MultiPoly,
    TruncSeries,
    a_gens,
    exact_divide,
    var_key,
    x_gens,
)
from .symmchern import omegas

FLAG_MAX_N = 5
GRASSMANN_MAX_DIM = 8


class LMethod(enum.Enum):
    ANTISYMMETRIZE = "antisymmetrize"
    COMPOSED = "composed"


def _with_x(p: MultiPoly, n: int) -> MultiPoly:
    gens = tuple(sorted(set(p.gens) | set(x_gens(n)), key=var_key))
    return p.with_gens(gens)


def divided_difference(i: int, p: MultiPoly) -> MultiPoly:
    """``(p - s_i p) / (x_i - x_{i+1})`` for 1-based ``i``.

    Uses the monomial identity
    ``(x^a y^b - x^b y^a)/(x - y) = sum_{k<a-b} x^{a-1-k} y^{b+k}`` for ``a > b``.
    """
    if i < 1:
        raise ValueError(f"divided difference index must be >= 1, got {i}")
    p = _with_x(p, i + 1)
    gens = p.gens
    u, v = gens.index(f"x{i}"), gens.index(f"x{i + 1}")
    out = {}
    for exp, c in p.terms.items():
        a, b = exp[u], exp[v]
        if a == b:
            continue
        sign = 1
        if a < b:
            a, b, sign = b, a, -1
        base = list(exp)
        for k in range(a - b):
            base[u], base[v] = a - 1 - k, b + k
            key = tuple(base)
            val = out.get(key, 0) + sign * c
            if val:
                out[key] = val
            else:
                out.pop(key, None)
    return MultiPoly(out, gens)


def vandermonde(indices: Sequence[int]) -> MultiPoly:
    """``prod_{i<j} (x_i - x_j)`` over the given 1-based indices (in order)."""
    result = MultiPoly.const(1)
    for a, b in itertools.combinations(indices, 2):
        result = result * (MultiPoly.var(f"x{a}") - MultiPoly.var(f"x{b}"))
    return result


def _inversion_sign(xs) -> int:
    """Sign of the permutation sorting ``xs`` into decreasing order."""
    inv = sum(1 for i in range(len(xs)) for j in range(i + 1, len(xs)) if xs[i] < xs[j])
    return -1 if inv % 2 else 1


def _antisymmetrize(p: MultiPoly, n: int) -> MultiPoly:
    """``sum_sigma sign(sigma) sigma(p)`` over ``S_n`` acting on ``x1..xn``.

    Terms are first collected by the decreasing rearrangement of their
    x-exponents (monomials with a repeated x-exponent cancel), then each
    alternant is expanded.
    """
    p = _with_x(p, n)
    gens = p.gens
    xpos = [gens.index(f"x{i}") for i in range(1, n + 1)]
    collected = {}
    for exp, c in p.terms.items():
        xs = [exp[j] for j in xpos]
        if len(set(xs)) < n:
            continue
        mu = tuple(sorted(xs, reverse=True))
        rest = list(exp)
        for j in xpos:
            rest[j] = 0
        key = (mu, tuple(rest))
        val = collected.get(key, 0) + _inversion_sign(xs) * c
        if val:
            collected[key] = val
        else:
            collected.pop(key, None)
    perms = [(sigma, _inversion_sign([-s for s in sigma]))
             for sigma in itertools.permutations(range(n))]
    out = {}
    for (mu, rest), c in collected.items():
        for sigma, sgn in perms:
            exp = list(rest)
            for i, s in enumerate(sigma):
                exp[xpos[s]] = mu[i]
            key = tuple(exp)
            val = out.get(key, 0) + sgn * c
            if val:
                out[key] = val
            else:
                out.pop(key, None)
    return MultiPoly(out, gens)


def L_operator(p: MultiPoly, n: int, method: LMethod | str = LMethod.ANTISYMMETRIZE) -> MultiPoly:
    method = LMethod(method)
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n == 1:
        return p
    if method is LMethod.ANTISYMMETRIZE:
        return exact_divide(_antisymmetrize(p, n), vandermonde(range(1, n + 1)))
    for k in range(1, n):
        for i in range(k, 0, -1):
            p = divided_difference(i, p)
    return p


def schur(parts: Sequence[int], n: int, method: LMethod | str = LMethod.ANTISYMMETRIZE) -> MultiPoly:
    """Schur polynomial ``s_lambda(x1..xn)`` as ``L(x^(lambda + delta))``."""
    parts = [p for p in parts if p]
    if len(parts) > n:
        raise TooManyParts(f"partition {tuple(parts)} has more than {n} parts")
    lam = list(parts) + [0] * (n - len(parts))
    exp = tuple(l + n - 1 - i for i, l in enumerate(lam))
    return L_operator(MultiPoly({exp: 1}, x_gens(n)), n, method)


# -- closed-form classes ---------------------------------------------------


def _root_series(i: int, j: int, order: int, odd_only: bool = False) -> TruncSeries:
    """``f(t (x_i - x_j))``, or its odd part ``sum a_{2l-1} (t(x_i - x_j))^{2l-1}``."""
    root = MultiPoly.var(f"x{i}") - MultiPoly.var(f"x{j}")
    coeffs = [MultiPoly.const(0 if odd_only else 1)]
    power = MultiPoly.const(1)
    for k in range(1, order + 1):
        power = power * root
        if odd_only and k % 2 == 0:
            coeffs.append(MultiPoly.const(0))
        else:
            coeffs.append(MultiPoly.var(f"a{k}") * power)
    return TruncSeries(coeffs, order)


def _to_class(poly: MultiPoly, dim: int) -> CobordismClass:
    if any(g.startswith("x") for g in poly.used_vars()):
        raise ArithmeticError(f"L left x-dependence behind: {poly}")
    return CobordismClass.from_poly(poly.with_gens(a_gens(dim)), dim)


def flag_class_exact(n: int, optimized: bool | None = None,
                     method: LMethod | str = LMethod.ANTISYMMETRIZE) -> CobordismClass:
    """``[U(n)/T^n]`` as the ``t^m`` coefficient of ``L(prod_{i<j} f(t(x_i - x_j)))``.

    With ``optimized`` (default for ``n >= 4``) the factors for ``(1, 2)``
    and ``(n-1, n)`` are replaced by the odd part of ``f``.
    """
    if not 2 <= n <= FLAG_MAX_N:
        raise OutOfRange(f"exact flag route supports 2 <= n <= {FLAG_MAX_N}, got {n}")
    if optimized is None:
        optimized = n >= 4
    if optimized and n < 4:
        raise OutOfRange("the odd-part form applies only for n >= 4")
    m = n * (n - 1) // 2
    odd = {(1, 2), (n - 1, n)} if optimized else set()
    series = TruncSeries.one(m)
    for i, j in itertools.combinations(range(1, n + 1), 2):
        series = series * _root_series(i, j, m, odd_only=(i, j) in odd)
    return _to_class(L_operator(series[m], n, method), m)


def _longest_word(indices: Sequence[int]) -> list:
    """Reduced word of the longest element on consecutive ``indices`` (1-based),
    in the order ``(d_1 ... d_{k-1}) ... (d_1 d_2) d_1`` of ``L``."""
    first = indices[0]
    k = len(indices)
    word = []
    for top in range(k - 1, 0, -1):
        word.extend(range(first, first + top))
    return word


def _reduced_word(perm: Sequence[int]) -> list:
    perm = list(perm)
    word = []
    while True:
        i = next((i for i in range(len(perm) - 1) if perm[i] > perm[i + 1]), None)
        if i is None:
            return word[::-1]
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        word.append(i + 1)


def apply_word(word: Sequence[int], p: MultiPoly) -> MultiPoly:
    """``d_{i1} d_{i2} ... d_{ir} p`` (rightmost operator applied first)."""
    for i in reversed(word):
        p = divided_difference(i, p)
    return p


def grassmann_coset_word(q: int, l: int) -> list:
    """Reduced word of ``u = w0 * w0_P`` for ``P = S_q x S_l``, so ``L = d_u d_{w0_P}``."""
    n = q + l
    # w0 * w0_P reverses each block's image: block 1 -> last q slots, block 2 -> first l
    u = tuple(range(l, n)) + tuple(range(l))
    return _reduced_word(u)


def grassmann_class_exact(q: int, l: int, method: LMethod | str | None = None) -> CobordismClass:
    """``[G_{q+l,l}]`` as ``L(Delta_q Delta_{q+1,q+l} prod f(t(x_i - x_j))) / (q! l!)``.

    The product runs over ``i <= q < j``; the weights match
    :func:`toricgenus.rootdata.grassmann` with ``n = q + l``, ``k = q``.

    ``ANTISYMMETRIZE`` evaluates the formula as written.  ``COMPOSED`` factors
    ``L = d_u (L_q x L_l)``; the block part sends ``Delta_q Delta_{q+1,q+l} g``
    to ``q! l! g`` for block-symmetric ``g``, leaving ``d_u g``.  The default
    picks the literal form for ``q + l <= 6``.
    """
    if q < 1 or l < 1 or q * l > GRASSMANN_MAX_DIM:
        raise OutOfRange(f"exact Grassmann route needs q, l >= 1 and q*l <= {GRASSMANN_MAX_DIM}")
    n, dim = q + l, q * l
    if method is None:
        method = LMethod.ANTISYMMETRIZE if n <= 6 else LMethod.COMPOSED
    method = LMethod(method)
    series = TruncSeries.one(dim)
    for i in range(1, q + 1):
        for j in range(q + 1, n + 1):
            series = series * _root_series(i, j, dim)
    if method is LMethod.COMPOSED:
        return _to_class(apply_word(grassmann_coset_word(q, l), series[dim]), dim)
    prefactor = vandermonde(range(1, q + 1)) * vandermonde(range(q + 1, n + 1))
    top = L_operator(prefactor * series[dim], n, method)
    return _to_class(top.scale(Fraction(1, factorial(q) * factorial(l))), dim)


def flag_vanishing_omegas(n: int) -> list:
    """The ``omega`` of degree ``m = n(n-1)/2`` forced to ``s_omega = 0``.

    * the top number ``s_m`` (``n > 3``);
    * any ``omega`` with ``i_k != 0`` for some ``k > 2n - 3``;
    * for ``n = 0, 1 mod 4``: every ``omega`` with all odd-index entries zero.
    """
    m = n * (n - 1) // 2
    out = []
    for omega in omegas(m):
        top = n > 3 and omega == (0,) * (m - 1) + (1,)
        high = any(omega[k - 1] for k in range(2 * n - 2, m + 1))
        even = n % 4 in (0, 1) and not any(omega[k - 1] for k in range(1, m + 1, 2))
        if top or high or even:
            out.append(omega)
    return out


def flag_vanishing_suite(n: int, cls: CobordismClass | None = None) -> list:
    """Check the vanishing statements for ``U(n)/T^n``; return ``[(omega, s_omega)]``.

    ``cls`` defaults to :func:`flag_class_exact`.
    """
    if not 4 <= n <= FLAG_MAX_N:
        raise OutOfRange(f"vanishing suite covers 4 <= n <= {FLAG_MAX_N}, got {n}")
    if cls is None:
        cls = flag_class_exact(n)
    checked = [(omega, cls[omega]) for omega in flag_vanishing_omegas(n)]
    bad = [(w, s) for w, s in checked if s]
    if bad:
        raise VanishingViolation(f"nonzero s_omega where zero is forced: {bad}")
    return checked
