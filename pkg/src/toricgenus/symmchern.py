"""Monomial symmetric functions, their elementary-basis expansion, and the
conversion between the numbers ``s_omega`` and Chern numbers.

An exponent vector ``omega = (i_1, ..., i_n)`` is used for two things that
are the same combinatorial object:

* the index of ``s_omega``: the partition with ``i_l`` parts equal to ``l``,
  whose monomial symmetric function gives the characteristic class;
* the index of a Chern number ``c_1^{i_1} ... c_n^{i_n}``.

For example ``(2, 1, 0, 0)`` indexes both ``s`` of the partition
``(2, 1, 1)`` and the Chern number ``c_1^2 c_2``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Mapping, Sequence

from .errors import BadOmega, NonIntegralSolution, SingularMatrix, TooFewVariables
from .exactalg import MultiPoly, omega_degree


def partitions(n: int, max_part: int | None = None):
    """Partitions of ``n`` as weakly decreasing tuples, reverse lex order.

    >>> list(partitions(4))
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def omega_from_partition(parts: Sequence[int], n: int | None = None) -> tuple:
    """Multiplicity vector of a partition, of length ``n`` (default ``|parts|``)."""
    if n is None:
        n = sum(parts)
    omega = [0] * n
    for p in parts:
        if p <= 0 or p > n:
            raise BadOmega(f"part {p} does not fit in length {n}")
        omega[p - 1] += 1
    return tuple(omega)


def partition_from_omega(omega: Sequence[int]) -> tuple:
    parts = []
    for l in range(len(omega), 0, -1):
        parts.extend([l] * omega[l - 1])
    return tuple(parts)


@lru_cache(maxsize=None)
def omegas(n: int) -> tuple:
    """All ``omega`` with ``||omega|| = n``, in reverse lex order of partitions."""
    return tuple(omega_from_partition(p, n) for p in partitions(n))


def normalize_omega(omega: Sequence[int], n: int) -> tuple:
    omega = tuple(int(i) for i in omega)
    if any(i < 0 for i in omega):
        raise BadOmega(f"negative entry in {omega}")
    if len(omega) > n:
        if any(omega[n:]):
            raise BadOmega(f"omega {omega} has entries beyond position {n}")
        omega = omega[:n]
    return omega + (0,) * (n - len(omega))


def chern_label(xi: Sequence[int]) -> str:
    """``(1, 1, 0)`` -> ``"c1*c2"``."""
    parts = [f"c{l}" if e == 1 else f"c{l}^{e}" for l, e in enumerate(xi, 1) if e]
    return "*".join(parts) or "1"


# -- orbit monomials -------------------------------------------------------


def _exponent_vector(omega: Sequence[int], nvars: int) -> list:
    parts = partition_from_omega(omega)
    if len(parts) > nvars:
        raise TooFewVariables(f"omega {tuple(omega)} needs {len(parts)} variables, got {nvars}")
    return list(parts) + [0] * (nvars - len(parts))


def orbit_monomial(omega: Sequence[int], nvars: int, prefix: str = "u") -> MultiPoly:
    """Sum of the distinct ``S_nvars``-images of ``u1 ... u_{i1} u_{i1+1}^2 ...``."""
    exp = _exponent_vector(omega, nvars)
    gens = tuple(f"{prefix}{i}" for i in range(1, nvars + 1))
    terms = {e: 1 for e in set(itertools.permutations(exp))}
    return MultiPoly(terms, gens)


def f_omega(omega: Sequence[int], t_values: Sequence) -> Fraction:
    """Monomial symmetric function of ``omega`` evaluated at ``t_values``.

    Equals the coefficient of ``a^omega`` in ``prod_i f(t_i)``.  Evaluated by
    dynamic programming over the variables: the state is the multiset of
    parts not yet assigned to a variable.
    """
    omega = tuple(int(i) for i in omega)
    while omega and omega[-1] == 0:
        omega = omega[:-1]
    states = {omega: Fraction(1)}
    for t in t_values:
        t = Fraction(t)
        nxt = {}
        for state, acc in states.items():
            nxt[state] = nxt.get(state, 0) + acc
            for l, cnt in enumerate(state, 1):
                if cnt:
                    s = list(state)
                    s[l - 1] -= 1
                    s = tuple(s)
                    nxt[s] = nxt.get(s, 0) + acc * t ** l
        states = nxt
    return Fraction(states.get((0,) * len(omega), 0))


# -- expansion in elementary symmetric functions ---------------------------
#
# Symmetric polynomials in ``nvars`` variables are held in the monomial basis
# as {partition: coefficient}.


def _mul_elementary(f: Mapping[tuple, int], r: int, nvars: int) -> dict:
    """``f * e_r`` in the monomial basis."""
    out = Counter()
    for mu, c in f.items():
        mu_counts = Counter(mu + (0,) * (nvars - len(mu)))
        values = sorted(mu_counts)
        candidates = set()
        for incs in itertools.product(*(range(mu_counts[v] + 1) for v in values)):
            if sum(incs) != r:
                continue
            nu = Counter()
            for v, t in zip(values, incs):
                nu[v] += mu_counts[v] - t
                nu[v + 1] += t
            candidates.add(tuple(sorted((v for v, m in nu.items() for _ in range(m) if v),
                                        reverse=True)))
        for nu in candidates:
            out[nu] += c * _pieri_count(nu, mu, r, nvars)
    return {k: v for k, v in out.items() if v}


def _pieri_count(nu, mu, r, nvars) -> int:
    """Number of r-subsets S of positions with ``nu - 1_S`` a rearrangement of mu."""
    nu_counts = Counter(nu + (0,) * (nvars - len(nu)))
    target = Counter(mu + (0,) * (nvars - len(mu)))
    values = sorted(v for v in nu_counts if v > 0)
    total = 0
    for decs in itertools.product(*(range(nu_counts[v] + 1) for v in values)):
        if sum(decs) != r:
            continue
        got = Counter()
        for v in nu_counts:
            got[v] += nu_counts[v]
        ways = 1
        for v, s in zip(values, decs):
            got[v] -= s
            got[v - 1] += s
            ways *= comb(nu_counts[v], s)
        if +got == +target:
            total += ways
    return total


def conjugate(parts: Sequence[int]) -> tuple:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > i) for i in range(parts[0]))


@lru_cache(maxsize=None)
def elementary_product(xi: tuple, nvars: int) -> dict:
    """``e_1^{l_1} ... e_n^{l_n}`` in the monomial basis, ``xi = (l_1, ..., l_n)``."""
    f = {(): 1}
    for j, l in enumerate(xi, 1):
        for _ in range(l):
            f = _mul_elementary(f, j, nvars)
    return f


def monomial_to_elementary(parts: Sequence[int], nvars: int) -> dict:
    """Expand ``m_parts`` as ``{xi: beta}`` with ``m = sum beta * e^xi``.

    Leading-term elimination: the lexicographically largest partition left in
    the remainder is maximal in dominance order, and ``e_{lambda'}`` has
    leading term ``m_lambda`` with coefficient 1.
    """
    n = sum(parts)
    remainder = {tuple(parts): 1}
    result = {}
    while remainder:
        lam = max(remainder)
        c = remainder[lam]
        conj = conjugate(lam)
        xi = [0] * n
        for p in conj:
            xi[p - 1] += 1
        xi = tuple(xi)
        result[xi] = result.get(xi, 0) + c
        for mu, d in elementary_product(xi, nvars).items():
            v = remainder.get(mu, 0) - c * d
            if v:
                remainder[mu] = v
            else:
                remainder.pop(mu, None)
    return {xi: b for xi, b in result.items() if b}


@dataclass(frozen=True)
class BetaMatrix:
    n: int
    entries: Mapping[tuple, int]

    @property
    def index(self) -> tuple:
        return omegas(self.n)

    def row(self, omega) -> dict:
        omega = normalize_omega(omega, self.n)
        return {xi: b for (w, xi), b in self.entries.items() if w == omega}

    def as_lists(self) -> list:
        idx = self.index
        return [[self.entries.get((w, xi), 0) for xi in idx] for w in idx]


@lru_cache(maxsize=None)
def beta_matrix(n: int) -> BetaMatrix:
    if n < 1:
        raise BadOmega(f"degree must be positive, got {n}")
    entries = {}
    for omega in omegas(n):
        for xi, b in monomial_to_elementary(partition_from_omega(omega), n).items():
            entries[(omega, xi)] = b
    return BetaMatrix(n, entries)


def _complete(vec: Mapping, n: int, what: str) -> dict:
    out = {}
    for key, v in vec.items():
        key = normalize_omega(key, n)
        if omega_degree(key) != n:
            raise BadOmega(f"{what} index {key} has degree {omega_degree(key)} != {n}")
        out[key] = v
    missing = [w for w in omegas(n) if w not in out]
    if missing:
        raise BadOmega(f"missing {what} entries for {missing}")
    return out


def chern_to_s(c: Mapping, n: int) -> dict:
    c = _complete(c, n, "Chern")
    B = beta_matrix(n)
    return {w: sum(b * c[xi] for xi, b in B.row(w).items()) for w in omegas(n)}


def solve_exact(matrix: Sequence[Sequence], rhs: Sequence) -> list:
    """Gauss-Jordan elimination over the rationals."""
    size = len(matrix)
    rows = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col]), None)
        if pivot is None:
            raise SingularMatrix(f"no pivot in column {col}")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        p = rows[col][col]
        rows[col] = [x / p for x in rows[col]]
        for r in range(size):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return [row[-1] for row in rows]


def s_to_chern(s: Mapping, n: int) -> dict:
    """Solve ``B c = s`` for the Chern numbers."""
    s = _complete(s, n, "s-number")
    idx = omegas(n)
    sol = solve_exact(beta_matrix(n).as_lists(), [s[w] for w in idx])
    out = {}
    for xi, v in zip(idx, sol):
        if v.denominator != 1:
            raise NonIntegralSolution(f"Chern number {chern_label(xi)} = {v} is not an integer")
        out[xi] = int(v)
    return out
