"""Exact sparse polynomials and truncated series over the rationals.

A single polynomial type serves both variable families used in the package:
the cobordism generators ``a1, a2, ...`` and the torus coordinates
``x1, ..., xk``.  Polynomials carry an ordered alphabet of variable names;
binary operations on polynomials with different alphabets work over the
union.  Coefficients are exact rationals: ``int`` when integral, otherwise
:class:`fractions.Fraction` (always in lowest terms, positive denominator).

Monomials are ordered graded-lexicographically, with the alphabet sorted by
variable prefix and then by numeric index (``a1 > a2 > ... > t > x1 > ...``
in significance).
"""

from __future__ import annotations

import heapq
import re
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import IntegralityViolation, NotDivisible

_VAR_RE = re.compile(r"^([A-Za-z_]+)(\d*)$")


def var_key(name: str):
    m = _VAR_RE.match(name)
    if m is None:
        raise ValueError(f"bad variable name {name!r}")
    prefix, idx = m.groups()
    return (prefix, int(idx) if idx else -1)


def _as_fraction(c):
    """Exact rational; integral values are returned as ``int`` (cheaper)."""
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, float):
        raise TypeError("floating point coefficients are not supported")
    if not isinstance(c, Fraction):
        c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def _add_exp(e1, e2):
    return tuple([a + b for a, b in zip(e1, e2)])


def _grlex_key(exp):
    return (sum(exp), exp)


class MultiPoly:
    """Immutable sparse polynomial with rational coefficients.

    >>> x1, x2 = MultiPoly.var("x1"), MultiPoly.var("x2")
    >>> print((x1 - x2) * (x1 + x2))
    x1^2 - x2^2
    """

    __slots__ = ("_gens", "_terms", "_hash")

    def __init__(self, terms: Mapping[Sequence[int], object] | None = None,
                 gens: Sequence[str] = ()):
        gens = tuple(gens)
        if len(set(gens)) != len(gens):
            raise ValueError(f"repeated variable in {gens}")
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != len(gens):
                raise ValueError(f"exponent {exp} does not match alphabet {gens}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            c = _as_fraction(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
                if not clean[exp]:
                    del clean[exp]
        self._gens = gens
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, gens, terms):
        obj = cls.__new__(cls)
        obj._gens = gens
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c=0, gens: Sequence[str] = ()) -> "MultiPoly":
        gens = tuple(gens)
        c = _as_fraction(c)
        return cls._raw(gens, {(0,) * len(gens): c} if c else {})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "MultiPoly":
        var_key(name)
        return cls._raw((name,), {(power,): 1})

    @classmethod
    def from_linear(cls, coeffs: Sequence[int], prefix: str = "x") -> "MultiPoly":
        """The linear form ``sum coeffs[i] * x{i+1}``."""
        gens = tuple(f"{prefix}{i + 1}" for i in range(len(coeffs)))
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                exp = [0] * len(gens)
                exp[i] = 1
                terms[tuple(exp)] = int(c)
        return cls._raw(gens, terms)

    @property
    def gens(self) -> tuple:
        return self._gens

    @property
    def terms(self) -> Mapping[tuple, Fraction]:
        return MappingProxyType(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return next(iter(self._terms.values()), Fraction(0))

    def used_vars(self) -> tuple:
        used = set()
        for exp in self._terms:
            used.update(g for g, e in zip(self._gens, exp) if e)
        return tuple(sorted(used, key=var_key))

    def monomials(self) -> dict:
        """Terms keyed by alphabet-independent ``((name, exp), ...)`` tuples."""
        out = {}
        for exp, c in self._terms.items():
            key = sorted(((g, e) for g, e in zip(self._gens, exp) if e), key=lambda t: var_key(t[0]))
            out[tuple(key)] = c
        return out

    # -- alphabet handling -------------------------------------------------

    def with_gens(self, gens: Sequence[str]) -> "MultiPoly":
        """Re-express over a (super)alphabet ``gens``."""
        gens = tuple(gens)
        if gens == self._gens:
            return self
        pos = {g: i for i, g in enumerate(gens)}
        idx = []
        for g in self._gens:
            if g not in pos:
                # dropping a variable is allowed only if it never occurs
                idx.append(None)
            else:
                idx.append(pos[g])
        terms = {}
        for exp, c in self._terms.items():
            new = [0] * len(gens)
            for i, e in zip(idx, exp):
                if e:
                    if i is None:
                        raise ValueError(f"variable missing from alphabet {gens}")
                    new[i] = e
            terms[tuple(new)] = c
        return MultiPoly._raw(gens, terms)

    def _align(self, other: "MultiPoly"):
        if self._gens == other._gens:
            return self._gens, self._terms, other._terms
        gens = tuple(sorted(set(self._gens) | set(other._gens), key=var_key))
        return gens, self.with_gens(gens)._terms, other.with_gens(gens)._terms

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(other, self._gens)
        return NotImplemented

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        gens, a, b = self._align(other)
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for exp, c in b.items():
            v = out.get(exp)
            if v is None:
                out[exp] = c
            else:
                v += c
                if v:
                    out[exp] = v
                else:
                    del out[exp]
        return MultiPoly._raw(gens, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self._gens, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        gens, a, b = self._align(other)
        out = {}
        get = out.get
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple([x + y for x, y in zip(e1, e2)])
                v = get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return MultiPoly._raw(gens, {e: c for e, c in out.items() if c})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "MultiPoly":
        if isinstance(c, MultiPoly):
            return self * c
        c = _as_fraction(c)
        if not c:
            return MultiPoly._raw(self._gens, {})
        return MultiPoly._raw(self._gens,
                              {e: _as_fraction(v * c) for e, v in self._terms.items()})

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = MultiPoly.const(1, self._gens)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1, 1) / other)
        if isinstance(other, MultiPoly):
            return exact_divide(self, other)
        return NotImplemented

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if self._gens == other._gens:
            return self._terms == other._terms
        return self.monomials() == other.monomials()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.monomials().items()))
        return self._hash

    # -- structure ---------------------------------------------------------

    def sorted_terms(self):
        """Terms in descending graded-lex order."""
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def leading_term(self):
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self._terms, key=_grlex_key)
        return exp, self._terms[exp]

    def total_degree(self, names: Iterable[str] | None = None) -> int:
        if not self._terms:
            return -1
        if names is None:
            return max(sum(e) for e in self._terms)
        idx = [i for i, g in enumerate(self._gens) if g in set(names)]
        return max(sum(e[i] for i in idx) for e in self._terms)

    def coefficient(self, monomial: Mapping[str, int]) -> Fraction:
        key = tuple(sorted(((g, e) for g, e in monomial.items() if e),
                           key=lambda t: var_key(t[0])))
        return self.monomials().get(key, Fraction(0))

    def rename(self, mapping: Mapping[str, str]) -> "MultiPoly":
        """Substitute variables by variables (e.g. a coordinate permutation)."""
        targets = [mapping.get(g, g) for g in self._gens]
        gens = tuple(sorted(set(targets), key=var_key))
        pos = {g: i for i, g in enumerate(gens)}
        idx = [pos[t] for t in targets]
        out = {}
        for exp, c in self._terms.items():
            new = [0] * len(gens)
            for i, e in zip(idx, exp):
                new[i] += e
            new = tuple(new)
            v = out.get(new, 0) + c
            if v:
                out[new] = v
            else:
                out.pop(new, None)
        return MultiPoly._raw(gens, out)

    def evaluate(self, values: Mapping[str, object]) -> "MultiPoly":
        """Substitute numbers (or polynomials) for some variables."""
        rest = tuple(g for g in self._gens if g not in values)
        result = MultiPoly.const(0, rest)
        rest_idx = [i for i, g in enumerate(self._gens) if g not in values]
        sub_idx = [(i, values[g]) for i, g in enumerate(self._gens) if g in values]
        cache = {}
        for exp, c in self._terms.items():
            term = MultiPoly._raw(rest, {tuple(exp[i] for i in rest_idx): c})
            for i, v in sub_idx:
                if exp[i]:
                    key = (i, exp[i])
                    if key not in cache:
                        cache[key] = v ** exp[i] if isinstance(v, MultiPoly) \
                            else _as_fraction(v) ** exp[i]
                    term = term * cache[key]
            result = result + term
        return result

    def __repr__(self):
        return f"MultiPoly({str(self)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            mono = "*".join(
                g if e == 1 else f"{g}^{e}" for g, e in zip(self._gens, exp) if e
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)


def poly_add(p: MultiPoly, q) -> MultiPoly:
    return p + q


def poly_mul(p: MultiPoly, q) -> MultiPoly:
    return p * q


def poly_scale(p: MultiPoly, c) -> MultiPoly:
    return p.scale(c)


def exact_divide(p: MultiPoly, d: MultiPoly) -> MultiPoly:
    """Return ``q`` with ``q * d == p``; raise :class:`NotDivisible` otherwise.

    Division by the graded-lex leading term.  When ``d`` divides ``p`` every
    leading term of the running remainder is divisible by the leading term of
    ``d``, so the first failure of that test proves non-divisibility.
    """
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    gens, rem, dterms = p._align(d)
    rem = dict(rem)
    dexp, dcoef = max(dterms.items(), key=lambda t: _grlex_key(t[0]))
    rest = [(e, c) for e, c in dterms.items() if e != dexp]
    heap = [(-sum(e), tuple(-x for x in e)) for e in rem]
    heapq.heapify(heap)
    quot = {}
    while rem:
        _, neg = heapq.heappop(heap)
        exp = tuple(-x for x in neg)
        c = rem.pop(exp, None)
        if c is None:
            continue
        qexp = tuple(a - b for a, b in zip(exp, dexp))
        if any(x < 0 for x in qexp):
            raise NotDivisible(f"{d} does not divide {p}")
        qc = _as_fraction(Fraction(c) / dcoef)
        quot[qexp] = qc
        for e, dc in rest:
            ne = _add_exp(qexp, e)
            v = rem.get(ne)
            if v is None:
                rem[ne] = -qc * dc
                heapq.heappush(heap, (-sum(ne), tuple(-x for x in ne)))
            else:
                v -= qc * dc
                if v:
                    rem[ne] = v
                else:
                    del rem[ne]
    return MultiPoly._raw(gens, quot)


def eval_linear_form(weight: Sequence[int], x: Sequence) -> Fraction:
    if len(weight) != len(x):
        raise ValueError(f"weight of length {len(weight)} vs point of length {len(x)}")
    return sum((Fraction(w) * _as_fraction(v) for w, v in zip(weight, x) if w),
               Fraction(0))


def a_gens(n: int) -> tuple:
    return tuple(f"a{i}" for i in range(1, n + 1))


def x_gens(k: int) -> tuple:
    return tuple(f"x{i}" for i in range(1, k + 1))


class TruncSeries:
    """Series ``c_0 + c_1 t + ... + c_N t^N`` with polynomial coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence, order: int | None = None):
        coeffs = [c if isinstance(c, MultiPoly) else MultiPoly.const(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        zero = MultiPoly.const(0, coeffs[0].gens if coeffs else ())
        coeffs = coeffs[: order + 1]
        coeffs += [zero] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = tuple(coeffs)

    @classmethod
    def one(cls, order: int, gens=()) -> "TruncSeries":
        return cls([MultiPoly.const(1, gens)], order)

    def __getitem__(self, l: int) -> MultiPoly:
        return self.coeffs[l]

    def __len__(self):
        return len(self.coeffs)

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        order = min(self.order, other.order)
        return TruncSeries([self.coeffs[i] + other.coeffs[i] for i in range(order + 1)], order)

    def __neg__(self):
        return TruncSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return self.scale(other)
        order = min(self.order, other.order)
        out = [None] * (order + 1)
        for i in range(order + 1):
            ci = self.coeffs[i]
            if ci.is_zero():
                continue
            for j in range(order + 1 - i):
                cj = other.coeffs[j]
                if cj.is_zero():
                    continue
                prod = ci * cj
                out[i + j] = prod if out[i + j] is None else out[i + j] + prod
        zero = MultiPoly.const(0)
        return TruncSeries([c if c is not None else zero for c in out], order)

    __rmul__ = __mul__

    def scale(self, c) -> "TruncSeries":
        return TruncSeries([coef.scale(c) for coef in self.coeffs], self.order)

    def map(self, fn) -> "TruncSeries":
        return TruncSeries([fn(c) for c in self.coeffs], self.order)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self):
        body = " + ".join(f"({c})*t^{i}" for i, c in enumerate(self.coeffs) if c)
        return f"TruncSeries[{self.order}]({body or '0'})"


def universal_f(N: int, scale=1) -> TruncSeries:
    """``f(scale*t) = 1 + sum_{i<=N} a_i scale^i t^i`` truncated at ``t^N``.

    ``scale`` may be a rational number or a polynomial (e.g. ``x1 - x2``).
    """
    if N < 0:
        raise ValueError("N must be non-negative")
    gens = a_gens(N)
    coeffs = [MultiPoly.const(1, gens)]
    if isinstance(scale, MultiPoly):
        power = MultiPoly.const(1)
        for i in range(1, N + 1):
            power = power * scale
            coeffs.append(MultiPoly.var(f"a{i}") * power)
    else:
        scale = _as_fraction(scale)
        for i in range(1, N + 1):
            exp = [0] * N
            exp[i - 1] = 1
            coeffs.append(MultiPoly._raw(gens, {tuple(exp): scale ** i} if scale else {}))
    return TruncSeries(coeffs, N)


# -- cobordism classes -----------------------------------------------------


def omega_degree(omega: Sequence[int]) -> int:
    """Graded degree ``sum l * i_l`` of an exponent vector ``(i_1, ..., i_n)``."""
    return sum(l * i for l, i in enumerate(omega, 1))


def omega_key(omega: Sequence[int]):
    """Graded-lex sort key; sort with ``reverse=True`` for printing order."""
    return (sum(omega), tuple(omega))


def _format_monomial(omega, var="a"):
    return "*".join(f"{var}{l}" if e == 1 else f"{var}{l}^{e}"
                    for l, e in enumerate(omega, 1) if e)


@dataclass(frozen=True)
class CobordismClass:
    """``sum_{||omega|| = n} s_omega a^omega`` with integer coefficients.

    Keys are exponent tuples of length exactly ``n``; zero coefficients are
    not stored.
    """

    n: int
    terms: Mapping[tuple, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for omega, c in dict(self.terms).items():
            omega = tuple(int(i) for i in omega)
            omega = omega + (0,) * (self.n - len(omega))
            if len(omega) != self.n or any(omega[self.n:]):
                raise ValueError(f"omega {omega} longer than n={self.n}")
            if omega_degree(omega) != self.n:
                raise ValueError(f"omega {omega} has degree {omega_degree(omega)} != {self.n}")
            c = Fraction(c)
            if c.denominator != 1:
                raise IntegralityViolation(f"coefficient {c} of a^{omega} is not an integer")
            if c:
                clean[omega] = int(c)
        object.__setattr__(self, "terms", MappingProxyType(clean))

    @classmethod
    def from_poly(cls, poly: MultiPoly, n: int) -> "CobordismClass":
        """Read a polynomial in ``a1..an`` as a class of dimension ``2n``."""
        pos = {f"a{i}": i - 1 for i in range(1, n + 1)}
        terms = {}
        for exp, c in poly.terms.items():
            omega = [0] * n
            for g, e in zip(poly.gens, exp):
                if not e:
                    continue
                if g not in pos:
                    raise ValueError(f"variable {g} in cobordism class of dimension {2 * n}")
                omega[pos[g]] = e
            terms[tuple(omega)] = c
        return cls(n, terms)

    def to_poly(self) -> MultiPoly:
        return MultiPoly(self.terms, a_gens(self.n))

    def __getitem__(self, omega) -> int:
        omega = tuple(omega) + (0,) * (self.n - len(omega))
        return self.terms.get(omega, 0)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: omega_key(t[0]), reverse=True)

    def content(self) -> int:
        from math import gcd
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
        return g

    def __eq__(self, other):
        if not isinstance(other, CobordismClass):
            return NotImplemented
        return self.n == other.n and dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for omega, c in self.sorted_terms():
            mono = _format_monomial(omega)
            body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)
