"""Localization of the toric genus at a rational point.

For a fixed-point table ``{(sign(p), Lambda_1(p), ..., Lambda_n(p))}`` and a
point ``x`` where no weight vanishes, put ``t_j(p) = <Lambda_j(p), x>`` and

    S(t) = sum_p sign(p) prod_j f(t * t_j(p)) / t_j(p),
    f(t) = 1 + a_1 t + a_2 t^2 + ...

For data coming from a stably complex torus manifold the coefficients of
``t^0 .. t^{n-1}`` vanish identically and the coefficient of ``t^n`` is the
cobordism class ``sum s_omega a^omega`` with integer ``s_omega``, independent
of ``x``.  Violations of these conditions are reported as
:class:`~toricgenus.errors.ConstraintViolation`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import BadOmega, BadParameters, IntegralityViolation, SingularPoint, VanishingViolation
from .exactalg import (
    CobordismClass,
    MultiPoly,
    TruncSeries,
    a_gens,
    eval_linear_form,
    omega_degree,
    universal_f,
)
from .rootdata import FixedPointDatum, SpaceSpec, orbit_fixed_points
from .symmchern import f_omega, normalize_omega, omegas


@dataclass(frozen=True)
class GenericPoint:
    coordinates: tuple
    base: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "coordinates", tuple(Fraction(c) for c in self.coordinates))

    def __len__(self):
        return len(self.coordinates)


@dataclass(frozen=True)
class GenusReport:
    cobordism_class: CobordismClass
    s_numbers: Mapping[tuple, int]
    lower_coefficients_vanished: bool
    integrality_passed: bool
    point_used: GenericPoint
    second_point_agreed: bool | None = None
    euler_characteristic: int = field(default=0)

    @property
    def n(self) -> int:
        return self.cobordism_class.n


def _table_shape(table: Sequence[FixedPointDatum]):
    if not table:
        raise BadParameters("empty fixed-point table")
    n = table[0].n
    k = len(table[0].weights[0]) if n else 0
    return n, k


def choose_generic_point(table: Sequence[FixedPointDatum], k: int, bump: int = 0) -> GenericPoint:
    """``x = (1, M, ..., M^{k-1})`` with ``M`` exceeding every weight entry.

    A nonzero integer vector with entries of absolute value below ``M`` pairs
    to a nonzero number with ``x`` (balanced base-``M`` digits).  ``bump``
    increases ``M`` to get a second, different generic point.
    """
    bound = max((abs(c) for p in table for w in p.weights for c in w), default=0)
    M = bound + 1 + bump
    return GenericPoint(tuple(M ** i for i in range(k)), base=M)


def _as_point(point, k: int) -> GenericPoint:
    if not isinstance(point, GenericPoint):
        point = GenericPoint(tuple(point))
    if len(point) != k:
        raise BadParameters(f"point has {len(point)} coordinates, rank is {k}")
    return point


def tangent_values(datum: FixedPointDatum, x: GenericPoint) -> list:
    values = [eval_linear_form(w, x.coordinates) for w in datum.weights]
    if any(v == 0 for v in values):
        coords = ", ".join(str(c) for c in x.coordinates)
        bad = [w for w, v in zip(datum.weights, values) if v == 0]
        raise SingularPoint(f"weight {bad[0]} vanishes at the point ({coords})")
    return values


def _point_term(datum: FixedPointDatum, x: GenericPoint, n: int) -> TruncSeries:
    values = tangent_values(datum, x)
    series = TruncSeries.one(n, a_gens(n))
    denom = Fraction(1)
    for v in values:
        series = series * universal_f(n, v)
        denom *= v
    return series.scale(datum.sign / denom)


def localized_series(table: Sequence[FixedPointDatum], x, n: int | None = None) -> TruncSeries:
    """``sum_p sign(p) prod_j f(t t_j(p)) / t_j(p)`` truncated at ``t^n``."""
    if n is None:
        n = _table_shape(table)[0]
    total = TruncSeries([MultiPoly.const(0, a_gens(n))], n)
    for datum in table:
        if datum.n != n:
            raise BadParameters(f"fixed point has {datum.n} weights, expected {n}")
        total = total + _point_term(datum, x, n)
    return total


def fixed_point_table(spec: SpaceSpec) -> list:
    return orbit_fixed_points(spec)


def verify_constraints(table: Sequence[FixedPointDatum], point=None) -> list:
    """Residuals ``(l, coefficient of t^l)`` for ``l = 0 .. n-1``; all zero iff passing."""
    n, k = _table_shape(table)
    x = choose_generic_point(table, k) if point is None else _as_point(point, k)
    series = localized_series(table, x, n)
    return [(l, series[l]) for l in range(n)]


def _class_at(table, x, n):
    series = localized_series(table, x, n)
    residuals = [(l, series[l]) for l in range(n)]
    bad = [(l, r) for l, r in residuals if not r.is_zero()]
    if bad:
        l, r = bad[0]
        raise VanishingViolation(
            f"coefficient of t^{l} does not vanish: {r}", residuals=residuals)
    top = series[n]
    for c in top.terms.values():
        if c.denominator != 1:
            raise IntegralityViolation(f"coefficient of t^{n} is not integral: {top}")
    return CobordismClass.from_poly(top, n)


def cobordism_class(spec: SpaceSpec | Sequence[FixedPointDatum],
                    check_independence: bool = False, point=None) -> GenusReport:
    """Cobordism class and all ``s_omega`` of the space, from localization."""
    if isinstance(spec, (list, tuple)):
        table = list(spec)
    else:
        table = fixed_point_table(spec)
    n, k = _table_shape(table)
    x = choose_generic_point(table, k) if point is None else _as_point(point, k)
    cls = _class_at(table, x, n)
    agreed = None
    if check_independence:
        # a user-supplied point is compared with the default generic point
        other = choose_generic_point(table, k, bump=0 if x.base is None else 1)
        agreed = _class_at(table, other, n) == cls
    s_numbers = {w: cls[w] for w in omegas(n)} if n else {}
    return GenusReport(
        cobordism_class=cls,
        s_numbers=s_numbers,
        lower_coefficients_vanished=True,
        integrality_passed=True,
        point_used=x,
        second_point_agreed=agreed,
        euler_characteristic=len(table),
    )


def s_number(spec: SpaceSpec | Sequence[FixedPointDatum], omega: Sequence[int], point=None) -> int:
    """``s_omega = sum_p sign(p) f_omega(t(p)) / (t_1(p) ... t_n(p))``."""
    if isinstance(spec, (list, tuple)):
        table = list(spec)
    else:
        table = fixed_point_table(spec)
    n, k = _table_shape(table)
    omega = normalize_omega(omega, n)
    if omega_degree(omega) != n:
        raise BadOmega(f"||omega|| = {omega_degree(omega)}, expected {n}")
    x = choose_generic_point(table, k) if point is None else _as_point(point, k)
    total = Fraction(0)
    for datum in table:
        values = tangent_values(datum, x)
        denom = Fraction(1)
        for v in values:
            denom *= v
        total += datum.sign * f_omega(omega, values) / denom
    if total.denominator != 1:
        raise IntegralityViolation(f"s_{omega} evaluates to non-integer {total}")
    return int(total)
