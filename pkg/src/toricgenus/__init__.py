"""Cobordism classes and characteristic numbers of torus manifolds with
isolated fixed points, computed from fixed-point weights."""

from .errors import (
    ConstraintViolation,
    InputError,
    IntegralityViolation,
    NonIntegralSolution,
    OutOfRange,
    ToricGenusError,
    VanishingViolation,
)
from .exactalg import CobordismClass, MultiPoly, TruncSeries, exact_divide, universal_f
from .genus import (
    GenericPoint,
    GenusReport,
    choose_generic_point,
    cobordism_class,
    localized_series,
    s_number,
    verify_constraints,
)
from .rootdata import (
    BlockPartition,
    ExplicitFixedPoints,
    FixedPointDatum,
    NamedUnitaryQuotient,
    builtin_space,
    coset_representatives,
    euler_characteristic,
    orbit_fixed_points,
)
from .symmchern import beta_matrix, chern_to_s, f_omega, orbit_monomial, s_to_chern

__version__ = "0.1.0"
