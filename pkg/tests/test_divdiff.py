import itertools
import random

import pytest

from oracles import schur_by_tableaux
from toricgenus import builtin_space, cobordism_class
from toricgenus.divdiff import (
    LMethod,
    L_operator,
    _root_series,
    _to_class,
    divided_difference,
    flag_class_exact,
    flag_vanishing_omegas,
    flag_vanishing_suite,
    grassmann_class_exact,
    schur,
)
from toricgenus.errors import OutOfRange, TooManyParts
from toricgenus.exactalg import CobordismClass, MultiPoly, TruncSeries, x_gens
from toricgenus.symmchern import partitions


def xv(i):
    return MultiPoly.var(f"x{i}")


def random_poly(rng, n, degree, terms=6):
    out = {}
    for _ in range(terms):
        d = rng.randint(0, degree)
        exp = [0] * n
        for _ in range(d):
            exp[rng.randrange(n)] += 1
        out[tuple(exp)] = rng.randint(-5, 5)
    return MultiPoly(out, x_gens(n))


def random_symmetric(rng, n):
    # a few power sums with random coefficients
    s = MultiPoly.const(rng.randint(-3, 3))
    for k in range(1, 3):
        s = s + rng.randint(-3, 3) * sum((xv(i) ** k for i in range(2, n + 1)), xv(1) ** k)
    return s


def swap(p, i, j):
    return p.rename({f"x{i}": f"x{j}", f"x{j}": f"x{i}"})


def test_divided_difference_basics():
    assert divided_difference(1, xv(1)) == MultiPoly.const(1)
    assert divided_difference(1, xv(1) * xv(2)).is_zero()
    assert divided_difference(2, xv(2) ** 3) == xv(2) ** 2 + xv(2) * xv(3) + xv(3) ** 2
    with pytest.raises(ValueError):
        divided_difference(0, xv(1))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_methods_agree(n):
    rng = random.Random(n)
    for _ in range(8):
        p = random_poly(rng, n, 8)
        assert L_operator(p, n, "antisymmetrize") == L_operator(p, n, "composed")


@pytest.mark.parametrize("n", [2, 3, 4])
def test_module_homomorphism(n):
    rng = random.Random(10 + n)
    for _ in range(5):
        p, s = random_poly(rng, n, 6), random_symmetric(rng, n)
        assert L_operator(s * p, n) == s * L_operator(p, n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_transposition_symmetrized_killed(n):
    rng = random.Random(20 + n)
    for i, j in itertools.combinations(range(1, n + 1), 2):
        p = random_poly(rng, n, 7)
        for method in LMethod:
            assert L_operator(p + swap(p, i, j), n, method).is_zero()


def test_l_on_staircase():
    for n in range(1, 5):
        delta = tuple(range(n - 1, -1, -1))
        assert L_operator(MultiPoly({delta: 1}, x_gens(n)), n) == MultiPoly.const(1)
    # weakly decreasing exponent with a repeat is killed
    assert L_operator(MultiPoly({(2, 2, 0): 1}, x_gens(3)), 3).is_zero()


@pytest.mark.parametrize("size", range(0, 5))
def test_schur_matches_tableaux(size):
    for lam in partitions(size):
        for n in range(max(len(lam), 1), 5):
            expected = MultiPoly(schur_by_tableaux(lam, n), x_gens(n))
            for method in LMethod:
                assert schur(lam, n, method) == expected, (lam, n, method)


def test_schur_small_cases():
    assert schur((1,), 2) == xv(1) + xv(2)
    assert schur((), 3) == MultiPoly.const(1)
    # frozen output of the tableau oracle for shape (2, 1) in three variables
    expected = {(2, 1, 0): 1, (2, 0, 1): 1, (1, 2, 0): 1, (0, 2, 1): 1,
                (1, 0, 2): 1, (0, 1, 2): 1, (1, 1, 1): 2}
    assert schur((2, 1), 3) == MultiPoly(expected, x_gens(3))
    with pytest.raises(TooManyParts):
        schur((1, 1, 1), 2)


def test_flag_small_classes():
    assert flag_class_exact(2) == CobordismClass(1, {(1,): 2})
    assert flag_class_exact(3) == CobordismClass(3, {(3, 0, 0): 6, (1, 1, 0): 6, (0, 0, 1): -6})


def test_odd_part_form_equals_plain_form():
    n, m = 4, 6
    plain = TruncSeries.one(m)
    for i, j in itertools.combinations(range(1, n + 1), 2):
        plain = plain * _root_series(i, j, m)
    assert _to_class(L_operator(plain[m], n), m) == flag_class_exact(4, optimized=True)
    assert flag_class_exact(4, optimized=False) == flag_class_exact(4, optimized=True)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_flag_routes_agree(n):
    assert flag_class_exact(n) == cobordism_class(builtin_space("flag", n)).cobordism_class


@pytest.mark.parametrize("q,l", [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (2, 3), (3, 2)])
def test_grassmann_routes_agree(q, l):
    lit = grassmann_class_exact(q, l, "antisymmetrize")
    assert lit == grassmann_class_exact(q, l, "composed")
    assert lit == cobordism_class(builtin_space("grassmann", q + l, q)).cobordism_class


def test_grassmann_42_known_class():
    expected = {(4, 0, 0, 0): 6, (2, 1, 0, 0): 24, (0, 2, 0, 0): 14, (1, 0, 1, 0): 4, (0, 0, 0, 1): -20}
    assert grassmann_class_exact(2, 2) == CobordismClass(4, expected)


@pytest.mark.parametrize("n", range(2, 9))
def test_projective_from_grassmann_formula(n):
    cls = grassmann_class_exact(n, 1)
    assert cls[(0,) * (n - 1) + (1,)] == n + 1
    assert cls == cobordism_class(builtin_space("cp", n)).cobordism_class


def test_guards():
    with pytest.raises(OutOfRange):
        flag_class_exact(6)
    with pytest.raises(OutOfRange):
        flag_class_exact(1)
    with pytest.raises(OutOfRange):
        grassmann_class_exact(3, 3)
    with pytest.raises(OutOfRange):
        flag_vanishing_suite(3)


def test_vanishing_suite_n4():
    checked = flag_vanishing_suite(4)
    omegas_hit = [w for w, _ in checked]
    assert (0, 0, 0, 0, 0, 1) in omegas_hit           # top number
    assert (0, 1, 0, 1, 0, 0) in omegas_hit           # even entries only
    assert (0, 3, 0, 0, 0, 0) in omegas_hit
    assert all(s == 0 for _, s in checked)
    assert flag_class_exact(4)[(1, 0, 0, 0, 1, 0)] == 80


def test_vanishing_omegas_n5():
    ws = flag_vanishing_omegas(5)
    # 2n - 3 = 7: anything using a_8, a_9 or a_10 is forced to vanish
    assert (0,) * 9 + (1,) in ws
    assert (1, 0, 0, 0, 0, 0, 0, 0, 1, 0) in ws
    assert (0, 1, 0, 0, 0, 0, 0, 1, 0, 0) in ws
    assert (3, 0, 0, 0, 0, 0, 1, 0, 0, 0) not in ws
