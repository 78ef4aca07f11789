import random
from fractions import Fraction

import pytest

from oracles import partitions_of, series_coefficients
from toricgenus import builtin_space, cobordism_class
from toricgenus.errors import BadOmega, NonIntegralSolution, TooFewVariables
from toricgenus.symmchern import (
    beta_matrix,
    chern_label,
    chern_to_s,
    f_omega,
    monomial_to_elementary,
    omegas,
    orbit_monomial,
    partitions,
    s_to_chern,
)


@pytest.mark.parametrize("n", range(1, 9))
def test_partitions_against_naive(n):
    got = list(partitions(n))
    assert len(got) == len(set(got))
    assert set(got) == partitions_of(n)
    assert got == sorted(got, reverse=True)


def test_omega_labels():
    assert omegas(3) == ((0, 0, 1), (1, 1, 0), (3, 0, 0))
    assert chern_label((2, 1, 0, 0)) == "c1^2*c2"
    assert chern_label((0, 0, 0, 1)) == "c4"


@pytest.mark.parametrize("n", range(1, 7))
def test_f_omega_matches_series(n):
    rng = random.Random(n)
    t = [rng.choice([-3, -2, -1, 1, 2, 3, 5]) for _ in range(n)]
    expanded = series_coefficients(t, n)
    for omega in omegas(n):
        assert f_omega(omega, t) == expanded.get(omega, 0)


def test_orbit_monomial():
    m = orbit_monomial((1, 1, 0), 3)
    # m_{21}(u1, u2, u3) has six terms
    assert len(m) == 6
    assert all(c == 1 for c in m.terms.values())
    assert m.evaluate({"u1": 1, "u2": 2, "u3": 3}).constant_value() == f_omega((1, 1, 0), [1, 2, 3])
    with pytest.raises(TooFewVariables):
        orbit_monomial((3, 0, 0), 2)


def test_monomial_in_elementary_basis():
    # m_211 = e1 e3 - 4 e4
    assert monomial_to_elementary((2, 1, 1), 4) == {(1, 0, 1, 0): 1, (0, 0, 0, 1): -4}


# known relations for 8-dimensional manifolds, keyed (c1^a c2^b c3^c c4^d) -> coefficient
KNOWN_N4 = {
    (0, 0, 0, 1): {(4, 0, 0, 0): 1, (2, 1, 0, 0): -4, (0, 2, 0, 0): 2, (1, 0, 1, 0): 4, (0, 0, 0, 1): -4},
    (2, 1, 0, 0): {(1, 0, 1, 0): 1, (0, 0, 0, 1): -4},
    (0, 2, 0, 0): {(0, 2, 0, 0): 1, (1, 0, 1, 0): -2, (0, 0, 0, 1): 2},
    (1, 0, 1, 0): {(2, 1, 0, 0): 1, (1, 0, 1, 0): -1, (0, 0, 0, 1): 4, (0, 2, 0, 0): -2},
    (4, 0, 0, 0): {(0, 0, 0, 1): 1},
}


def test_beta_rows_n4():
    B = beta_matrix(4)
    for omega, row in KNOWN_N4.items():
        assert B.row(omega) == row


def test_beta_rows_n5_known():
    B = beta_matrix(5)
    assert B.row((0, 0, 0, 0, 1)) == {(5, 0, 0, 0, 0): 1, (3, 1, 0, 0, 0): -5, (2, 0, 1, 0, 0): 5,
                                      (1, 2, 0, 0, 0): 5, (1, 0, 0, 1, 0): -5, (0, 1, 1, 0, 0): -5,
                                      (0, 0, 0, 0, 1): 5}
    assert B.row((3, 1, 0, 0, 0)) == {(1, 0, 0, 1, 0): 1, (0, 0, 0, 0, 1): -5}
    assert B.row((5, 0, 0, 0, 0)) == {(0, 0, 0, 0, 1): 1}


@pytest.mark.parametrize("n", range(1, 7))
def test_round_trip(n):
    rng = random.Random(100 + n)
    for _ in range(100):
        c = {xi: rng.randint(-50, 50) for xi in omegas(n)}
        assert s_to_chern(chern_to_s(c, n), n) == c


def test_projective_chern_numbers():
    # c(CP^n) = (1 + u)^(n+1): c_n = n + 1 and c_1^n = (n + 1)^n
    for n in range(1, 6):
        report = cobordism_class(builtin_space("cp", n))
        chern = s_to_chern(report.s_numbers, n)
        assert chern[(0,) * (n - 1) + (1,)] == n + 1
        assert chern[(n,) + (0,) * (n - 1)] == (n + 1) ** n


def test_beta_is_unimodular():
    for n in range(1, 6):
        rows = [[Fraction(v) for v in r] for r in beta_matrix(n).as_lists()]
        det = Fraction(1)
        for col in range(len(rows)):
            piv = next(r for r in range(col, len(rows)) if rows[r][col])
            if piv != col:
                rows[col], rows[piv] = rows[piv], rows[col]
                det = -det
            det *= rows[col][col]
            for r in range(col + 1, len(rows)):
                f = rows[r][col] / rows[col][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
        assert abs(det) == 1


def test_non_integral_chern_rejected():
    # B is unimodular, so only a rational s-vector can produce a fractional Chern number
    with pytest.raises(NonIntegralSolution):
        s_to_chern({(0, 0, 1): Fraction(1, 2), (1, 1, 0): 0, (3, 0, 0): 0}, 3)


def test_missing_entries():
    with pytest.raises(BadOmega):
        s_to_chern({(0, 1): 1}, 2)
    with pytest.raises(BadOmega):
        chern_to_s({(0, 1): 1, (2, 0): 1, (1, 0): 3}, 2)
