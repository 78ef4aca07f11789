from collections import Counter
from math import factorial

import pytest

from toricgenus.errors import BadParameters, ZeroWeight
from toricgenus.rootdata import (
    BlockPartition,
    ExplicitFixedPoints,
    FixedPointDatum,
    NamedUnitaryQuotient,
    apply_permutation,
    builtin_space,
    coset_representatives,
    euler_characteristic,
    orbit_fixed_points,
)


@pytest.mark.parametrize("sizes,count", [((1, 1, 1), 6), ((2, 2), 6), ((2, 1, 1), 12),
                                         ((3, 1), 4), ((1,) * 5, 120)])
def test_coset_counts(sizes, count):
    blocks, start = [], 0
    for s in sizes:
        blocks.append(list(range(start, start + s)))
        start += s
    reps = coset_representatives(BlockPartition(blocks))
    assert len(reps) == count == factorial(start) // _prod(factorial(s) for s in sizes)
    assert len(set(reps)) == count
    assert reps == sorted(reps)
    for sigma in reps:
        assert sorted(sigma) == list(range(start))
        for b in blocks:
            images = [sigma[i] for i in b]
            assert images == sorted(images)


def _prod(xs):
    out = 1
    for v in xs:
        out *= v
    return out


def test_apply_permutation():
    # x_1 - x_2 under sigma = (1 -> 2, 2 -> 3, 3 -> 1), 0-based (1, 2, 0)
    assert apply_permutation((1, 2, 0), (1, -1, 0)) == (0, 1, -1)


@pytest.mark.parametrize("name,params,chi,n", [
    ("flag", (3,), 6, 3), ("flag", (4,), 24, 6), ("grassmann", (4, 2), 6, 4),
    ("cp", (3,), 4, 3), ("m10", ("J1",), 12, 5), ("m10", ("J3",), 12, 5),
])
def test_builtin_orbits(name, params, chi, n):
    spec = builtin_space(name, *params)
    table = orbit_fixed_points(spec)
    assert euler_characteristic(spec) == len(table) == chi
    assert all(p.n == n and p.sign == 1 for p in table)
    # distinct fixed points carry distinct weight multisets
    assert len({frozenset(Counter(p.weights).items()) for p in table}) == chi


def test_identity_coset_first():
    table = orbit_fixed_points(builtin_space("grassmann", 4, 2))
    assert table[0].weights == ((1, 0, -1, 0), (1, 0, 0, -1), (0, 1, -1, 0), (0, 1, 0, -1))


def test_projective_space_weights():
    spec = builtin_space("cp", 2)
    assert spec.rank == 3
    assert spec.identity_weights == ((1, 0, -1), (0, 1, -1))


def test_stability_check():
    # x1 - x3 alone is not stable under swapping x1 and x2
    with pytest.raises(BadParameters):
        NamedUnitaryQuotient(3, BlockPartition([[0, 1], [2]]), [(1, 0, -1)])
    # lines are enough by default; the signed check is stricter
    ws = [(1, -1, 0)]
    NamedUnitaryQuotient(3, BlockPartition([[0, 1], [2]]), ws)
    with pytest.raises(BadParameters):
        NamedUnitaryQuotient(3, BlockPartition([[0, 1], [2]]), ws, strict=True)


def test_bad_inputs():
    with pytest.raises(ZeroWeight):
        FixedPointDatum(1, [(0, 0)])
    with pytest.raises(BadParameters):
        FixedPointDatum(2, [(1, 0)])
    with pytest.raises(BadParameters):
        BlockPartition([[0, 2]])
    with pytest.raises(BadParameters):
        builtin_space("grassmann", 3, 3)
    with pytest.raises(BadParameters):
        builtin_space("m10", "J4")
    with pytest.raises(BadParameters):
        builtin_space("torus", 2)
    with pytest.raises(BadParameters):
        ExplicitFixedPoints(2, [(1, [(1, 0)]), (1, [(1, 0), (0, 1)])])


def test_one_based_blocks():
    bp = BlockPartition.from_one_based([[1, 2], [3]])
    assert bp.blocks == ((0, 1), (2,))
    assert bp.to_one_based() == [[1, 2], [3]]
    assert bp.sizes() == (2, 1)
