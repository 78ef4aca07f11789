"""Fixed-point data of homogeneous spaces U(k)/(U(b1) x ... x U(bs)).

Torus coordinates are indexed from 0 internally; a weight is a tuple of k
integers ``(w_0, ..., w_{k-1})`` standing for the linear form
``sum w_l x_{l+1}``.  A permutation ``sigma`` (one-line notation, 0-based)
acts on weights by permuting coordinates, ``x_i -> x_{sigma(i)}``.

The fixed points of the maximal torus are the cosets ``S_k / W_H`` with
``W_H = S_{b1} x ... x S_{bs}`` the block permutations, and the weights at the
fixed point ``sigma W_H`` are ``sigma`` applied to the weights at the identity
coset.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from math import factorial
from typing import Sequence, Union

from .errors import BadParameters, ZeroWeight

Weight = tuple  # tuple[int, ...]
Permutation = tuple  # tuple[int, ...], one-line notation, 0-based


@dataclass(frozen=True)
class FixedPointDatum:
    sign: int
    weights: tuple

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise BadParameters(f"sign must be +1 or -1, got {self.sign}")
        weights = tuple(tuple(int(c) for c in w) for w in self.weights)
        for w in weights:
            if not any(w):
                raise ZeroWeight("zero weight at an isolated fixed point")
        object.__setattr__(self, "weights", weights)

    @property
    def n(self) -> int:
        return len(self.weights)


class BlockPartition:
    """Ordered set partition of ``{0, ..., k-1}`` into blocks."""

    def __init__(self, blocks: Sequence[Sequence[int]]):
        blocks = tuple(tuple(sorted(int(i) for i in b)) for b in blocks)
        flat = [i for b in blocks for i in b]
        if not blocks or any(not b for b in blocks):
            raise BadParameters("blocks must be non-empty")
        if sorted(flat) != list(range(len(flat))):
            raise BadParameters(f"blocks {blocks} do not partition 0..{len(flat) - 1}")
        self.blocks = blocks

    @classmethod
    def from_one_based(cls, blocks) -> "BlockPartition":
        return cls([[i - 1 for i in b] for b in blocks])

    @property
    def rank(self) -> int:
        return sum(len(b) for b in self.blocks)

    def sizes(self) -> tuple:
        return tuple(len(b) for b in self.blocks)

    def to_one_based(self) -> list:
        return [[i + 1 for i in b] for b in self.blocks]

    def __eq__(self, other):
        return isinstance(other, BlockPartition) and self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self):
        return f"BlockPartition({self.to_one_based()})"


@dataclass(frozen=True)
class NamedUnitaryQuotient:
    """``U(rank)/H`` with ``H`` given by ``blocks`` and the weights at ``eH``.

    The identity weights already include the signs of the almost complex
    structure, i.e. they are ``eps_j * alpha_j``.
    """

    rank: int
    blocks: BlockPartition
    identity_weights: tuple
    name: str = ""
    strict: bool = False

    def __post_init__(self):
        weights = tuple(tuple(int(c) for c in w) for w in self.identity_weights)
        object.__setattr__(self, "identity_weights", weights)
        if not isinstance(self.blocks, BlockPartition):
            object.__setattr__(self, "blocks", BlockPartition(self.blocks))
        if self.blocks.rank != self.rank:
            raise BadParameters(f"blocks cover {self.blocks.rank} coordinates, rank is {self.rank}")
        for w in weights:
            if len(w) != self.rank:
                raise BadParameters(f"weight {w} does not have length {self.rank}")
            if not any(w):
                raise ZeroWeight("zero identity weight")
        check_stability(weights, self.blocks, strict=self.strict)

    @property
    def n(self) -> int:
        return len(self.identity_weights)


@dataclass(frozen=True)
class ExplicitFixedPoints:
    rank: int
    fixed_points: tuple
    name: str = ""

    def __post_init__(self):
        pts = tuple(p if isinstance(p, FixedPointDatum) else FixedPointDatum(*p)
                    for p in self.fixed_points)
        object.__setattr__(self, "fixed_points", pts)
        lengths = {p.n for p in pts}
        if len(lengths) > 1:
            raise BadParameters(f"fixed points have differing numbers of weights {sorted(lengths)}")
        for p in pts:
            for w in p.weights:
                if len(w) != self.rank:
                    raise BadParameters(f"weight {w} does not have length {self.rank}")

    @property
    def n(self) -> int:
        return self.fixed_points[0].n if self.fixed_points else 0


SpaceSpec = Union[NamedUnitaryQuotient, ExplicitFixedPoints]


def apply_permutation(sigma: Permutation, weight: Weight) -> Weight:
    out = [0] * len(weight)
    for i, c in enumerate(weight):
        out[sigma[i]] = c
    return tuple(out)


def _line(w: Weight) -> Weight:
    for c in w:
        if c:
            return w if c > 0 else tuple(-x for x in w)
    return w


def check_stability(weights, blocks: BlockPartition, strict: bool = False) -> None:
    """Raise unless the weight multiset is stable under block permutations.

    By default only the multiset of lines ``{+-w}`` has to be stable; with
    ``strict`` the signed multiset must be.
    """
    key = Counter if strict else (lambda ws: Counter(_line(w) for w in ws))
    base = key(weights)
    k = blocks.rank
    for b in blocks.blocks:
        for i, j in zip(b, b[1:]):
            tau = list(range(k))
            tau[i], tau[j] = j, i
            moved = key([apply_permutation(tuple(tau), w) for w in weights])
            if moved != base:
                raise BadParameters(
                    f"identity weights are not stable under swapping x{i + 1} and x{j + 1}")


def coset_representatives(blocks: BlockPartition) -> list:
    """Minimal-length representatives of ``S_k / (S_b1 x ... x S_bs)``.

    A representative maps each block increasingly onto its image set.  The
    list is sorted lexicographically by one-line notation.
    """
    k = blocks.rank
    reps = []

    def place(bi, free, sigma):
        if bi == len(blocks.blocks):
            reps.append(tuple(sigma))
            return
        block = blocks.blocks[bi]
        for images in itertools.combinations(free, len(block)):
            for src, dst in zip(block, images):
                sigma[src] = dst
            place(bi + 1, [v for v in free if v not in images], sigma)

    place(0, list(range(k)), [None] * k)
    reps.sort()
    return reps


def euler_characteristic(spec: SpaceSpec) -> int:
    if isinstance(spec, ExplicitFixedPoints):
        return len(spec.fixed_points)
    chi = factorial(spec.rank)
    for b in spec.blocks.sizes():
        chi //= factorial(b)
    return chi


def orbit_fixed_points(spec: SpaceSpec) -> list:
    """The fixed-point table: one datum per coset representative."""
    if isinstance(spec, ExplicitFixedPoints):
        return list(spec.fixed_points)
    table = []
    for sigma in coset_representatives(spec.blocks):
        weights = tuple(apply_permutation(sigma, w) for w in spec.identity_weights)
        if any(not any(w) for w in weights):
            raise ZeroWeight(f"zero weight at fixed point {sigma}")
        table.append(FixedPointDatum(1, weights))
    return table


# -- built-in spaces -------------------------------------------------------


def _root(i: int, j: int, k: int) -> Weight:
    """The root ``x_i - x_j`` (0-based indices) in rank ``k``."""
    w = [0] * k
    w[i] += 1
    w[j] -= 1
    return tuple(w)


def flag(n: int) -> NamedUnitaryQuotient:
    if n < 2:
        raise BadParameters(f"flag manifold needs n >= 2, got {n}")
    weights = [_root(i, j, n) for i in range(n) for j in range(i + 1, n)]
    return NamedUnitaryQuotient(n, BlockPartition([[i] for i in range(n)]), weights,
                                name=f"flag:{n}")


def grassmann(n: int, k: int) -> NamedUnitaryQuotient:
    """``U(n)/(U(k) x U(n-k))`` with weights ``x_i - x_j``, ``i <= k < j``."""
    if not 1 <= k < n:
        raise BadParameters(f"grassmannian needs 1 <= k < n, got n={n}, k={k}")
    weights = [_root(i, j, n) for i in range(k) for j in range(k, n)]
    blocks = BlockPartition([list(range(k)), list(range(k, n))])
    return NamedUnitaryQuotient(n, blocks, weights, name=f"grassmann:{n}:{k}")


def projective_space(n: int) -> NamedUnitaryQuotient:
    """``CP^n`` with weights ``x_j - x_{n+1}`` at the identity point."""
    if n < 1:
        raise BadParameters(f"projective space needs n >= 1, got {n}")
    weights = [_root(j, n, n + 1) for j in range(n)]
    blocks = BlockPartition([list(range(n)), [n]])
    return NamedUnitaryQuotient(n + 1, blocks, weights, name=f"cp:{n}")


# identity weights of U(4)/(U(1) x U(1) x U(2)) as (i, j) pairs for x_i - x_j
_M10_ROOTS = {
    "J1": [(1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
    "J2": [(4, 1), (4, 2), (4, 3), (1, 3), (2, 3)],
    "J3": [(1, 3), (2, 3), (4, 1), (4, 2), (3, 4)],
}


def m10(structure: str) -> NamedUnitaryQuotient:
    structure = structure.upper()
    if structure not in _M10_ROOTS:
        raise BadParameters(f"unknown structure {structure!r}; expected J1, J2 or J3")
    weights = [_root(i - 1, j - 1, 4) for i, j in _M10_ROOTS[structure]]
    blocks = BlockPartition([[0, 1], [2], [3]])
    return NamedUnitaryQuotient(4, blocks, weights, name=f"m10:{structure}")


def builtin_space(kind: str, *params) -> NamedUnitaryQuotient:
    """``builtin_space("flag", 3)``, ``("grassmann", 4, 2)``, ``("cp", 2)``, ``("m10", "J1")``."""
    kind = kind.lower()
    try:
        if kind == "flag":
            (n,) = params
            return flag(int(n))
        if kind == "grassmann":
            n, k = params
            return grassmann(int(n), int(k))
        if kind in ("cp", "projective"):
            (n,) = params
            return projective_space(int(n))
        if kind == "m10":
            (j,) = params
            return m10(str(j))
    except (TypeError, ValueError) as exc:
        raise BadParameters(f"bad parameters {params!r} for {kind}: {exc}") from exc
    raise BadParameters(f"unknown builtin space {kind!r}")
