"""Nests of embedded manifolds indexed by increasing weight vectors.

Weight vectors are ordered componentwise (strictly somewhere); a step J < L
carries the multiset of multiplicities l_i - j_i, each tagged with the degree
two class of its group, and the embedding has real codimension twice the
total multiplicity.  A nest starts at (1, ..., 1) and raises one entry per
stage, so every stage is a codimension-two embedding.  Reports verify the
rank-level consequences: the dimension climbs by two, the degree-two rank
stays m - n, and graded ranks never drop under restriction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .charmaps import CharPair, verify_characteristic
from .errors import (
    IndexOutOfRange,
    InvalidBase,
    LengthMismatch,
    NotComparable,
)
from .rings import BettiNumbers, betti_MJ
from .wedge import check_weights

__all__ = [
    "NestStep",
    "Nest",
    "NestStage",
    "NestReport",
    "leq",
    "normal_bundle",
    "make_nest",
    "nest_report",
]


def leq(J: Sequence[int], L: Sequence[int]) -> bool:
    """Strict order: componentwise <= with strict inequality somewhere.

    >>> leq((1, 1), (2, 1)), leq((1, 1), (1, 1)), leq((2, 1), (1, 2))
    (True, False, False)
    """
    J = check_weights(J)
    L = check_weights(L)
    if len(J) != len(L):
        raise LengthMismatch("weight vectors differ in length")
    return all(j <= l for j, l in zip(J, L)) and J != L


@dataclass(frozen=True)
class NestStep:
    """Normal-bundle data of one embedding: sum of (l_i - j_i) line bundles."""

    J: tuple[int, ...]
    L: tuple[int, ...]
    multiplicities: tuple[int, ...]

    @property
    def codimension(self) -> int:
        return 2 * sum(self.multiplicities)

    def summands(self) -> tuple[dict, ...]:
        """Line-bundle tags: group index, multiplicity, degree-two class symbol."""
        return tuple(
            {"index": i + 1, "multiplicity": mult, "chern_symbol": f"v{i + 1}"}
            for i, mult in enumerate(self.multiplicities)
            if mult
        )


def normal_bundle(J: Sequence[int], L: Sequence[int]) -> NestStep:
    """Multiplicities l_i - j_i of the embedding for J < L.

    >>> normal_bundle((1, 1, 1, 1), (3, 1, 2, 1)).multiplicities
    (2, 0, 1, 0)
    """
    if not leq(J, L):
        raise NotComparable(f"{tuple(J)} is not strictly below {tuple(L)}")
    return NestStep(
        J=tuple(J),
        L=tuple(L),
        multiplicities=tuple(l - j for j, l in zip(J, L)),
    )


@dataclass(frozen=True)
class Nest:
    """An increasing chain of weight vectors with unit total-weight steps."""

    base: CharPair
    sequence: tuple[tuple[int, ...], ...]

    def steps(self) -> tuple[NestStep, ...]:
        return tuple(
            normal_bundle(a, b) for a, b in zip(self.sequence, self.sequence[1:])
        )


def make_nest(base: CharPair, increments: Sequence[int]) -> Nest:
    """Build the nest starting at (1, ..., 1), raising one group per stage."""
    if not verify_characteristic(base.K, base.lam).passed:
        raise InvalidBase("base pair fails the characteristic condition")
    m = base.m
    current = (1,) * m
    sequence = [current]
    for idx in increments:
        if not 1 <= idx <= m:
            raise IndexOutOfRange(f"group index {idx} out of 1..{m}")
        nxt = list(current)
        nxt[idx - 1] += 1
        current = tuple(nxt)
        sequence.append(current)
    return Nest(base=base, sequence=tuple(sequence))


@dataclass(frozen=True)
class NestStage:
    J: tuple[int, ...]
    d: int
    manifold_dim: int
    betti: BettiNumbers
    h2_rank: int


@dataclass(frozen=True)
class NestReport:
    stages: tuple[NestStage, ...]
    steps: tuple[NestStep, ...]
    dims_step_by_two: bool
    h2_rank_constant: bool
    ranks_non_decreasing: bool

    @property
    def passed(self) -> bool:
        return (
            self.dims_step_by_two
            and self.h2_rank_constant
            and self.ranks_non_decreasing
        )


def nest_report(nest: Nest) -> NestReport:
    """Per-stage dimensions, Betti tables, and the rank-level checks.

    Restriction along the nest is surjective on cohomology, so ranks may only
    grow with the stage; in degree two the rank is constantly m - n.
    """
    K, lam = nest.base.K, nest.base.lam
    m, n = nest.base.m, nest.base.n
    stages = []
    for J in nest.sequence:
        betti = betti_MJ(K, lam, J)
        h = betti.even_ranks
        stages.append(
            NestStage(
                J=J,
                d=sum(J),
                manifold_dim=2 * (sum(J) - m + n),
                betti=betti,
                h2_rank=h[1] if len(h) > 1 else 0,
            )
        )
    dims_ok = all(
        b.manifold_dim - a.manifold_dim == 2 for a, b in zip(stages, stages[1:])
    )
    h2_ok = all(s.h2_rank == m - n for s in stages)
    ranks_ok = True
    for a, b in zip(stages, stages[1:]):
        ra, rb = a.betti.even_ranks, b.betti.even_ranks
        if any(rb[k] < ra[k] for k in range(min(len(ra), len(rb)))):
            ranks_ok = False
    return NestReport(
        stages=tuple(stages),
        steps=nest.steps(),
        dims_step_by_two=dims_ok,
        h2_rank_constant=h2_ok,
        ranks_non_decreasing=ranks_ok,
    )
