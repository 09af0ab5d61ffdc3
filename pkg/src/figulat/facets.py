"""Enumeration of the faces of the order decomposition of the p-cube.

A raw face description is a chain expression: a permutation sigma of
{1..p} interleaved with p-1 relation symbols, each ">=" or "=", read as
x_{sigma_1} R_1 x_{sigma_2} ... R_{p-1} x_{sigma_p}. Distinct expressions
can describe the same point set (indices inside an equality run commute),
so the canonical face identity is an ordered set partition: the maximal
equality runs, in chain order, with indices sorted inside each block.
Ordered set partitions of {1..p} into k blocks are in bijection with
surjections {1..p} -> {1..k}.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from math import comb, factorial
from typing import Iterator

from .errors import BudgetExceededError, DomainError

GEQ = ">="
EQ = "="

# Default budget: every call with p <= 9 fits (9! * 2^8 raw expressions).
DEFAULT_MAX_EXPRESSIONS = factorial(9) * 2 ** 8


@dataclass(frozen=True)
class ChainExpression:
    sigma: tuple[int, ...]
    relations: tuple[str, ...]

    def __post_init__(self):
        p = len(self.sigma)
        if sorted(self.sigma) != list(range(1, p + 1)):
            raise DomainError(f"sigma must be a permutation of 1..{p}, got {self.sigma}")
        if len(self.relations) != p - 1:
            raise DomainError(
                f"expected {p - 1} relation symbols, got {len(self.relations)}"
            )
        if any(r not in (GEQ, EQ) for r in self.relations):
            raise DomainError(f"relation symbols must be {GEQ!r} or {EQ!r}")

    def text(self) -> str:
        parts = [f"x{self.sigma[0]}"]
        for rel, idx in zip(self.relations, self.sigma[1:]):
            parts.append(rel)
            parts.append(f"x{idx}")
        return "".join(parts)


@dataclass(frozen=True)
class OrderedSetPartition:
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for block in self.blocks:
            if not block:
                raise DomainError("blocks must be nonempty")
            if list(block) != sorted(block):
                raise DomainError(f"block indices must ascend, got {block}")
            if seen & set(block):
                raise DomainError("blocks must be pairwise disjoint")
            seen.update(block)
        if seen != set(range(1, len(seen) + 1)):
            raise DomainError(f"blocks must cover 1..p exactly, got {sorted(seen)}")

    @property
    def ground_size(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    def text(self) -> str:
        """Stable text form, e.g. '{1,2}>={3}'."""
        return GEQ.join("{" + ",".join(str(i) for i in b) + "}" for b in self.blocks)


@dataclass(frozen=True)
class Surjection:
    map: tuple[int, ...]

    def __post_init__(self):
        if not self.map:
            raise DomainError("surjection must have a nonempty domain")
        k = max(self.map)
        if min(self.map) < 1 or set(self.map) != set(range(1, k + 1)):
            raise DomainError(f"map must attain every value in 1..{k}, got {self.map}")

    @property
    def codomain_size(self) -> int:
        return max(self.map)


def _check_enumeration_budget(p: int, l: int, max_expressions: int) -> None:
    if p < 1:
        raise DomainError(f"dimension must be >= 1, got p={p}")
    if l < 0 or l >= p:
        raise DomainError(f"codimension must satisfy 0 <= l <= p-1, got l={l} for p={p}")
    required = factorial(p) * comb(p - 1, l)
    if required > max_expressions:
        raise BudgetExceededError(
            f"chain-expression enumeration for (p={p}, l={l}) exceeds the "
            f"expression cap", required, max_expressions
        )


def enumerate_chain_expressions(
    p: int, l: int, max_expressions: int = DEFAULT_MAX_EXPRESSIONS
) -> Iterator[ChainExpression]:
    """Yield all p! * C(p-1, l) chain expressions with exactly l equality
    symbols, in lexicographic order by (sigma, relations)."""
    _check_enumeration_budget(p, l, max_expressions)

    def generate() -> Iterator[ChainExpression]:
        for sigma in permutations(range(1, p + 1)):
            # "=" sorts before ">=", so combinations of EQ positions in
            # lexicographic order give relation tuples in lexicographic order
            for eq_positions in combinations(range(p - 1), l):
                eq_set = set(eq_positions)
                relations = tuple(
                    EQ if i in eq_set else GEQ for i in range(p - 1)
                )
                yield ChainExpression(sigma, relations)

    return generate()


def canonicalize(expr: ChainExpression) -> OrderedSetPartition:
    """Collapse maximal equality runs into blocks, in chain order."""
    blocks: list[tuple[int, ...]] = []
    run = [expr.sigma[0]]
    for rel, idx in zip(expr.relations, expr.sigma[1:]):
        if rel == EQ:
            run.append(idx)
        else:
            blocks.append(tuple(sorted(run)))
            run = [idx]
    blocks.append(tuple(sorted(run)))
    return OrderedSetPartition(tuple(blocks))


def facet_multiplicities(
    p: int, l: int, max_expressions: int = DEFAULT_MAX_EXPRESSIONS
) -> dict[OrderedSetPartition, int]:
    """Map each canonical face to the number of chain expressions that
    canonicalize to it (the product of block-size factorials)."""
    counts: Counter[OrderedSetPartition] = Counter()
    for expr in enumerate_chain_expressions(p, l, max_expressions):
        counts[canonicalize(expr)] += 1
    return dict(counts)


def enumerate_facets(
    p: int, l: int, max_expressions: int = DEFAULT_MAX_EXPRESSIONS
) -> list[OrderedSetPartition]:
    """All distinct codimension-l faces, sorted lexicographically by block
    sequence."""
    distinct = set(facet_multiplicities(p, l, max_expressions))
    return sorted(distinct, key=lambda f: f.blocks)


@lru_cache(maxsize=None)
def all_facets_by_codimension(p: int) -> tuple[tuple[OrderedSetPartition, ...], ...]:
    """Faces of every codimension 0..p-1, cached per dimension."""
    return tuple(tuple(enumerate_facets(p, l)) for l in range(p))


def facet_to_surjection(facet: OrderedSetPartition) -> Surjection:
    """Send every index in block i to value i (blocks numbered from 1)."""
    p = facet.ground_size
    values = [0] * p
    for i, block in enumerate(facet.blocks, start=1):
        for idx in block:
            values[idx - 1] = i
    return Surjection(tuple(values))


def surjection_to_facet(surjection: Surjection) -> OrderedSetPartition:
    """Block i is the preimage of value i."""
    k = surjection.codomain_size
    blocks = tuple(
        tuple(i for i, v in enumerate(surjection.map, start=1) if v == value)
        for value in range(1, k + 1)
    )
    return OrderedSetPartition(blocks)
