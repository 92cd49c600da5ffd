"""Exhaustive enumeration of numerical semigroups by genus.

The semigroup tree is walked depth first: the root is Z>=0 and the
children of a node are obtained by removing one minimal generator
larger than the Frobenius number, which increases the genus by exactly
one.  Every node is classified (embedding dimension, symmetric,
cyclotomic) and tallied into a census table keyed by (genus, e).

Subtrees are independent, so the walk optionally fans out over a
process pool; per-worker tables are merged at the end.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Callable

from .polycore import IntPoly, cyclotomic_test
from .semigroup import minimal_generators_from_membership


@dataclass(frozen=True)
class TreeNode:
    """A semigroup in the tree, identified by its gap set."""

    gaps: frozenset[int]
    frobenius: int

    @property
    def genus(self) -> int:
        return len(self.gaps)

    def contains(self, x: int) -> bool:
        return x >= 0 and (x > self.frobenius or x not in self.gaps)


ROOT = TreeNode(gaps=frozenset(), frobenius=-1)


@dataclass(frozen=True)
class NodeClassification:
    genus: int
    frobenius: int
    gaps: tuple[int, ...]
    embedding_dimension: int
    symmetric: bool
    cyclotomic: bool
    minimal_generators: tuple[int, ...]


def gap_polynomial(gaps, frobenius: int) -> IntPoly:
    coeffs = [0] * (frobenius + 2)
    coeffs[0] = 1
    for g in gaps:
        coeffs[g] -= 1
        coeffs[g + 1] += 1
    return IntPoly(coeffs)


def classify_node(node: TreeNode) -> NodeClassification:
    minimal = tuple(minimal_generators_from_membership(node.contains, node.frobenius))
    f = node.frobenius
    symmetric = all(node.contains(x) != node.contains(f - x) for x in range(f + 1))
    poly = gap_polynomial(node.gaps, f)
    cyclotomic = cyclotomic_test(poly).is_cyclotomic
    return NodeClassification(
        genus=node.genus,
        frobenius=f,
        gaps=tuple(sorted(node.gaps)),
        embedding_dimension=len(minimal),
        symmetric=symmetric,
        cyclotomic=cyclotomic,
        minimal_generators=minimal,
    )


def children(node: TreeNode) -> list[TreeNode]:
    """Remove each minimal generator above the Frobenius number."""
    minimal = minimal_generators_from_membership(node.contains, node.frobenius)
    return [
        TreeNode(gaps=node.gaps | {m}, frobenius=m)
        for m in minimal
        if m > node.frobenius
    ]


@dataclass
class CensusRow:
    genus: int
    embedding_dimension: int
    total: int = 0
    symmetric: int = 0
    cyclotomic: int = 0
    cyclotomic_not_symmetric: int = 0

    @property
    def symmetric_not_cyclotomic(self) -> int:
        return self.symmetric - self.cyclotomic + self.cyclotomic_not_symmetric


@dataclass
class CensusTable:
    rows: dict[tuple[int, int], CensusRow] = field(default_factory=dict)

    def tally(self, c: NodeClassification) -> None:
        key = (c.genus, c.embedding_dimension)
        row = self.rows.get(key)
        if row is None:
            row = self.rows[key] = CensusRow(c.genus, c.embedding_dimension)
        row.total += 1
        if c.symmetric:
            row.symmetric += 1
        if c.cyclotomic:
            row.cyclotomic += 1
            if not c.symmetric:
                row.cyclotomic_not_symmetric += 1

    def merge(self, other: CensusTable) -> None:
        for key, row in other.rows.items():
            mine = self.rows.get(key)
            if mine is None:
                self.rows[key] = CensusRow(
                    row.genus,
                    row.embedding_dimension,
                    row.total,
                    row.symmetric,
                    row.cyclotomic,
                    row.cyclotomic_not_symmetric,
                )
            else:
                mine.total += row.total
                mine.symmetric += row.symmetric
                mine.cyclotomic += row.cyclotomic
                mine.cyclotomic_not_symmetric += row.cyclotomic_not_symmetric

    def sorted_rows(self) -> list[CensusRow]:
        return [self.rows[key] for key in sorted(self.rows)]

    def genus_totals(self, g_max: int) -> list[int]:
        totals = [0] * (g_max + 1)
        for (g, _), row in self.rows.items():
            totals[g] += row.total
        return totals


def _walk(node: TreeNode, g_max: int, table: CensusTable,
          visitor: Callable[[NodeClassification], None] | None) -> None:
    stack = [node]
    while stack:
        cur = stack.pop()
        c = classify_node(cur)
        table.tally(c)
        if visitor is not None:
            visitor(c)
        if cur.genus < g_max:
            stack.extend(children(cur))


def _subtree_table(args: tuple[TreeNode, int]) -> CensusTable:
    node, g_max = args
    table = CensusTable()
    _walk(node, g_max, table, None)
    return table


def resolve_workers(workers: int | None) -> int:
    """Explicit value wins; otherwise the CYCLOSEMI_WORKERS env var; else 1."""
    if workers is not None:
        return max(1, workers)
    env = os.environ.get("CYCLOSEMI_WORKERS")
    return max(1, int(env)) if env else 1


def enumerate_by_genus(
    g_max: int,
    visitor: Callable[[NodeClassification], None] | None = None,
    workers: int | None = None,
) -> CensusTable:
    """Visit every numerical semigroup of genus <= g_max exactly once.

    With workers > 1 the tree below a shallow frontier is partitioned
    across a process pool; a visitor is only supported single-threaded
    since it would need cross-process synchronization.
    """
    if g_max < 0:
        raise ValueError("g_max must be nonnegative")
    workers = resolve_workers(workers)
    table = CensusTable()
    if workers == 1 or g_max <= 3:
        _walk(ROOT, g_max, table, visitor)
        return table
    if visitor is not None:
        raise ValueError("visitor callbacks require workers=1")

    # expand a frontier wide enough to keep the pool busy
    frontier = [ROOT]
    while frontier and len(frontier) < 4 * workers and frontier[0].genus < g_max:
        node = frontier.pop(0)
        c = classify_node(node)
        table.tally(c)
        frontier.extend(children(node))
    with Pool(workers) as pool:
        for part in pool.map(_subtree_table, [(n, g_max) for n in frontier]):
            table.merge(part)
    return table


def verify_low_dimension_equivalence(g_max: int, workers: int | None = None) -> bool:
    """True iff no enumerated semigroup with embedding dimension <= 3
    has symmetric != cyclotomic."""
    table = enumerate_by_genus(g_max, workers=workers)
    return low_dimension_equivalence_holds(table)


def low_dimension_equivalence_holds(table: CensusTable) -> bool:
    return all(
        row.symmetric == row.cyclotomic and row.cyclotomic_not_symmetric == 0
        for row in table.rows.values()
        if row.embedding_dimension <= 3
    )
