"""Exhaustive and randomized tree generation.

``all_trees(n)`` streams one representative per isomorphism class of
trees of order n, in the deterministic canonical level-sequence order
of networkx's free-tree generator, so a stream can be resumed or
sharded by index ranges.  ``trees_satisfying`` filters a stream by a
tree-class constraint.  ``random_tree`` decodes a uniformly random
Prufer sequence, giving a uniform distribution over labeled (not
unlabeled) trees, which is all the randomized test suites need.

The enumeration cap (default 18) guards against accidentally asking
for the 100+ million classes that appear in the mid-20s.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .tree import Tree, TreeStats, stats

__all__ = [
    "DEFAULT_CAP",
    "EnumerationCapError",
    "ConstraintSpec",
    "all_trees",
    "trees_satisfying",
    "random_tree",
    "prufer_to_edges",
]

DEFAULT_CAP = 18


class EnumerationCapError(ValueError):
    """Requested order exceeds the configured enumeration cap."""


_CONSTRAINT_KINDS = (
    "odd_count",
    "deg2_count",
    "pendent_path_count",
    "branch_count",
    "series_reduced",
    "all_odd",
    "degree_sequence",
    "unconstrained",
)


@dataclass(frozen=True)
class ConstraintSpec:
    """A tree-class predicate evaluated against :class:`TreeStats`.

    ``value`` carries the count parameter (number of odd vertices,
    degree-2 vertices, branch vertices, or pendent paths); ``r`` is the
    pendent-path length; ``maximal`` switches the pendent-path count to
    the stricter full-run reading.
    """

    kind: str
    value: Optional[int] = None
    r: Optional[int] = None
    degree_sequence_value: Optional[tuple[int, ...]] = None
    maximal: bool = False

    @classmethod
    def odd_count(cls, count: int) -> "ConstraintSpec":
        return cls("odd_count", value=count)

    @classmethod
    def deg2_count(cls, t: int) -> "ConstraintSpec":
        return cls("deg2_count", value=t)

    @classmethod
    def pendent_path_count(cls, k: int, r: int, maximal: bool = False) -> "ConstraintSpec":
        return cls("pendent_path_count", value=k, r=r, maximal=maximal)

    @classmethod
    def branch_count(cls, k: int) -> "ConstraintSpec":
        return cls("branch_count", value=k)

    @classmethod
    def series_reduced(cls) -> "ConstraintSpec":
        return cls("series_reduced")

    @classmethod
    def all_odd(cls) -> "ConstraintSpec":
        return cls("all_odd")

    @classmethod
    def degree_sequence(cls, degrees) -> "ConstraintSpec":
        return cls("degree_sequence",
                    degree_sequence_value=tuple(sorted(degrees, reverse=True)))

    @classmethod
    def unconstrained(cls) -> "ConstraintSpec":
        return cls("unconstrained")

    def validate(self) -> None:
        if self.kind not in _CONSTRAINT_KINDS:
            raise ValueError(f"unknown constraint kind {self.kind!r}")
        if self.kind == "odd_count":
            if self.value is None or self.value < 2 or self.value % 2 != 0:
                raise ValueError(
                    f"odd-vertex count must be a positive even integer, got {self.value!r}")
        elif self.kind in ("deg2_count", "branch_count"):
            if self.value is None or self.value < 0:
                raise ValueError(f"{self.kind} must be >= 0, got {self.value!r}")
        elif self.kind == "pendent_path_count":
            if self.value is None or self.value < 0 or self.r is None or self.r < 1:
                raise ValueError(
                    f"pendent_path_count needs k >= 0 and r >= 1, got k={self.value!r}, r={self.r!r}")
        elif self.kind == "degree_sequence" and not self.degree_sequence_value:
            raise ValueError("degree_sequence constraint needs a nonempty sequence")

    def matches(self, st: TreeStats) -> bool:
        kind = self.kind
        if kind == "unconstrained":
            return True
        if kind == "odd_count":
            return st.odd_count == self.value
        if kind == "deg2_count":
            return st.deg2_count == self.value
        if kind == "branch_count":
            return st.branch_count == self.value
        if kind == "series_reduced":
            return st.is_series_reduced
        if kind == "all_odd":
            return st.odd_count == len(st.degree_sequence)
        if kind == "pendent_path_count":
            count = st.maximal_runs(self.r) if self.maximal else st.pendent_paths(self.r)
            return count == self.value
        if kind == "degree_sequence":
            return st.degree_sequence == self.degree_sequence_value
        raise ValueError(f"unknown constraint kind {kind!r}")

    def describe(self) -> str:
        if self.kind == "odd_count":
            return f"odd-degree vertices = {self.value}"
        if self.kind == "deg2_count":
            return f"degree-2 vertices = {self.value}"
        if self.kind == "branch_count":
            return f"branch vertices = {self.value}"
        if self.kind == "series_reduced":
            return "series-reduced"
        if self.kind == "all_odd":
            return "all degrees odd"
        if self.kind == "pendent_path_count":
            reading = "maximal runs" if self.maximal else "pendent paths"
            return f"{reading} of length {self.r} = {self.value}"
        if self.kind == "degree_sequence":
            return f"degree sequence {self.degree_sequence_value}"
        return "unconstrained"


def _check_cap(n: int, cap: Optional[int]) -> None:
    effective = DEFAULT_CAP if cap is None else cap
    if n > effective:
        raise EnumerationCapError(
            f"order {n} exceeds the enumeration cap {effective}; "
            "raise the cap explicitly if you really want this")


def all_trees(n: int, cap: Optional[int] = None) -> Iterator[Tree]:
    """One tree per isomorphism class of order n, deterministically.

    Classes are emitted in the canonical level-sequence order of the
    underlying generator; counts match the free-tree sequence
    1, 1, 1, 2, 3, 6, 11, 23, 47, 106, ...
    """
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    _check_cap(n, cap)
    if n == 1:
        yield Tree(1, [])
        return
    import networkx as nx

    for g in nx.nonisomorphic_trees(n):
        yield Tree(n, list(g.edges()))


def trees_satisfying(n: int, constraint: ConstraintSpec, cap: Optional[int] = None) -> Iterator[Tree]:
    """Filter ``all_trees(n)`` by a tree-class constraint."""
    constraint.validate()
    for t in all_trees(n, cap=cap):
        if t.n < 2:
            if constraint.kind == "unconstrained":
                yield t
            continue
        if constraint.matches(stats(t)):
            yield t


def prufer_to_edges(seq: Sequence[int]) -> list[tuple[int, int]]:
    """Decode a Prufer sequence over ids 0..n-1 into the n-1 tree edges.

    The length-(n-2) sequence determines a labeled tree on n vertices;
    each vertex appears in the sequence degree-1 times.
    """
    n = len(seq) + 2
    degree = [1] * n
    for s in seq:
        if not 0 <= s < n:
            raise ValueError(f"sequence entry {s} outside 0..{n - 1}")
        degree[s] += 1
    edges = []
    index = 0
    while degree[index] != 1:
        index += 1
    leaf = index
    for s in seq:
        edges.append((leaf, s))
        degree[s] -= 1
        if degree[s] == 1 and s < index:
            leaf = s
        else:
            index += 1
            while degree[index] != 1:
                index += 1
            leaf = index
    edges.append((leaf, n - 1))
    return edges


def random_tree(n: int, seed: int) -> Tree:
    """Uniformly random labeled tree on n >= 2 vertices, seeded."""
    if n < 2:
        raise ValueError(f"random_tree needs n >= 2, got {n}")
    if n == 2:
        return Tree(2, [(0, 1)])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return Tree(n, prufer_to_edges(seq))
