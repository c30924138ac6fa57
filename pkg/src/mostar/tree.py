"""Labeled trees and the Mostar index.

The Mostar index of a graph is the sum, over all edges uv, of
``|n_u - n_v|``, where ``n_u`` counts the vertices strictly closer to u
than to v and ``n_v`` counts those strictly closer to v.  Deleting an
edge of a tree leaves exactly two components and no vertex is
equidistant from the two endpoints, so for trees the contribution of an
edge is ``|n - 2*s|`` where ``s`` is the size of either component.

This module provides:

* :class:`Tree` - an immutable labeled tree on vertices ``0..n-1``.
* :func:`mostar_fast` - one subtree-size pass, linear time.
* :func:`mostar_bfs` - the definition applied literally (two breadth
  first sweeps per edge, quadratic); kept as an independent oracle.
* :func:`psi_edge` - the split of a single edge.
* :func:`stats` - degree and pendent-path statistics used as tree-class
  predicates (odd vertices, degree-2 vertices, branch vertices,
  pendent-path census, series-reduced and caterpillar flags, diameter).
* :func:`canonical_form` / :func:`is_isomorphic` - AHU-style canonical
  codes rooted at the tree center(s).

Everything here is a pure function on immutable data; concurrent
readers need no coordination.
"""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Iterator, NamedTuple

import numpy as np

__all__ = [
    "Tree",
    "EdgeSplit",
    "SplitSequence",
    "TreeStats",
    "mostar_fast",
    "mostar_bfs",
    "psi_edge",
    "stats",
    "canonical_form",
    "is_isomorphic",
]

# Below this order the pure-Python paths beat the numpy ones.
_SMALL_N = 2048


class EdgeSplit(NamedTuple):
    """Per-edge split: component counts on each side and the contribution."""

    edge: tuple[int, int]
    n_u: int
    n_v: int
    psi: int


class SplitSequence(Sequence):
    """Sequence of :class:`EdgeSplit`, materialized lazily.

    Backed by the edge tuple of the tree and the parallel list of
    ``n_u`` counts, so a million-edge result costs O(n) memory without
    paying for a million record objects up front.  Supports ``len``,
    indexing, slicing and iteration like a plain list.
    """

    __slots__ = ("_edges", "_n_u", "_n")

    def __init__(self, edges: Sequence[tuple[int, int]], n_u_values: Sequence[int], n: int):
        self._edges = edges
        self._n_u = n_u_values
        self._n = n

    def __len__(self) -> int:
        return len(self._edges)

    def _make(self, i: int) -> EdgeSplit:
        n_u = self._n_u[i]
        return EdgeSplit(self._edges[i], n_u, self._n - n_u, abs(self._n - 2 * n_u))

    def __getitem__(self, i):
        if isinstance(i, slice):
            return [self._make(j) for j in range(*i.indices(len(self)))]
        if i < 0:
            i += len(self)
        if not 0 <= i < len(self):
            raise IndexError(i)
        return self._make(i)

    def __iter__(self) -> Iterator[EdgeSplit]:
        n = self._n
        for edge, n_u in zip(self._edges, self._n_u):
            yield EdgeSplit(edge, n_u, n - n_u, abs(n - 2 * n_u))

    def __eq__(self, other) -> bool:
        if isinstance(other, (SplitSequence, list, tuple)):
            return len(self) == len(other) and all(a == b for a, b in zip(self, other))
        return NotImplemented

    def __repr__(self) -> str:
        if len(self) <= 8:
            return f"SplitSequence({list(self)!r})"
        return f"SplitSequence(<{len(self)} splits>)"


class Tree:
    """Immutable labeled tree on vertex ids ``0..n-1``.

    Construction validates the full invariant set: exactly ``n - 1``
    edges over in-range ids, no loops, and a single connected component.
    Anything else raises ``ValueError``.  A one-vertex tree (``n = 1``,
    no edges) is accepted.

    Edges are stored with each pair normalized to ``(min, max)``, in the
    order given to the constructor.
    """

    __slots__ = ("n", "edges", "_adj", "_degrees", "_earr", "_csr_cache", "_edge_set", "_canon")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"vertex count must be a positive integer, got {n!r}")
        norm = tuple((u, v) if u < v else (v, u) for u, v in edges)
        if len(norm) != n - 1:
            raise ValueError(f"a tree on {n} vertices needs {n - 1} edges, got {len(norm)}")
        self.n = n
        self.edges = norm
        self._adj = None
        self._degrees = None
        self._earr = None
        self._csr_cache = None
        self._edge_set = None
        self._canon = None
        self._validate()

    # -- construction helpers -------------------------------------------------

    def _validate(self) -> None:
        n = self.n
        if n == 1:
            return
        if n <= _SMALL_N:
            adj = self._build_adj()
            # BFS from 0; with n-1 edges, full coverage implies acyclic too.
            seen = bytearray(n)
            seen[0] = 1
            queue = [0]
            head = 0
            count = 1
            while head < len(queue):
                x = queue[head]
                head += 1
                for y in adj[x]:
                    if not seen[y]:
                        seen[y] = 1
                        count += 1
                        queue.append(y)
            if count != n:
                raise ValueError("edges do not form a connected tree")
        else:
            indptr, indices = self._csr()
            from scipy.sparse import csr_matrix
            from scipy.sparse.csgraph import connected_components

            mat = csr_matrix(
                (np.ones(len(indices), dtype=np.int8), indices, indptr), shape=(n, n)
            )
            ncomp, _ = connected_components(mat, directed=False)
            if ncomp != 1:
                raise ValueError("edges do not form a connected tree")

    def _check_ids(self, u: int, v: int) -> None:
        n = self.n
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) uses ids outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"loop edge at vertex {u}")

    def _build_adj(self):
        if self._adj is None:
            n = self.n
            adj = [[] for _ in range(n)]
            for u, v in self.edges:
                self._check_ids(u, v)
                adj[u].append(v)
                adj[v].append(u)
            self._adj = tuple(tuple(a) for a in adj)
        return self._adj

    def _edge_array(self):
        """Edges as an (n-1, 2) int64 numpy array, cached."""
        if self._earr is None:
            self._earr = np.asarray(self.edges, dtype=np.int64).reshape(-1, 2)
        return self._earr

    def _csr(self):
        """Adjacency in CSR form (indptr, indices) as numpy arrays."""
        if self._csr_cache is None:
            n = self.n
            e = self._edge_array()
            if len(e) and (e.min() < 0 or e.max() >= n):
                raise ValueError("edge ids outside 0..n-1")
            if len(e) and (e[:, 0] == e[:, 1]).any():
                raise ValueError("loop edge")
            u = e[:, 0]
            v = e[:, 1]
            deg = np.bincount(u, minlength=n) + np.bincount(v, minlength=n)
            indptr = np.zeros(n + 1, dtype=np.int64)
            np.cumsum(deg, out=indptr[1:])
            src = np.concatenate([u, v])
            dst = np.concatenate([v, u])
            order = np.argsort(src, kind="stable")
            indices = dst[order].astype(np.int32)
            self._csr_cache = (indptr, indices)
        return self._csr_cache

    # -- structure accessors ---------------------------------------------------

    @property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        """Per-vertex neighbor tuples."""
        return self._build_adj()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    @property
    def degrees(self) -> tuple[int, ...]:
        if self._degrees is None:
            self._degrees = tuple(len(a) for a in self.adj)
        return self._degrees

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edge_set(self) -> frozenset:
        if self._edge_set is None:
            self._edge_set = frozenset(self.edges)
        return self._edge_set

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_set()

    def replace_edges(self, drop: Iterable[tuple[int, int]], add: Iterable[tuple[int, int]]) -> "Tree":
        """New tree with ``drop`` edges removed and ``add`` edges appended."""
        dropped = {(u, v) if u < v else (v, u) for u, v in drop}
        missing = dropped - self.edge_set()
        if missing:
            raise ValueError(f"not edges of this tree: {sorted(missing)}")
        kept = [e for e in self.edges if e not in dropped]
        kept.extend(add)
        return Tree(self.n, kept)

    def __eq__(self, other) -> bool:
        if isinstance(other, Tree):
            return self.n == other.n and frozenset(self.edges) == frozenset(other.edges)
        return NotImplemented

    def __repr__(self) -> str:
        if self.n <= 12:
            return f"Tree(n={self.n}, edges={list(self.edges)})"
        return f"Tree(n={self.n}, <{len(self.edges)} edges>)"


# -- Mostar index --------------------------------------------------------------


def _subtree_orientation_small(t: Tree):
    """(parent, sizes) with the tree rooted at vertex 0, pure Python."""
    n = t.n
    adj = t.adj
    parent = [-1] * n
    order = [0]
    head = 0
    while head < len(order):
        x = order[head]
        head += 1
        px = parent[x]
        for y in adj[x]:
            if y != px:
                parent[y] = x
                order.append(y)
    if len(order) != n:
        raise ValueError("tree is not connected")
    sizes = [1] * n
    for i in range(n - 1, 0, -1):
        x = order[i]
        sizes[parent[x]] += sizes[x]
    return parent, sizes


def _subtree_orientation_numpy(t: Tree):
    """(parent, sizes) as numpy arrays; frontier BFS with scipy fallback.

    The frontier loop costs one numpy round per BFS level, so for trees
    much deeper than ~sqrt(n) it falls back to scipy's C breadth-first
    order plus a linear Python accumulation.
    """
    n = t.n
    indptr, indices = t._csr()
    budget = 4096 + 4 * math.isqrt(n)

    parent = np.full(n, -1, dtype=np.int64)
    visited = np.zeros(n, dtype=bool)
    visited[0] = True
    frontier = np.array([0], dtype=np.int64)
    levels = []
    rounds = 0
    while frontier.size:
        rounds += 1
        if rounds > budget:
            return _subtree_orientation_scipy(t)
        starts = indptr[frontier]
        counts = indptr[frontier + 1] - starts
        total = int(counts.sum())
        offsets = np.repeat(starts - np.concatenate(([0], np.cumsum(counts)[:-1])), counts)
        nbrs = indices[offsets + np.arange(total)].astype(np.int64)
        src = np.repeat(frontier, counts)
        mask = ~visited[nbrs]
        new = nbrs[mask]
        parent[new] = src[mask]
        visited[new] = True
        frontier = new
        if new.size:
            levels.append(new)
    if not visited.all():
        raise ValueError("tree is not connected")
    sizes = np.ones(n, dtype=np.int64)
    for level in reversed(levels):
        np.add.at(sizes, parent[level], sizes[level])
    return parent, sizes


def _subtree_orientation_scipy(t: Tree):
    n = t.n
    indptr, indices = t._csr()
    from scipy.sparse import csr_matrix
    from scipy.sparse.csgraph import breadth_first_order

    mat = csr_matrix((np.ones(len(indices), dtype=np.int8), indices, indptr), shape=(n, n))
    order, pred = breadth_first_order(mat, 0, directed=False, return_predecessors=True)
    order_list = order.tolist()
    pred_list = pred.tolist()
    sizes = [1] * n
    for i in range(n - 1, 0, -1):
        x = order_list[i]
        sizes[pred_list[x]] += sizes[x]
    parent = np.asarray(pred_list, dtype=np.int64)
    parent[0] = -1
    return parent, np.asarray(sizes, dtype=np.int64)


def mostar_fast(t: Tree) -> tuple[int, SplitSequence]:
    """Mostar index and per-edge splits in linear time.

    Roots the tree at vertex 0 and computes every subtree size in one
    pass; the split of edge (u, v) is then (s, n - s) for the child-side
    size s, and its contribution is ``|n - 2*s|``.

    Returns
    -------
    (total, splits)
        ``total`` is the Mostar index; ``splits`` is a sequence of
        :class:`EdgeSplit` aligned with ``t.edges``.
    """
    n = t.n
    if n == 1:
        return 0, SplitSequence((), (), 1)
    if n <= _SMALL_N:
        parent, sizes = _subtree_orientation_small(t)
        n_u_values = []
        total = 0
        for u, v in t.edges:
            n_u = sizes[u] if parent[u] == v else n - sizes[v]
            n_u_values.append(n_u)
            total += abs(n - 2 * n_u)
        return total, SplitSequence(t.edges, n_u_values, n)
    parent, sizes = _subtree_orientation_numpy(t)
    e = t._edge_array()
    u = e[:, 0]
    v = e[:, 1]
    n_u = np.where(parent[u] == v, sizes[u], n - sizes[v])
    total = int(np.abs(n - 2 * n_u).sum())
    return total, SplitSequence(t.edges, n_u.tolist(), n)


def _bfs_distances(adj, start: int) -> list[int]:
    dist = [-1] * len(adj)
    dist[start] = 0
    queue = deque([start])
    while queue:
        x = queue.popleft()
        dx = dist[x] + 1
        for y in adj[x]:
            if dist[y] < 0:
                dist[y] = dx
                queue.append(y)
    return dist


def mostar_bfs(t: Tree) -> tuple[int, SplitSequence]:
    """Mostar index by the definition, one edge at a time.

    For every edge uv this runs two breadth-first sweeps and counts the
    vertices strictly closer to u and strictly closer to v.  Quadratic
    in n; this is the oracle that :func:`mostar_fast` is checked
    against, so it deliberately shares no machinery with it.
    """
    n = t.n
    if n == 1:
        return 0, SplitSequence((), (), 1)
    adj = t.adj
    n_u_values = []
    total = 0
    for u, v in t.edges:
        du = _bfs_distances(adj, u)
        dv = _bfs_distances(adj, v)
        n_u = sum(1 for w in range(n) if du[w] < dv[w])
        n_v = sum(1 for w in range(n) if dv[w] < du[w])
        n_u_values.append(n_u)
        total += abs(n_u - n_v)
    return total, SplitSequence(t.edges, n_u_values, n)


def psi_edge(t: Tree, edge: tuple[int, int]) -> EdgeSplit:
    """Split of a single edge; raises ``ValueError`` for a non-edge.

    The contribution satisfies ``psi <= n - 2`` with equality exactly
    when the edge is pendent.
    """
    u, v = edge
    key = (u, v) if u < v else (v, u)
    if key not in t.edge_set():
        raise ValueError(f"({u}, {v}) is not an edge of this tree")
    # Size of the u-side component of t minus the edge.
    adj = t.adj
    seen = {u}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if (x, y) != (u, v) and (y, x) != (u, v) and y not in seen:
                seen.add(y)
                queue.append(y)
    n_u = len(seen)
    return EdgeSplit((u, v), n_u, t.n - n_u, abs(t.n - 2 * n_u))


# -- structural statistics -----------------------------------------------------


@dataclass(frozen=True)
class TreeStats:
    """Degree and pendent-path statistics of a tree of order >= 2.

    ``pendent_path_census`` maps a length r to the number of pendent
    paths of length r: one per leaf whose pendant run (the distance from
    the leaf to the nearest branch vertex, or n - 2 when the tree is a
    path) is at least r.  ``maximal_run_census`` counts each leaf only
    at its full run length; this is the alternative, stricter reading of
    "has a pendent path of length r".
    """

    degree_sequence: tuple[int, ...]
    odd_count: int
    deg2_count: int
    branch_count: int
    leaf_count: int
    pendent_path_census: MappingProxyType
    maximal_run_census: MappingProxyType
    is_series_reduced: bool
    is_caterpillar: bool
    diameter: int

    def pendent_paths(self, r: int) -> int:
        """Number of pendent paths of length exactly r (census reading)."""
        return self.pendent_path_census.get(r, 0)

    def maximal_runs(self, r: int) -> int:
        return self.maximal_run_census.get(r, 0)


def _pendant_runs(t: Tree) -> list[int]:
    """Run length of every leaf: distance to the nearest branch vertex.

    In a path there is no branch vertex and the run from each end is
    n - 2 (the far endpoint has degree 1 and cannot anchor a pendent
    path).  For n = 2 both runs are 0.
    """
    adj = t.adj
    deg = t.degrees
    runs = []
    for leaf in range(t.n):
        if deg[leaf] != 1:
            continue
        prev = leaf
        cur = adj[leaf][0]
        steps = 1
        while deg[cur] == 2:
            nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
            prev, cur = cur, nxt
            steps += 1
        runs.append(steps if deg[cur] >= 3 else steps - 1)
    return runs


def stats(t: Tree) -> TreeStats:
    """Compute :class:`TreeStats`; requires n >= 2."""
    n = t.n
    if n < 2:
        raise ValueError("stats requires a tree with at least one edge")
    deg = t.degrees
    degree_sequence = tuple(sorted(deg, reverse=True))
    odd_count = sum(1 for d in deg if d % 2 == 1)
    deg2_count = sum(1 for d in deg if d == 2)
    branch_count = sum(1 for d in deg if d >= 3)
    leaf_count = sum(1 for d in deg if d == 1)

    runs = _pendant_runs(t)
    maximal: dict[int, int] = {}
    for run in runs:
        if run >= 1:
            maximal[run] = maximal.get(run, 0) + 1
    census: dict[int, int] = {}
    if maximal:
        longest = max(maximal)
        acc = 0
        for r in range(longest, 0, -1):
            acc += maximal.get(r, 0)
            census[r] = acc

    internal = [v for v in range(n) if deg[v] >= 2]
    is_caterpillar = True
    internal_set = set(internal)
    for v in internal:
        if sum(1 for w in t.adj[v] if w in internal_set) > 2:
            is_caterpillar = False
            break

    # Diameter by double BFS: valid on trees.
    adj = t.adj
    d0 = _bfs_distances(adj, 0)
    a = max(range(n), key=d0.__getitem__)
    da = _bfs_distances(adj, a)
    diameter = max(da)

    return TreeStats(
        degree_sequence=degree_sequence,
        odd_count=odd_count,
        deg2_count=deg2_count,
        branch_count=branch_count,
        leaf_count=leaf_count,
        pendent_path_census=MappingProxyType(census),
        maximal_run_census=MappingProxyType(maximal),
        is_series_reduced=(deg2_count == 0),
        is_caterpillar=is_caterpillar,
        diameter=diameter,
    )


# -- canonical form ------------------------------------------------------------


def _centers(t: Tree) -> list[int]:
    """The one or two middle vertices, found by pruning leaf layers."""
    n = t.n
    if n == 1:
        return [0]
    if n == 2:
        return [0, 1]
    deg = list(t.degrees)
    adj = t.adj
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            deg[v] = 0
            for w in adj[v]:
                if deg[w] > 1:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    return sorted(layer)


def _rooted_code(t: Tree, root: int) -> str:
    """AHU parenthesization of the tree rooted at ``root``."""
    n = t.n
    adj = t.adj
    parent = [-1] * n
    order = [root]
    head = 0
    while head < len(order):
        x = order[head]
        head += 1
        px = parent[x]
        for y in adj[x]:
            if y != px:
                parent[y] = x
                order.append(y)
    codes = [""] * n
    children: list[list[str]] = [[] for _ in range(n)]
    for x in reversed(order):
        codes[x] = "(" + "".join(sorted(children[x])) + ")"
        p = parent[x]
        if p >= 0:
            children[p].append(codes[x])
    return codes[root]


def canonical_form(t: Tree) -> str:
    """Canonical code: equal strings exactly for isomorphic trees.

    Rooted AHU codes are computed at the tree center(s) and the smaller
    string is returned, which is root-choice independent because any
    isomorphism maps centers to centers.
    """
    if t._canon is None:
        t._canon = min(_rooted_code(t, c) for c in _centers(t))
    return t._canon


def is_isomorphic(a: Tree, b: Tree) -> bool:
    return a.n == b.n and canonical_form(a) == canonical_form(b)
