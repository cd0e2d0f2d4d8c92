"""Simple undirected graphs with contiguous 0-based vertex ids, plus the
connectivity, contraction and vertex-ordering utilities the solvers build on.

Graphs are immutable after construction and safe to share between threads.
All tie-breaking is by lowest vertex id so results are reproducible.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field


class Graph:
    """Undirected simple graph: no self-loops, no parallel edges."""

    __slots__ = ("n", "edges", "adj", "_masks")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        seen = set()
        adj = [[] for _ in range(n)]
        canon = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge endpoint out of range: ({u}, {v})")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge ({e[0]}, {e[1]})")
            seen.add(e)
            canon.append(e)
            adj[u].append(v)
            adj[v].append(u)
        canon.sort()
        self.edges: tuple[tuple[int, int], ...] = tuple(canon)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self._masks = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def adjacency_masks(self) -> list[int]:
        """Per-vertex neighbor sets as int bit masks (cached)."""
        if self._masks is None:
            masks = [0] * self.n
            for u, v in self.edges:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
            self._masks = masks
        return self._masks

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))


@dataclass(frozen=True)
class RootedTree:
    """Rooted spanning tree: parent map (root excluded) and the non-leaf nodes."""

    root: int
    parent: dict[int, int]
    internal: frozenset[int]

    def depth(self, v: int) -> int:
        d = 0
        while v != self.root:
            v = self.parent[v]
            d += 1
        return d


@dataclass(frozen=True)
class ContractionMap:
    """Maps each contracted-graph vertex to its set of original vertices."""

    preimage: dict[int, frozenset[int]] = field(default_factory=dict)

    def expand(self, vertices) -> set[int]:
        out: set[int] = set()
        for v in vertices:
            out |= self.preimage[v]
        return out


def connected_components(g: Graph) -> list[set[int]]:
    """Maximal connected vertex sets, ordered by smallest contained vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = {s}
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.add(w)
                    queue.append(w)
        comps.append(comp)
    return comps


def is_connected_subset(g: Graph, s) -> bool:
    """True iff g[s] has at most one connected component (empty set counts)."""
    s = set(s)
    if len(s) <= 1:
        return True
    start = next(iter(s))
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w in s and w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(s)


def is_vertex_cover(g: Graph, s) -> bool:
    s = set(s)
    return all(u in s or v in s for u, v in g.edges)


def induced_subgraph(g: Graph, vertices) -> tuple[Graph, list[int]]:
    """Induced subgraph on `vertices`, renumbered 0..len-1 by ascending id.

    Returns the subgraph and the list mapping new ids back to original ids.
    """
    ids = sorted(set(vertices))
    pos = {v: i for i, v in enumerate(ids)}
    edges = [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos]
    return Graph(len(ids), edges), ids


def contract(g: Graph, parts) -> tuple[Graph, ContractionMap]:
    """Contract each part to a single vertex; uncovered vertices stay singletons.

    Self-loops are dropped and parallel edges merged, so the result is simple.
    New ids are assigned by ascending smallest original vertex of each part.
    """
    parts = [frozenset(p) for p in parts]
    claimed: set[int] = set()
    for p in parts:
        if not p:
            raise ValueError("empty part")
        if not p <= set(range(g.n)):
            raise ValueError("part contains unknown vertex")
        if p & claimed:
            raise ValueError("overlapping parts")
        claimed |= p
    all_parts = parts + [frozenset({v}) for v in range(g.n) if v not in claimed]
    all_parts.sort(key=min)
    owner = {}
    for i, p in enumerate(all_parts):
        for v in p:
            owner[v] = i
    edges = {(owner[u], owner[v]) for u, v in g.edges if owner[u] != owner[v]}
    edges = {(a, b) if a < b else (b, a) for a, b in edges}
    h = Graph(len(all_parts), sorted(edges))
    return h, ContractionMap({i: p for i, p in enumerate(all_parts)})


def dfs_tree(g: Graph, root: int) -> RootedTree:
    """Depth-first spanning tree, neighbors explored in increasing id order."""
    if g.n == 0:
        raise ValueError("empty graph")
    parent: dict[int, int] = {}
    children = [0] * g.n
    seen = [False] * g.n
    seen[root] = True
    # Iterative DFS; the explicit iterator stack preserves the increasing-id rule.
    stack = [(root, iter(g.adj[root]))]
    while stack:
        u, it = stack[-1]
        advanced = False
        for w in it:
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                children[u] += 1
                stack.append((w, iter(g.adj[w])))
                advanced = True
                break
        if not advanced:
            stack.pop()
    if len(parent) != g.n - 1:
        raise ValueError("graph is disconnected")
    internal = frozenset(v for v in range(g.n) if children[v] > 0)
    return RootedTree(root=root, parent=parent, internal=internal)


def peel_order(g: Graph) -> list[int]:
    """Ordering v_1..v_n such that every suffix induces a connected subgraph.

    Repeatedly removes the lowest-id leaf of a DFS spanning tree; the root is
    removed last, so each remaining suffix stays tree-connected.
    """
    if g.n == 0:
        raise ValueError("empty graph")
    if g.n == 1:
        return [0]
    tree = dfs_tree(g, 0)  # raises on disconnected input
    children = {v: 0 for v in range(g.n)}
    for v, p in tree.parent.items():
        children[p] += 1
    leaves = [v for v in range(g.n) if children[v] == 0 and v != tree.root]
    heapq.heapify(leaves)
    order = []
    removed = [False] * g.n
    while leaves:
        v = heapq.heappop(leaves)
        removed[v] = True
        order.append(v)
        p = tree.parent[v]
        children[p] -= 1
        if children[p] == 0 and p != tree.root:
            heapq.heappush(leaves, p)
    order.append(tree.root)
    return order


def peel_order_with_suffix(g: Graph, w) -> list[int]:
    """Peel ordering whose last |w| entries are exactly the cover w.

    Vertices outside w go first (any order works: they are pairwise
    non-adjacent and each has a neighbor in w), then w is peeled leaf-by-leaf.
    """
    w = set(w)
    if not is_vertex_cover(g, w) or not is_connected_subset(g, w):
        raise ValueError("w is not a connected vertex cover")
    if len(connected_components(g)) != 1:
        raise ValueError("graph is disconnected")
    prefix = sorted(set(range(g.n)) - w)
    if not w:
        return prefix
    sub, ids = induced_subgraph(g, w)
    return prefix + [ids[v] for v in peel_order(sub)]
