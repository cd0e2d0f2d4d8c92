"""Brute-force references and combinatorial verifiers.

Everything here enumerates exhaustively over bit masks, so it is only meant
for small graphs; the solvers are validated against these functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import ResourceLimitError
from .graph import Graph, RootedTree, is_vertex_cover

BRUTE_FORCE_CAP = 20
ENUMERATION_CAP = 7


def _mask_components(adj_masks: list[int], mask: int) -> int:
    """Number of connected components of the subgraph induced by `mask`."""
    count = 0
    rest = mask
    while rest:
        count += 1
        start = rest & -rest
        comp = start
        frontier = start
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            grow = adj_masks[v] & mask & ~comp
            comp |= grow
            frontier |= grow
        rest &= ~comp
    return count


def _is_mask_connected(adj_masks: list[int], mask: int) -> bool:
    return mask == 0 or _mask_components(adj_masks, mask) == 1


def brute_force(g: Graph, weights=None, k: int | None = None, cap: int = BRUTE_FORCE_CAP):
    """Enumerate all vertex subsets and report on connected vertex covers.

    Returns (min_size, min_weight, count) over subsets that are vertex covers,
    induce a connected subgraph, and have size at most k (default: n).
    min_size/min_weight are None when no such cover exists.
    """
    if g.n > cap:
        raise ResourceLimitError(f"brute force capped at n <= {cap}, got n = {g.n}")
    if weights is None:
        weights = [1.0] * g.n
    if k is None:
        k = g.n
    adj = g.adjacency_masks()
    full = (1 << g.n) - 1
    min_size = None
    min_weight = None
    count = 0
    for mask in range(1 << g.n):
        comp_mask = full & ~mask
        # Vertex cover <=> complement is independent.
        independent = True
        rest = comp_mask
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            if adj[v] & comp_mask:
                independent = False
                break
        if not independent:
            continue
        size = mask.bit_count()
        if size > k:
            continue
        if not _is_mask_connected(adj, mask):
            continue
        count += 1
        w = 0.0
        rest = mask
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            w += weights[v]
        if min_size is None or size < min_size:
            min_size = size
        if min_weight is None or w < min_weight:
            min_weight = w
    return min_size, min_weight, count


def check_component_bound(g: Graph):
    """Sum 2^(#components of g[S]) over all vertex covers S of a connected g.

    Returns (sum, bound, holds) with bound = 3 * 2^(n-1).
    """
    if g.n == 0:
        raise ValueError("empty graph")
    adj = g.adjacency_masks()
    full = (1 << g.n) - 1
    if not _is_mask_connected(adj, full):
        raise ValueError("graph is disconnected")
    total = 0
    for mask in range(1 << g.n):
        comp_mask = full & ~mask
        independent = True
        rest = comp_mask
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            if adj[v] & comp_mask:
                independent = False
                break
        if independent:
            total += 1 << _mask_components(adj, mask)
    bound = 3 * 2 ** (g.n - 1)
    return total, bound, total <= bound


@dataclass(frozen=True)
class PhiPrimeCode:
    """Label string for a (cover, chosen-components) pair on a rooted tree.

    root_label is one of 'ii', 'io', 'o'; every non-root vertex carries an
    'a'/'b' label assigned top-down, so the codomain has size 3 * 2^(n-1).
    """

    root_label: str
    labels: tuple[str, ...]  # indexed by vertex id, '' at the root


def phi_prime_encode(g: Graph, tree: RootedTree, v1, chosen) -> PhiPrimeCode:
    """Encode a vertex cover v1 plus a chosen set of components of g[v1].

    The two-label rule: a child of a covered parent records its own membership;
    a child of an uncovered parent must itself be covered, and records whether
    its component is chosen. Distinct pairs must get distinct codes.
    """
    v1 = set(v1)
    if not is_vertex_cover(g, v1):
        raise ValueError("v1 is not a vertex cover")
    comp_of: dict[int, frozenset[int]] = {}
    seen: set[int] = set()
    for s in sorted(v1):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w in v1 and w not in comp:
                    comp.add(w)
                    stack.append(w)
        fcomp = frozenset(comp)
        for u in comp:
            comp_of[u] = fcomp
        seen |= comp
    chosen = {frozenset(c) for c in chosen}
    if not chosen <= set(comp_of.values()):
        raise ValueError("chosen contains a non-component")

    r = tree.root
    if r not in v1:
        root_label = "o"
    elif comp_of[r] in chosen:
        root_label = "ii"
    else:
        root_label = "io"
    labels = [""] * g.n
    for v in range(g.n):
        if v == r:
            continue
        p = tree.parent[v]
        if p in v1:
            labels[v] = "a" if v in v1 else "b"
        else:
            if v not in v1:
                raise ValueError("v1 is not a vertex cover (uncovered tree edge)")
            labels[v] = "a" if comp_of[v] in chosen else "b"
    return PhiPrimeCode(root_label=root_label, labels=tuple(labels))


def cover_component_pairs(g: Graph):
    """Yield every (cover mask, component subsets) pair of the bound's sum."""
    adj = g.adjacency_masks()
    full = (1 << g.n) - 1
    for mask in range(1 << g.n):
        comp_mask = full & ~mask
        independent = True
        rest = comp_mask
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            if adj[v] & comp_mask:
                independent = False
                break
        if not independent:
            continue
        comps = []
        rest = mask
        while rest:
            start = rest & -rest
            comp = start
            frontier = start
            while frontier:
                v = (frontier & -frontier).bit_length() - 1
                frontier &= frontier - 1
                grow = adj[v] & mask & ~comp
                comp |= grow
                frontier |= grow
            comps.append(frozenset(i for i in range(g.n) if comp >> i & 1))
            rest &= ~comp
        for pick in range(1 << len(comps)):
            yield mask, {comps[i] for i in range(len(comps)) if pick >> i & 1}


def enumerate_connected_graphs(n: int):
    """All labeled connected simple graphs on n vertices, each exactly once."""
    if n > ENUMERATION_CAP:
        raise ResourceLimitError(f"enumeration capped at n <= {ENUMERATION_CAP}")
    if n == 0:
        return
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    full = (1 << n) - 1
    for emask in range(1 << len(pairs)):
        adj = [0] * n
        rest = emask
        while rest:
            i = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            u, v = pairs[i]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if not _is_mask_connected(adj, full):
            continue
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if emask >> i & 1])
