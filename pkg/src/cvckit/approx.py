"""Linear-time 2-approximation for connected vertex cover.

The internal nodes of any DFS tree form a connected vertex cover of at most
twice the optimum size; the tree is rooted at vertex 0 for determinism.
"""

from __future__ import annotations

from .graph import Graph, dfs_tree


def approx_cvc(g: Graph) -> set[int]:
    """Internal nodes of the DFS tree rooted at 0.

    A single vertex is vacuously its own (empty) connected vertex cover.
    Raises ValueError on disconnected input.
    """
    if g.n == 0:
        raise ValueError("empty graph")
    if g.n == 1:
        return set()
    tree = dfs_tree(g, 0)
    return set(tree.internal)
