"""Top-level connected vertex cover solvers.

The decision/search entry point walks a vertex ordering whose suffixes induce
connected subgraphs (ending in a 2-approximate cover), keeps a solution for
the graph with the current suffix contracted to one vertex, and re-solves via
cover compression each time one vertex is split back off. The weighted and
counting entry points run one final compression pass with the cover found by
the decision solver as advice.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .approx import approx_cvc
from .compression import (
    CompressionInstance,
    WorkLedger,
    count_solutions,
    solve_weighted,
)
from .graph import (
    Graph,
    connected_components,
    contract,
    induced_subgraph,
    is_connected_subset,
    is_vertex_cover,
    peel_order_with_suffix,
)

EDGELESS = "EDGELESS"
MULTI_CORE = "MULTI_CORE"
SINGLE_CORE = "SINGLE_CORE"


@dataclass(frozen=True)
class Preprocessed:
    """Graph classification: at most one component may contain an edge."""

    kind: str
    core: Graph | None
    core_ids: list[int] | None  # core vertex -> original vertex id
    isolated: frozenset[int]


@dataclass(frozen=True)
class CvcSolution:
    vertices: frozenset[int]
    cardinality: int
    weight: float


@dataclass
class SolveDiagnostics:
    """Per-run instrumentation: one WorkLedger per compression call."""

    approx_size: int | None = None
    rounds: list[WorkLedger] = field(default_factory=list)

    def peak(self) -> WorkLedger | None:
        best = None
        for led in self.rounds:
            if best is None or led.enumerated >= best.enumerated:
                best = led
        return best

    @property
    def total_enumerated(self) -> int:
        return sum(led.enumerated for led in self.rounds)


def preprocess(g: Graph) -> Preprocessed:
    """EDGELESS, MULTI_CORE (two components with edges: infeasible), or the
    single edge-bearing component with isolated vertices stripped."""
    if g.m == 0:
        return Preprocessed(EDGELESS, None, None, frozenset(range(g.n)))
    comps = connected_components(g)
    big = [c for c in comps if len(c) >= 2]
    isolated = frozenset(v for c in comps if len(c) == 1 for v in c)
    if len(big) >= 2:
        return Preprocessed(MULTI_CORE, None, None, isolated)
    core, ids = induced_subgraph(g, big[0])
    return Preprocessed(SINGLE_CORE, core, ids, isolated)


def _contract_suffix(core: Graph, suffix: set):
    """Contract the suffix to one vertex; return (graph, blob id, orig->new map)."""
    h, cmap = contract(core, [suffix])
    blob = -1
    pos = {}
    for nid, pre in cmap.preimage.items():
        if pre == suffix:
            blob = nid
        if len(pre) == 1:
            (orig,) = pre
            pos[orig] = nid
    return h, blob, pos


def _find_cvc_core(core, k, backend, parallel, limit_cells, diag):
    """Search on a connected core with at least one edge; k >= 1. Core ids."""
    w = approx_cvc(core)
    if diag is not None:
        diag.approx_size = len(w)
    if len(w) > 2 * k:
        return None  # the approximation is at most twice the optimum
    order = peel_order_with_suffix(core, w)
    n = core.n
    s = n - len(w)
    suffix = set(order[s:])
    h, blob, pos = _contract_suffix(core, suffix)
    x = {blob}  # covers every edge of h: the suffix is a vertex cover
    prev_blob, prev_pos = blob, pos
    for s in range(s + 1, n):
        suffix = set(order[s:])
        freed = order[s - 1]
        h, blob, pos = _contract_suffix(core, suffix)
        z = {blob, pos[freed]}
        inv_prev = {nid: orig for orig, nid in prev_pos.items()}
        for u in x:
            if u != prev_blob:
                z.add(pos[inv_prev[u]])
        assert len(z) <= k + 2
        inst = CompressionInstance(h, [1.0] * h.n, k, z)
        res = solve_weighted(inst, backend=backend, parallel=parallel, limit_cells=limit_cells)
        if diag is not None:
            diag.rounds.append(res.ledger)
        if not res.found:
            return None  # contracting edges cannot create a cover, so g has none
        x = set(res.solution)
        assert len(x) <= k
        assert is_vertex_cover(h, x) and is_connected_subset(h, x)
        prev_blob, prev_pos = blob, pos
    # The last round's graph is the core itself (identity renumbering).
    return x


def find_cvc(
    g: Graph,
    k: int,
    backend: str | None = None,
    parallel: bool = False,
    limit_cells=None,
    diagnostics: SolveDiagnostics | None = None,
):
    """A connected vertex cover of size <= k (not necessarily minimum), or None."""
    if k < 0:
        raise ValueError("budget must be nonnegative")
    pre = preprocess(g)
    if pre.kind == EDGELESS:
        return set()
    if pre.kind == MULTI_CORE:
        return None
    if k == 0:
        return None  # the core has an edge, so the empty cover cannot work
    sol = _find_cvc_core(pre.core, k, backend, parallel, limit_cells, diagnostics)
    if sol is None:
        return None
    return {pre.core_ids[v] for v in sol}


def solve_wcvc(
    g: Graph,
    weights,
    k: int,
    backend: str | None = None,
    parallel: bool = False,
    limit_cells=None,
    diagnostics: SolveDiagnostics | None = None,
):
    """Minimum-weight connected vertex cover of cardinality <= k, or None."""
    if k < 0:
        raise ValueError("budget must be nonnegative")
    if len(weights) != g.n:
        raise ValueError("weight vector length mismatch")
    if any(w < 0 for w in weights):
        raise ValueError("negative weight")
    pre = preprocess(g)
    if pre.kind == EDGELESS:
        return CvcSolution(frozenset(), 0, 0.0)
    if pre.kind == MULTI_CORE:
        return None
    if k == 0:
        return None
    z = _find_cvc_core(pre.core, k, backend, parallel, limit_cells, diagnostics)
    if z is None:
        return None
    core_w = [float(weights[orig]) for orig in pre.core_ids]
    inst = CompressionInstance(pre.core, core_w, k, z)
    res = solve_weighted(inst, backend=backend, parallel=parallel, limit_cells=limit_cells)
    if diagnostics is not None:
        diagnostics.rounds.append(res.ledger)
    assert res.found  # z itself is a feasible candidate
    vertices = frozenset(pre.core_ids[v] for v in res.solution)
    return CvcSolution(vertices, len(vertices), res.weight)


def count_cvc(
    g: Graph,
    k: int,
    backend: str | None = None,
    parallel: bool = False,
    limit_cells=None,
    diagnostics: SolveDiagnostics | None = None,
) -> int:
    """Number of connected vertex covers of cardinality <= k."""
    if k < 0:
        raise ValueError("budget must be nonnegative")
    pre = preprocess(g)
    if pre.kind == EDGELESS:
        # The empty cover plus, for k >= 1, each single vertex.
        return 1 + (g.n if k >= 1 else 0)
    if pre.kind == MULTI_CORE:
        return 0
    if k == 0:
        return 0
    z = _find_cvc_core(pre.core, k, backend, parallel, limit_cells, diagnostics)
    if z is None:
        return 0
    inst = CompressionInstance(pre.core, [1.0] * pre.core.n, k, z)
    count, ledger = count_solutions(inst, limit_cells=limit_cells)
    if diagnostics is not None:
        diagnostics.rounds.append(ledger)
    return count
