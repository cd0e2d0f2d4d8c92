"""Cover-compression solver: given a connected vertex cover Z as advice, find
a minimum-weight connected vertex cover of size at most k (or count them all)
by trying every subset Z1 = Z intersect solution.

For a fixed Z1 the rest of the solution is forced except for a node-weighted
bipartite Steiner choice among the vertices with no neighbor in Z0, which the
steiner module solves per split. A work ledger records how much Steiner work
the enumeration generated; the sum of 2^(#terminals) over valid splits never
exceeds 3 * 2^(|Z|-1) because g[Z] is connected.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import _pykernel
from .backend import resolve_backend
from .errors import MASK_WIDTH_LIMIT, ResourceLimitError, resolve_cell_limit
from .graph import (
    ContractionMap,
    Graph,
    connected_components,
    is_connected_subset,
    is_vertex_cover,
)
from .steiner import SteinerInstance, _count_dp

REASON_OK = "OK"
REASON_Z0_NOT_INDEPENDENT = "Z0_NOT_INDEPENDENT"
REASON_V1_VERTEX_SWALLOWED = "V1_VERTEX_SWALLOWED"


class CompressionInstance:
    """Weighted CVC instance plus a known connected vertex cover z."""

    __slots__ = ("graph", "weights", "k", "z")

    def __init__(self, graph: Graph, weights, k: int, z):
        if k < 0:
            raise ValueError("budget must be nonnegative")
        if graph.m == 0:
            raise ValueError("compression needs a graph with at least one edge")
        if len(weights) != graph.n:
            raise ValueError("weight vector length mismatch")
        if any(w < 0 for w in weights):
            raise ValueError("negative weight")
        z = frozenset(z)
        if not is_vertex_cover(graph, z):
            raise ValueError("z is not a vertex cover")
        if not is_connected_subset(graph, z):
            raise ValueError("g[z] is not connected")
        if len(connected_components(graph)) != 1:
            raise ValueError("graph is disconnected")
        self.graph = graph
        self.weights = tuple(float(w) for w in weights)
        self.k = k
        self.z = z

    def is_uniform(self) -> bool:
        return all(w == 1.0 for w in self.weights)


@dataclass(frozen=True)
class SplitResult:
    """One guess z1 = Z intersect solution, with the forced consequences."""

    z1: frozenset
    z0: frozenset
    v1: frozenset
    v0: frozenset
    valid: bool
    reason: str


@dataclass
class WorkLedger:
    """Instrumentation for one compression solve."""

    z_size: int = 0
    enumerated: int = 0
    valid_splits: int = 0
    steiner_weight_sum: int = 0

    @property
    def bound(self) -> int:
        return 3 * 2 ** (self.z_size - 1) if self.z_size > 0 else 1

    def within_bound(self) -> bool:
        return self.steiner_weight_sum <= self.bound


@dataclass
class CompressionResult:
    solution: frozenset | None
    weight: float | None
    ledger: WorkLedger

    @property
    def found(self) -> bool:
        return self.solution is not None


def validate_split(inst: CompressionInstance, z1) -> SplitResult:
    """Classify the split induced by z1: either usable or dead for a stated reason."""
    z1 = frozenset(z1)
    if not z1 <= inst.z:
        raise ValueError("z1 must be a subset of z")
    g = inst.graph
    z0 = inst.z - z1
    outside = frozenset(range(g.n)) - inst.z
    v1 = frozenset(u for u in outside if any(w in z0 for w in g.adj[u]))
    v0 = outside - v1
    for a in z0:
        for b in g.adj[a]:
            if b in z0:
                return SplitResult(z1, z0, v1, v0, False, REASON_Z0_NOT_INDEPENDENT)
    for u in v1:
        if all(w in z0 for w in g.adj[u]):
            return SplitResult(z1, z0, v1, v0, False, REASON_V1_VERTEX_SWALLOWED)
    return SplitResult(z1, z0, v1, v0, True, REASON_OK)


def build_steiner_subinstance(inst: CompressionInstance, split: SplitResult):
    """Contract components of g[z1 + v1] into terminals; v0 are non-terminals.

    Returns the Steiner instance plus the map from terminal ids back to the
    original vertex sets they stand for.
    """
    if not split.valid:
        raise ValueError("split is not valid")
    if not split.z1:
        raise ValueError("z1 must be nonempty")
    g = inst.graph
    anchor = split.z1 | split.v1
    comps = []
    seen: set[int] = set()
    for s in sorted(anchor):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w in anchor and w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    term_of = {}
    for i, comp in enumerate(comps):
        for v in comp:
            term_of[v] = f"c{i}"  # distinct from original vertex ids
    nonterminals = sorted(split.v0)
    adjacency = {
        u: {term_of[w] for w in g.adj[u] if w in term_of} for u in nonterminals
    }
    weights = {u: inst.weights[u] for u in nonterminals}
    sub = SteinerInstance(
        [f"c{i}" for i in range(len(comps))], nonterminals, adjacency, weights
    )
    cmap = ContractionMap({i: comp for i, comp in enumerate(comps)})
    return sub, cmap


def _pack(inst: CompressionInstance):
    """Bit-pack the instance for the kernels: all masks live over z indices."""
    g = inst.graph
    z_ids = sorted(inst.z)
    nz = len(z_ids)
    if nz > MASK_WIDTH_LIMIT:
        raise ResourceLimitError(
            f"cover of size {nz} exceeds the {MASK_WIDTH_LIMIT}-bit mask limit"
        )
    zpos = {v: i for i, v in enumerate(z_ids)}
    z_adj = [0] * nz
    for i, v in enumerate(z_ids):
        for w in g.adj[v]:
            if w in zpos:
                z_adj[i] |= 1 << zpos[w]
    out_ids = sorted(set(range(g.n)) - inst.z)
    out_nbr = []
    for u in out_ids:
        nb = 0
        for w in g.adj[u]:
            nb |= 1 << zpos[w]  # every neighbor is in z because z is a vertex cover
        out_nbr.append(nb)
    z_w = [inst.weights[v] for v in z_ids]
    out_w = [inst.weights[u] for u in out_ids]
    return z_ids, z_adj, out_ids, out_nbr, z_w, out_w


def _empty_split_candidate(inst: CompressionInstance):
    """The z1 = {} case: the candidate is forced to be all of V minus z."""
    g = inst.graph
    rest = sorted(set(range(g.n)) - inst.z)
    if len(rest) > inst.k:
        return None
    if not is_vertex_cover(g, rest) or not is_connected_subset(g, rest):
        return None
    weight = 0.0
    for u in rest:
        weight += inst.weights[u]
    return weight, len(rest), rest


def _better(cand, best) -> bool:
    if best is None:
        return True
    w, card, ids = cand
    bw, bcard, bids = best
    if w != bw:
        return w < bw
    if card != bcard:
        return card < bcard
    return ids < bids


def solve_weighted(
    inst: CompressionInstance,
    backend: str | None = None,
    parallel: bool = False,
    limit_cells=None,
) -> CompressionResult:
    """Minimum-weight connected vertex cover of size <= k, using z as advice.

    Ties break toward smaller cardinality, then the lexicographically
    smallest vertex set. The z1 enumeration may be chunked across threads;
    the merge is associative so results do not depend on the chunking.
    """
    name, kernel = resolve_backend(backend)
    limit = resolve_cell_limit(limit_cells)
    z_ids, z_adj, out_ids, out_nbr, z_w, out_w = _pack(inst)
    nz = len(z_ids)
    uniform = inst.is_uniform()
    total = 1 << nz

    if name == "c":
        import numpy as np

        z_adj = np.array(z_adj, dtype=np.uint64)
        out_nbr = np.array(out_nbr, dtype=np.uint64)
        z_w = np.array(z_w, dtype=np.float64)
        out_w = np.array(out_w, dtype=np.float64)
        z_ids_arg = np.array(z_ids, dtype=np.int64)
        out_ids_arg = np.array(out_ids, dtype=np.int64)
    else:
        z_ids_arg = z_ids
        out_ids_arg = out_ids

    ranges = [(1, total)]
    if parallel and total > 1024:
        import os

        nchunks = min(4 * (os.cpu_count() or 1), 64)
        step = max(1, (total - 1) // nchunks + 1)
        ranges = [(lo, min(lo + step, total)) for lo in range(1, total, step)]

    def run(rng):
        lo, hi = rng
        return kernel.enumerate_splits(
            z_adj, out_nbr, z_w, out_w, z_ids_arg, out_ids_arg,
            inst.k, limit, uniform, lo, hi,
        )

    if len(ranges) == 1:
        outcomes = [run(ranges[0])]
    else:
        with ThreadPoolExecutor() as pool:
            outcomes = list(pool.map(run, ranges))

    best = None
    valids = 0
    wsum = 0
    for found, w, card, ids, v, s in outcomes:
        valids += v
        wsum += s
        if found and _better((w, card, ids), best):
            best = (w, card, ids)

    empty = _empty_split_candidate(inst)
    if empty is not None and _better(empty, best):
        best = empty

    ledger = WorkLedger(
        z_size=nz, enumerated=total, valid_splits=valids, steiner_weight_sum=wsum
    )
    if best is None:
        return CompressionResult(None, None, ledger)
    w, card, ids = best
    return CompressionResult(frozenset(ids), w, ledger)


def count_solutions(inst: CompressionInstance, limit_cells=None):
    """Number of connected vertex covers of size <= k.

    Each cover S is counted exactly once: its split is z1 = S intersect z,
    which forces v1, and the Steiner count enumerates the remaining choice
    X = S intersect v0; distinct z1 give distinct S intersect z, so no S is
    reachable from two splits. Counting runs on the Python kernel regardless
    of backend (counts are arbitrary-precision integers).
    """
    limit = resolve_cell_limit(limit_cells)
    z_ids, z_adj, out_ids, out_nbr, z_w, out_w = _pack(inst)
    nz = len(z_ids)
    total = 0
    valids = 0
    wsum = 0
    for z1, nt, kp, u_masks in _pykernel.iter_valid_splits(z_adj, out_nbr, inst.k):
        valids += 1
        wsum += 1 << nt
        if kp < 0:
            continue
        c, _, kk = _count_dp(u_masks, nt, kp, limit)
        full = (1 << nt) - 1
        total += sum(c[full][j] for j in range(kk + 1))
    if _empty_split_candidate(inst) is not None:
        total += 1
    ledger = WorkLedger(
        z_size=nz, enumerated=1 << nz, valid_splits=valids, steiner_weight_sum=wsum
    )
    return total, ledger
