"""Subset dynamic programming for node-weighted Steiner connection in
bipartite graphs whose two sides (terminals and non-terminals) are both
independent sets.

Terminal subsets are machine-word bit masks. The min-weight table is indexed
by (terminal subset, exact solution size); relaxations only ever grow the
terminal subset, which keeps every finite cell backed by a genuine witness
that predecessor pointers can reconstruct. The counting variant does not use
relaxation at all: a forward relaxation would count one set once per addition
order, so counts are computed by inclusion-exclusion anchored at the lowest
terminal of each subset (see _count_dp).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import comb

from .errors import MASK_WIDTH_LIMIT, ResourceLimitError, resolve_cell_limit

UNREACHABLE = math.inf


class SteinerInstance:
    """Bipartite Steiner instance: connect all terminals using few/cheap
    non-terminals.

    Non-terminals with empty neighborhoods can never help and are dropped at
    construction. Terminal bit i corresponds to ``terminals[i]``.
    """

    __slots__ = ("terminals", "nonterminals", "u_masks", "weights", "_term_bit")

    def __init__(self, terminals, nonterminals, adjacency, weights=None):
        self.terminals = tuple(terminals)
        if len(set(self.terminals)) != len(self.terminals):
            raise ValueError("duplicate terminal")
        if len(self.terminals) > MASK_WIDTH_LIMIT:
            raise ResourceLimitError(
                f"terminal set of size {len(self.terminals)} exceeds the "
                f"{MASK_WIDTH_LIMIT}-bit mask limit"
            )
        self._term_bit = {t: i for i, t in enumerate(self.terminals)}
        if weights is None:
            weights = {}
        kept = []
        masks = []
        ws = []
        tset = set(self.terminals)
        for u in nonterminals:
            if u in tset:
                raise ValueError(f"vertex {u} is both terminal and non-terminal")
            nb = set(adjacency.get(u, ()))
            if not nb:
                continue
            if not nb <= tset:
                raise ValueError(f"non-terminal {u} adjacent to a non-terminal")
            w = float(weights.get(u, 1.0))
            if w < 0:
                raise ValueError(f"negative weight at vertex {u}")
            mask = 0
            for t in nb:
                mask |= 1 << self._term_bit[t]
            kept.append(u)
            masks.append(mask)
            ws.append(w)
        self.nonterminals = tuple(kept)
        self.u_masks = tuple(masks)
        self.weights = tuple(ws)

    @property
    def num_terminals(self) -> int:
        return len(self.terminals)

    def terminal_mask(self, subset) -> int:
        mask = 0
        for t in subset:
            mask |= 1 << self._term_bit[t]
        return mask

    def is_uniform(self) -> bool:
        return all(w == 1.0 for w in self.weights)


def _check_cells(cells: int, limit_cells) -> None:
    limit = resolve_cell_limit(limit_cells)
    if cells > limit:
        raise ResourceLimitError(f"DP table needs {cells} cells, cap is {limit}")


def _min_weight_dp(u_masks, u_weights, nt, k, limit_cells):
    """Fill the (subset x size) min-weight table with predecessor pointers.

    Masks are processed in increasing numeric order (supersets come later),
    sizes in increasing order, non-terminals in index order; cells are only
    overwritten on strict improvement, so outputs are deterministic.
    """
    size = 1 << nt
    stride = k + 1
    _check_cells(size * stride, limit_cells)
    val = [UNREACHABLE] * (size * stride)
    pmask = [0] * (size * stride)
    pu = [-1] * (size * stride)
    for t in range(nt):
        val[(1 << t) * stride] = 0.0
    nu = len(u_masks)
    for mask in range(1, size):
        base = mask * stride
        for j in range(k):
            v = val[base + j]
            if v == UNREACHABLE:
                continue
            for u in range(nu):
                um = u_masks[u]
                # Relax only when u touches the subset and strictly grows it.
                if um & mask and um & ~mask:
                    idx = (mask | um) * stride + j + 1
                    nv = v + u_weights[u]
                    if nv < val[idx]:
                        val[idx] = nv
                        pmask[idx] = mask
                        pu[idx] = u
    return val, pmask, pu


def _min_card_dp(u_masks, nt, limit_cells):
    """Budget-free variant for uniform weights: one min-cardinality per subset."""
    size = 1 << nt
    _check_cells(size, limit_cells)
    val = [UNREACHABLE] * size
    pmask = [0] * size
    pu = [-1] * size
    for t in range(nt):
        val[1 << t] = 0
    nu = len(u_masks)
    for mask in range(1, size):
        v = val[mask]
        if v == UNREACHABLE:
            continue
        for u in range(nu):
            um = u_masks[u]
            if um & mask and um & ~mask:
                nm = mask | um
                if v + 1 < val[nm]:
                    val[nm] = v + 1
                    pmask[nm] = mask
                    pu[nm] = u
    return val, pmask, pu


@dataclass
class SteinerTable:
    """Min-weight DP table with reconstruction support."""

    instance: SteinerInstance
    k: int
    _val: list
    _pmask: list
    _pu: list

    @property
    def cell_count(self) -> int:
        return (1 << self.instance.num_terminals) * (self.k + 1)

    def value(self, subset, j: int) -> float:
        """Cell value for a terminal subset; UNREACHABLE (= math.inf) if empty."""
        mask = self.instance.terminal_mask(subset)
        return self._val[mask * (self.k + 1) + j]

    def reconstruct(self, subset, j: int):
        """Witness non-terminal set for a finite cell, None if unreachable."""
        mask = self.instance.terminal_mask(subset)
        return self._reconstruct_mask(mask, j)

    def _reconstruct_mask(self, mask: int, j: int):
        stride = self.k + 1
        if self._val[mask * stride + j] == UNREACHABLE:
            return None
        xs = []
        while True:
            idx = mask * stride + j
            u = self._pu[idx]
            if u < 0:
                break
            xs.append(self.instance.nonterminals[u])
            mask = self._pmask[idx]
            j -= 1
        return set(xs)


def build_min_weight_table(inst: SteinerInstance, k: int, limit_cells=None) -> SteinerTable:
    if k < 0:
        raise ValueError("budget must be nonnegative")
    val, pmask, pu = _min_weight_dp(
        inst.u_masks, inst.weights, inst.num_terminals, k, limit_cells
    )
    return SteinerTable(instance=inst, k=k, _val=val, _pmask=pmask, _pu=pu)


def solve_min_weight(inst: SteinerInstance, k: int, limit_cells=None):
    """Minimum-weight X (|X| <= k) connecting all terminals, or None.

    Ties in weight are broken toward smaller cardinality; the reconstruction
    itself is deterministic (first strict improvement wins).
    """
    nt = inst.num_terminals
    if nt == 0:
        return set(), 0.0
    table = build_min_weight_table(inst, k, limit_cells)
    full = (1 << nt) - 1
    stride = k + 1
    best = UNREACHABLE
    best_j = -1
    for j in range(k + 1):
        v = table._val[full * stride + j]
        if v < best:
            best = v
            best_j = j
    if best == UNREACHABLE:
        return None
    return table._reconstruct_mask(full, best_j), best


def solve_min_cardinality(inst: SteinerInstance, k: int, limit_cells=None):
    """Uniform-weight fast path: drops the size dimension of the table.

    Returns (X, |X|) or None; agrees exactly with solve_min_weight under
    unit weights (tested).
    """
    if k < 0:
        raise ValueError("budget must be nonnegative")
    nt = inst.num_terminals
    if nt == 0:
        return set(), 0
    val, pmask, pu = _min_card_dp(inst.u_masks, nt, limit_cells)
    full = (1 << nt) - 1
    card = val[full]
    if card == UNREACHABLE or card > k:
        return None
    xs = []
    mask = full
    while True:
        u = pu[mask]
        if u < 0:
            break
        xs.append(inst.nonterminals[u])
        mask = pmask[mask]
    return set(xs), card


def _count_dp(u_masks, nt, k, limit_cells):
    """Exact-size connected counts c[S][j] via anchored inclusion-exclusion.

    a(S, j) = C(#{u : N(u) <= S}, j) counts all j-subsets confined to S.
    Splitting each such subset by the connected component of S's lowest
    terminal gives
        a(S, j) = sum over T1 (lowest in T1 <= S) of sum_i c(T1, i) * a(S - T1, j - i),
    and the T1 = S term is c(S, j) itself, so c(S, j) follows by subtracting
    all proper-subset terms. Costs O(3^nt * k^2) big-int operations.
    """
    size = 1 << nt
    kk = min(k, len(u_masks))
    _check_cells(size * (kk + 1), limit_cells)
    cnt = [0] * size
    for um in u_masks:
        cnt[um] += 1
    for b in range(nt):
        bit = 1 << b
        for s in range(size):
            if s & bit:
                cnt[s] += cnt[s ^ bit]
    c = [[0] * (kk + 1) for _ in range(size)]
    for s in range(1, size):
        tstar = s & -s
        rest = s ^ tstar
        crow = [comb(cnt[s], j) for j in range(kk + 1)]
        if rest == 0:
            c[s] = crow  # singleton subset: every confined set is a star, all connected
            continue
        sub = rest
        while True:
            sub = (sub - 1) & rest  # proper submasks of rest, ending with 0
            t1 = sub | tstar
            comp = s ^ t1
            c1 = c[t1]
            ccomp = cnt[comp]
            for j in range(kk + 1):
                tot = 0
                for i in range(j + 1):
                    ci = c1[i]
                    if ci:
                        tot += ci * comb(ccomp, j - i)
                if tot:
                    crow[j] -= tot
            if sub == 0:
                break
        c[s] = crow
    return c, cnt, kk


@dataclass
class SteinerCountTable:
    """Counting tables: c = connected counts, a = confinement-only counts."""

    instance: SteinerInstance
    k: int
    _c: list
    _cnt: list
    _kk: int

    def a(self, subset, j: int) -> int:
        return comb(self._cnt[self.instance.terminal_mask(subset)], j)

    def c(self, subset, j: int) -> int:
        if j > self._kk:
            return 0
        mask = self.instance.terminal_mask(subset)
        if mask == 0:
            return 1 if j == 0 else 0
        return self._c[mask][j]


def build_count_table(inst: SteinerInstance, k: int, limit_cells=None) -> SteinerCountTable:
    if k < 0:
        raise ValueError("budget must be nonnegative")
    c, cnt, kk = _count_dp(inst.u_masks, inst.num_terminals, k, limit_cells)
    return SteinerCountTable(instance=inst, k=k, _c=c, _cnt=cnt, _kk=kk)


def count_at_most(inst: SteinerInstance, k: int, limit_cells=None) -> int:
    """Number of X (|X| <= k) whose union with the terminals is connected."""
    if k < 0:
        raise ValueError("budget must be nonnegative")
    nt = inst.num_terminals
    if nt == 0:
        return 1  # only X = {} (the empty graph is connected by convention)
    c, _, kk = _count_dp(inst.u_masks, nt, k, limit_cells)
    full = (1 << nt) - 1
    return sum(c[full][j] for j in range(kk + 1))
