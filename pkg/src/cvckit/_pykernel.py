"""Pure-Python twin of the compiled split-enumeration kernel.

Both kernels walk every subset Z1 of the advice cover Z, validate the split,
derive the Steiner subinstance terminal structure, run the subset DP, and keep
the best candidate under the (weight, cardinality, lexicographic vertex set)
order. Iteration orders are identical in both implementations so results,
including tie-breaks, match bit for bit.

Index conventions: z-side vertices are bit positions into `z_ids` (ascending
original ids); outside vertices are positions into `out_ids`. Every neighbor
of an outside vertex lies in Z because Z is a vertex cover.
"""

from __future__ import annotations

from .steiner import UNREACHABLE, _min_card_dp, _min_weight_dp


def split_terminals(z_adj, out_nbr, z1, full):
    """Validate one split and derive its Steiner structure.

    Returns None when the split is invalid (an edge inside Z0, or an outside
    vertex whose whole neighborhood lies in Z0), else a tuple
    (v1_idx, v0_idx, n_terminals, u_masks) where u_masks[i] is the terminal
    mask of v0_idx[i] after components of g[Z1 + V1] are merged.
    """
    z0 = full ^ z1
    m = z0
    while m:
        i = (m & -m).bit_length() - 1
        m &= m - 1
        if z_adj[i] & z0:
            return None
    v1 = []
    v0 = []
    for u, nb in enumerate(out_nbr):
        if nb & z0:
            if not nb & z1:
                return None
            v1.append(u)
        else:
            v0.append(u)

    # Connected components of g[Z1], ids assigned by ascending lowest member.
    comp_of = {}
    ncomp = 0
    rest = z1
    while rest:
        start = rest & -rest
        comp = start
        frontier = start
        while frontier:
            b = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            grow = z_adj[b] & z1 & ~comp
            comp |= grow
            frontier |= grow
        bb = comp
        while bb:
            b = (bb & -bb).bit_length() - 1
            bb &= bb - 1
            comp_of[b] = ncomp
        ncomp += 1
        rest &= ~comp

    # V1 vertices merge every component they touch; union onto the lowest id.
    parent = list(range(ncomp))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u in v1:
        nb1 = out_nbr[u] & z1
        first = -1
        while nb1:
            b = (nb1 & -nb1).bit_length() - 1
            nb1 &= nb1 - 1
            c = find(comp_of[b])
            if first < 0:
                first = c
            elif c != first:
                if c < first:
                    parent[first] = c
                    first = c
                else:
                    parent[c] = first

    roots = sorted({find(c) for c in range(ncomp)})
    tbit = {r: i for i, r in enumerate(roots)}
    u_masks = []
    for u in v0:
        nb1 = out_nbr[u] & z1
        um = 0
        while nb1:
            b = (nb1 & -nb1).bit_length() - 1
            nb1 &= nb1 - 1
            um |= 1 << tbit[find(comp_of[b])]
        u_masks.append(um)
    return v1, v0, len(roots), u_masks


def enumerate_splits(
    z_adj,
    out_nbr,
    z_w,
    out_w,
    z_ids,
    out_ids,
    k,
    limit_cells,
    uniform,
    start,
    stop,
):
    """Best candidate cover over all splits with z1 mask in [start, stop).

    Mask 0 (the forced V-minus-Z candidate) is never handled here; callers
    treat it separately. Returns
    (found, weight, cardinality, sorted vertex ids or None,
     valid_splits, steiner_weight_sum).
    """
    nz = len(z_adj)
    full = (1 << nz) - 1
    best_w = UNREACHABLE
    best_card = -1
    best_ids = None
    valids = 0
    wsum = 0
    for z1 in range(max(start, 1), stop):
        r = split_terminals(z_adj, out_nbr, z1, full)
        if r is None:
            continue
        v1, v0, nt, u_masks = r
        valids += 1
        wsum += 1 << nt
        kp = k - z1.bit_count() - len(v1)
        if kp < 0:
            continue
        tfull = (1 << nt) - 1
        if uniform:
            val, pmask, pu = _min_card_dp(u_masks, nt, limit_cells)
            j = val[tfull]
            if j == UNREACHABLE or j > kp:
                continue
            xs = []
            mask = tfull
            while pu[mask] >= 0:
                xs.append(pu[mask])
                mask = pmask[mask]
            dp_value = float(j)
        else:
            uw = [out_w[u] for u in v0]
            val, pmask, pu = _min_weight_dp(u_masks, uw, nt, kp, limit_cells)
            stride = kp + 1
            dp_value = UNREACHABLE
            j = -1
            for jj in range(kp + 1):
                v = val[tfull * stride + jj]
                if v < dp_value:
                    dp_value = v
                    j = jj
            if dp_value == UNREACHABLE:
                continue
            xs = []
            mask = tfull
            jj = j
            while True:
                idx = mask * stride + jj
                u = pu[idx]
                if u < 0:
                    break
                xs.append(u)
                mask = pmask[idx]
                jj -= 1
        weight = 0.0
        zz = z1
        while zz:
            i = (zz & -zz).bit_length() - 1
            zz &= zz - 1
            weight += z_w[i]
        for u in v1:
            weight += out_w[u]
        weight += dp_value
        card = z1.bit_count() + len(v1) + j
        if weight > best_w:
            continue
        if weight == best_w:
            if card > best_card:
                continue
            if card == best_card:
                ids = _candidate_ids(z1, v1, xs, v0, z_ids, out_ids)
                if best_ids is not None and ids >= best_ids:
                    continue
                best_ids = ids
                continue
        best_w = weight
        best_card = card
        best_ids = _candidate_ids(z1, v1, xs, v0, z_ids, out_ids)
    found = best_ids is not None
    return found, best_w, best_card, best_ids, valids, wsum


def _candidate_ids(z1, v1, xs, v0, z_ids, out_ids):
    ids = []
    zz = z1
    while zz:
        i = (zz & -zz).bit_length() - 1
        zz &= zz - 1
        ids.append(z_ids[i])
    for u in v1:
        ids.append(out_ids[u])
    for u in xs:
        ids.append(out_ids[v0[u]])
    ids.sort()
    return ids


def iter_valid_splits(z_adj, out_nbr, k):
    """Yield (z1_mask, n_terminals, remaining budget, u_masks) per valid split.

    Budget-underflow splits are yielded with a negative budget so callers can
    still account for them in the work ledger.
    """
    nz = len(z_adj)
    full = (1 << nz) - 1
    for z1 in range(1, 1 << nz):
        r = split_terminals(z_adj, out_nbr, z1, full)
        if r is None:
            continue
        v1, v0, nt, u_masks = r
        yield z1, nt, k - z1.bit_count() - len(v1), u_masks
