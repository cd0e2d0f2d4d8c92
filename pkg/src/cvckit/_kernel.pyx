# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of cvckit._pykernel.enumerate_splits.

Iteration orders, tie-breaking and floating-point accumulation orders are
kept identical to the pure-Python kernel so both backends return bit-equal
results; parity is enforced by tests. See _pykernel.py for the algorithm
description.
"""

from libc.math cimport INFINITY
from libc.stdlib cimport free, malloc, qsort, realloc
from libc.string cimport memcpy, memset

from .errors import ResourceLimitError

cdef extern from *:
    """
    static inline int cvc_popcount(unsigned long long x) { return __builtin_popcountll(x); }
    static inline int cvc_ctz(unsigned long long x) { return __builtin_ctzll(x); }
    static int cvc_cmp_i64(const void *a, const void *b) {
        long long x = *(const long long *)a, y = *(const long long *)b;
        return (x > y) - (x < y);
    }
    """
    int cvc_popcount(unsigned long long) nogil
    int cvc_ctz(unsigned long long) nogil
    int cvc_cmp_i64(const void *, const void *) nogil


cdef inline int dsu_find(int *parent, int a) nogil:
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    return a


def enumerate_splits(
    unsigned long long[::1] z_adj,
    unsigned long long[::1] out_nbr,
    double[::1] z_w,
    double[::1] out_w,
    long long[::1] z_ids,
    long long[::1] out_ids,
    long long k,
    long long limit_cells,
    bint uniform,
    unsigned long long start,
    unsigned long long stop,
):
    cdef Py_ssize_t nz = z_adj.shape[0]
    cdef Py_ssize_t nout = out_nbr.shape[0]
    cdef unsigned long long full = (<unsigned long long>1 << nz) - 1

    cdef int *comp_of = NULL
    cdef int *parent = NULL
    cdef int *tbit = NULL
    cdef int *v1buf = NULL
    cdef int *v0buf = NULL
    cdef unsigned long long *umasks = NULL
    cdef int *xs = NULL
    cdef long long *cand = NULL
    cdef long long *best = NULL
    cdef double *val = NULL
    cdef unsigned long long *pm = NULL
    cdef int *pu = NULL
    cdef unsigned long long cap = 0

    cdef unsigned long long z1, z0, m, rest, startb, comp, frontier, bb, nb, nb1
    cdef unsigned long long um, mask, nm, tfull, cells, need, wsum = 0
    cdef unsigned long long valids = 0
    cdef long long kp, stride, jj, jbest, jcard, card, idx, base, j
    cdef double v, nv, dpv, weight
    cdef double best_w = INFINITY
    cdef long long best_card = -1
    cdef Py_ssize_t best_len = 0, cand_len
    cdef bint have_best = False, ok
    cdef int i, b, c, first, u, nv1, nv0, ncomp, nt, nxs, status = 0
    cdef int lexcmp

    comp_of = <int *>malloc((nz + 1) * sizeof(int))
    parent = <int *>malloc((nz + 1) * sizeof(int))
    tbit = <int *>malloc((nz + 1) * sizeof(int))
    v1buf = <int *>malloc((nout + 1) * sizeof(int))
    v0buf = <int *>malloc((nout + 1) * sizeof(int))
    umasks = <unsigned long long *>malloc((nout + 1) * sizeof(unsigned long long))
    xs = <int *>malloc((nout + 1) * sizeof(int))
    cand = <long long *>malloc((nz + nout + 1) * sizeof(long long))
    best = <long long *>malloc((nz + nout + 1) * sizeof(long long))
    if (comp_of == NULL or parent == NULL or tbit == NULL or v1buf == NULL
            or v0buf == NULL or umasks == NULL or xs == NULL or cand == NULL
            or best == NULL):
        status = 2

    if start < 1:
        start = 1

    try:
        if status == 0:
            with nogil:
                z1 = start
                while z1 < stop:
                    # --- split validation ---
                    z0 = full ^ z1
                    ok = True
                    m = z0
                    while m:
                        i = cvc_ctz(m)
                        m &= m - 1
                        if z_adj[i] & z0:
                            ok = False
                            break
                    if not ok:
                        z1 += 1
                        continue
                    nv1 = 0
                    nv0 = 0
                    for u in range(nout):
                        nb = out_nbr[u]
                        if nb & z0:
                            if not (nb & z1):
                                ok = False
                                break
                            v1buf[nv1] = u
                            nv1 += 1
                        else:
                            v0buf[nv0] = u
                            nv0 += 1
                    if not ok:
                        z1 += 1
                        continue

                    # --- components of g[z1], merged through v1 vertices ---
                    ncomp = 0
                    rest = z1
                    while rest:
                        startb = rest & (~rest + 1)
                        comp = startb
                        frontier = startb
                        while frontier:
                            b = cvc_ctz(frontier)
                            frontier &= frontier - 1
                            nm = z_adj[b] & z1 & ~comp
                            comp |= nm
                            frontier |= nm
                        bb = comp
                        while bb:
                            b = cvc_ctz(bb)
                            bb &= bb - 1
                            comp_of[b] = ncomp
                        ncomp += 1
                        rest &= ~comp
                    for c in range(ncomp):
                        parent[c] = c
                    for i in range(nv1):
                        nb1 = out_nbr[v1buf[i]] & z1
                        first = -1
                        while nb1:
                            b = cvc_ctz(nb1)
                            nb1 &= nb1 - 1
                            c = dsu_find(parent, comp_of[b])
                            if first < 0:
                                first = c
                            elif c != first:
                                if c < first:
                                    parent[first] = c
                                    first = c
                                else:
                                    parent[c] = first
                    nt = 0
                    for c in range(ncomp):
                        if dsu_find(parent, c) == c:
                            tbit[c] = nt
                            nt += 1
                    valids += 1
                    wsum += <unsigned long long>1 << nt
                    kp = k - cvc_popcount(z1) - nv1
                    if kp < 0:
                        z1 += 1
                        continue
                    for i in range(nv0):
                        nb1 = out_nbr[v0buf[i]] & z1
                        um = 0
                        while nb1:
                            b = cvc_ctz(nb1)
                            nb1 &= nb1 - 1
                            um |= <unsigned long long>1 << tbit[dsu_find(parent, comp_of[b])]
                        umasks[i] = um
                    tfull = (<unsigned long long>1 << nt) - 1

                    # --- subset DP (uniform: no size dimension) ---
                    if uniform:
                        cells = tfull + 1
                        if cells > <unsigned long long>limit_cells:
                            status = 1
                            break
                        if cells > cap:
                            need = cells if cells > 2 * cap else 2 * cap
                            val = <double *>realloc(val, need * sizeof(double))
                            pm = <unsigned long long *>realloc(pm, need * sizeof(unsigned long long))
                            pu = <int *>realloc(pu, need * sizeof(int))
                            if val == NULL or pm == NULL or pu == NULL:
                                status = 2
                                break
                            cap = need
                        for mask in range(cells):
                            val[mask] = INFINITY
                        memset(pu, 0xFF, cells * sizeof(int))
                        for i in range(nt):
                            val[<unsigned long long>1 << i] = 0.0
                        mask = 1
                        while mask <= tfull:
                            v = val[mask]
                            if v != INFINITY:
                                for u in range(nv0):
                                    um = umasks[u]
                                    if (um & mask) and (um & ~mask):
                                        nm = mask | um
                                        if v + 1.0 < val[nm]:
                                            val[nm] = v + 1.0
                                            pm[nm] = mask
                                            pu[nm] = u
                            mask += 1
                        dpv = val[tfull]
                        if dpv == INFINITY or dpv > <double>kp:
                            z1 += 1
                            continue
                        jcard = <long long>dpv
                        nxs = 0
                        mask = tfull
                        while pu[mask] >= 0:
                            xs[nxs] = pu[mask]
                            nxs += 1
                            mask = pm[mask]
                    else:
                        stride = kp + 1
                        cells = (tfull + 1) * <unsigned long long>stride
                        if cells > <unsigned long long>limit_cells:
                            status = 1
                            break
                        if cells > cap:
                            need = cells if cells > 2 * cap else 2 * cap
                            val = <double *>realloc(val, need * sizeof(double))
                            pm = <unsigned long long *>realloc(pm, need * sizeof(unsigned long long))
                            pu = <int *>realloc(pu, need * sizeof(int))
                            if val == NULL or pm == NULL or pu == NULL:
                                status = 2
                                break
                            cap = need
                        for mask in range(cells):
                            val[mask] = INFINITY
                        memset(pu, 0xFF, cells * sizeof(int))
                        for i in range(nt):
                            val[(<unsigned long long>1 << i) * stride] = 0.0
                        mask = 1
                        while mask <= tfull:
                            base = mask * stride
                            for j in range(kp):
                                v = val[base + j]
                                if v == INFINITY:
                                    continue
                                for u in range(nv0):
                                    um = umasks[u]
                                    if (um & mask) and (um & ~mask):
                                        idx = <long long>((mask | um) * stride) + j + 1
                                        nv = v + out_w[v0buf[u]]
                                        if nv < val[idx]:
                                            val[idx] = nv
                                            pm[idx] = mask
                                            pu[idx] = u
                            mask += 1
                        dpv = INFINITY
                        jbest = -1
                        for j in range(kp + 1):
                            v = val[tfull * stride + j]
                            if v < dpv:
                                dpv = v
                                jbest = j
                        if dpv == INFINITY:
                            z1 += 1
                            continue
                        jcard = jbest
                        nxs = 0
                        mask = tfull
                        jj = jbest
                        while True:
                            idx = <long long>(mask * stride) + jj
                            u = pu[idx]
                            if u < 0:
                                break
                            xs[nxs] = u
                            nxs += 1
                            mask = pm[idx]
                            jj -= 1

                    # --- candidate weight/cardinality and comparison ---
                    weight = 0.0
                    m = z1
                    while m:
                        i = cvc_ctz(m)
                        m &= m - 1
                        weight += z_w[i]
                    for i in range(nv1):
                        weight += out_w[v1buf[i]]
                    weight += dpv
                    card = cvc_popcount(z1) + nv1 + jcard
                    if weight > best_w:
                        z1 += 1
                        continue
                    if weight == best_w and have_best:
                        if card > best_card:
                            z1 += 1
                            continue
                        if card == best_card:
                            # lexicographic comparison of sorted vertex ids
                            cand_len = 0
                            m = z1
                            while m:
                                i = cvc_ctz(m)
                                m &= m - 1
                                cand[cand_len] = z_ids[i]
                                cand_len += 1
                            for i in range(nv1):
                                cand[cand_len] = out_ids[v1buf[i]]
                                cand_len += 1
                            for i in range(nxs):
                                cand[cand_len] = out_ids[v0buf[xs[i]]]
                                cand_len += 1
                            qsort(cand, cand_len, sizeof(long long), cvc_cmp_i64)
                            lexcmp = 0
                            for i in range(cand_len):
                                if cand[i] < best[i]:
                                    lexcmp = -1
                                    break
                                if cand[i] > best[i]:
                                    lexcmp = 1
                                    break
                            if lexcmp >= 0:
                                z1 += 1
                                continue
                            memcpy(best, cand, cand_len * sizeof(long long))
                            best_len = cand_len
                            z1 += 1
                            continue
                    # strictly better: rebuild best
                    best_w = weight
                    best_card = card
                    have_best = True
                    best_len = 0
                    m = z1
                    while m:
                        i = cvc_ctz(m)
                        m &= m - 1
                        best[best_len] = z_ids[i]
                        best_len += 1
                    for i in range(nv1):
                        best[best_len] = out_ids[v1buf[i]]
                        best_len += 1
                    for i in range(nxs):
                        best[best_len] = out_ids[v0buf[xs[i]]]
                        best_len += 1
                    qsort(best, best_len, sizeof(long long), cvc_cmp_i64)
                    z1 += 1

        if status == 1:
            raise ResourceLimitError(
                f"DP table would exceed the cell cap of {limit_cells}"
            )
        if status == 2:
            raise MemoryError("kernel allocation failure")
        ids = None
        if have_best:
            ids = [best[i] for i in range(best_len)]
        return have_best, (best_w if have_best else INFINITY), best_card, ids, valids, wsum
    finally:
        free(comp_of)
        free(parent)
        free(tbit)
        free(v1buf)
        free(v0buf)
        free(umasks)
        free(xs)
        free(cand)
        free(best)
        free(val)
        free(pm)
        free(pu)
