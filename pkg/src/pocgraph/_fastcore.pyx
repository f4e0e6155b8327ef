# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels for graphs on at most 64 vertices.

Mirrors ``_pykernels`` exactly: same reductions, same branching order,
same tie-breaks, so both backends return identical values.  The
dispatcher in ``kernels`` selects this module when it is importable and
the instance fits in a machine word.
"""

from libc.stdint cimport uint64_t

cdef extern from *:
    """
    #include <stdint.h>
    #if defined(__GNUC__) || defined(__clang__)
    static inline int pg_popcount(uint64_t x){ return __builtin_popcountll(x); }
    static inline int pg_ctz(uint64_t x){ return __builtin_ctzll(x); }
    #else
    static inline int pg_popcount(uint64_t x){ int c=0; while(x){ x&=x-1; c++; } return c; }
    static inline int pg_ctz(uint64_t x){ int c=0; while(!(x&1ULL)){ x>>=1; c++; } return c; }
    #endif
    static inline uint64_t pg_above(int a){ return (a>=63)?0ULL:(~0ULL<<(a+1)); }
    static inline uint64_t pg_full(int n){ return (n>=64)?~0ULL:((1ULL<<n)-1ULL); }
    """
    int pg_popcount(uint64_t x) nogil
    int pg_ctz(uint64_t x) nogil
    uint64_t pg_above(int a) nogil
    uint64_t pg_full(int n) nogil


# ---------------------------------------------------------------------------
# minimum vertex cover

cdef struct VCState:
    uint64_t rows[64]
    uint64_t full
    int n
    int limit
    int best_size
    uint64_t best_mask


cdef int _matching_lb(uint64_t* rows, uint64_t active) noexcept nogil:
    cdef uint64_t used = 0, todo = active, nb
    cdef int lb = 0, a
    while todo:
        a = pg_ctz(todo)
        todo &= todo - 1
        if (used >> a) & 1ULL:
            continue
        nb = rows[a] & active & ~used & pg_above(a)
        if nb:
            used |= ((<uint64_t>1) << a) | (nb & (0 - nb))
            lb += 1
    return lb


cdef void _vc_rec(VCState* st, uint64_t cover, uint64_t banned) noexcept nogil:
    cdef uint64_t forced, nb, active, rest
    cdef int v, pend, size, allowed, bv, bd, d
    cdef uint64_t* rows = st.rows
    while True:
        forced = 0
        rest = banned & ~cover
        while rest:
            v = pg_ctz(rest)
            rest &= rest - 1
            nb = rows[v] & ~cover
            if nb & banned:
                return
            forced |= nb
        forced &= ~cover
        if forced:
            cover |= forced
            continue
        pend = -1
        rest = st.full & ~cover
        while rest:
            v = pg_ctz(rest)
            rest &= rest - 1
            nb = rows[v] & ~cover
            if nb != 0 and (nb & (nb - 1)) == 0:
                pend = pg_ctz(nb)
                break
        if pend >= 0:
            cover |= (<uint64_t>1) << pend
            continue
        break
    size = pg_popcount(cover)
    allowed = st.limit if st.best_size < 0 else st.best_size - 1
    if size > allowed:
        return
    active = 0
    rest = st.full & ~cover
    while rest:
        v = pg_ctz(rest)
        rest &= rest - 1
        if rows[v] & ~cover:
            active |= (<uint64_t>1) << v
    if active == 0:
        st.best_size = size
        st.best_mask = cover
        return
    if size + _matching_lb(rows, active) > allowed:
        return
    bv = -1
    bd = -1
    rest = active
    while rest:
        v = pg_ctz(rest)
        rest &= rest - 1
        d = pg_popcount(rows[v] & active)
        if d > bd:
            bd = d
            bv = v
    _vc_rec(st, cover | ((<uint64_t>1) << bv), banned)
    if not ((banned >> bv) & 1ULL):
        _vc_rec(st, cover | (rows[bv] & ~cover), banned | ((<uint64_t>1) << bv))


def vc_solve(rows, int n, object forced_in=0, object forced_out=0, object bound=None):
    """Minimum vertex cover containing forced_in, avoiding forced_out."""
    if n > 64:
        raise ValueError("compiled kernel limited to 64 vertices")
    cdef VCState st
    cdef int v
    for v in range(n):
        st.rows[v] = <uint64_t>rows[v]
    st.full = pg_full(n)
    st.n = n
    cdef uint64_t fin = <uint64_t>forced_in
    cdef uint64_t fout = <uint64_t>forced_out
    if fin & fout:
        return None
    st.limit = n if bound is None else <int>bound
    st.best_size = -1
    st.best_mask = 0
    _vc_rec(&st, fin, fout)
    if st.best_size < 0:
        return None
    return (st.best_size, int(st.best_mask))


# ---------------------------------------------------------------------------
# connected vertex cover decision

cdef struct CVCState:
    uint64_t rows[64]
    uint64_t full
    uint64_t forced_in
    int n
    int k
    int found
    uint64_t witness


cdef uint64_t _neighborhood(uint64_t* rows, uint64_t mask) noexcept nogil:
    cdef uint64_t nb = 0, rest = mask
    cdef int v
    while rest:
        v = pg_ctz(rest)
        rest &= rest - 1
        nb |= rows[v]
    return nb


cdef void _cvc_dfs(CVCState* st, uint64_t S, uint64_t X) noexcept nogil:
    if st.found:
        return
    cdef uint64_t rest = st.full & ~S
    cdef uint64_t used = 0, todo = rest, high, nb, missing, R, grow, frontier, pref
    cdef int lb = 0, a, size, need, f
    while todo:
        a = pg_ctz(todo)
        todo &= todo - 1
        high = st.rows[a] & rest & pg_above(a)
        if high != 0 and ((X >> a) & 1ULL) != 0 and (high & X) != 0:
            return
        if (used >> a) & 1ULL:
            continue
        nb = high & ~used
        if nb:
            used |= ((<uint64_t>1) << a) | (nb & (0 - nb))
            lb += 1
    missing = st.forced_in & ~S
    if lb == 0 and missing == 0:
        st.found = 1
        st.witness = S
        return
    size = pg_popcount(S)
    if size >= st.k:
        return
    need = pg_popcount(missing)
    if lb > need:
        need = lb
    if size + need > st.k:
        return
    R = S
    while True:
        grow = _neighborhood(st.rows, R) & ~X & ~R
        if grow == 0:
            break
        R |= grow
    if missing & ~R:
        return
    todo = rest & ~R
    while todo:
        a = pg_ctz(todo)
        todo &= todo - 1
        if st.rows[a] & rest & ~R & pg_above(a):
            return
    frontier = _neighborhood(st.rows, S) & ~S & ~X
    if frontier == 0:
        return
    pref = frontier & st.forced_in
    f = pg_ctz(pref) if pref else pg_ctz(frontier)
    _cvc_dfs(st, S | ((<uint64_t>1) << f), X)
    if st.found:
        return
    if (st.forced_in >> f) & 1ULL:
        return
    _cvc_dfs(st, S, X | ((<uint64_t>1) << f))


def cvc_exists(rows, int n, int k, object forced_in=0, object forced_out=0):
    """A connected vertex cover of size <= k of a connected graph, or None."""
    if n > 64:
        raise ValueError("compiled kernel limited to 64 vertices")
    cdef CVCState st
    cdef int v, u, ok
    for v in range(n):
        st.rows[v] = <uint64_t>rows[v]
    st.full = pg_full(n)
    st.n = n
    st.k = k
    cdef uint64_t fin = <uint64_t>forced_in
    cdef uint64_t fout = <uint64_t>forced_out
    if fin & fout:
        return None
    if k < 1:
        return None
    # single-vertex covers: a star center
    for v in range(n):
        if (fout >> v) & 1ULL:
            continue
        if fin & ~((<uint64_t>1) << v):
            continue
        ok = 1
        for u in range(n):
            if u != v and st.rows[u] & ~((<uint64_t>1) << v):
                ok = 0
                break
        if ok:
            return 1 << v
    # every cover of size >= 2 contains the support of every pendant vertex
    cdef uint64_t supports = 0
    for v in range(n):
        if pg_popcount(st.rows[v]) == 1:
            supports |= st.rows[v]
    if supports & fout:
        return None
    fin |= supports
    if pg_popcount(fin) > k:
        return None
    st.forced_in = fin
    st.found = 0
    st.witness = 0
    cdef int root, w
    if fin:
        root = pg_ctz(fin)
        _cvc_dfs(&st, (<uint64_t>1) << root, fout)
        if st.found:
            return int(st.witness)
        return None
    u = -1
    for v in range(n):
        if st.rows[v]:
            u = v
            break
    if u < 0:
        return None
    w = pg_ctz(st.rows[u])
    if not ((fout >> u) & 1ULL):
        _cvc_dfs(&st, (<uint64_t>1) << u, fout)
        if st.found:
            return int(st.witness)
    if not ((fout >> w) & 1ULL):
        _cvc_dfs(&st, (<uint64_t>1) << w, fout | ((<uint64_t>1) << u))
        if st.found:
            return int(st.witness)
    return None


# ---------------------------------------------------------------------------
# canonical labeling

cdef struct CanonState:
    uint64_t rows[64]
    uint64_t best[64]
    int placed[64]
    int n


# columns carry at most 63 bits, so all-ones works as the +infinity sentinel
cdef uint64_t CANON_INF = <uint64_t>0 - 1


cdef void _canon_dfs(CanonState* st, int pos, uint64_t used) noexcept nogil:
    cdef int c, i, j
    cdef uint64_t col, rc
    if pos == st.n:
        return
    for c in range(st.n):
        if (used >> c) & 1ULL:
            continue
        rc = st.rows[c]
        col = 0
        for i in range(pos):
            col |= ((rc >> st.placed[i]) & 1ULL) << i
        if col > st.best[pos]:
            continue
        if col < st.best[pos]:
            st.best[pos] = col
            for j in range(pos + 1, st.n):
                st.best[j] = CANON_INF
        st.placed[pos] = c
        _canon_dfs(st, pos + 1, used | ((<uint64_t>1) << c))


def canon_key(rows, int n):
    """Canonical form: minimum upper-triangle bit string over relabelings."""
    if n > 64:
        raise ValueError("compiled kernel limited to 64 vertices")
    if n == 1:
        return bytes([0, 1])
    cdef CanonState st
    cdef int v, j, i
    for v in range(n):
        st.rows[v] = <uint64_t>rows[v]
    st.n = n
    st.best[0] = 0
    for j in range(1, n):
        st.best[j] = CANON_INF
    _canon_dfs(&st, 0, 0)
    out = bytearray([n >> 8, n & 0xFF])
    cdef int acc = 0, width = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | <int>((st.best[j] >> i) & 1ULL)
            width += 1
            if width == 8:
                out.append(acc)
                acc = 0
                width = 0
    if width:
        out.append(acc << (8 - width))
    return bytes(out)


# ---------------------------------------------------------------------------
# induced-pattern embedding

cdef struct EmbState:
    uint64_t host[64]
    uint64_t pat[64]
    int order[64]
    int assign[64]
    int hdeg[64]
    int pdeg[64]
    int hn
    int pn
    int found


cdef void _emb_dfs(EmbState* st, int idx, uint64_t used) noexcept nogil:
    if st.found:
        return
    if idx == st.pn:
        st.found = 1
        return
    cdef int pv = st.order[idx]
    cdef uint64_t prow = st.pat[pv], hrow
    cdef int hv, j, pu, ok
    for hv in range(st.hn):
        if (used >> hv) & 1ULL:
            continue
        if st.hdeg[hv] < st.pdeg[pv]:
            continue
        hrow = st.host[hv]
        ok = 1
        for j in range(idx):
            pu = st.order[j]
            if ((prow >> pu) & 1ULL) != ((hrow >> st.assign[pu]) & 1ULL):
                ok = 0
                break
        if ok:
            st.assign[pv] = hv
            _emb_dfs(st, idx + 1, used | ((<uint64_t>1) << hv))
            if st.found:
                return
            st.assign[pv] = -1


def induced_embedding(host_rows, int hn, pat_rows, int pn, order):
    """Injective map witnessing an induced embedding of the pattern, or None."""
    if hn > 64 or pn > 64:
        raise ValueError("compiled kernel limited to 64 vertices")
    if pn > hn:
        return None
    cdef EmbState st
    cdef int v
    for v in range(hn):
        st.host[v] = <uint64_t>host_rows[v]
        st.hdeg[v] = pg_popcount(st.host[v])
    for v in range(pn):
        st.pat[v] = <uint64_t>pat_rows[v]
        st.pdeg[v] = pg_popcount(st.pat[v])
        st.order[v] = <int>order[v]
        st.assign[v] = -1
    st.hn = hn
    st.pn = pn
    st.found = 0
    _emb_dfs(&st, 0, 0)
    if not st.found:
        return None
    return tuple(st.assign[v] for v in range(pn))
