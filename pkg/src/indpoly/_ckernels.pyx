# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels mirroring ``_pykernels`` for graphs with n <= 64.

Counts use uint64: every coefficient of a graph on m <= 64 vertices is at
most C(64, 32) < 2**63, and every intermediate value in the recursion is
itself such a coefficient, so no overflow is possible.
"""
from libc.stdint cimport uint64_t, uint32_t, int64_t
from libc.stdlib cimport malloc, free
from libc.string cimport memcpy, memset

cdef extern from *:
    int popcount "__builtin_popcountll"(unsigned long long) nogil
    int ctz "__builtin_ctzll"(unsigned long long) nogil

cdef enum:
    MAXN = 64
    POLY = 66

# memo table for the counting recursion; a generation stamp invalidates
# all entries at once (clear-on-full)
cdef enum:
    MEMO_CAP = 1 << 17
    POOL_CAP = 1 << 22

cdef uint64_t memo_keys[MEMO_CAP]
cdef uint32_t memo_stamp[MEMO_CAP]
cdef uint32_t memo_off[MEMO_CAP]
cdef unsigned char memo_len[MEMO_CAP]
cdef uint64_t *pool = NULL
cdef uint32_t pool_used = 0
cdef uint32_t memo_count = 0
cdef uint32_t generation = 1
cdef uint64_t g_rows[MAXN]


cdef int _load_rows(rows) except -1:
    cdef int n = len(rows)
    cdef int i
    if n > MAXN:
        raise ValueError(f"compiled kernels support n <= {MAXN}, got {n}")
    for i in range(n):
        g_rows[i] = <uint64_t>rows[i]
    return n


cdef inline uint64_t _full(int n) nogil:
    if n == 64:
        return <uint64_t>0xFFFFFFFFFFFFFFFF
    return ((<uint64_t>1) << n) - 1


cdef inline uint64_t _grow(uint64_t mask, uint64_t seed) nogil:
    cdef uint64_t comp = seed, frontier = seed, nxt, m
    while frontier:
        nxt = 0
        m = frontier
        while m:
            nxt |= g_rows[ctz(m)]
            m &= m - 1
        frontier = nxt & mask & ~comp
        comp |= frontier
    return comp


cdef void _memo_reset() nogil:
    global generation, pool_used, memo_count
    generation += 1
    if generation == 0:
        memset(memo_stamp, 0, sizeof(memo_stamp))
        generation = 1
    pool_used = 0
    memo_count = 0


cdef inline uint32_t _slot(uint64_t key) nogil:
    key ^= key >> 33
    key *= <uint64_t>0xff51afd7ed558ccd
    key ^= key >> 33
    return <uint32_t>(key & (MEMO_CAP - 1))


cdef int _memo_get(uint64_t key, uint64_t *out) nogil:
    cdef uint32_t i = _slot(key)
    while memo_stamp[i] == generation:
        if memo_keys[i] == key:
            memcpy(out, pool + memo_off[i], memo_len[i] * sizeof(uint64_t))
            return memo_len[i]
        i = (i + 1) & (MEMO_CAP - 1)
    return 0


cdef void _memo_put(uint64_t key, uint64_t *val, int length) nogil:
    global pool_used, memo_count
    cdef uint32_t i
    if memo_count * 2 >= MEMO_CAP or pool_used + length > POOL_CAP:
        _memo_reset()
    i = _slot(key)
    while memo_stamp[i] == generation:
        if memo_keys[i] == key:
            return
        i = (i + 1) & (MEMO_CAP - 1)
    memo_stamp[i] = generation
    memo_keys[i] = key
    memo_off[i] = pool_used
    memo_len[i] = <unsigned char>length
    memcpy(pool + pool_used, val, length * sizeof(uint64_t))
    pool_used += length
    memo_count += 1


cdef int _count(uint64_t mask, uint64_t *out) nogil:
    """Write s_0..s_alpha of G[mask] into ``out``; return alpha + 1."""
    cdef uint64_t tmp[POLY]
    cdef uint64_t prod[POLY]
    cdef uint64_t comp, rest, m, bv_bit
    cdef int length, l2, i, j, size, d, best, bv, v
    cdef bint clique
    if mask == 0:
        out[0] = 1
        return 1
    length = _memo_get(mask, out)
    if length:
        return length
    comp = _grow(mask, mask & (~mask + 1))
    if comp != mask:
        length = _count(comp, out)
        rest = mask & ~comp
        while rest:
            comp = _grow(rest, rest & (~rest + 1))
            l2 = _count(comp, tmp)
            memset(prod, 0, (length + l2 - 1) * sizeof(uint64_t))
            for i in range(length):
                if out[i]:
                    for j in range(l2):
                        prod[i + j] += out[i] * tmp[j]
            length = length + l2 - 1
            memcpy(out, prod, length * sizeof(uint64_t))
            rest &= ~comp
    else:
        size = popcount(mask)
        best = -1
        bv = 0
        clique = True
        m = mask
        while m:
            v = ctz(m)
            d = popcount(g_rows[v] & mask)
            if d != size - 1:
                clique = False
            if d > best:
                best = d
                bv = v
            m &= m - 1
        if best == 0:
            # single vertex (connected and edgeless)
            out[0] = 1
            out[1] = 1
            length = 2
        elif clique:
            out[0] = 1
            out[1] = size
            length = 2
        else:
            bv_bit = (<uint64_t>1) << bv
            length = _count(mask & ~bv_bit, out)
            l2 = _count(mask & ~(g_rows[bv] | bv_bit), tmp)
            for i in range(length, l2 + 1):
                out[i] = 0
            if l2 + 1 > length:
                length = l2 + 1
            for i in range(l2):
                out[i + 1] += tmp[i]
    _memo_put(mask, out, length)
    return length


def independence_counts(rows):
    global pool
    cdef uint64_t out[POLY]
    cdef int n = _load_rows(rows)
    cdef int length, i
    if pool == NULL:
        pool = <uint64_t *>malloc(POOL_CAP * sizeof(uint64_t))
        if pool == NULL:
            raise MemoryError()
    _memo_reset()
    length = _count(_full(n), out)
    _memo_reset()
    return [out[i] for i in range(length)]


# --- well-coveredness -------------------------------------------------

cdef int wc_size


cdef bint _wc_walk(int size, uint64_t p, uint64_t x) nogil:
    global wc_size
    cdef uint64_t m, br, pivot_branch = 0, low, keep
    cdef int c, best = 99, u, v
    if p == 0:
        if x:
            return True
        if wc_size < 0:
            wc_size = size
            return True
        return wc_size == size
    m = p | x
    while m:
        u = ctz(m)
        br = p & (g_rows[u] | ((<uint64_t>1) << u))
        c = popcount(br)
        if c < best:
            best = c
            pivot_branch = br
            if c <= 1:
                break
        m &= m - 1
    while pivot_branch:
        low = pivot_branch & (~pivot_branch + 1)
        v = ctz(pivot_branch)
        keep = ~(g_rows[v] | low)
        if not _wc_walk(size + 1, p & keep, x & keep):
            return False
        p &= ~low
        x |= low
        pivot_branch &= pivot_branch - 1
    return True


cdef bint _wc(uint64_t mask) nogil:
    global wc_size
    wc_size = -1
    return _wc_walk(0, mask, 0)


def is_well_covered(rows, mask):
    _load_rows(rows)
    return bool(_wc(<uint64_t>mask))


def is_one_well_covered(rows):
    cdef int n = _load_rows(rows)
    cdef int v
    cdef uint64_t full = _full(n)
    if n < 2:
        return False
    if not _wc(full):
        return False
    for v in range(n):
        if not _wc(full & ~((<uint64_t>1) << v)):
            return False
    return True


# --- neighbourhood profile -------------------------------------------

cdef int prof[MAXN + 2]
cdef int prof_len


cdef void _prof_walk(int size, uint64_t nb, uint64_t avail) nogil:
    global prof_len
    cdef uint64_t m = avail, low, nb2
    cdef int v, c, s2
    while m:
        low = m & (~m + 1)
        v = ctz(m)
        nb2 = nb | g_rows[v]
        c = popcount(nb2)
        s2 = size + 1
        if s2 == prof_len:
            prof[s2] = c
            prof_len += 1
        elif c < prof[s2]:
            prof[s2] = c
        m &= m - 1
        _prof_walk(s2, nb2, m & ~g_rows[v])


def neighborhood_profile(rows):
    global prof_len
    cdef int n = _load_rows(rows)
    cdef int i
    prof[0] = 0
    prof_len = 1
    _prof_walk(0, 0, _full(n))
    return [prof[i] for i in range(prof_len)]


# --- quantifier checks over independent sets -------------------------

cdef class _SetTable:
    cdef uint64_t *indep
    cdef int n_indep
    cdef int cap
    cdef uint64_t *maxi
    cdef int n_maxi
    cdef int alpha

    def __cinit__(self):
        self.indep = NULL
        self.maxi = NULL

    def __dealloc__(self):
        free(self.indep)
        free(self.maxi)

    cdef int build(self, int n) except -1:
        cdef int i, c
        self.cap = 64
        self.indep = <uint64_t *>malloc(self.cap * sizeof(uint64_t))
        if self.indep == NULL:
            raise MemoryError()
        self.n_indep = 0
        self._push(0)
        self._walk(0, _full(n))
        self.alpha = 0
        for i in range(self.n_indep):
            c = popcount(self.indep[i])
            if c > self.alpha:
                self.alpha = c
        self.maxi = <uint64_t *>malloc((self.n_indep + 1) * sizeof(uint64_t))
        if self.maxi == NULL:
            raise MemoryError()
        self.n_maxi = 0
        for i in range(self.n_indep):
            if popcount(self.indep[i]) == self.alpha:
                self.maxi[self.n_maxi] = self.indep[i]
                self.n_maxi += 1
        return 0

    cdef int _push(self, uint64_t s) except -1:
        cdef uint64_t *grown
        if self.n_indep == self.cap:
            self.cap *= 2
            grown = <uint64_t *>malloc(self.cap * sizeof(uint64_t))
            if grown == NULL:
                raise MemoryError()
            memcpy(grown, self.indep, self.n_indep * sizeof(uint64_t))
            free(self.indep)
            self.indep = grown
        self.indep[self.n_indep] = s
        self.n_indep += 1
        return 0

    cdef int _walk(self, uint64_t s, uint64_t avail) except -1:
        cdef uint64_t m = avail, low, t
        cdef int v
        while m:
            low = m & (~m + 1)
            v = ctz(m)
            t = s | low
            self._push(t)
            m &= m - 1
            self._walk(t, m & ~g_rows[v])
        return 0


def in_w2(rows):
    cdef int n = _load_rows(rows)
    cdef _SetTable t = _SetTable()
    cdef int i, j, p, q
    cdef uint64_t a, b, m1, m2
    cdef bint ok, any_sup
    t.build(n)
    for i in range(t.n_indep):
        a = t.indep[i]
        any_sup = False
        for p in range(t.n_maxi):
            if t.maxi[p] & a == a:
                any_sup = True
                break
        if not any_sup:
            return False
        for j in range(i, t.n_indep):
            b = t.indep[j]
            if a & b:
                continue
            ok = False
            for q in range(t.n_maxi):
                m2 = t.maxi[q]
                if m2 & b != b:
                    continue
                for p in range(t.n_maxi):
                    m1 = t.maxi[p]
                    if m1 & a == a and not (m1 & m2):
                        ok = True
                        break
                if ok:
                    break
            if not ok:
                return False
    return True


def extension_property(rows):
    cdef int n = _load_rows(rows)
    cdef _SetTable t = _SetTable()
    cdef int i, p, q
    cdef uint64_t a, m1, m2
    cdef bint ok
    t.build(n)
    for i in range(t.n_indep):
        a = t.indep[i]
        if popcount(a) == t.alpha:
            continue
        ok = False
        for p in range(t.n_maxi):
            m1 = t.maxi[p]
            if m1 & a != a:
                continue
            for q in range(p + 1, t.n_maxi):
                m2 = t.maxi[q]
                if m2 & a == a and (m1 & m2) == a:
                    ok = True
                    break
            if ok:
                break
        if not ok:
            return False
    return True
