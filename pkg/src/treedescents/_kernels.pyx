# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops: exhaustive labeling sweeps and Monte Carlo sampling.

Mirrors treedescents._fallback exactly, including the xoshiro256** stream
and the rejection-sampled bounded draw, so both backends produce identical
histograms for identical arguments. Counts stay below 2**64 for every
permitted size (n! fits until n = 20, far above the brute-force cap).
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport free, malloc

ctypedef uint64_t u64

cdef u64 _GOLDEN = <u64>0x9E3779B97F4A7C15
cdef u64 _M64 = <u64>0xFFFFFFFFFFFFFFFF


cdef inline u64 _rotl(u64 x, int k) noexcept nogil:
    return (x << k) | (x >> (64 - k))


cdef inline u64 _splitmix_next(u64 *state) noexcept nogil:
    state[0] += _GOLDEN
    cdef u64 z = state[0]
    z = (z ^ (z >> 30)) * <u64>0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * <u64>0x94D049BB133111EB
    return z ^ (z >> 31)


cdef struct XoState:
    u64 s0
    u64 s1
    u64 s2
    u64 s3


cdef inline void _seed(XoState *st, u64 seed) noexcept nogil:
    cdef u64 sm = seed
    st.s0 = _splitmix_next(&sm)
    st.s1 = _splitmix_next(&sm)
    st.s2 = _splitmix_next(&sm)
    st.s3 = _splitmix_next(&sm)
    if (st.s0 | st.s1 | st.s2 | st.s3) == 0:
        st.s0 = _GOLDEN


cdef inline u64 _next(XoState *st) noexcept nogil:
    cdef u64 result = _rotl(st.s1 * 5, 7) * 9
    cdef u64 t = st.s1 << 17
    st.s2 ^= st.s0
    st.s3 ^= st.s1
    st.s1 ^= st.s2
    st.s0 ^= st.s3
    st.s2 ^= t
    st.s3 = _rotl(st.s3, 45)
    return result


cdef inline u64 _bounded(XoState *st, u64 n) noexcept nogil:
    cdef u64 rem = (_M64 - n + 1) % n  # == 2**64 mod n
    cdef u64 x
    while True:
        x = _next(st)
        if x <= _M64 - rem:
            return x % n


def rng_stream(seed, int count):
    """First ``count`` raw 64-bit outputs for the given seed (backend test hook)."""
    cdef XoState st
    _seed(&st, <u64>(seed & 0xFFFFFFFFFFFFFFFF))
    out = []
    cdef int i
    for i in range(count):
        out.append(_next(&st))
    return out


def brute_force_histogram(parents):
    """Histogram of descent counts over all n! labelings of a forest.

    ``parents`` holds 0-based parent indices with -1 for roots. Iterates
    permutations in place with Heap's algorithm and recounts descents per
    permutation.
    """
    cdef int n = len(parents)
    if n == 0:
        return [1]
    cdef int m = 0
    cdef int i, v
    for v in range(n):
        if parents[v] >= 0:
            m += 1

    cdef int *child = <int *>malloc((m + 1) * sizeof(int))
    cdef int *par = <int *>malloc((m + 1) * sizeof(int))
    cdef int *perm = <int *>malloc(n * sizeof(int))
    cdef int *ctr = <int *>malloc(n * sizeof(int))
    cdef u64 *hist = <u64 *>malloc((m + 1) * sizeof(u64))
    if child == NULL or par == NULL or perm == NULL or ctr == NULL or hist == NULL:
        free(child)
        free(par)
        free(perm)
        free(ctr)
        free(hist)
        raise MemoryError()

    cdef int k = 0
    for v in range(n):
        if parents[v] >= 0:
            child[k] = v
            par[k] = parents[v]
            k += 1
    for i in range(n):
        perm[i] = i
        ctr[i] = 0
    for i in range(m + 1):
        hist[i] = 0

    cdef int d, tmp, j
    with nogil:
        d = 0
        for j in range(m):
            if perm[child[j]] > perm[par[j]]:
                d += 1
        hist[d] += 1
        i = 0
        while i < n:
            if ctr[i] < i:
                if i % 2 == 0:
                    tmp = perm[0]
                    perm[0] = perm[i]
                    perm[i] = tmp
                else:
                    tmp = perm[ctr[i]]
                    perm[ctr[i]] = perm[i]
                    perm[i] = tmp
                d = 0
                for j in range(m):
                    if perm[child[j]] > perm[par[j]]:
                        d += 1
                hist[d] += 1
                ctr[i] += 1
                i = 0
            else:
                ctr[i] = 0
                i += 1

    out = [hist[i] for i in range(m + 1)]
    free(child)
    free(par)
    free(perm)
    free(ctr)
    free(hist)
    return out


def sample_descent_histogram(parents, trials, seed):
    """Histogram of descent counts over ``trials`` seeded random labelings."""
    cdef int n = len(parents)
    cdef u64 t_total = <u64>trials
    if n == 0:
        return [int(t_total)]
    cdef int m = 0
    cdef int v
    for v in range(n):
        if parents[v] >= 0:
            m += 1

    cdef int *child = <int *>malloc((m + 1) * sizeof(int))
    cdef int *par = <int *>malloc((m + 1) * sizeof(int))
    cdef int *perm = <int *>malloc(n * sizeof(int))
    cdef u64 *hist = <u64 *>malloc((m + 1) * sizeof(u64))
    if child == NULL or par == NULL or perm == NULL or hist == NULL:
        free(child)
        free(par)
        free(perm)
        free(hist)
        raise MemoryError()

    cdef int k = 0
    for v in range(n):
        if parents[v] >= 0:
            child[k] = v
            par[k] = parents[v]
            k += 1
    cdef int i
    for i in range(m + 1):
        hist[i] = 0

    cdef XoState st
    _seed(&st, <u64>(seed & 0xFFFFFFFFFFFFFFFF))

    cdef u64 t
    cdef int d, j, tmp
    cdef u64 pos
    with nogil:
        for t in range(t_total):
            for i in range(n):
                perm[i] = i
            for i in range(n - 1, 0, -1):
                pos = _bounded(&st, <u64>(i + 1))
                tmp = perm[i]
                perm[i] = perm[<int>pos]
                perm[<int>pos] = tmp
            d = 0
            for j in range(m):
                if perm[child[j]] > perm[par[j]]:
                    d += 1
            hist[d] += 1

    out = [hist[i] for i in range(m + 1)]
    free(child)
    free(par)
    free(perm)
    free(hist)
    return out
