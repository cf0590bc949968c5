# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernels; semantics identical to kernels_py (words <= 64 bits)."""

from libc.stdint cimport uint64_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef inline uint64_t _rot1(uint64_t v, int half, uint64_t mask) nogil:
    cdef uint64_t lo = v & mask
    cdef uint64_t hi = v >> half
    lo = ((lo << 1) | (lo >> (half - 1))) & mask
    hi = ((hi << 1) | (hi >> (half - 1))) & mask
    return lo | (hi << half)


cdef inline uint64_t _reverse(uint64_t x, int width) nogil:
    cdef uint64_t out = 0
    cdef int i
    for i in range(width):
        out = (out << 1) | (x & 1)
        x >>= 1
    return out


cdef int _check(uint64_t a, uint64_t b, int n, uint64_t *words) nogil:
    cdef int half = 2 * n
    cdef int length = 4 * n
    cdef uint64_t mask = ((<uint64_t>1) << half) - 1
    # (1 << length) would be undefined for length == 64
    cdef uint64_t u = mask | (mask << half)
    cdef uint64_t v, rb, w, lo, hi
    cdef int i, j
    if __builtin_popcountll(a) != half or __builtin_popcountll(b) != half:
        return 0
    words[0] = 0
    v = 0
    for i in range(1, length):
        v = a ^ _rot1(v, half, mask)
        if i == half:
            if v != u:
                return 0
        elif __builtin_popcountll(v) != half:
            return 0
        words[i] = v
    if (b ^ _reverse(b, length)) != u:
        return 0
    lo = b & mask
    hi = b >> half
    w = ((lo >> 1) | ((lo & 1) << (half - 1))) | (
        ((hi >> 1) | ((hi & 1) << (half - 1))) << half)
    if (b ^ _reverse(a, length)) != (words[length - 1] ^ w):
        return 0
    rb = b
    for i in range(length):
        w = words[i] ^ rb
        if __builtin_popcountll(w) != half:
            return 0
        words[length + i] = w
        rb = _rot1(rb, half, mask)
    for i in range(2 * length):
        for j in range(i + 1, 2 * length):
            if words[i] == words[j]:
                return 0
    return 1


cdef int _derive_b(uint64_t a, int n, uint64_t *out) nogil:
    cdef int half = 2 * n
    cdef uint64_t mask = ((<uint64_t>1) << half) - 1
    cdef uint64_t a1 = a & mask
    cdef uint64_t a2 = a >> half
    cdef uint64_t r2 = _reverse(a2, half)
    cdef uint64_t d1 = a1 ^ (((r2 << 1) | (r2 >> (half - 1))) & mask)
    cdef uint64_t r1, d2, q1, q2, t
    cdef int i, acc
    if __builtin_popcountll(d1) & 1:
        return 0
    r1 = _reverse(a1, half)
    d2 = a2 ^ (((r1 << 1) | (r1 >> (half - 1))) & mask)
    q1 = 0
    acc = 0
    for i in range(1, half):
        acc ^= (d1 >> i) & 1
        q1 |= (<uint64_t>acc) << i
    q2 = 0
    acc = 0
    for i in range(1, half):
        acc ^= (d2 >> i) & 1
        q2 |= (<uint64_t>acc) << i
    t = q1 ^ _reverse(q2, half)
    if t == 0:
        q2 ^= mask
    elif t != mask:
        return 0
    out[0] = q1 | (q2 << half)
    return 1


def check_candidate(a, b, n):
    """Mirror of kernels_py.check_candidate for 4n <= 64."""
    cdef int nn = n
    if nn < 1 or nn > 16:
        raise ValueError("compiled kernel supports 1 <= n <= 16")
    cdef uint64_t words[128]
    if not _check(<uint64_t>a, <uint64_t>b, nn, words):
        return None
    return tuple(words[i] for i in range(8 * nn))


def derive_b_bits(a, n):
    """Mirror of kernels_py.derive_b_bits for 4n <= 64."""
    cdef int nn = n
    if nn < 1 or nn > 16:
        raise ValueError("compiled kernel supports 1 <= n <= 16")
    cdef uint64_t out = 0
    if not _derive_b(<uint64_t>a, nn, &out):
        return None
    return int(out)


def scan_general(n, start, stop):
    """Mirror of kernels_py.scan_general for 4n <= 64."""
    cdef int nn = n
    if nn < 1 or nn > 16:
        raise ValueError("compiled kernel supports 1 <= n <= 16")
    cdef int half = 2 * nn
    cdef uint64_t a = <uint64_t>start
    cdef uint64_t hi = <uint64_t>stop
    cdef uint64_t b = 0
    cdef uint64_t words[128]
    hits = []
    while a < hi:
        if __builtin_popcountll(a) == half:
            if _derive_b(a, nn, &b):
                if _check(a, b, nn, words):
                    hits.append((int(a), int(b)))
        a += 1
    return hits
