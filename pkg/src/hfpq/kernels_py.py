"""Pure-Python scan kernels: codeword enumeration and candidate checking.

Words are 4n-bit ints.  The generator pair (a, b) realizes a group of
order 8n under the propelinear product with the canonical permutations
(per-half rotation for a, full reversal for b); the table lists the word
of a^i at index i and of a^i b at index 4n+i.

The compiled twin in _fastscan.pyx must match these functions bit for bit.
"""

from __future__ import annotations

from .bitops import div_x_plus_1, reverse_bits


def codeword_table(a: int, b: int, n: int) -> tuple[int, ...]:
    """All 8n words generated by (a, b); no validity checks."""
    half = 2 * n
    length = 4 * n
    mask = (1 << half) - 1
    shift = half - 1
    words = [0] * (2 * length)
    v = 0
    for i in range(1, length):
        lo = v & mask
        hi = v >> half
        v = a ^ (
            (((lo << 1) | (lo >> shift)) & mask)
            | ((((hi << 1) | (hi >> shift)) & mask) << half)
        )
        words[i] = v
    rb = b
    for i in range(length):
        words[length + i] = words[i] ^ rb
        lo = rb & mask
        hi = rb >> half
        rb = (((lo << 1) | (lo >> shift)) & mask) | (
            (((hi << 1) | (hi >> shift)) & mask) << half
        )
    return tuple(words)


def check_candidate(a: int, b: int, n: int) -> tuple[int, ...] | None:
    """codeword_table(a, b, n) if (a, b) yields a type-Q HFP code, else None.

    Accepts iff a has order 4n with a^{2n} = u, b^2 = u, b a = a^{-1} b as
    words, all 8n words are distinct, and every word outside {e, u} has
    weight 2n (which makes the code Hadamard).
    """
    half = 2 * n
    length = 4 * n
    mask = (1 << half) - 1
    shift = half - 1
    u = (1 << length) - 1
    if a.bit_count() != half or b.bit_count() != half:
        return None
    words = [0] * (2 * length)
    v = 0
    for i in range(1, length):
        lo = v & mask
        hi = v >> half
        v = a ^ (
            (((lo << 1) | (lo >> shift)) & mask)
            | ((((hi << 1) | (hi >> shift)) & mask) << half)
        )
        if i == half:
            if v != u:
                return None
        elif v.bit_count() != half:
            return None
        words[i] = v
    if b ^ reverse_bits(b, length) != u:
        return None
    # b * a must equal a^{4n-1} * b; pi_a^{4n-1} rotates each half right by 1.
    lo = b & mask
    hi = b >> half
    b_rot_back = ((lo >> 1) | ((lo & 1) << shift)) | (
        (((hi >> 1) | ((hi & 1) << shift))) << half
    )
    if b ^ reverse_bits(a, length) != words[length - 1] ^ b_rot_back:
        return None
    rb = b
    for i in range(length):
        w = words[i] ^ rb
        if w.bit_count() != half:
            return None
        words[length + i] = w
        lo = rb & mask
        hi = rb >> half
        rb = (((lo << 1) | (lo >> shift)) & mask) | (
            (((hi << 1) | (hi >> shift)) & mask) << half
        )
    if len(set(words)) != 2 * length:
        return None
    return tuple(words)


def derive_b_bits(a: int, n: int) -> int | None:
    """The b word determined by a, first bit 0, or None when none exists.

    Solves (x+1) b_i = a_i + x * rev(a_{i'}) per half and fixes the pairing
    of half-quotients by b^2 = u; the other valid b is the complement.
    """
    half = 2 * n
    mask = (1 << half) - 1
    a1 = a & mask
    a2 = a >> half
    r2 = reverse_bits(a2, half)
    d1 = a1 ^ (((r2 << 1) | (r2 >> (half - 1))) & mask)
    if d1.bit_count() & 1:
        return None
    r1 = reverse_bits(a1, half)
    d2 = a2 ^ (((r1 << 1) | (r1 >> (half - 1))) & mask)
    q1 = div_x_plus_1(d1, half)
    q2 = div_x_plus_1(d2, half)
    t = q1 ^ reverse_bits(q2, half)
    if t == 0:
        q2 ^= mask
    elif t != mask:
        return None
    return q1 | (q2 << half)


def scan_general(n: int, start: int, stop: int) -> list[tuple[int, int]]:
    """(a, b) pairs with a in [start, stop) passing check_candidate."""
    half = 2 * n
    hits = []
    for a in range(start, stop):
        if a.bit_count() != half:
            continue
        b = derive_b_bits(a, n)
        if b is None:
            continue
        if check_candidate(a, b, n) is not None:
            hits.append((a, b))
    return hits
