"""Helpers for arbitrary-width integer bitsets."""


def iter_bits(mask):
    """Yield the positions of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices):
    """Pack an iterable of bit positions into a single integer bitset."""
    m = 0
    for i in indices:
        m |= 1 << i
    return m
