"""SHAKE128 with 512-bit output and the maps built on it.

Signing and key derivation hash plain byte concatenations; there are no
domain-separation labels.
"""

from __future__ import annotations

import hashlib

from .scalarring import ScalarRing

HASH_BYTES = 64


def shake512(msg: bytes) -> bytes:
    return hashlib.shake_128(msg).digest(HASH_BYTES)


def hash_to_scalar(msg: bytes, ring: ScalarRing) -> int:
    return ring.reduce512(shake512(msg))


def hash_plus(msg: bytes, ring: ScalarRing) -> int:
    """Hash into the scalars with least significant bit 0.

    An odd hash value ``h`` is replaced by ``n - h``, which is even because
    ``n`` is odd.
    """
    h = hash_to_scalar(msg, ring)
    return ring.neg(h) if ring.lsb(h) else h


def derive_keymaterial(seed: bytes) -> tuple[bytes, bytes]:
    """Split ``shake512(seed)`` into the ladder scalar and the nonce key."""
    if len(seed) != 32:
        raise ValueError("seed must be 32 bytes")
    h = shake512(seed)
    return h[:32], h[32:]
