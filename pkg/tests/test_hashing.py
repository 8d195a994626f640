import hashlib
import random

import pytest

from qdsa import testoracle
from qdsa.hashing import (derive_keymaterial, hash_plus, hash_to_scalar,
                          shake512)
from qdsa.scalarring import RING25519, RINGGS

# First 16 bytes of SHAKE128("") from FIPS 202 example values.
SHAKE128_EMPTY_PREFIX = bytes.fromhex("7f9c2ba4e88f827d616045507605853e")


def test_empty_message_against_independent_keccak():
    out = shake512(b"")
    assert len(out) == 64
    assert out[:16] == SHAKE128_EMPTY_PREFIX
    assert out == testoracle.shake128(b"", 64)


@pytest.mark.parametrize("n", [0, 1, 167, 168, 169, 500])
def test_block_boundaries(n):
    msg = bytes(range(256)) * 2
    assert shake512(msg[:n]) == testoracle.shake128(msg[:n], 64)


def test_distinct_and_deterministic():
    r = random.Random(7)
    for _ in range(50):
        m = r.randbytes(r.randrange(100))
        assert shake512(m) == shake512(m)
        assert shake512(m) != shake512(m + b"\x00")


@pytest.mark.parametrize("R", [RING25519, RINGGS])
def test_hash_to_scalar(R):
    assert hash_to_scalar(b"", R) == R.reduce512(hashlib.shake_128(b"").digest(64))
    r = random.Random(8)
    for _ in range(1000):
        assert hash_to_scalar(r.randbytes(16), R) < R.n


@pytest.mark.parametrize("R", [RING25519, RINGGS])
def test_hash_plus(R):
    r = random.Random(9)
    seen = set()
    for _ in range(1000):
        m = r.randbytes(16)
        h0, h = hash_to_scalar(m, R), hash_plus(m, R)
        assert R.lsb(h) == 0
        assert h == (h0 if h0 % 2 == 0 else R.n - h0)
        seen.add(h0 & 1)
    assert seen == {0, 1}


def test_derive_keymaterial():
    r = random.Random(10)
    firsts = set()
    for _ in range(1000):
        seed = r.randbytes(32)
        d1, d2 = derive_keymaterial(seed)
        assert d1 + d2 == shake512(seed)
        firsts.add(d1)
    assert len(firsts) == 1000
    with pytest.raises(ValueError):
        derive_keymaterial(bytes(31))
