import random

import pytest
from hypothesis import given, strategies as st

from qdsa import fastkummer as fk
from qdsa import kummercodec as kc
from qdsa.fieldarith import GF127, P127
from qdsa.scalarring import NGS

p = P127


def test_k_poly_spot_values():
    for name in ("K2", "K3", "K4"):
        assert kc.k_poly(name, 0, 0, 0) == 0
    assert kc.k_poly("K2", 0, 0, 1) == 11275**2 % p
    assert kc.k_poly("K3", 1, 0, 1) == 12259 * (4625 - 9625) % p


def test_tetragonal_equation_holds_on_surface():
    r = random.Random(19)
    for _ in range(20):
        P = fk.ladder(r.randrange(NGS), fk.BASE)
        L1, L2, L3, L4 = kc.to_tetragonal(P)
        s = GF127.inv(L3)
        l1, l2, l4 = L1 * s % p, L2 * s % p, L4 * s % p
        k2, k3, k4 = kc.k2(l1, l2, 1), kc.k3(l1, l2, 1), kc.k4(l1, l2, 1)
        assert (k2 * l4 * l4 - 2 * k3 * l4 + k4) % p == 0


def test_tetragonal_inverse():
    P = fk.ladder(99, fk.BASE)
    assert fk.same(kc.from_tetragonal(kc.to_tetragonal(P)), P)
    assert fk.same(kc.to_tetragonal(fk.ZERO), (0, 0, 0, 1))


def test_zero_point():
    assert kc.compress_parts(fk.ZERO) == (0, 0, 0, 0)
    assert kc.compress(fk.ZERO) == bytes(32)
    assert fk.same(kc.decompress(bytes(32)), fk.ZERO)


def test_roundtrip_and_invariance():
    r = random.Random(20)
    for _ in range(50):
        P = fk.ladder(r.randrange(NGS), fk.BASE)
        c = kc.compress(P)
        assert len(c) == kc.COMPRESSED_BYTES
        lam = r.randrange(1, p)
        assert kc.compress(tuple(x * lam % p for x in P)) == c
        Q = kc.decompress(c)
        assert fk.same(Q, P)
        assert fk.surface_eval(Q) == 0


def test_nonsquare_delta_rejected():
    # (l1, l2, tau) = (0, 4, 1) is the first small input with k2 != 0 and
    # k3^2 - k2 k4 a non-residue (found by an Euler-criterion scan).
    l1, l2 = 0, 4
    c2, c3, c4 = kc.k2(l1, l2, 1), kc.k3(l1, l2, 1), kc.k4(l1, l2, 1)
    assert c2 and not GF127.is_square((c3 * c3 - c2 * c4) % p)
    for sigma in (0, 1):
        assert kc.decompress(kc.pack(l1, l2, 1, sigma)) is None


def test_noncanonical_payload_rejected():
    ones = b"\xff" * 15 + b"\x7f"
    assert kc.decompress(ones + bytes(16)) is None
    assert kc.decompress(bytes(16) + ones) is None
    assert kc.unpack(ones + bytes(16)) is None


def test_degenerate_k_cases():
    # k2 = k3 = 0 only accepts the canonical encoding of the zero point.
    assert kc.decompress_parts(0, 0, 0, 1) is None
    # tau = 0 data that compress never emits
    assert kc.decompress_parts(5, 7, 0, 0) is None


def test_unpack_length():
    with pytest.raises(ValueError):
        kc.unpack(bytes(31))


@given(st.binary(min_size=32, max_size=32))
def test_decompress_total(data):
    P = kc.decompress(data)
    if P is not None:
        assert fk.surface_eval(P) == 0
        # Whatever decodes re-encodes to the same bytes.
        assert kc.compress(P) == data
