import random

import pytest

from qdsa import montkummer as mk
from qdsa import testoracle as orc
from qdsa.fieldarith import GF25519, P25519
from qdsa.scalarring import N25519

p = P25519
F = GF25519


def x_affine(P):
    return F.mul(P.X, F.inv(P.Z))


def test_rfc7748_vector():
    k = bytearray.fromhex(
        "a546e36bf0527c9d3b16154b82465edd62144c0ac1fc5a18506a2244ba449ac4")
    u = bytes.fromhex(
        "e6db6867583030db3594c1a424b15f7c726624ec26b3353b10a903a6d0ab1c4c")
    k[0] &= 248
    k[31] = (k[31] & 127) | 64
    out = mk.compress(mk.ladder(int.from_bytes(k, "little"), mk.decompress(u)))
    assert out.hex() == (
        "c3da55379de9c6908e94ea4df28d084f32eccf03491c71f754b4075577a28552")


def test_base_point_order_is_n():
    # (9:1) has order N, not 8N: [N](9:1) is already the identity (1:0).
    assert mk.ladder(N25519, mk.BASE).Z == 0
    assert orc.ec_scalarmul(N25519, orc.BASE) is orc.INF


def test_ladder_small():
    assert mk.same(mk.ladder(1, mk.BASE), mk.BASE)
    assert mk.ladder(0, mk.BASE).Z == 0
    assert x_affine(mk.ladder(2, mk.BASE)) == orc.double_x(9)


def test_ladder_matches_oracle():
    r = random.Random(11)
    for _ in range(25):
        m = r.getrandbits(256)
        assert x_affine(mk.ladder(m, mk.BASE)) == orc.ec_scalarmul(m, orc.BASE)[0]


def test_ladder_rejects():
    with pytest.raises(ValueError):
        mk.ladder(1 << 256, mk.BASE)
    with pytest.raises(ValueError):
        mk.ladder(5, mk.MontPoint(0, 1))


def test_ladder_pair_invariant():
    m = 0b1011011
    trace = []
    mk.ladder(m, mk.BASE, trace=trace)
    assert len(trace) == 256
    for i, (a, b) in enumerate(trace):
        k = m >> (255 - i)
        for j, T in ((k, a), (k + 1, b)):
            want = orc.x_of(orc.ec_scalarmul(j, orc.BASE))
            assert mk.same(T, want)


def test_xdbladd():
    P2 = orc.ec_scalarmul(2, orc.BASE)
    D, S = mk.xdbladd(mk.BASE, orc.x_of(P2), 9)
    assert x_affine(D) == P2[0]
    assert x_affine(S) == orc.ec_scalarmul(3, orc.BASE)[0]
    # Scaling the inputs keeps the outputs projectively fixed.
    D2, S2 = mk.xdbladd(mk.MontPoint(27, 3), mk.MontPoint(5 * P2[0] % p, 5), 9)
    assert mk.same(D, D2) and mk.same(S, S2)


def test_bvalues():
    P = mk.MontPoint(1234, 5678)
    assert mk.bvalues(P, mk.INFINITY) == (
        F.sqr(P.X), F.mul(P.X, P.Z), F.sqr(P.Z))
    Q = mk.MontPoint(99, 7)
    assert mk.bvalues(P, Q) == mk.bvalues(Q, P)


def test_bvalues_roots_are_sum_and_difference():
    r = random.Random(12)
    for _ in range(10):
        a, b = r.randrange(1, 1000), r.randrange(1, 1000)
        if a == b:
            continue
        Pa, Pb = orc.ec_scalarmul(a, orc.BASE), orc.ec_scalarmul(b, orc.BASE)
        bxx, bxz, bzz = mk.bvalues(orc.x_of(Pa), orc.x_of(Pb))
        xs = orc.ec_add(Pa, Pb)[0]
        xd = orc.ec_add(Pa, orc.ec_neg(Pb))[0]
        # B_ZZ x^2 - 2 B_XZ x + B_XX = B_ZZ (x - xs)(x - xd)
        assert bzz * (xs + xd) % p == 2 * bxz % p
        assert bzz * xs * xd % p == bxx


def test_check_identity_case():
    assert mk.check(mk.BASE, mk.INFINITY, mk.BASE)


def test_check_triples_and_homogeneity():
    r = random.Random(13)
    for _ in range(10):
        a, b = r.randrange(N25519), r.randrange(N25519)
        Pa, Pb, Ps, Pd = orc.triple_gen(a, b, "c25519")
        assert mk.check(Pa, Pb, mk.normalize(Ps))
        assert mk.check(Pa, Pb, mk.normalize(Pd))
        assert mk.check(Pb, Pa, Ps)
        lam, nu = r.randrange(1, p), r.randrange(1, p)
        assert mk.check(mk.MontPoint(Pa.X * lam % p, Pa.Z * lam % p),
                        mk.MontPoint(Pb.X * nu % p, Pb.Z * nu % p), Ps)
        c = r.randrange(N25519)
        if c not in ((a + b) % N25519, (a - b) % N25519,
                     (b - a) % N25519, (-a - b) % N25519):
            assert not mk.check(Pa, Pb, mk.ladder(c, mk.BASE))


def test_codec():
    assert mk.compress(mk.BASE) == F.encode(9)
    assert mk.compress(mk.MontPoint(18, 2)) == F.encode(9)
    assert mk.compress(mk.INFINITY) == bytes(32)
    assert mk.decompress(F.encode(9)) == mk.BASE
    P = mk.MontPoint(12345, 678)
    assert mk.same(mk.decompress(mk.compress(P)), P)
    b = bytearray(F.encode(9))
    b[31] |= 0x80
    assert mk.decompress(bytes(b)) == mk.BASE
