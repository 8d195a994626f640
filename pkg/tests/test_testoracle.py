import random

import pytest

from qdsa import testoracle as orc
from qdsa.fieldarith import P25519

p = P25519


def test_base_on_curve():
    assert orc.on_curve(orc.BASE)


def test_group_law_edges():
    P = orc.BASE
    assert orc.ec_add(P, orc.ec_neg(P)) is orc.INF
    assert orc.ec_add(P, orc.INF) == P
    assert orc.ec_add(orc.INF, P) == P
    assert orc.ec_scalarmul(0, P) is orc.INF
    assert orc.ec_scalarmul(-3, P) == orc.ec_neg(orc.ec_scalarmul(3, P))


def test_group_law_associative():
    r = random.Random(25)
    for _ in range(5):
        a, b, c = (orc.ec_scalarmul(r.randrange(1, 10**6), orc.BASE)
                   for _ in range(3))
        left = orc.ec_add(orc.ec_add(a, b), c)
        assert left == orc.ec_add(a, orc.ec_add(b, c))
        assert orc.on_curve(left)


def test_doubling_formula():
    assert orc.ec_scalarmul(2, orc.BASE)[0] == orc.double_x(9)


def test_twist_point_has_no_lift():
    # x = 2 is on the quadratic twist of Curve25519.
    assert orc.lift_x(2) is None


def test_sqrt25519():
    r = random.Random(26)
    for _ in range(50):
        x = r.randrange(p)
        y = orc.sqrt25519(x * x)
        assert y * y % p == x * x % p


def test_triple_gen_shape():
    t = orc.triple_gen(3, 5, "c25519")
    assert len(t) == 4
    with pytest.raises(ValueError):
        orc.triple_gen(1, 2, "p256")
