"""
The x-line of Curve25519
========================

Points are pairs (X:Z); P and -P look the same. We ladder the base point
(9:1), compare against a full affine group law, and watch the order of the
base point fall out.
"""

from qdsa import montkummer as mk
from qdsa import testoracle as orc
from qdsa.fieldarith import GF25519 as F
from qdsa.scalarring import N25519

# A ladder step costs 5M + 4S + 1C; 256 of them give +-[m]P.
m = 0xC0FFEE
T = mk.ladder(m, mk.BASE)
x = F.mul(T.X, F.inv(T.Z))
print("x([m]P)        =", hex(x))

# The slow affine oracle carries y around as well. Only x should agree.
Q = orc.ec_scalarmul(m, orc.BASE)
print("oracle agrees  :", Q[0] == x)

# (9:1) has prime order N: one more multiplication by N lands on (1:0).
print("[N](9:1)       =", mk.ladder(N25519, mk.BASE))

# Verification never adds points. It checks a quadratic in x whose two
# roots are x(P+Q) and x(P-Q).
Pa, Pb, Ps, Pd = orc.triple_gen(1234, 567, "c25519")
print("check(a, b, a+b):", mk.check(Pa, Pb, Ps))
print("check(a, b, a-b):", mk.check(Pa, Pb, Pd))
print("check(a, b, 42) :", mk.check(Pa, Pb, mk.ladder(42, mk.BASE)))
