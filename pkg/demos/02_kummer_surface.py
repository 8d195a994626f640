"""
A fast Kummer surface
=====================

Genus 2 over GF(2^127 - 1). A point is four coordinates on a quartic
surface; the identity sits at the squared theta constants mu.
"""

from qdsa import fastkummer as fk
from qdsa.params import GS
from qdsa.scalarring import NGS

print("mu (identity)  :", [x if x < 2**126 else x - 2**127 + 1 for x in GS.mu])
print("base point     :", [hex(x) for x in fk.BASE])
print("on the surface :", fk.surface_eval(fk.BASE) == 0)

# The ladder uses one inversion up front (wrap) and then only
# 7M + 12S + 12C per bit.
P = fk.ladder(2**200 + 12345, fk.BASE)
print("still on it    :", fk.surface_eval(P) == 0)
print("[N]base = 0    :", fk.same(fk.ladder(NGS, fk.BASE), fk.ZERO))

# Verification maps the three points through the Hadamard transform and
# tests six biquadratic relations.
a, b = 31337, 4242
Ta, Tb = fk.ladder(a, fk.BASE), fk.ladder(b, fk.BASE)
for c in (a + b, a - b, a * b):
    print(f"check(R = [{c}]P):", fk.check(Ta, Tb, fk.ladder(c % NGS, fk.BASE)))
