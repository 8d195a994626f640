"""
Squeezing a Kummer point into 32 bytes
======================================

Four 127-bit coordinates become two field elements and two bits.
"""

from qdsa import fastkummer as fk
from qdsa import kummercodec as kc

P = fk.ladder(0xDEADBEEF, fk.BASE)
l1, l2, tau, sigma = kc.compress_parts(P)
print("l1, l2         :", hex(l1), hex(l2))
print("tau, sigma     :", tau, sigma)

blob = kc.compress(P)
print("compressed     :", blob.hex(), f"({len(blob)} bytes)")
print("round trip     :", fk.same(kc.decompress(blob), P))

# Not every 32-byte string is a point: here the square root does not exist.
bad = kc.pack(0, 4, 1, 0)
print("bogus decodes  :", kc.decompress(bad))
