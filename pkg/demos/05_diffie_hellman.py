"""
Diffie-Hellman with signing keys
================================

A qDSA public key is also an x-only DH key. Convenient, though using one
key for both jobs has no joint security proof; prefer separate keys.
"""

import os

from qdsa import SCHEMES

for name, s in SCHEMES.items():
    alice = s.keypair(os.urandom(32))
    bob = s.keypair(os.urandom(32))
    ka = s.dh(alice.d1, bob.pk)
    kb = s.dh(bob.d1, alice.pk)
    print(f"[{name}] shared secrets match:", ka == kb, f"({len(ka)} bytes)")
    # Every x is accepted on the x-line (the twist is secure too); the
    # surface rejects byte strings that are not compressed points.
    print(f"[{name}] junk peer key rejected:", s.dh(alice.d1, b"\xff" * 32) is None)
