"""
Signing with qDSA
=================

The same code runs on both Kummers. Keys and signatures are raw bytes.
"""

import os

from qdsa import SCHEMES

msg = b"attack at dawn"
for name, s in SCHEMES.items():
    kp = s.keypair(os.urandom(32))
    sig = s.sign(kp.d1, kp.d2, kp.pk, msg)
    print(f"[{name}] pk  = {kp.pk.hex()}")
    print(f"[{name}] sig = {sig.hex()}")
    print(f"[{name}] verify            :", s.verify(kp.pk, msg, sig))
    print(f"[{name}] verify (tampered) :", s.verify(kp.pk, msg + b"!", sig))

    # Signing is deterministic: the nonce is a hash of d'' and the message.
    print(f"[{name}] deterministic     :", sig == s.sign(kp.d1, kp.d2, kp.pk, msg))
