"""qDSA: Schnorr-style signatures computed entirely on a Kummer variety.

Two instantiations share one code path:

``c25519``
    the x-line of Curve25519 over GF(2^255 - 19);
``gs2``
    the squared Kummer surface of the Gaudry-Schost Jacobian over
    GF(2^127 - 1).

Keys are 32-byte compressed points, signatures are ``Rbar || s`` (64 bytes).
The same key pair works for x-only Diffie-Hellman via :meth:`Scheme.dh`.
Using one key for both signing and key exchange is allowed here but is not
covered by any joint security argument; keep them separate if you can.

>>> kp = c25519.keypair(bytes(32))
>>> sig = c25519.sign(kp.d1, kp.d2, kp.pk, b"hi")
>>> c25519.verify(kp.pk, b"hi", sig)
True
"""

from __future__ import annotations

from dataclasses import dataclass

from . import fastkummer, kummercodec, montkummer
from .fastkummer import DegeneratePointError
from .fieldarith import GF127, GF25519
from .hashing import derive_keymaterial, hash_plus, hash_to_scalar
from .scalarring import RING25519, RINGGS, ScalarRing

PK_BYTES = 32
SIG_BYTES = 64
SEED_BYTES = 32


@dataclass(frozen=True)
class KeyPair:
    seed: bytes
    d1: bytes   # ladder scalar (clamped for c25519)
    d2: bytes   # nonce key
    pk: bytes

    def __repr__(self):
        return f"KeyPair(pk={self.pk.hex()})"


class Scheme:
    """Shared signing logic; subclasses supply the Kummer arithmetic."""

    name: str
    ring: ScalarRing

    # -- hooks ---------------------------------------------------------
    def _scalar(self, d1: bytes) -> int:
        return int.from_bytes(d1, "little")

    def _base_mul(self, m: int):
        raise NotImplementedError

    def _mul(self, m: int, P):
        raise NotImplementedError

    def _compress(self, P) -> bytes:
        raise NotImplementedError

    def _decompress(self, data: bytes):
        """Point for ``data`` or ``None``; must never raise on 32 bytes."""
        raise NotImplementedError

    def _check(self, T0, T1, R) -> bool:
        raise NotImplementedError

    def _prepare_d1(self, d1: bytes) -> bytes:
        return d1

    # -- public API ----------------------------------------------------
    def keypair(self, entropy: bytes) -> KeyPair:
        """Derive a key pair from 32 bytes of caller-supplied entropy."""
        if len(entropy) != SEED_BYTES:
            raise ValueError("keypair needs exactly 32 bytes of entropy")
        d1, d2 = derive_keymaterial(entropy)
        d1 = self._prepare_d1(d1)
        Q = self._base_mul(self._scalar(d1))
        return KeyPair(bytes(entropy), d1, d2, self._compress(Q))

    def sign(self, d1: bytes, d2: bytes, pk: bytes, msg: bytes) -> bytes:
        N = self.ring
        r = hash_to_scalar(d2 + msg, N)
        Rbar = self._compress(self._base_mul(r))
        h = hash_plus(Rbar + pk + msg, N)
        s = N.sub(r, N.mul(h, self._scalar(d1) % N.n))
        return Rbar + N.encode(s)

    def verify(self, pk: bytes, msg: bytes, sig: bytes) -> bool:
        if len(pk) != PK_BYTES or len(sig) != SIG_BYTES:
            return False
        Rbar, sbytes = sig[:32], sig[32:]
        s = self.ring.decode(sbytes)
        if s is None:
            return False
        Q = self._decompress(pk)
        R = self._decompress(Rbar)
        if Q is None or R is None:
            return False
        h = hash_plus(Rbar + pk + msg, self.ring)
        try:
            T0 = self._base_mul(s)
            T1 = self._mul(h, Q)
        except (ValueError, DegeneratePointError):
            return False
        return self._check(T0, T1, R)

    def dh(self, d1: bytes, peer_pk: bytes) -> bytes | None:
        """Shared secret ``Compress([d1] peer)``, or ``None`` for a bad peer key."""
        if len(peer_pk) != PK_BYTES:
            return None
        P = self._decompress(peer_pk)
        if P is None:
            return None
        try:
            return self._compress(self._mul(self._scalar(d1), P))
        except (ValueError, DegeneratePointError):
            return None


def clamp(d1: bytes) -> bytes:
    """Curve25519 clamping: clear bits 0, 1, 2 and 255, set bit 254."""
    b = bytearray(d1)
    b[0] &= 248
    b[31] &= 127
    b[31] |= 64
    return bytes(b)


class Curve25519Scheme(Scheme):
    name = "c25519"
    ring = RING25519

    def _prepare_d1(self, d1):
        return clamp(d1)

    def _base_mul(self, m):
        return montkummer.ladder(m, montkummer.BASE, GF25519)

    def _mul(self, m, P):
        return montkummer.ladder(m, P, GF25519)

    def _compress(self, P):
        return montkummer.compress(P, GF25519)

    def _decompress(self, data):
        P = montkummer.decompress(data, GF25519)
        return None if P.X == 0 else P

    def _check(self, T0, T1, R):
        return montkummer.check(T0, T1, R, GF25519)


class GaudrySchostScheme(Scheme):
    name = "gs2"
    ring = RINGGS

    def keypair(self, entropy):
        kp = super().keypair(entropy)
        if self._decompress(kp.pk) is None:
            raise ValueError("public point has a zero coordinate; pick new entropy")
        return kp

    def _base_mul(self, m):
        return fastkummer.ladder(m, fastkummer.BASE, field=GF127)

    def _mul(self, m, P):
        return fastkummer.ladder(m, P, field=GF127)

    def _compress(self, P):
        return kummercodec.compress(P, field=GF127)

    def _decompress(self, data):
        P = kummercodec.decompress(data, field=GF127)
        # The ladder and the verification forms need all four coordinates.
        if P is None or not all(P):
            return None
        return P

    def _check(self, T0, T1, R):
        return fastkummer.check(T0, T1, R, field=GF127)


c25519 = Curve25519Scheme()
gs2 = GaudrySchostScheme()
SCHEMES = {s.name: s for s in (c25519, gs2)}
