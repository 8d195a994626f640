"""Integers modulo the prime subgroup orders of the two instantiations."""

from __future__ import annotations

# Order of the subgroup generated by x = 9 on Curve25519.
N25519 = 2**252 + 27742317777372353535851937790883648493
# Order of the large prime subgroup of the Gaudry-Schost Jacobian (#J = 16 N).
NGS = 2**250 - 0x334D69820C75294D2C27FC9F9A154FF47730B4B840C05BD


class ScalarRing:
    """Canonical arithmetic on ints in ``[0, n)`` with 32-byte encodings."""

    nbytes = 32

    def __init__(self, n: int, name: str):
        if n % 2 == 0 or n >= 1 << 256:
            raise ValueError("subgroup order must be odd and below 2^256")
        self.n = n
        self.name = name

    def __repr__(self):
        return f"ScalarRing({self.name})"

    def reduce512(self, wide: bytes) -> int:
        if len(wide) != 64:
            raise ValueError("reduce512 takes exactly 64 bytes")
        return int.from_bytes(wide, "little") % self.n

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.n

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.n

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.n

    def neg(self, a: int) -> int:
        return (-a) % self.n

    @staticmethod
    def lsb(a: int) -> int:
        return a & 1

    def encode(self, a: int) -> bytes:
        if not 0 <= a < self.n:
            raise ValueError("encode() needs a canonical scalar")
        return a.to_bytes(32, "little")

    def decode(self, data: bytes) -> int | None:
        """Strict decode: ``None`` for anything that is not below ``n``."""
        if len(data) != 32:
            raise ValueError("scalars are 32 bytes")
        v = int.from_bytes(data, "little")
        return v if v < self.n else None


RING25519 = ScalarRing(N25519, "N25519")
RINGGS = ScalarRing(NGS, "NGS")
