"""Arithmetic in the prime fields GF(2^255 - 19) and GF(2^127 - 1).

The ladders and verification routines work on plain Python ints through a
:class:`PrimeField` backend object, which keeps the hot loops cheap and lets
tests swap in :class:`CountingField` to audit operation counts.
:class:`FieldElement` is the value type for callers who want operator syntax.

Python integers are not constant-time; the code avoids secret-dependent
branches and table lookups (see :func:`cswap`) but makes no stronger claim.
"""

from __future__ import annotations

from collections import Counter

P25519 = 2**255 - 19
P127 = 2**127 - 1


class PrimeField:
    """Canonical arithmetic modulo ``p`` on ints in ``[0, p)``."""

    def __init__(self, p: int, nbytes: int, name: str):
        self.p = p
        self.nbytes = nbytes
        self.name = name

    def __repr__(self):
        return f"PrimeField({self.name})"

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def sqr(self, a: int) -> int:
        return (a * a) % self.p

    def mul_small(self, a: int, c: int) -> int:
        """Multiply by a constant; the ``C`` of the cost model."""
        return (a * c) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        # Fermat: inv(0) == 0, which keeps x-line compression total.
        return pow(a, self.p - 2, self.p)

    def is_square(self, a: int) -> bool:
        return a == 0 or pow(a, (self.p - 1) // 2, self.p) == 1

    def sqrt(self, a: int, sign: int) -> int | None:
        """Square root of ``a`` with :meth:`sign_bit` equal to ``sign``.

        Only implemented for ``p = 3 mod 4``. Returns ``None`` when ``a`` is
        not a square, or when ``a == 0`` and ``sign == 1``.
        """
        if self.p % 4 != 3:
            raise NotImplementedError(f"sqrt needs p = 3 mod 4, not {self.name}")
        a %= self.p
        r = pow(a, (self.p + 1) // 4, self.p)
        if r * r % self.p != a:
            return None
        if r & 1 != sign:
            r = (-r) % self.p
            if r & 1 != sign:
                return None
        return r

    @staticmethod
    def sign_bit(a: int) -> int:
        return a & 1

    def encode(self, a: int) -> bytes:
        if not 0 <= a < self.p:
            raise ValueError("encode() needs a canonical residue")
        return a.to_bytes(self.nbytes, "little")

    def decode(self, data: bytes) -> int | None:
        """Little-endian decode.

        For 2^255 - 19 the top bit is masked and the value reduced (X25519
        convention). For 2^127 - 1 the caller has already stripped its flag
        bit; the single non-canonical payload ``p`` gives ``None``.
        """
        if len(data) != self.nbytes:
            raise ValueError(f"expected {self.nbytes} bytes, got {len(data)}")
        v = int.from_bytes(data, "little")
        if self.p == P25519:
            return (v & ((1 << 255) - 1)) % self.p
        if v >= self.p:
            return None
        return v


class CountingField(PrimeField):
    """A :class:`PrimeField` that tallies M, S, C, a, s, I operations."""

    def __init__(self, base: PrimeField):
        super().__init__(base.p, base.nbytes, base.name + "/counting")
        self.counts = Counter()

    def reset(self):
        self.counts.clear()

    def add(self, a, b):
        self.counts["a"] += 1
        return super().add(a, b)

    def sub(self, a, b):
        self.counts["s"] += 1
        return super().sub(a, b)

    def mul(self, a, b):
        self.counts["M"] += 1
        return super().mul(a, b)

    def sqr(self, a):
        self.counts["S"] += 1
        return super().sqr(a)

    def mul_small(self, a, c):
        self.counts["C"] += 1
        return super().mul_small(a, c)

    def inv(self, a):
        self.counts["I"] += 1
        return super().inv(a)


GF25519 = PrimeField(P25519, 32, "2^255-19")
GF127 = PrimeField(P127, 16, "2^127-1")


def cswap(bit: int, a: list, b: list) -> None:
    """Swap the contents of int lists ``a`` and ``b`` in place iff ``bit`` is 1.

    Uses an all-ones/all-zeros mask rather than a branch on ``bit``.
    """
    mask = -bit
    for i in range(len(a)):
        t = mask & (a[i] ^ b[i])
        a[i] ^= t
        b[i] ^= t


class FieldElement:
    """An element of one of the two fields, always held in canonical form."""

    __slots__ = ("field", "value")

    def __init__(self, value: int, field: PrimeField = GF127):
        self.field = field
        self.value = value % field.p

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field.p != self.field.p:
                raise TypeError(f"mixing {self.field.name} and {other.field.name}")
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def _new(self, v: int) -> FieldElement:
        return FieldElement(v, self.field)

    def __add__(self, other):
        o = self._other(other)
        return self._new(self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return self._new(self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        return self._new(self.field.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        return self._new(self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __neg__(self):
        return self._new(self.field.neg(self.value))

    def __pow__(self, e: int):
        return self._new(pow(self.value, e, self.field.p))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field.p == other.field.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.value))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"FieldElement({self.value:#x}, {self.field.name})"

    def square(self) -> FieldElement:
        return self._new(self.field.sqr(self.value))

    def mul_small(self, c: int) -> FieldElement:
        if not 0 <= c < 1 << 16:
            raise ValueError("small constants must fit in 16 bits")
        return self._new(self.field.mul_small(self.value, c))

    def inv(self) -> FieldElement:
        return self._new(self.field.inv(self.value))

    def sqrt(self, sign: int) -> FieldElement | None:
        r = self.field.sqrt(self.value, sign)
        return None if r is None else self._new(r)

    def sign_bit(self) -> int:
        return self.value & 1

    def to_bytes(self) -> bytes:
        return self.field.encode(self.value)

    @classmethod
    def from_bytes(cls, data: bytes, field: PrimeField) -> FieldElement | None:
        v = field.decode(data)
        return None if v is None else cls(v, field)
