"""Slow, independent reference code used only by the test suite.

* an affine group law on ``y^2 = x^3 + A x^2 + x`` over GF(2^255 - 19),
* a from-scratch Keccak-f[1600] sponge giving SHAKE128,
* ladder triples ``(±[a]P, ±[b]P, ±[a+b]P, ±[a-b]P)`` for both Kummers.

Nothing here is constant-time and nothing here is imported by the library.
"""

from __future__ import annotations

from . import fastkummer, montkummer
from .fieldarith import P25519
from .scalarring import N25519, NGS

A = montkummer.A
p = P25519

INF = None  # the point at infinity


def _inv(a: int) -> int:
    return pow(a, p - 2, p)


def on_curve(P) -> bool:
    if P is INF:
        return True
    x, y = P
    return (y * y - (x * x * x + A * x * x + x)) % p == 0


def ec_neg(P):
    return INF if P is INF else (P[0], (-P[1]) % p)


def ec_add(P, Q):
    """Chord and tangent addition, all special cases included."""
    if P is INF:
        return Q
    if Q is INF:
        return P
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2:
        if (y1 + y2) % p == 0:
            return INF
        lam = (3 * x1 * x1 + 2 * A * x1 + 1) * _inv(2 * y1) % p
    else:
        lam = (y2 - y1) * _inv(x2 - x1) % p
    x3 = (lam * lam - A - x1 - x2) % p
    y3 = (lam * (x1 - x3) - y1) % p
    return x3, y3


def ec_scalarmul(m: int, P):
    """Right-to-left double and add."""
    if m < 0:
        return ec_scalarmul(-m, ec_neg(P))
    R = INF
    while m:
        if m & 1:
            R = ec_add(R, P)
        P = ec_add(P, P)
        m >>= 1
    return R


def sqrt25519(a: int) -> int | None:
    """Square root modulo 2^255 - 19 (p = 5 mod 8, Atkin's method)."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    b = pow(2 * a, (p - 5) // 8, p)
    i = 2 * a * b * b % p
    r = a * b * (i - 1) % p
    assert r * r % p == a
    return r


def lift_x(x: int):
    """An affine point with the given x, or ``None`` if x is on the twist."""
    y = sqrt25519(x * x * x + A * x * x + x)
    return None if y is None else (x % p, y)


BASE = lift_x(montkummer.BASE_X)


def x_of(P) -> montkummer.MontPoint:
    """Image of an affine point on the x-line."""
    return montkummer.INFINITY if P is INF else montkummer.MontPoint(P[0], 1)


def double_x(x: int) -> int:
    """x([2]P) written out directly from the tangent formula."""
    num = (x * x - 1) ** 2
    den = 4 * x * (x * x + A * x + 1)
    return num * _inv(den) % p


# ---------------------------------------------------------------- Keccak

_RC = [
    0x0000000000000001, 0x0000000000008082, 0x800000000000808A,
    0x8000000080008000, 0x000000000000808B, 0x0000000080000001,
    0x8000000080008081, 0x8000000000008009, 0x000000000000008A,
    0x0000000000000088, 0x0000000080008009, 0x000000008000000A,
    0x000000008000808B, 0x800000000000008B, 0x8000000000008089,
    0x8000000000008003, 0x8000000000008002, 0x8000000000000080,
    0x000000000000800A, 0x800000008000000A, 0x8000000080008081,
    0x8000000000008080, 0x0000000080000001, 0x8000000080008008,
]
_ROT = [
    [0, 36, 3, 41, 18],
    [1, 44, 10, 45, 2],
    [62, 6, 43, 15, 61],
    [28, 55, 25, 21, 56],
    [27, 20, 39, 8, 14],
]
_MASK = (1 << 64) - 1


def _rol(v, n):
    return ((v << n) | (v >> (64 - n))) & _MASK if n else v


def keccak_f(A):
    """Keccak-f[1600] on a 5x5 list of lanes, indexed ``A[x][y]``."""
    for rc in _RC:
        C = [A[x][0] ^ A[x][1] ^ A[x][2] ^ A[x][3] ^ A[x][4] for x in range(5)]
        D = [C[(x - 1) % 5] ^ _rol(C[(x + 1) % 5], 1) for x in range(5)]
        A = [[A[x][y] ^ D[x] for y in range(5)] for x in range(5)]
        B = [[0] * 5 for _ in range(5)]
        for x in range(5):
            for y in range(5):
                B[y][(2 * x + 3 * y) % 5] = _rol(A[x][y], _ROT[x][y])
        A = [[B[x][y] ^ (~B[(x + 1) % 5][y] & B[(x + 2) % 5][y])
              for y in range(5)] for x in range(5)]
        A[0][0] ^= rc
    return A


def shake128(msg: bytes, outlen: int) -> bytes:
    rate = 168
    data = bytearray(msg) + b"\x1f"
    data += b"\x00" * (-len(data) % rate)
    data[-1] |= 0x80
    S = [[0] * 5 for _ in range(5)]
    for off in range(0, len(data), rate):
        block = data[off:off + rate]
        for i in range(rate // 8):
            S[i % 5][i // 5] ^= int.from_bytes(block[8 * i:8 * i + 8], "little")
        S = keccak_f(S)
    out = bytearray()
    while True:
        for i in range(rate // 8):
            out += S[i % 5][i // 5].to_bytes(8, "little")
        if len(out) >= outlen:
            return bytes(out[:outlen])
        S = keccak_f(S)


# ---------------------------------------------------------------- triples

def triple_gen(a: int, b: int, instantiation: str):
    """``(±[a]P, ±[b]P, ±[a+b]P, ±[a-b]P)`` by laddering from the base point.

    ``instantiation`` is ``"c25519"`` or ``"gs2"``. Scalars are reduced mod
    the subgroup order first.
    """
    if instantiation == "c25519":
        n, P = N25519, montkummer.BASE
        lad = montkummer.ladder
    elif instantiation == "gs2":
        n, P = NGS, fastkummer.BASE
        lad = fastkummer.ladder
    else:
        raise ValueError(f"unknown instantiation {instantiation!r}")
    return tuple(lad(m % n, P) for m in (a, b, a + b, a - b))
