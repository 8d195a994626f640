"""32-byte compression for points on the squared Kummer surface.

A point is moved by a linear map T onto the tetragonal surface, where the
image of ``±0`` is ``(0:0:0:1)`` and the surface equation reads
``K2 L4^2 - 2 K3 L4 + K4 = 0`` with ``K2, K3, K4`` forms in ``L1, L2, L3``.
Normalizing ``(L1:L2:L3)`` leaves two field elements, a bit ``tau`` for
``L3 in {0, 1}`` and a bit ``sigma`` picking the root ``L4``.

Wire layout: ``l1`` little-endian in bytes 0..15 with ``tau`` in bit 127,
``l2`` little-endian in bytes 16..31 with ``sigma`` in bit 127.
"""

from __future__ import annotations

from .fastkummer import KummerPoint, dot
from .fieldarith import GF127, PrimeField
from .params import GS

COMPRESSED_BYTES = 32
_LOW127 = (1 << 127) - 1


def k2(l1: int, l2: int, tau: int, params=GS, field: PrimeField = GF127) -> int:
    q0, q1, q2, q3, q4, q5, _, _ = params.q
    v = q2 * l1 * l2
    if tau:
        v += q0 * l1 - q1 * l2
    v = (q5 * l1) ** 2 + (q3 * l2) ** 2 - 2 * q3 * v
    if tau:
        v += q4 * q4
    return v % field.p


def k3(l1: int, l2: int, tau: int, params=GS, field: PrimeField = GF127) -> int:
    q0, q1, q2, q3, _, _, q6, q7 = params.q
    u, v = l2 * l2, l1 * l1
    w = 0
    if tau:
        w = q2 * (u + v)
        u, v = u + 1, v + 1
    v = q3 * (q0 * v * l2 - q1 * u * l1 + w)
    if tau:
        v -= q6 * q7 * l1 * l2
    return v % field.p


def k4(l1: int, l2: int, tau: int, params=GS, field: PrimeField = GF127) -> int:
    q0, q1, q2, q3, q4, q5, _, _ = params.q
    v = (q4 * l1 * l2) ** 2
    if tau:
        v += ((q3 * l1) ** 2 + (q5 * l2) ** 2
              - 2 * q3 * l1 * l2 * (q0 * l2 - q1 * l1 + q2))
    return v % field.p


def k_poly(which: str, l1: int, l2: int, tau: int, params=GS,
           field: PrimeField = GF127) -> int:
    return {"K2": k2, "K3": k3, "K4": k4}[which](l1, l2, tau, params, field)


def to_tetragonal(P, params=GS, field: PrimeField = GF127):
    """The map T: coordinates of ``P`` on the tetragonal surface."""
    k1, k2_, k3_, k4_ = params.kappa_hat
    return (dot(P, (k4_, k3_, k2_, k1), field),
            dot(P, (k3_, k4_, k1, k2_), field),
            dot(P, (k2_, k1, k4_, k3_), field),
            dot(P, (k1, k2_, k3_, k4_), field))


def from_tetragonal(L, params=GS, field: PrimeField = GF127) -> KummerPoint:
    """Inverse of T, up to a projective factor."""
    m1, m2, m3, m4 = params.mu
    return KummerPoint(dot(L, (m4, m3, m2, m1), field),
                       dot(L, (m3, m4, m1, m2), field),
                       dot(L, (m2, m1, m4, m3), field),
                       dot(L, (m1, m2, m3, m4), field))


def compress_parts(P, params=GS, field: PrimeField = GF127):
    """Return ``(l1, l2, tau, sigma)`` for a point on the surface."""
    F = field
    L1, L2, L3, L4 = to_tetragonal(P, params, F)
    if L3:
        tau, lam = 1, F.inv(L3)
    elif L2:
        tau, lam = 0, F.inv(L2)
    elif L1:
        tau, lam = 0, F.inv(L1)
    else:
        # T is invertible, so a projective point never maps to all zeros.
        assert L4, "all-zero tetragonal image"
        tau, lam = 0, F.inv(L4)
    l1, l2, l4 = F.mul(L1, lam), F.mul(L2, lam), F.mul(L4, lam)
    r = F.sub(F.mul(k2(l1, l2, tau, params, F), l4), k3(l1, l2, tau, params, F))
    return l1, l2, tau, F.sign_bit(r)


def pack(l1: int, l2: int, tau: int, sigma: int) -> bytes:
    return ((l1 | tau << 127).to_bytes(16, "little")
            + (l2 | sigma << 127).to_bytes(16, "little"))


def unpack(data: bytes):
    """Split 32 bytes into ``(l1, l2, tau, sigma)``; ``None`` if a payload
    is not a canonical field element."""
    if len(data) != COMPRESSED_BYTES:
        raise ValueError("compressed Kummer points are 32 bytes")
    a = int.from_bytes(data[:16], "little")
    b = int.from_bytes(data[16:], "little")
    l1, l2 = a & _LOW127, b & _LOW127
    if l1 == GF127.p or l2 == GF127.p:
        return None
    return l1, l2, a >> 127, b >> 127


def compress(P, params=GS, field: PrimeField = GF127) -> bytes:
    return pack(*compress_parts(P, params, field))


def decompress_parts(l1: int, l2: int, tau: int, sigma: int, params=GS,
                     field: PrimeField = GF127) -> KummerPoint | None:
    F = field
    # Only normalized tuples are images of compress: (*,*,1), (*,1,0),
    # (1,0,0) and (0,0,0).
    if not tau and l2 != 1 and not (l2 == 0 and l1 in (0, 1)):
        return None
    c2 = k2(l1, l2, tau, params, F)
    c3 = k3(l1, l2, tau, params, F)
    c4 = k4(l1, l2, tau, params, F)
    if c2 == 0 and c3 == 0:
        if (l1, l2, tau, sigma) != (0, 0, 0, 0):
            return None
        L = (0, 0, 0, 1)
    elif c2 == 0:
        if sigma != F.sign_bit(F.neg(c3)):
            return None
        t = F.add(c3, c3)
        L = (F.mul(t, l1), F.mul(t, l2), t if tau else 0, c4)
    else:
        delta = F.sub(F.sqr(c3), F.mul(c2, c4))
        r = F.sqrt(delta, sigma)
        if r is None:
            return None
        L = (F.mul(c2, l1), F.mul(c2, l2), c2 if tau else 0, F.add(c3, r))
    return from_tetragonal(L, params, F)


def decompress(data: bytes, params=GS,
               field: PrimeField = GF127) -> KummerPoint | None:
    """Inverse of :func:`compress`; ``None`` for bytes outside its image."""
    parts = unpack(data)
    if parts is None:
        return None
    return decompress_parts(*parts, params, field)


def derive_base_point(params=GS, field: PrimeField = GF127) -> KummerPoint:
    """Rebuild the fixed base point from :data:`qdsa.params.BASE_DATUM`."""
    from .fastkummer import ladder, normalize
    from .params import BASE_DATUM, COFACTOR

    P = decompress_parts(*BASE_DATUM, params, field)
    return normalize(ladder(COFACTOR, P, params, field), field)
