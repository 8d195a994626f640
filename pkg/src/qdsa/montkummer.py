"""The x-line of Curve25519: ladder, verification relation and codec.

Points are projective pairs ``(X:Z)`` of ints modulo 2^255 - 19; the image
of the group identity is ``(1:0)``.
"""

from __future__ import annotations

from typing import NamedTuple

from .fieldarith import GF25519, PrimeField, cswap

A = 486662
A24 = (A + 2) // 4  # 121666
BASE_X = 9


class MontPoint(NamedTuple):
    X: int
    Z: int


INFINITY = MontPoint(1, 0)
BASE = MontPoint(BASE_X, 1)


def same(P: MontPoint, Q: MontPoint, field: PrimeField = GF25519) -> bool:
    """Projective equality."""
    return field.mul(P.X, Q.Z) == field.mul(Q.X, P.Z)


def normalize(P: MontPoint, field: PrimeField = GF25519) -> MontPoint:
    return MontPoint(field.mul(P.X, field.inv(P.Z)), 1)


def _xdbladd(F, XP, ZP, XQ, ZQ, xd):
    # 5M + 4S + 1C + 4a + 4s
    t0 = F.add(XP, ZP)
    t1 = F.sub(XP, ZP)
    u0 = F.add(XQ, ZQ)
    u1 = F.sub(XQ, ZQ)
    da = F.mul(t0, u1)
    cb = F.mul(t1, u0)
    XS = F.sqr(F.add(da, cb))
    ZS = F.mul(xd, F.sqr(F.sub(da, cb)))
    t1 = F.sqr(t1)
    t0 = F.sqr(t0)
    e = F.sub(t0, t1)
    XD = F.mul(t0, t1)
    ZD = F.mul(e, F.add(t1, F.mul_small(e, A24)))
    return XD, ZD, XS, ZS


def xdbladd(P: MontPoint, Q: MontPoint, xd: int,
            field: PrimeField = GF25519) -> tuple[MontPoint, MontPoint]:
    """Return ``(±[2]P, ±(P+Q))`` given ``(xd:1) = ±(P-Q)``.

    The difference must not be ``(1:0)`` or ``(0:1)``.
    """
    XD, ZD, XS, ZS = _xdbladd(field, P.X, P.Z, Q.X, Q.Z, xd)
    return MontPoint(XD, ZD), MontPoint(XS, ZS)


def ladder(m: int, P: MontPoint, field: PrimeField = GF25519,
           trace: list | None = None) -> MontPoint:
    """Compute ``±[m]P`` for ``0 <= m < 2^256`` with a fixed 256-step ladder.

    ``P`` is normalized to ``(x:1)`` first; ``x`` must be nonzero. If
    ``trace`` is a list, the pair ``(±[k]P, ±[k+1]P)`` reached after each
    step is appended to it (test hook, not constant-time).
    """
    if not 0 <= m < 1 << 256:
        raise ValueError("ladder scalar must be in [0, 2^256)")
    x = P.X if P.Z == 1 else field.mul(P.X, field.inv(P.Z))
    if x == 0:
        raise ValueError("ladder input must have x != 0")
    v0 = [1, 0]
    v1 = [x, 1]
    prevbit = 0
    bit = 0
    for i in range(255, -1, -1):
        bit = (m >> i) & 1
        cswap(bit ^ prevbit, v0, v1)
        prevbit = bit
        v0[0], v0[1], v1[0], v1[1] = _xdbladd(field, v0[0], v0[1], v1[0], v1[1], x)
        if trace is not None:
            a, b = list(v0), list(v1)
            cswap(bit, a, b)
            trace.append((MontPoint(*a), MontPoint(*b)))
    cswap(bit, v0, v1)
    return MontPoint(v0[0], v0[1])


def bvalues(P: MontPoint, Q: MontPoint,
            field: PrimeField = GF25519) -> tuple[int, int, int]:
    """The biquadratic forms ``(B_XX, B_XZ, B_ZZ)`` of the pair ``±P, ±Q``.

    ``B_ZZ x^2 - 2 B_XZ x + B_XX`` vanishes exactly at ``x(P+Q)`` and
    ``x(P-Q)``.
    """
    F = field
    t0 = F.mul(P.X, Q.X)
    t1 = F.mul(P.Z, Q.Z)
    bxx = F.sqr(F.sub(t0, t1))
    t0 = F.add(t0, t1)
    t1 = F.mul(P.X, Q.Z)
    t2 = F.mul(Q.X, P.Z)
    bzz = F.sqr(F.sub(t1, t2))
    bxz = F.mul(t0, F.add(t1, t2))
    t0 = F.mul(t1, t2)
    t0 = F.add(t0, t0)
    t0 = F.add(t0, t0)  # 4 XP ZQ XQ ZP
    t1 = F.mul_small(F.add(t0, t0), A24)  # 2(A+2) XP ZQ XQ ZP
    bxz = F.sub(F.add(bxz, t1), t0)
    return bxx, bxz, bzz


def check(T0: MontPoint, T1: MontPoint, R: MontPoint,
          field: PrimeField = GF25519) -> bool:
    """True iff ``±R`` is one of ``±(T0+T1)``, ``±(T0-T1)``."""
    F = field
    bxx, bxz, bzz = bvalues(T0, T1, F)
    lhs = F.add(F.mul(bzz, F.sqr(R.X)), F.mul(bxx, F.sqr(R.Z)))
    rhs = F.mul(F.add(bxz, bxz), F.mul(R.X, R.Z))
    return lhs == rhs


def compress(P: MontPoint, field: PrimeField = GF25519) -> bytes:
    return field.encode(field.mul(P.X, field.inv(P.Z)))


def decompress(data: bytes, field: PrimeField = GF25519) -> MontPoint:
    return MontPoint(field.decode(data), 1)
