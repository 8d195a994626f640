"""Arithmetic on the squared Kummer surface of the Gaudry-Schost Jacobian.

Points are 4-tuples of ints modulo 2^127 - 1. Signature verification maps
its inputs through the Hadamard transform onto the intermediate surface,
where the biquadratic forms have a compact shape.
"""

from __future__ import annotations

from typing import NamedTuple

from .fieldarith import GF127, PrimeField, cswap
from .params import GS


class DegeneratePointError(ValueError):
    """A point with a zero coordinate where all four must be invertible."""


class KummerPoint(NamedTuple):
    X1: int
    X2: int
    X3: int
    X4: int


ZERO = KummerPoint(*GS.mu)

# Normalized base point of order NGS; kummercodec.derive_base_point
# recomputes it.
BASE = KummerPoint(
    0x1,
    0x0A6B731D9036EF3B4C8C4244FFB8A132,
    0x380C98C09C4FE51FFB8A9001F0A8E725,
    0x3A820774FFD60AD1C8AFAF0732A2E62E,
)

PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def hadamard(x, field: PrimeField = GF127):
    F = field
    a, b, c, d = x
    s0, s1 = F.add(a, b), F.sub(a, b)
    s2, s3 = F.add(c, d), F.sub(c, d)
    return (F.add(s0, s2), F.sub(s0, s2), F.add(s1, s3), F.sub(s1, s3))


def mul4(x, y, field: PrimeField = GF127):
    F = field
    return (F.mul(x[0], y[0]), F.mul(x[1], y[1]),
            F.mul(x[2], y[2]), F.mul(x[3], y[3]))


def sqr4(x, field: PrimeField = GF127):
    F = field
    return (F.sqr(x[0]), F.sqr(x[1]), F.sqr(x[2]), F.sqr(x[3]))


def mul4_const(x, c, field: PrimeField = GF127):
    F = field
    return (F.mul_small(x[0], c[0]), F.mul_small(x[1], c[1]),
            F.mul_small(x[2], c[2]), F.mul_small(x[3], c[3]))


def dot(x, y, field: PrimeField = GF127) -> int:
    return (x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + x[3] * y[3]) % field.p


def same(P, Q, field: PrimeField = GF127) -> bool:
    """Projective equality: all 2x2 cross products agree."""
    p = field.p
    return all((P[i] * Q[j] - P[j] * Q[i]) % p == 0 for i, j in PAIRS)


def normalize(P, field: PrimeField = GF127) -> KummerPoint:
    """Scale so the first nonzero coordinate is 1."""
    for x in P:
        if x:
            s = field.inv(x)
            return KummerPoint(*(field.mul(c, s) for c in P))
    raise ValueError("(0:0:0:0) is not a projective point")


def surface_eval(P, params=GS, field: PrimeField = GF127) -> int:
    """Residual of the surface equation at ``P``; zero iff ``P`` is on it."""
    x1, x2, x3, x4 = P
    p = field.p
    k = (x1 * x1 + x2 * x2 + x3 * x3 + x4 * x4
         - params.F * (x1 * x4 + x2 * x3)
         - params.G * (x1 * x3 + x2 * x4)
         - params.H * (x1 * x2 + x3 * x4)) % p
    return (k * k - 4 * params.E_sq * x1 * x2 * x3 * x4) % p


def wrap(P, field: PrimeField = GF127) -> tuple[int, int, int]:
    """``(w2, w3, w4)`` with ``(1:w2:w3:w4) = (1/X1:1/X2:1/X3:1/X4)``.

    One inversion in total. Raises :class:`DegeneratePointError` if any
    coordinate is zero.
    """
    F = field
    x1, x2, x3, x4 = P
    if not (x1 and x2 and x3 and x4):
        raise DegeneratePointError("cannot wrap a point with a zero coordinate")
    v1 = F.mul(x2, x3)
    v2 = F.mul(x1, F.inv(F.mul(v1, x4)))
    v3 = F.mul(v2, x4)
    return F.mul(v3, x3), F.mul(v3, x2), F.mul(v1, v2)


def _xdbladd(F, P, Q, w, eps_hat, eps):
    # 7M + 12S + 12C + 16a + 16s
    v1 = hadamard(P, F)
    v2 = hadamard(Q, F)
    v2 = mul4(v1, v2, F)
    v1 = sqr4(v1, F)
    v1 = mul4_const(v1, eps_hat, F)
    v2 = mul4_const(v2, eps_hat, F)
    v1 = sqr4(hadamard(v1, F), F)
    v2 = sqr4(hadamard(v2, F), F)
    v1 = mul4_const(v1, eps, F)
    v2 = (v2[0], F.mul(v2[1], w[0]), F.mul(v2[2], w[1]), F.mul(v2[3], w[2]))
    return v1, v2


def xdbladd(P, Q, w, params=GS, field: PrimeField = GF127):
    """Return ``(±[2]P, ±(P+Q))`` given ``w = wrap(±(P-Q))``."""
    v1, v2 = _xdbladd(field, P, Q, w, params.eps_hat, params.eps)
    return KummerPoint(*v1), KummerPoint(*v2)


def ladder(m: int, P, params=GS, field: PrimeField = GF127,
           trace: list | None = None) -> KummerPoint:
    """Compute ``±[m]P`` for ``0 <= m < 2^256`` with a fixed 256-step ladder.

    ``trace`` behaves as in :func:`qdsa.montkummer.ladder`.
    """
    if not 0 <= m < 1 << 256:
        raise ValueError("ladder scalar must be in [0, 2^256)")
    F = field
    w = wrap(P, F)
    eps_hat, eps = params.eps_hat, params.eps
    v0 = list(params.mu)
    v1 = list(P)
    prevbit = 0
    bit = 0
    for i in range(255, -1, -1):
        bit = (m >> i) & 1
        cswap(bit ^ prevbit, v0, v1)
        prevbit = bit
        a, b = _xdbladd(F, v0, v1, w, eps_hat, eps)
        v0[:] = a
        v1[:] = b
        if trace is not None:
            s, t = list(v0), list(v1)
            cswap(bit, s, t)
            trace.append((KummerPoint(*s), KummerPoint(*t)))
    cswap(bit, v0, v1)
    return KummerPoint(*v0)


def bii_values(YP, YQ, params=GS, field: PrimeField = GF127):
    """Diagonal verification forms ``(B11, B22, B33, B44)`` on the
    intermediate surface, for Hadamard images ``YP`` and ``YQ``."""
    F = field
    v = mul4_const(sqr4(YP, F), params.eps_hat, F)
    w = mul4_const(sqr4(YQ, F), params.eps_hat, F)
    u = (dot(v, (w[0], w[1], w[2], w[3]), F),
         dot(v, (w[1], w[0], w[3], w[2]), F),
         dot(v, (w[2], w[3], w[0], w[1]), F),
         dot(v, (w[3], w[2], w[1], w[0]), F))
    k = params.kappa
    b = (dot(u, (k[0], k[1], k[2], k[3]), F),
         dot(u, (k[1], k[0], k[3], k[2]), F),
         dot(u, (k[2], k[3], k[0], k[1]), F),
         dot(u, (k[3], k[2], k[1], k[0]), F))
    return mul4_const(b, params.mu_hat, F)


def bij_value(YP, YQ, i: int, j: int, params=GS,
              field: PrimeField = GF127) -> int:
    """Off-diagonal form ``B_ij`` (0-based ``i != j``) on the intermediate
    surface. Symmetric in ``(i, j)`` and in ``(YP, YQ)``."""
    if i == j or not (0 <= i < 4 and 0 <= j < 4):
        raise ValueError("need two distinct indices in 0..3")
    F = field
    k, l = (x for x in range(4) if x != i and x != j)
    m = params.mu_hat
    v0 = F.sub(F.mul(YP[i], YP[j]), F.mul(YP[k], YP[l]))
    v2 = F.sub(F.mul(YQ[i], YQ[j]), F.mul(YQ[k], YQ[l]))
    v1 = F.mul(F.mul(YP[k], YP[l]), F.mul(YQ[k], YQ[l]))
    v0 = F.mul(v0, v2)
    mij = m[i] * m[j]
    mkl = m[k] * m[l]
    v0 = F.mul_small(v0, mkl)
    v1 = F.mul_small(v1, mij - mkl)
    v0 = F.add(v0, v1)
    cij = mij * (m[i] * m[k] - m[j] * m[l]) * (m[i] * m[l] - m[j] * m[k])
    v0 = F.mul_small(v0, cij)
    return F.mul(v0, params.C)


def check(T0, T1, R, params=GS, field: PrimeField = GF127) -> bool:
    """True iff ``±R`` is one of ``±(T0+T1)``, ``±(T0-T1)``."""
    F = field
    yp = hadamard(T0, F)
    yq = hadamard(T1, F)
    b = bii_values(yp, yq, params, F)
    yr = hadamard(R, F)
    for i, j in PAIRS:
        lhs = F.add(F.mul(b[i], F.sqr(yr[j])), F.mul(b[j], F.sqr(yr[i])))
        bij = bij_value(yp, yq, i, j, params, F)
        rhs = F.mul(F.add(bij, bij), F.mul(yr[i], yr[j]))
        if lhs != rhs:
            return False
    return True
