"""Gaudry-Schost Kummer surface parameters over GF(2^127 - 1).

Only the squared theta constants ``mu`` are fundamental; everything else in
:class:`KummerParams` is derived from them here, except the published
small representatives of the scaled dual constants and the stored constant
for the off-diagonal verification forms.

The subgroup order lives in :mod:`qdsa.scalarring`. The base point is not
taken from any table. It is the deterministic output of
:func:`qdsa.kummercodec.derive_base_point`: decompress the tetragonal datum
``(l1, l2, tau, sigma) = (1, 1, 1, 0)``, then clear the cofactor 16. The
result has order ``NGS`` and all four coordinates nonzero (checked by the
test suite).
"""

from __future__ import annotations

from dataclasses import dataclass

from .fieldarith import P127
from .scalarring import NGS

p = P127


def _inv(a):
    return pow(a, p - 2, p)


def _hadamard(x):
    a, b, c, d = x
    return ((a + b + c + d) % p, (a + b - c - d) % p,
            (a - b + c - d) % p, (a - b - c + d) % p)


def _others(v, i):
    r = 1
    for j in range(4):
        if j != i:
            r = r * v[j] % p
    return r


MU = (-11, 22, 19, 3)
MU_HAT = (-33, 11, 17, 49)      # -H(mu): the dual constants scaled by -2
EPS_HAT = (-833, 2499, 1617, 561)
KAPPA_HAT = (-961, 128, 569, 1097)
Q_CONSTS = (3575, 9625, 4625, 12259, 11275, 7475, 6009, 43991)
# Stored magnitude of the off-diagonal constant; the sign convention that
# matches MU_HAT and EPS_HAT above is the negative one.
C_STORED = 0x40F50EEFA320A2DD46F7E3D8CDDDA843


@dataclass(frozen=True)
class KummerParams:
    mu: tuple
    mu_hat: tuple
    eps: tuple
    eps_hat: tuple
    kappa: tuple
    kappa_hat: tuple
    q: tuple
    C: int
    F: int
    G: int
    H: int
    E_sq: int
    n: int


def _build() -> KummerParams:
    mu = tuple(m % p for m in MU)
    mu_hat = tuple(m % p for m in MU_HAT)
    # eps_i = product of the other three mu_j, projectively (1/mu_i).
    eps = tuple(_others(mu, i) for i in range(4))
    kappa = _hadamard(eps)
    m1, m2, m3, m4 = mu_hat
    # Written with the dual constants, these agree with the classical
    # (mu1^2 - mu2^2 - mu3^2 + mu4^2) / (mu1 mu4 - mu2 mu3) etc.
    F = 2 * (m1 * m4 + m2 * m3) * _inv(m1 * m4 - m2 * m3) % p
    G = 2 * (m1 * m3 + m2 * m4) * _inv(m1 * m3 - m2 * m4) % p
    H = 2 * (m1 * m2 + m3 * m4) * _inv(m1 * m2 - m3 * m4) % p
    E_sq = (F * F + G * G + H * H + F * G * H - 4) % p
    return KummerParams(
        mu=mu,
        mu_hat=mu_hat,
        eps=eps,
        eps_hat=tuple(e % p for e in EPS_HAT),
        kappa=kappa,
        kappa_hat=tuple(k % p for k in KAPPA_HAT),
        q=Q_CONSTS,
        C=(-C_STORED) % p,
        F=F, G=G, H=H, E_sq=E_sq,
        n=NGS,
    )


GS = _build()

BASE_DATUM = (1, 1, 1, 0)
COFACTOR = 16
