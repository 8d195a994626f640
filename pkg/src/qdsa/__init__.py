"""qDSA signatures and Diffie-Hellman on the Curve25519 x-line and the
Gaudry-Schost fast Kummer surface."""

from .sigscheme import SCHEMES, KeyPair, Scheme, c25519, gs2

__all__ = ["SCHEMES", "KeyPair", "Scheme", "c25519", "gs2"]
__version__ = "0.1.0"
