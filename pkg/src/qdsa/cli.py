"""Command-line front end: ``qdsa {keygen,sign,verify,dh} --scheme ...``.

All files are raw bytes. The secret key file holds only the 32-byte seed;
everything else is rederived on load. Exit status is 0 on success, 1 when a
signature or peer key is invalid, 2 on usage, I/O or format errors.

A key pair may be used for both signatures and Diffie-Hellman. That is
convenient but not backed by a joint security analysis, so prefer separate
keys for separate purposes.
"""

from __future__ import annotations

import argparse
import os
import sys

from .sigscheme import PK_BYTES, SCHEMES, SEED_BYTES, SIG_BYTES

TEST_SEED_ENV = "QDSA_TEST_SEED"

OK, INVALID, ERROR = 0, 1, 2


class CliError(Exception):
    """Usage, I/O or format problem; maps to exit status 2."""


def _read(path: str | None, what: str, size: int | None = None) -> bytes:
    if path is None:
        raise CliError(f"missing --{what}")
    try:
        with open(path, "rb") as f:
            data = f.read()
    except OSError as e:
        raise CliError(f"cannot read {what} file {path}: {e.strerror}") from None
    if size is not None and len(data) != size:
        raise CliError(f"{what} file must be {size} bytes, got {len(data)}")
    return data


def _write(path: str | None, what: str, data: bytes, secret: bool = False):
    if path is None:
        raise CliError(f"missing --{what}")
    try:
        if secret:
            fd = os.open(path, os.O_WRONLY | os.O_CREAT | os.O_TRUNC, 0o600)
            with os.fdopen(fd, "wb") as f:
                f.write(data)
            os.chmod(path, 0o600)
        else:
            with open(path, "wb") as f:
                f.write(data)
    except OSError as e:
        raise CliError(f"cannot write {what} file {path}: {e.strerror}") from None


def _entropy(args) -> bytes:
    env = os.environ.get(TEST_SEED_ENV)
    if env is None:
        return os.urandom(SEED_BYTES)
    if not args.allow_test_seed:
        raise CliError(f"{TEST_SEED_ENV} is set; pass --allow-test-seed to use it")
    text = env[2:] if env.lower().startswith("0x") else env
    try:
        seed = bytes.fromhex(text)
    except ValueError:
        raise CliError(f"{TEST_SEED_ENV} is not hex") from None
    if len(seed) != SEED_BYTES:
        raise CliError(f"{TEST_SEED_ENV} must encode {SEED_BYTES} bytes")
    return seed


def _load_key(scheme, args):
    seed = _read(args.sk, "sk", SEED_BYTES)
    return scheme.keypair(seed)


def cmd_keygen(scheme, args) -> int:
    kp = scheme.keypair(_entropy(args))
    _write(args.sk, "sk", kp.seed, secret=True)
    _write(args.pk, "pk", kp.pk)
    return OK


def cmd_sign(scheme, args) -> int:
    kp = _load_key(scheme, args)
    msg = _read(args.input, "in")
    _write(args.sig, "sig", scheme.sign(kp.d1, kp.d2, kp.pk, msg))
    return OK


def cmd_verify(scheme, args) -> int:
    pk = _read(args.pk, "pk", PK_BYTES)
    msg = _read(args.input, "in")
    sig = _read(args.sig, "sig", SIG_BYTES)
    return OK if scheme.verify(pk, msg, sig) else INVALID


def cmd_dh(scheme, args) -> int:
    kp = _load_key(scheme, args)
    peer = _read(args.pk, "pk", PK_BYTES)
    shared = scheme.dh(kp.d1, peer)
    if shared is None:
        print("error: invalid peer public key", file=sys.stderr)
        return INVALID
    _write(args.out, "out", shared, secret=True)
    return OK


COMMANDS = {"keygen": cmd_keygen, "sign": cmd_sign,
            "verify": cmd_verify, "dh": cmd_dh}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qdsa",
        description="qDSA signatures and x-only Diffie-Hellman on Kummer varieties.",
        epilog="Exit status: 0 ok, 1 invalid signature or peer key, 2 error. "
               "Reusing one key for signing and DH is possible but not recommended.",
    )
    ap.add_argument("command", choices=sorted(COMMANDS))
    ap.add_argument("--scheme", required=True, choices=sorted(SCHEMES))
    ap.add_argument("--sk", help="secret key file (32-byte seed)")
    ap.add_argument("--pk", help="public key file (32 bytes); the peer key for dh")
    ap.add_argument("--in", dest="input", help="message file")
    ap.add_argument("--sig", help="signature file (64 bytes)")
    ap.add_argument("--out", help="shared secret output file for dh")
    ap.add_argument("--allow-test-seed", action="store_true",
                    help=f"let keygen take its seed from ${TEST_SEED_ENV} (tests only)")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return ERROR if e.code else OK
    try:
        return COMMANDS[args.command](SCHEMES[args.scheme], args)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return ERROR
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
