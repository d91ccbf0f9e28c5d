"""Stable derivation of independent RNG stream seeds.

Streams are keyed by (base seed, label, indices) through SHA-256 so that
per-agent draws never depend on processing order and sweep replicates never
depend on scheduling.
"""
from __future__ import annotations

import hashlib


def derive_seed(*parts: int | str) -> int:
    """64-bit seed derived deterministically from the given parts."""
    key = "\x1f".join(repr(p) for p in parts).encode()
    return int.from_bytes(hashlib.sha256(key).digest()[:8], "big")
