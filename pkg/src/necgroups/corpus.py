"""Seeded generation of random valid signatures for batch verification."""
from __future__ import annotations

import random

from .errors import InvalidSignature
from .signature import Signature, validate

BUCKETS = ("a", "b-cycles", "b-cusps", "c")


def random_signature(rng, bucket, max_genus=3, max_cusps=2, max_periods=4,
                     max_cycles=3, max_cycle_len=4, max_empty=2, max_order=12):
    def order():
        return rng.randint(2, max_order)

    periods = tuple(order() for _ in range(rng.randint(0, max_periods)))
    if bucket == "a":
        return Signature("+", rng.randint(0, max_genus), 0, periods, ())
    if bucket == "b-cusps":
        return Signature("+", rng.randint(0, max_genus),
                         rng.randint(1, max_cusps), periods, ())
    cycles = [tuple(order() for _ in range(rng.randint(1, max_cycle_len)))
              for _ in range(rng.randint(0, max_cycles))]
    cycles += [()] * rng.randint(0, max_empty)
    rng.shuffle(cycles)
    cusps = rng.randint(0, max_cusps)
    if bucket == "b-cycles":
        if not cycles:
            cycles = [()]
        return Signature("+", rng.randint(0, max_genus), cusps, periods, tuple(cycles))
    return Signature("-", rng.randint(1, max_genus), cusps, periods, tuple(cycles))


def generate_corpus(n=240, seed=20240611, **bounds):
    """n distinct valid signatures, cycling through the four buckets."""
    rng = random.Random(seed)
    out, seen = [], set()
    i = 0
    while len(out) < n:
        bucket = BUCKETS[i % len(BUCKETS)]
        sig = random_signature(rng, bucket, **bounds)
        try:
            validate(sig)
        except InvalidSignature:
            continue
        if sig in seen:
            continue
        seen.add(sig)
        out.append(sig)
        i += 1
    return out
