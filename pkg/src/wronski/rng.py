"""Deterministic 64-bit random streams (splitmix64) and exact dyadic draws.

The stdlib Mersenne generator is avoided on purpose: seeding it with anything
but a plain int goes through hash(), which is not stable across interpreter
configurations.  splitmix64 is six lines, bit-stable forever, and trivially
splittable, which is what reproducible per-instance seeds need.

Splitting scheme: instance k of a run with master seed s uses the stream
seeded by ``derive_seed(s, k)``.  Serial and parallel execution therefore see
identical draws.
"""

from __future__ import annotations

from fractions import Fraction

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB
_SPLIT = 0xD2B74407B1CE6E93


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK
    return z ^ (z >> 31)


def derive_seed(master: int, index: int) -> int:
    """Seed for the index-th substream of a master seed."""
    return _mix((master ^ ((index * _SPLIT) & _MASK)) & _MASK)


class Stream:
    """splitmix64 generator yielding 64-bit words and exact rational draws."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def bits64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        return _mix(self._state)

    def uniform(self, lo: Fraction, hi: Fraction) -> Fraction:
        """Dyadic rational uniform on [lo, hi): lo + (hi-lo) * k / 2^64."""
        k = self.bits64()
        return lo + (hi - lo) * Fraction(k, 1 << 64)

    def int_in(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi] (rejection-free modulo bias is fine here)."""
        span = hi - lo + 1
        return lo + self.bits64() % span

    def nonzero_int(self, bound: int) -> int:
        """Uniform nonzero integer in [-bound, bound]."""
        while True:
            v = self.int_in(-bound, bound)
            if v != 0:
                return v
