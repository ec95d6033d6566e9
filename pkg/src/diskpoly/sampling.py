"""Deterministic sample-point generation for the verification suites.

Reproducibility across platforms matters more than statistical quality
here, so points come from a fixed 64-bit linear congruential generator
rather than from numpy's RNG (whose stream is not guaranteed stable
across releases).  The generator is

    state <- (6364136223846793005 * state + 1442695040888963407) mod 2^64

(the MMIX multiplier/increment), seeded directly with the user seed.
A uniform double in [0, 1) is the top 53 bits of the state scaled by
2^-53.  A disk point of radius bound ``rmax`` consumes two uniforms
u1, u2 in that order and is

    z = rmax * sqrt(u2) * exp(2j * pi * u1)

which is area-uniform on the disk of radius rmax.
"""

import cmath
import math

__all__ = ["Lcg64", "disk_points"]

_A = 6364136223846793005
_C = 1442695040888963407
_MASK = (1 << 64) - 1


class Lcg64:
    """Minimal 64-bit LCG with a [0, 1) double output."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (_A * self.state + _C) & _MASK
        return self.state

    def uniform(self) -> float:
        return (self.next_u64() >> 11) * 2.0**-53


def disk_points(seed: int, count: int, rmax: float) -> list[complex]:
    """Return ``count`` area-uniform points with |z| <= rmax, reproducibly."""
    rng = Lcg64(seed)
    pts = []
    for _ in range(count):
        u1 = rng.uniform()
        u2 = rng.uniform()
        pts.append(rmax * math.sqrt(u2) * cmath.exp(2j * math.pi * u1))
    return pts
