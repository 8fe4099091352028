"""Seedable 64-bit PRNG with a fixed, documented algorithm.

Generators and seeded analyses use SplitMix64 (Steele, Lea & Flood's
mixing function, the seeding generator of the xoshiro family) so that a
given seed produces the same stream on every platform and in any other
implementation of the same algorithm:

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    output = z ^ (z >> 31)

Bounded integers use rejection sampling on the high bits, floats take
the top 53 bits, shuffles are backward Fisher-Yates.
"""

MASK64 = (1 << 64) - 1


class SplitMix64:
    """Deterministic stream of 64-bit words from a single integer seed."""

    __slots__ = ("state",)

    def __init__(self, seed):
        self.state = int(seed) & MASK64

    def next_u64(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def random(self):
        """Uniform float in [0, 1) with 53 bits of precision."""
        return (self.next_u64() >> 11) * (2.0 ** -53)

    def randint(self, lo, hi):
        """Uniform integer in [lo, hi] inclusive, bias-free by rejection."""
        if lo > hi:
            raise ValueError(f"empty integer range [{lo}, {hi}]")
        span = hi - lo + 1
        threshold = (1 << 64) - ((1 << 64) % span)
        while True:
            word = self.next_u64()
            if word < threshold:
                return lo + (word % span)

    def shuffle(self, items):
        """In-place Fisher-Yates shuffle from the last position down."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randint(0, i)
            items[i], items[j] = items[j], items[i]

    def choice(self, items):
        return items[self.randint(0, len(items) - 1)]

    def sample_pair(self, n):
        """Uniform ordered pair (u, v), u != v, both below n."""
        u = self.randint(0, n - 1)
        v = self.randint(0, n - 2)
        if v >= u:
            v += 1
        return u, v
