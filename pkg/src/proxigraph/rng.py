"""Deterministic 64-bit random stream (splitmix64).

All stochastic clustering initialization draws from this stream so a fixed
seed reproduces bit-identical results across runs and platforms.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:
    """splitmix64 generator; seed is a 64-bit unsigned integer."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 bits of precision."""
        return (self.next_u64() >> 11) * 2.0**-53

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) without modulo bias."""
        if n <= 0:
            raise ValueError(f"n must be positive, got {n}")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            v = self.next_u64()
            if v < limit:
                return v % n

    def sample(self, n: int, k: int) -> list[int]:
        """k distinct indices from range(n), uniformly without replacement."""
        if not 0 <= k <= n:
            raise ValueError(f"cannot sample {k} of {n}")
        pool = list(range(n))
        for i in range(k):
            j = i + self.below(n - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]

    def weighted(self, weights) -> int:
        """Index drawn with probability proportional to its weight.

        Weights must be non-negative with a positive total; zero-weight
        entries are never selected.
        """
        total = float(sum(weights))
        if not total > 0:
            raise ValueError("total weight must be positive")
        r = self.random() * total
        acc = 0.0
        last_positive = -1
        for i, w in enumerate(weights):
            if w > 0:
                last_positive = i
                acc += w
                if r < acc:
                    return i
        return last_positive
