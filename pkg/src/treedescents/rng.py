"""Deterministic random number generation for reproducible experiments.

The generator is xoshiro256** (256-bit state) seeded through splitmix64,
with rejection-sampled bounded draws and a descending Fisher-Yates
shuffle. Every step is defined in pure 64-bit integer arithmetic so the
compiled kernel reproduces the exact same stream bit for bit; tests assert
the two implementations agree. Reports record the generator name.
"""

from __future__ import annotations

_M64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15

RNG_NAME = "xoshiro256**"


def _splitmix64(state: int) -> tuple[int, int]:
    state = (state + _GOLDEN) & _M64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
    return z ^ (z >> 31), state


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & _M64


class Xoshiro256StarStar:
    """xoshiro256** stream; explicit integer seed, portable output."""

    name = RNG_NAME

    def __init__(self, seed: int):
        state = seed & _M64
        words = []
        for _ in range(4):
            word, state = _splitmix64(state)
            words.append(word)
        if not any(words):
            words[0] = _GOLDEN
        self._s = words

    def next_u64(self) -> int:
        s = self._s
        result = (_rotl((s[1] * 5) & _M64, 7) * 9) & _M64
        t = (s[1] << 17) & _M64
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = _rotl(s[3], 45)
        return result

    def bounded(self, n: int) -> int:
        """Uniform draw from 0..n-1, unbiased via rejection."""
        if n <= 0:
            raise ValueError("bound must be positive")
        # accept x < 2**64 - (2**64 mod n), i.e. below the largest multiple of n
        rem = (1 << 64) % n
        while True:
            x = self.next_u64()
            if x <= _M64 - rem:
                return x % n

    def shuffle(self, items: list) -> None:
        """In-place descending Fisher-Yates shuffle."""
        for i in range(len(items) - 1, 0, -1):
            j = self.bounded(i + 1)
            items[i], items[j] = items[j], items[i]


def derive_seed(seed: int, *salts: int) -> int:
    """Mix extra integers into a seed for independent substreams.

    Used to give each scan row and each sampled tree its own documented
    seed; the composition is deterministic and order-sensitive.
    """
    x = seed & _M64
    for salt in salts:
        x ^= (salt * _GOLDEN) & _M64
        x, _ = _splitmix64(x)
    return x
