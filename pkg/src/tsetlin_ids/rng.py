"""Counter-based random streams for reproducible training.

One master seed is split into independent substreams keyed by
(step, clause), so per-clause updates can run in any order (or in
parallel) and still produce bit-identical models.  The generator is
splitmix64; `_kernels.py` carries an equivalent compiled copy and the
two are required to agree draw for draw (see tests).
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1

_GOLDEN = 0x9E3779B97F4A7C15
_STREAM_SALT = 0xD1B54A32D192ED03
_INIT_SALT = 0x8CB92BA72F3D8DD7
_SHUFFLE_SALT = 0xE7037ED1A0B428DB


def mix64(x: int) -> int:
    """splitmix64 finalizer: a 64-bit bijective hash."""
    x &= MASK64
    x ^= x >> 30
    x = (x * 0xBF58476D1CE4E5B9) & MASK64
    x ^= x >> 27
    x = (x * 0x94D049BB133111EB) & MASK64
    x ^= x >> 31
    return x


def stream_seed(master_seed: int, step: int, clause: int) -> int:
    """Seed of the substream owned by `clause` during training step `step`."""
    h = mix64((master_seed + _GOLDEN * (step + 1)) & MASK64)
    return mix64(h ^ ((clause + 1) * _STREAM_SALT & MASK64))


def init_seed(master_seed: int) -> int:
    """Seed used once for the initial TA state layout."""
    return mix64(master_seed ^ _INIT_SALT)


def shuffle_seed(master_seed: int, epoch: int) -> int:
    """Seed of the per-epoch sample permutation."""
    return mix64(mix64(master_seed ^ _SHUFFLE_SALT) ^ mix64(epoch))


class SplitMix64:
    """Tiny stateful stream over the splitmix64 sequence."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GOLDEN) & MASK64
        return mix64(self.state)

    def next_float(self) -> float:
        """Uniform float64 in [0, 1)."""
        return (self.next_u64() >> 11) * 2.0**-53

    def next_below(self, n: int) -> int:
        """Uniform integer in [0, n). Modulo bias is negligible for n << 2^64."""
        return self.next_u64() % n
