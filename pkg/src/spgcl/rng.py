"""Deterministic, splittable random number generation.

The generator is counter-mode SplitMix64: draw ``i`` of a stream seeded with
``s`` is ``mix(s + i * GOLDEN)`` where ``mix`` is the SplitMix64 finalizer
(xor-shift / multiply rounds). Everything reduces to exact 64-bit integer
arithmetic, so identical seeds and call sequences give bit-identical outputs
on every platform. Independent streams for different purposes (edge drop,
weight init, SVD sketch) are derived with :meth:`SeededRng.split`.
"""

from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3


def mix64(z: int) -> int:
    """SplitMix64 finalizer on a Python int (exact, wraps mod 2**64)."""
    z &= MASK64
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & MASK64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & MASK64
    return z ^ (z >> 31)


def _mix64_array(z: np.ndarray) -> np.ndarray:
    z = z.astype(np.uint64)
    z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    return z ^ (z >> np.uint64(31))


def _label_hash(label) -> int:
    """FNV-1a over the UTF-8 repr of a label (str or int)."""
    h = _FNV_OFFSET
    for b in repr(label).encode("utf-8"):
        h = ((h ^ b) * _FNV_PRIME) & MASK64
    return h


class SeededRng:
    """Splittable deterministic RNG.

    State is (seed, counter); every bulk draw of n values advances the
    counter by the number of raw 64-bit words consumed.
    """

    def __init__(self, seed: int, _counter: int = 0):
        self.seed = int(seed) & MASK64
        self._counter = int(_counter)

    def split(self, *labels) -> "SeededRng":
        """Derive an independent child stream named by ``labels``."""
        s = self.seed
        for label in labels:
            s = mix64(s ^ _label_hash(label))
        return SeededRng(s)

    def _raw(self, n: int) -> np.ndarray:
        idx = np.arange(self._counter + 1, self._counter + n + 1, dtype=np.uint64)
        self._counter += n
        return _mix64_array(np.uint64(self.seed) + idx * np.uint64(GOLDEN))

    def integers(self, n: int) -> np.ndarray:
        """n raw uint64 words."""
        return self._raw(n)

    def uniform(self, shape) -> np.ndarray:
        """Uniform float64 in [0, 1) with 53-bit resolution."""
        n = int(np.prod(shape)) if not np.isscalar(shape) else int(shape)
        u = (self._raw(n) >> np.uint64(11)).astype(np.float64) * 2.0**-53
        return u.reshape(shape)

    def normal(self, shape, std: float = 1.0) -> np.ndarray:
        """Zero-mean Gaussians via Box-Muller on uniform pairs."""
        n = int(np.prod(shape)) if not np.isscalar(shape) else int(shape)
        m = (n + 1) // 2
        w = self._raw(2 * m)
        u1 = ((w[:m] >> np.uint64(11)).astype(np.float64) + 1.0) * 2.0**-53  # (0, 1]
        u2 = (w[m:] >> np.uint64(11)).astype(np.float64) * 2.0**-53
        r = np.sqrt(-2.0 * np.log(u1))
        theta = 2.0 * np.pi * u2
        z = np.concatenate([r * np.cos(theta), r * np.sin(theta)])[:n]
        return (std * z).reshape(shape)

    def permutation(self, n: int) -> np.ndarray:
        """Uniform permutation of range(n) by sorting random 64-bit keys."""
        return np.argsort(self._raw(n), kind="stable")

    def choice(self, n: int, k: int) -> np.ndarray:
        """k distinct indices from range(n), uniform, returned ascending."""
        if k > n:
            raise ValueError(f"cannot choose {k} of {n} without replacement")
        picked = self.permutation(n)[:k]
        return np.sort(picked)
