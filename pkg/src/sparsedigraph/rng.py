"""Deterministic random streams shared by every generator in this package."""

from __future__ import annotations

import numpy as np

_REFILL = 8192


class RandomStream:
    """Seeded random stream with a fixed, platform-stable algorithm.

    Wraps numpy's Philox 4x64 counter-based bit generator keyed by
    ``(seed, stream)``.  Philox output is a pure function of key and counter,
    so a given seed produces the same draw sequence on every platform and
    numpy build.  All randomized code in this package consumes uniform
    doubles in ``[0, 1)`` from this class in a documented order, which makes
    every generator reproducible from its seed alone.

    Parallel or repeated runs use :meth:`substream`: replicate ``i`` of seed
    ``s`` draws from the independent stream keyed ``(s, i)``.  Note that
    ``substream(0)`` coincides with the root stream for the same seed.

    Parameters
    ----------
    seed : int
        Base seed.  Any Python int; reduced modulo 2**64.
    stream : int, optional
        Substream index, default 0.
    """

    __slots__ = ("_seed", "_stream", "_gen", "_buf", "_pos")

    def __init__(self, seed: int, stream: int = 0):
        self._seed = int(seed)
        self._stream = int(stream)
        key = np.array(
            [self._seed & 0xFFFFFFFFFFFFFFFF, self._stream & 0xFFFFFFFFFFFFFFFF],
            dtype=np.uint64,
        )
        self._gen = np.random.Generator(np.random.Philox(key=key))
        self._buf = np.empty(0)
        self._pos = 0

    @property
    def seed(self) -> int:
        return self._seed

    @property
    def stream(self) -> int:
        return self._stream

    def substream(self, index: int) -> "RandomStream":
        """Return the independent stream keyed ``(seed, index)``."""
        return RandomStream(self._seed, index)

    def next_float(self) -> float:
        """Next uniform double in ``[0, 1)`` from this stream."""
        if self._pos == len(self._buf):
            self._buf = self._gen.random(_REFILL)
            self._pos = 0
        x = self._buf[self._pos]
        self._pos += 1
        return float(x)

    def float_block(self, n: int) -> np.ndarray:
        """Next ``n`` uniform doubles, in stream order, as one array.

        Draws are taken from the same sequence as :meth:`next_float`; block
        requests never skip or reorder values, so how callers batch their
        draws has no effect on what they get.
        """
        n = int(n)
        out = np.empty(n)
        have = len(self._buf) - self._pos
        if have >= n:
            out[:] = self._buf[self._pos : self._pos + n]
            self._pos += n
        else:
            out[:have] = self._buf[self._pos :]
            out[have:] = self._gen.random(n - have)
            self._buf = np.empty(0)
            self._pos = 0
        return out

    def __repr__(self) -> str:
        return f"RandomStream(seed={self._seed}, stream={self._stream})"
