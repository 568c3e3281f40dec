"""
Seeded, splittable random streams.

Every run owns its own streams. A stream is identified by a master seed and a
64-bit stream id; the pair fully determines the sequence of draws, so any
experiment cell can be replayed bit-exactly regardless of scheduling.
"""

import hashlib
from typing import Any

import numpy as np

_UINT64_MAX = 2 ** 64 - 1


def stream_id_for(*parts: Any) -> int:
    """
    Derives a 64-bit stream id from an ordered tuple of labels.

    Args:
        *parts: Hashable labels, e.g. ("agent", scenario, repeat, "b-PD").

    Returns:
        int: A stable unsigned 64-bit id.
    """
    text = "\x1f".join(str(part) for part in parts)
    digest = hashlib.blake2b(text.encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "little")


class RngStream:
    """
    A counter-based random stream (Philox) keyed by (seed, stream id).

    Attribute access falls through to the underlying numpy Generator, so a
    stream is used exactly like ``numpy.random.Generator``.
    """

    def __init__(self, seed: int, stream_id: int = 0):
        """
        Initialize a new instance of the RngStream class.

        Args:
            seed (int): Master seed, unsigned 64-bit.
            stream_id (int, optional): Stream id, unsigned 64-bit.

        Raises:
            ValueError: When seed or stream_id are outside the unsigned 64-bit range.
        """
        for name, value in (("seed", seed), ("stream_id", stream_id)):
            if not isinstance(value, (int, np.integer)) or not 0 <= int(value) <= _UINT64_MAX:
                raise ValueError(f"{name} must be an unsigned 64-bit integer, got {value!r}")

        self.seed = int(seed)
        self.stream_id = int(stream_id)
        sequence = np.random.SeedSequence(entropy=self.seed, spawn_key=(self.stream_id,))
        self._generator = np.random.Generator(np.random.Philox(sequence))

    @classmethod
    def derive(cls, seed: int, *parts: Any) -> "RngStream":
        """
        Creates the stream for a labelled purpose under a master seed.

        Args:
            seed (int): Master seed.
            *parts: Labels identifying the stream.

        Returns:
            RngStream: The derived stream.
        """
        return cls(seed, stream_id_for(*parts))

    @property
    def generator(self) -> np.random.Generator:
        return self._generator

    def __getattr__(self, name):
        if name.startswith("_"):
            raise AttributeError(name)
        return getattr(self._generator, name)

    def __repr__(self):
        return f"RngStream(seed={self.seed}, stream_id={self.stream_id})"
