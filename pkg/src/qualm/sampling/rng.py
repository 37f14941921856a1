# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

from __future__ import annotations

import numpy as np

from ..core.errors import ConfigError

ALGORITHM = f'numpy-{np.__version__}/SeedSequence/PCG64'


class SeededRng:
    """
    A reproducible random stream identified by a seed and a derivation key.

    The stream is a :class:`numpy.random.PCG64` generator fed by
    ``SeedSequence(seed, spawn_key=key)``, so equal ``(seed, key)`` pairs give
    identical samples and different keys give independent streams.

    Parameters
    ----------
    seed:
        A 64-bit nonnegative integer.
    key:
        Integers identifying the sub-stream, e.g. ``(n, trial)``.
    """

    __slots__ = ('_generator', '_key', '_seed')

    def __init__(self, seed: int, key: tuple[int, ...] = ()) -> None:
        if not 0 <= seed < 2**64:
            raise ConfigError(f'Seed {seed} is not a 64-bit nonnegative integer.')
        self._seed = int(seed)
        self._key = tuple(int(k) for k in key)
        sequence = np.random.SeedSequence(self._seed, spawn_key=self._key)
        self._generator = np.random.Generator(np.random.PCG64(sequence))

    @property
    def seed(self) -> int:
        return self._seed

    @property
    def key(self) -> tuple[int, ...]:
        return self._key

    @property
    def algorithm(self) -> str:
        return ALGORITHM

    @property
    def generator(self) -> np.random.Generator:
        return self._generator

    def derive(self, *key: int) -> SeededRng:
        """A fresh, independent stream with ``key`` appended to this one's key."""
        return SeededRng(self._seed, self._key + key)

    def __repr__(self) -> str:
        return f'SeededRng(seed={self._seed}, key={self._key})'
