# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

from __future__ import annotations

import zlib
from abc import abstractmethod
from collections.abc import Sequence

import numpy as np

from ..core.registry import Registry
from .tiny_machine import TinyMachineTable, cached_table


def bit_length(x: bytes) -> int:
    """
    Payload size of ``x`` in bits.

    A string of ASCII ``0``/``1`` digits is a bit string and counts one bit per
    digit; any other byte string counts eight bits per byte.
    """
    if not x.strip(b'01'):
        return len(x)
    return 8 * len(x)


class ComplexityModel:
    """
    A computable stand-in for prefix complexity, answering base queries
    ``K(x | side)`` and conditional queries ``K(y | x, side)`` in bits.
    """

    name: str = ''

    @abstractmethod
    def base_complexity(self, x: bytes, side: bytes = b'') -> float:
        """
        Complexity of ``x`` given the auxiliary string ``side``, in bits.
        """
        ...

    @abstractmethod
    def conditional_complexity(self, y: bytes, x: bytes, side: bytes = b'') -> float:
        """
        Complexity of ``y`` given ``x`` and ``side``, in bits.
        """
        ...

    def joint_complexity(self, x: bytes, y: bytes, side: bytes = b'') -> float:
        """
        ``K(x, y)`` as the cheaper of both chain-rule orders, which makes it symmetric.
        """
        return min(
            self.base_complexity(x, side) + self.conditional_complexity(y, x, side),
            self.base_complexity(y, side) + self.conditional_complexity(x, y, side),
        )

    def mutual_information(self, x: bytes, y: bytes, side: bytes = b'') -> float:
        """``max(0, K(x) + K(y) - K(x, y))``."""
        value = (
            self.base_complexity(x, side)
            + self.base_complexity(y, side)
            - self.joint_complexity(x, y, side)
        )
        return max(0.0, value)

    def mutual_information_matrix(
        self, strings: Sequence[bytes], side: bytes = b''
    ) -> np.ndarray:
        """
        Pairwise mutual information of ``strings``.

        Parameters
        ----------
        strings:
            The strings to compare.
        side:
            The auxiliary string every query is conditioned on.
        """
        base = np.array([self.base_complexity(x, side) for x in strings])
        # chained[a, b] = K(a) + K(b | a)
        cond = [
            [self.conditional_complexity(y, x, side) for y in strings] for x in strings
        ]
        chained = base[:, None] + np.array(cond)
        joint = np.minimum(chained, chained.T)
        return np.clip(base[:, None] + base[None, :] - joint, 0.0, None)

    def __repr__(self) -> str:
        return f'{type(self).__name__}()'


class _EqualityConditional(ComplexityModel):
    """
    Models whose conditional complexity is zero on equal strings and the full base
    complexity otherwise, so mutual information is ``K(x)`` on the diagonal and zero
    elsewhere.
    """

    def conditional_complexity(self, y: bytes, x: bytes, side: bytes = b'') -> float:
        return 0.0 if y == x else self.base_complexity(y, side)

    def mutual_information_matrix(
        self, strings: Sequence[bytes], side: bytes = b''
    ) -> np.ndarray:
        base = np.array([self.base_complexity(x, side) for x in strings], dtype=float)
        _, labels = np.unique(np.array(strings, dtype=object), return_inverse=True)
        labels = labels.ravel()
        equal = labels[:, None] == labels[None, :]
        return np.where(equal, base[:, None], 0.0)


class ZeroModel(_EqualityConditional):
    """Every string is free: all complexities are zero."""

    name = 'zero'

    def base_complexity(self, x: bytes, side: bytes = b'') -> float:
        return 0.0


class LengthModel(_EqualityConditional):
    """``K(x | side)`` is the bit length of ``x``, see :func:`bit_length`."""

    name = 'length'

    def base_complexity(self, x: bytes, side: bytes = b'') -> float:
        return float(bit_length(x))


class CodecModel(ComplexityModel):
    """
    Compression-length complexity with raw DEFLATE at a fixed level.

    ``K(x | side) = 8 (C(side x) - C(side))`` and
    ``K(y | x, side) = 8 (C(side x y) - C(side x))``, clamped at zero, where ``C`` is
    the compressed size in bytes. Conditioning a string on itself costs a few
    bytes of codec overhead rather than zero, see :attr:`slack`.

    Parameters
    ----------
    level:
        The zlib compression level.
    """

    name = 'codec'
    #: Bound on the overhead, in bits, of ``K(x | x)`` and of subadditivity gaps.
    slack = 64.0

    def __init__(self, level: int = 9) -> None:
        self._level = level

    @property
    def level(self) -> int:
        return self._level

    @property
    def identity(self) -> str:
        return f'zlib-{zlib.ZLIB_RUNTIME_VERSION}/raw-deflate/level-{self._level}'

    def compressed_size(self, data: bytes) -> int:
        compressor = zlib.compressobj(self._level, zlib.DEFLATED, -15)
        return len(compressor.compress(data) + compressor.flush())

    def base_complexity(self, x: bytes, side: bytes = b'') -> float:
        extra = self.compressed_size(side + x) - self.compressed_size(side)
        return 8.0 * max(0, extra)

    def conditional_complexity(self, y: bytes, x: bytes, side: bytes = b'') -> float:
        extra = self.compressed_size(side + x + y) - self.compressed_size(side + x)
        return 8.0 * max(0, extra)

    def __repr__(self) -> str:
        return f'CodecModel(level={self._level})'


class TinyMachineModel(_EqualityConditional):
    """
    Exact bounded complexity from an enumerated tiny-machine table, falling back to
    the bit length for strings beyond the table's horizon. The side string is not
    used: every table entry is an unconditional complexity.

    Parameters
    ----------
    table:
        The enumeration table.
    """

    name = 'tiny'

    def __init__(self, table: TinyMachineTable) -> None:
        self._table = table

    @classmethod
    def from_cache(cls, max_bits: int = 16, budget: int = 64) -> TinyMachineModel:
        return cls(cached_table(max_bits, budget))

    @property
    def table(self) -> TinyMachineTable:
        return self._table

    def base_complexity(self, x: bytes, side: bytes = b'') -> float:
        value = self._table.complexity(x)
        return float(bit_length(x) if value is None else value)

    def __repr__(self) -> str:
        return f'TinyMachineModel(table={self._table.key!r})'


models = Registry(
    'complexity model',
    {
        'zero': ZeroModel,
        'length': LengthModel,
        'codec': CodecModel,
        'tiny': TinyMachineModel.from_cache,
    },
)


def make_model(name: str, **kwargs) -> ComplexityModel:
    """
    A fresh instance of the complexity model registered under ``name``.

    Parameters
    ----------
    name:
        One of ``'zero'``, ``'length'``, ``'codec'``, ``'tiny'`` or a name added with
        ``models.register``.
    **kwargs:
        Passed to the model's factory.
    """
    return models.create(name, **kwargs)
