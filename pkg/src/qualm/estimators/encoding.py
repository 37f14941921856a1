# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

from __future__ import annotations

from dataclasses import dataclass

from ..core.errors import DimensionError


@dataclass(frozen=True)
class OutcomeEncoding:
    """
    Fixed-width big-endian binary strings for outcome indices.

    Outcome ``k`` becomes the ASCII string of its ``width`` binary digits, e.g.
    ``5 -> b'0101'`` at width 4. A single outcome is encoded as the empty string.

    Parameters
    ----------
    width:
        Number of binary digits per outcome.
    """

    width: int

    def __post_init__(self) -> None:
        if self.width < 0:
            raise DimensionError(
                f'Encoding width must be nonnegative, got {self.width}.'
            )

    @classmethod
    def for_qubits(cls, n: int) -> OutcomeEncoding:
        """``n``-bit strings for the ``2^n`` pointer outcomes of ``n`` qubits."""
        return cls(n)

    @classmethod
    def for_blocks(cls, n: int, c: int) -> OutcomeEncoding:
        """``(n - c)``-bit strings for the outcomes of ``block_pvm(n, c)``."""
        return cls(n - c)

    @classmethod
    def for_outcomes(cls, count: int) -> OutcomeEncoding:
        """The narrowest encoding of ``count`` outcomes."""
        if count < 1:
            raise DimensionError(f'Need at least one outcome, got {count}.')
        return cls((count - 1).bit_length())

    @property
    def capacity(self) -> int:
        return 1 << self.width

    def encode(self, k: int) -> bytes:
        if not 0 <= k < self.capacity:
            raise DimensionError(f'Outcome {k} does not fit in {self.width} bits.')
        if self.width == 0:
            return b''
        return format(k, f'0{self.width}b').encode('ascii')

    def decode(self, x: bytes) -> int:
        if len(x) != self.width or x.strip(b'01'):
            raise DimensionError(f'{x!r} is not a {self.width}-bit outcome string.')
        return int(x, 2) if x else 0


def side_string(n: int) -> bytes:
    """The auxiliary input ``n`` as a decimal string."""
    return str(n).encode('ascii')
