# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

"""
A tiny prefix-free machine whose programs are enumerated exhaustively.

Instruction set ``tm-1``. A program is a sequence of instructions ending with
``HALT``; since the instruction codes form a prefix-free code, so do programs.

========  =====================================================
code      effect on the output string
========  =====================================================
``00``    ZERO: append ``0``
``01``    ONE: append ``1``
``100``   DOUBLE: append a copy of the output to itself
``101bb`` REPEAT: run the last non-REPEAT instruction ``bb + 1`` more times
``110``   INVERT: flip every bit of the output
``111``   HALT: stop, the output is the result
========  =====================================================

Every executed instruction costs one step. A REPEAT before any other
instruction does nothing.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ..core.errors import ConfigError

logger = logging.getLogger(__name__)

INSTRUCTION_SET = 'tm-1'
MAX_PROGRAM_BITS = 20

ZERO, ONE, DOUBLE, INVERT = 'zero', 'one', 'double', 'invert'

_PRIMITIVES = ((ZERO, 2), (ONE, 2), (DOUBLE, 3), (INVERT, 3))
_REPEAT_BITS = 5
_HALT_BITS = 3
_INVERT_TABLE = bytes.maketrans(b'01', b'10')


def _execute(op: str, output: bytes) -> bytes:
    if op == ZERO:
        return output + b'0'
    if op == ONE:
        return output + b'1'
    if op == DOUBLE:
        return output + output
    return output.translate(_INVERT_TABLE)


@dataclass(frozen=True)
class TinyMachineTable:
    """
    Shortest program length for every output of a bounded enumeration.

    Parameters
    ----------
    max_bits:
        Programs of at most this many bits were enumerated.
    budget:
        Step budget of each program run.
    complexities:
        Output string to the length of its shortest program.
    partial:
        Whether some program was cut off by the step budget, in which case its
        output (and possibly shorter descriptions of other outputs) is missing.
    """

    max_bits: int
    budget: int
    complexities: dict[bytes, int]
    partial: bool = False

    def complexity(self, x: bytes) -> int | None:
        """The recorded complexity of ``x``, or ``None`` if it exceeds ``max_bits``."""
        return self.complexities.get(x)

    def __contains__(self, x: bytes) -> bool:
        return x in self.complexities

    def __len__(self) -> int:
        return len(self.complexities)

    @property
    def key(self) -> str:
        return cache_key(self.max_bits, self.budget)


def enumerate_tiny_machine(max_bits: int, budget: int = 64) -> TinyMachineTable:
    """
    Run every ``tm-1`` program of at most ``max_bits`` bits and record, for each
    output, the length of the shortest program producing it.

    Parameters
    ----------
    max_bits:
        Maximum program length in bits, at most 20.
    budget:
        Maximum number of executed instructions per program.
    """
    if not 0 <= max_bits <= MAX_PROGRAM_BITS:
        raise ConfigError(
            f'Program length bound must lie in [0, {MAX_PROGRAM_BITS}], got {max_bits}.'
        )
    if budget < 1:
        raise ConfigError(f'Step budget must be positive, got {budget}.')
    table: dict[bytes, int] = {}
    partial = False
    # (bits used, output, last non-repeat op, steps used)
    stack: list[tuple[int, bytes, str | None, int]] = [(0, b'', None, 0)]
    while stack:
        bits, output, last, steps = stack.pop()
        if bits + _HALT_BITS <= max_bits:
            length = bits + _HALT_BITS
            if table.get(output, max_bits + 1) > length:
                table[output] = length
        for op, size in _PRIMITIVES:
            if bits + size + _HALT_BITS > max_bits:
                continue
            if steps + 1 > budget:
                partial = True
                continue
            stack.append((bits + size, _execute(op, output), op, steps + 1))
        if last is not None and bits + _REPEAT_BITS + _HALT_BITS <= max_bits:
            for count in range(1, 5):
                if steps + count > budget:
                    partial = True
                    break
                repeated = output
                for _ in range(count):
                    repeated = _execute(last, repeated)
                stack.append((bits + _REPEAT_BITS, repeated, last, steps + count))
    if partial:
        logger.info(
            'Tiny-machine enumeration to %d bits hit the step budget %d; '
            'the table is partial.',
            max_bits,
            budget,
        )
    return TinyMachineTable(max_bits, budget, table, partial)


def cache_key(max_bits: int, budget: int) -> str:
    return f'{INSTRUCTION_SET}-L{max_bits}-b{budget}'


def cache_dir() -> Path:
    """
    Directory of cached tables: ``$QUALM_CACHE_DIR`` if set, else the per-user
    cache directory of ``qualm``.
    """
    override = os.environ.get('QUALM_CACHE_DIR')
    if override:
        return Path(override)
    import pooch

    return Path(pooch.os_cache('qualm'))


def save_table(table: TinyMachineTable, path: str | os.PathLike) -> None:
    outputs = sorted(table.complexities)
    np.savez(
        path,
        outputs=np.array([x.decode('ascii') for x in outputs], dtype=np.str_),
        complexities=np.array([table.complexities[x] for x in outputs], dtype=np.int64),
        meta=np.array(
            [table.max_bits, table.budget, int(table.partial)], dtype=np.int64
        ),
        instruction_set=np.array(INSTRUCTION_SET),
    )


def load_table(path: str | os.PathLike) -> TinyMachineTable:
    with np.load(path, allow_pickle=False) as data:
        if str(data['instruction_set']) != INSTRUCTION_SET:
            raise ConfigError(
                f'Table {path} was built for instruction set '
                f"'{data['instruction_set']}', expected '{INSTRUCTION_SET}'."
            )
        max_bits, budget, partial = (int(v) for v in data['meta'])
        complexities = {
            str(x).encode('ascii'): int(k)
            for x, k in zip(data['outputs'], data['complexities'], strict=True)
        }
    return TinyMachineTable(max_bits, budget, complexities, bool(partial))


def cached_table(max_bits: int, budget: int = 64) -> TinyMachineTable:
    """
    The enumeration table for ``(max_bits, budget)``, read from the cache directory
    or computed and stored there.
    """
    path = cache_dir() / f'{cache_key(max_bits, budget)}.npz'
    if path.exists():
        logger.debug('Loading tiny-machine table from %s', path)
        return load_table(path)
    table = enumerate_tiny_machine(max_bits, budget)
    path.parent.mkdir(parents=True, exist_ok=True)
    save_table(table, path)
    logger.info('Cached %d tiny-machine outputs in %s', len(table), path)
    return table
