# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

from __future__ import annotations

import tomllib
from collections.abc import Mapping
from dataclasses import asdict, dataclass, fields, replace
from os import PathLike
from typing import Any

from ..core.errors import ConfigError

EXPERIMENTS = (
    'white-noise',
    'white-noise-mixed',
    'collapse',
    'biased-prior',
    'conservation',
    'trajectory',
    'pointer-average',
)
FORMATS = ('csv', 'json')
CHANNELS = ('identity', 'coarsen', 'prepare-measure', 'gaussian')
INPUTS = ('structured', 'point')
DEFAULT_TIMES = (0.0, 0.25, 0.5, 1.0, 2.0, 4.0, float('inf'))


def parse_int_range(text: str | int | list[int] | tuple[int, ...]) -> tuple[int, ...]:
    """
    Parse ``'a:b'`` (inclusive), ``'a,b,c'`` or a single integer.

    Parameters
    ----------
    text:
        The range, or an already parsed integer or list of integers.
    """
    if isinstance(text, int):
        return (text,)
    if isinstance(text, list | tuple):
        return tuple(int(v) for v in text)
    text = text.strip()
    try:
        if ':' in text:
            start, stop = text.split(':')
            values = tuple(range(int(start), int(stop) + 1))
        else:
            values = tuple(int(v) for v in text.split(',') if v.strip())
    except ValueError:
        raise ConfigError(f"Cannot parse integer range '{text}'.") from None
    if not values:
        raise ConfigError(f"Range '{text}' is empty.")
    return values


def parse_float_list(
    text: str | float | list[float] | tuple[float, ...],
) -> tuple[float, ...]:
    """Parse ``'0,0.5,inf'`` or a single number."""
    if isinstance(text, int | float):
        return (float(text),)
    if isinstance(text, list | tuple):
        return tuple(float(v) for v in text)
    try:
        values = tuple(float(v) for v in text.split(',') if v.strip())
    except ValueError:
        raise ConfigError(f"Cannot parse list of numbers '{text}'.") from None
    if not values:
        raise ConfigError(f"List '{text}' is empty.")
    return values


@dataclass(frozen=True)
class ExperimentConfig:
    """
    Everything that determines the outcome of an experiment run.

    Parameters
    ----------
    experiment:
        Which experiment to run, see :data:`EXPERIMENTS`.
    n:
        Qubit counts, one report row per value (and per ``c``).
    c:
        Coarseness values of block measurements and coarsening channels.
    samples:
        Monte Carlo sample count per parameter point.
    model:
        Registered complexity model name.
    seed:
        Root seed; every trial derives its own stream from it.
    eta:
        Simplex law of mixed-state weights, e.g. ``'dirichlet:alpha=0.5'``.
    components:
        Number of Haar components of mixed states.
    povm:
        JSON file of a POVM for the white-noise experiments; ``None`` measures in
        the computational basis.
    c_bias:
        Log2 of the bound of the biased prior relative to Haar.
    quantile:
        Haar quantile of ``|<0|psi>|^2`` above which the biased prior puts its
        weight; ``None`` uses ``1 - 2^-c_bias``, the largest value keeping the bound.
    channel:
        Channel of the conservation experiment, see :data:`CHANNELS`.
    input:
        Inputs of the conservation experiment, see :data:`INPUTS`.
    tau:
        Decoherence time constant.
    t:
        Time grid of the trajectory experiment.
    state:
        State of the trajectory experiment, see :func:`qualm.data.named_state`.
    out:
        Output path; ``None`` writes CSV to standard output.
    format:
        ``'csv'`` or ``'json'``.
    workers:
        Number of worker processes.
    plot:
        Path of an optional figure of the report.
    """

    experiment: str
    n: tuple[int, ...] = (4,)
    c: tuple[int, ...] = (1,)
    samples: int = 100
    model: str = 'length'
    seed: int = 0
    eta: str = 'dirichlet'
    components: int = 1
    povm: str | None = None
    c_bias: float = 0.0
    quantile: float | None = None
    channel: str = 'coarsen'
    input: str = 'structured'
    tau: float = 1.0
    t: tuple[float, ...] = DEFAULT_TIMES
    state: str = 'plus'
    out: str | None = None
    format: str = 'csv'
    workers: int = 1
    plot: str | None = None

    def __post_init__(self) -> None:
        if self.experiment not in EXPERIMENTS:
            raise ConfigError(
                f"Unknown experiment '{self.experiment}'. "
                f'Available: {list(EXPERIMENTS)}.'
            )
        if not self.n or min(self.n) < 1:
            raise ConfigError(f'Qubit counts must be positive, got {self.n}.')
        if not self.c or min(self.c) < 0:
            raise ConfigError(f'Coarseness values must be nonnegative, got {self.c}.')
        if self.samples < 1:
            raise ConfigError(f'Need at least one sample, got samples={self.samples}.')
        if not 0 <= self.seed < 2**64:
            raise ConfigError(f'Seed {self.seed} is not a 64-bit nonnegative integer.')
        if self.format not in FORMATS:
            raise ConfigError(f"Unknown format '{self.format}'. Use one of {FORMATS}.")
        if self.channel not in CHANNELS:
            raise ConfigError(
                f"Unknown channel '{self.channel}'. Use one of {CHANNELS}."
            )
        if self.input not in INPUTS:
            raise ConfigError(f"Unknown input '{self.input}'. Use one of {INPUTS}.")
        if self.workers < 1:
            raise ConfigError(f'Need at least one worker, got workers={self.workers}.')
        if self.components < 1:
            raise ConfigError(f'Need at least one component, got {self.components}.')
        if self.c_bias < 0:
            raise ConfigError(f'c_bias must be nonnegative, got {self.c_bias}.')
        if not self.tau > 0:
            raise ConfigError(f'tau must be positive, got {self.tau}.')
        if not self.t or min(self.t) < 0:
            raise ConfigError(f'Times must be nonnegative, got {self.t}.')
        if self.quantile is not None and not (
            0 <= self.quantile <= self.max_quantile
        ):
            raise ConfigError(
                f'Quantile {self.quantile} would bias the prior beyond '
                f'2^{self.c_bias}; '
                f'it must lie in [0, {self.max_quantile}].'
            )

    @property
    def max_quantile(self) -> float:
        return 1.0 - 2.0 ** (-self.c_bias)

    @property
    def bias_quantile(self) -> float:
        return self.max_quantile if self.quantile is None else self.quantile

    @classmethod
    def from_mapping(cls, values: Mapping[str, Any]) -> ExperimentConfig:
        """
        Build a config from loosely typed values, e.g. a parsed TOML table.

        Parameters
        ----------
        values:
            Config keys and values. ``n`` and ``c`` may be range strings and ``t``
            a comma-separated list.
        """
        known = {f.name for f in fields(cls)}
        unknown = set(values) - known
        if unknown:
            raise ConfigError(f'Unknown config keys: {sorted(unknown)}.')
        kwargs = dict(values)
        for key in ('n', 'c'):
            if key in kwargs:
                kwargs[key] = parse_int_range(kwargs[key])
        if 't' in kwargs:
            kwargs['t'] = parse_float_list(kwargs['t'])
        if 'experiment' not in kwargs:
            raise ConfigError('The config does not name an experiment.')
        return cls(**kwargs)

    def updated(self, **overrides: Any) -> ExperimentConfig:
        """A copy with the given keys replaced; ``None`` values are ignored."""
        changes = {k: v for k, v in overrides.items() if v is not None}
        merged = {**self.to_dict(), **changes}
        return type(self).from_mapping(merged)

    def to_dict(self) -> dict[str, Any]:
        out = asdict(self)
        out['n'] = list(self.n)
        out['c'] = list(self.c)
        out['t'] = list(self.t)
        return out

    def reseeded(self, seed: int) -> ExperimentConfig:
        return replace(self, seed=seed)


def load_config(path: str | PathLike, **overrides: Any) -> ExperimentConfig:
    """
    Read a TOML config file. Keys mirror the command-line flags; ``overrides`` that
    are not ``None`` take precedence over the file.

    Parameters
    ----------
    path:
        The TOML file.
    **overrides:
        Values replacing those of the file.
    """
    try:
        with open(path, 'rb') as f:
            values = tomllib.load(f)
    except OSError as err:
        raise ConfigError(f'Cannot read config file {path}: {err}') from None
    except tomllib.TOMLDecodeError as err:
        raise ConfigError(f'Cannot parse config file {path}: {err}') from None
    values.update({k: v for k, v in overrides.items() if v is not None})
    return ExperimentConfig.from_mapping(values)
