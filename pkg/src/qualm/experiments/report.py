# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

from __future__ import annotations

import io
import json
import math
from dataclasses import asdict, dataclass, field
from os import PathLike
from typing import Any

import pandas as pd

from ..core.errors import NumericError
from ..sampling.rng import ALGORITHM
from .config import ExperimentConfig

SCHEMA_VERSION = '1'

ROW_COLUMNS = (
    'experiment',
    'n',
    'c',
    'estimate',
    'stderr',
    'samples',
    'seed',
    'model',
    'sample_max',
)
TRAJECTORY_COLUMNS = ('t', 'purity', 'entropy')


def code_version() -> str:
    from .. import __version__

    return __version__


@dataclass(frozen=True)
class ReportRow:
    """
    One parameter point of an experiment.

    Parameters
    ----------
    experiment:
        Experiment name.
    n:
        Number of qubits.
    c:
        Coarseness of the measurement or channel; zero for the computational basis.
    estimate:
        Point estimate in bits.
    stderr:
        Monte Carlo standard error of ``estimate``, nonnegative.
    samples:
        Number of samples.
    seed:
        Root seed of the run.
    model:
        Complexity model name.
    sample_max:
        Largest sampled value, to flag tail dominance.
    extras:
        Experiment-specific columns.
    wall_time:
        Seconds spent on this point.
    """

    experiment: str
    n: int
    c: int
    estimate: float
    stderr: float
    samples: int
    seed: int
    model: str
    sample_max: float = math.nan
    extras: dict[str, Any] = field(default_factory=dict)
    wall_time: float = 0.0

    def __post_init__(self) -> None:
        if not self.stderr >= 0:
            raise NumericError(
                f'Standard error must be nonnegative, got {self.stderr}.'
            )

    def flat(self) -> dict[str, Any]:
        out = {name: getattr(self, name) for name in ROW_COLUMNS}
        out.update(self.extras)
        out['wall_time'] = self.wall_time
        return out


@dataclass
class Report:
    """
    The result of an experiment run, with the config that produced it.

    Parameters
    ----------
    config:
        The experiment config.
    rows:
        One row per parameter point.
    trajectory:
        Sieve trajectory rows ``(t, purity, entropy)``, for the trajectory experiment.
    algorithmic:
        The algorithmic sieve record ``{'model', 'value'}`` of a trajectory.
    """

    config: ExperimentConfig
    rows: list[ReportRow] = field(default_factory=list)
    trajectory: pd.DataFrame | None = None
    algorithmic: dict[str, Any] | None = None

    @property
    def experiment(self) -> str:
        return self.config.experiment

    def to_frame(self) -> pd.DataFrame:
        """
        The plot-ready table: trajectory rows for a trajectory run, otherwise one
        row per parameter point.
        """
        if self.trajectory is not None:
            return self.trajectory.loc[:, list(TRAJECTORY_COLUMNS)]
        frame = pd.DataFrame([row.flat() for row in self.rows])
        if frame.empty:
            return pd.DataFrame(columns=[*ROW_COLUMNS, 'wall_time'])
        return frame

    def to_csv(self) -> str:
        """
        CSV text of :meth:`to_frame`. A trajectory's algorithmic record is written
        as a leading ``#`` comment line.
        """
        buffer = io.StringIO()
        buffer.write(f'# schema_version: {SCHEMA_VERSION}\n')
        if self.algorithmic is not None:
            buffer.write(
                f"# algorithmic: model={self.algorithmic['model']} "
                f"value={self.algorithmic['value']!r}\n"
            )
        self.to_frame().to_csv(buffer, index=False)
        return buffer.getvalue()

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            'schema_version': SCHEMA_VERSION,
            'experiment': self.experiment,
            'code_version': code_version(),
            'rng': ALGORITHM,
            'config': self.config.to_dict(),
            'rows': [asdict(row) for row in self.rows],
        }
        if self.trajectory is not None:
            out['trajectory'] = self.trajectory.to_dict(orient='records')
        if self.algorithmic is not None:
            out['algorithmic'] = dict(self.algorithmic)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def write(self, path: str | PathLike, format: str | None = None) -> None:
        """
        Write the report as CSV or JSON.

        Parameters
        ----------
        path:
            Output file.
        format:
            ``'csv'`` or ``'json'``; defaults to the config's format.
        """
        format = format or self.config.format
        text = self.to_json() if format == 'json' else self.to_csv()
        with open(path, 'w', encoding='utf-8') as f:
            f.write(text)


def read_csv(path: str | PathLike) -> pd.DataFrame:
    """Read a CSV report back, skipping its comment lines."""
    return pd.read_csv(path, comment='#')


def read_json(path: str | PathLike) -> dict[str, Any]:
    with open(path, encoding='utf-8') as f:
        return json.load(f)


def to_data_array(report: Report):
    """
    Estimates as a ``scipp.DataArray`` over ``n`` with variances ``stderr**2``, one
    ``c`` slice per coarseness value. A trajectory report becomes a ``scipp.Dataset``
    of purity and entropy over ``t``.

    Requires the optional ``scipp`` dependency.
    """
    try:
        import scipp as sc
    except ImportError:
        raise RuntimeError(
            "Failed to import `scipp`. "
            "Converting reports requires the optional dependency: "
            "install with `pip install qualm[scipp]`."
        ) from None

    if report.trajectory is not None:
        t = sc.array(dims=['t'], values=report.trajectory['t'].to_numpy(dtype=float))
        return sc.Dataset(
            data={
                name: sc.array(
                    dims=['t'],
                    values=report.trajectory[name].to_numpy(dtype=float),
                    unit='dimensionless',
                )
                for name in ('purity', 'entropy')
            },
            coords={'t': t},
        )

    frame = report.to_frame()
    frame = frame.sort_values(['c', 'n'])
    ns = sorted(frame['n'].unique())
    cs = sorted(frame['c'].unique())
    table = frame.set_index(['c', 'n'])
    values = table['estimate'].unstack('n').reindex(index=cs, columns=ns)
    errors = table['stderr'].unstack('n').reindex(index=cs, columns=ns)
    return sc.DataArray(
        data=sc.array(
            dims=['c', 'n'],
            values=values.to_numpy(dtype=float),
            variances=errors.to_numpy(dtype=float) ** 2,
            unit='dimensionless',
        ),
        coords={
            'n': sc.array(dims=['n'], values=ns, unit=None),
            'c': sc.array(dims=['c'], values=cs, unit=None),
        },
        name=report.experiment,
    )
