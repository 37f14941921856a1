# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

import logging
from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, TypeVar

import numpy as np

from ..core.errors import ConfigError
from ..estimators.models import ComplexityModel, make_model
from ..measurement.povm import PovmSet, load_povm

logger = logging.getLogger(__name__)

T = TypeVar('T')

# A single sample carrying more than this share of the mean is reported.
TAIL_SHARE = 0.5


@dataclass(frozen=True)
class Summary:
    """
    Monte Carlo estimate of ``log2 E[2^v]`` from samples ``v``.

    Parameters
    ----------
    estimate:
        ``log2`` of the sample mean of ``2^v``.
    stderr:
        Standard error of the mean of ``2^v``, propagated through ``log2``.
    samples:
        Number of samples.
    sample_max:
        The largest sample ``v``.
    """

    estimate: float
    stderr: float
    samples: int
    sample_max: float


def summarize(values: Iterable[float]) -> Summary:
    """
    Reduce samples ``v`` to ``log2 mean(2^v)`` with a propagated standard error.

    The error of the mean ``m`` of ``2^v`` is ``s / sqrt(N)`` and becomes
    ``s / (sqrt(N) m ln 2)`` in bits. A single sample has zero error.

    Parameters
    ----------
    values:
        The sampled exponents, in bits.
    """
    v = np.asarray(list(values), dtype=float)
    if v.size == 0:
        raise ConfigError('Cannot summarize an empty sample.')
    top = float(v.max())
    # Scaled by 2^-max so large exponents do not overflow; the ratio is exact.
    scaled = np.exp2(v - top)
    mean = float(scaled.mean())
    estimate = top + float(np.log2(mean))
    if v.size == 1:
        stderr = 0.0
    else:
        spread = float(scaled.std(ddof=1))
        stderr = spread / np.sqrt(v.size) / (mean * np.log(2.0))
        if 1.0 / scaled.sum() > TAIL_SHARE:
            logger.info(
                'One of %d samples carries %.0f%% of the mean; the estimate is '
                'tail dominated.',
                v.size,
                100.0 / scaled.sum(),
            )
    return Summary(estimate, float(stderr), int(v.size), top)


def map_trials(fn: Callable[[Any], T], tasks: list[Any], workers: int = 1) -> list[T]:
    """
    Evaluate ``fn`` on every task, in a process pool when ``workers > 1``.

    Results are returned in task order, so reductions do not depend on the worker
    count.

    Parameters
    ----------
    fn:
        A module-level function of one picklable task.
    tasks:
        The tasks.
    workers:
        Number of worker processes.
    """
    if workers <= 1 or len(tasks) <= 1:
        return [fn(task) for task in tasks]
    chunksize = max(1, len(tasks) // (4 * workers))
    logger.debug('Running %d trials on %d workers', len(tasks), workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, tasks, chunksize=chunksize))


@lru_cache(maxsize=8)
def worker_model(name: str) -> ComplexityModel:
    """The complexity model ``name``, built once per process."""
    return make_model(name)


@lru_cache(maxsize=8)
def worker_povm(path: str) -> PovmSet:
    """The POVM stored at ``path``, read once per process."""
    return load_povm(path)
