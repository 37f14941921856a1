# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

"""Signal strength of states collapsed by a coarse projective measurement."""

import logging
import time

from ..core.errors import ConfigError
from ..estimators.encoding import OutcomeEncoding, side_string
from ..estimators.information import self_info_hat
from ..measurement.measure import measure_pure
from ..measurement.povm import block_pvm
from ..sampling.rng import SeededRng
from ..sampling.samplers import collapsed_sample
from .config import ExperimentConfig
from .report import Report, ReportRow
from .runner import map_trials, summarize, worker_model

logger = logging.getLogger(__name__)


def collapse_trial(task: tuple[int, int, str, int, int]) -> float:
    n, c, model_name, seed, trial = task
    psi, _ = collapsed_sample(n, c, SeededRng(seed, (n, c, trial)))
    p = measure_pure(psi, block_pvm(n, c))
    return self_info_hat(
        worker_model(model_name), p, OutcomeEncoding.for_blocks(n, c), side_string(n)
    )


def exp_collapse_uptake(cfg: ExperimentConfig) -> Report:
    """
    For each ``(n, c)``, collapse Haar states with ``block_pvm(n, c)``, measure them
    again and report ``log2`` of the mean of ``2^Ip`` of the (point mass) outcome
    probability, with block outcomes written as ``(n - c)``-bit strings.

    The lower bound ``n - 2c`` is reported alongside.

    Parameters
    ----------
    cfg:
        The experiment config.
    """
    points = [(n, c) for n in cfg.n for c in cfg.c]
    for n, c in points:
        if not 1 <= c <= n:
            raise ConfigError(f'Collapse needs 1 <= c <= n, got n={n}, c={c}.')
    report = Report(cfg)
    for n, c in points:
        start = time.perf_counter()
        tasks = [(n, c, cfg.model, cfg.seed, trial) for trial in range(cfg.samples)]
        summary = summarize(map_trials(collapse_trial, tasks, cfg.workers))
        logger.info('collapse n=%d c=%d: %.4f bits', n, c, summary.estimate)
        report.rows.append(
            ReportRow(
                experiment=cfg.experiment,
                n=n,
                c=c,
                estimate=summary.estimate,
                stderr=summary.stderr,
                samples=summary.samples,
                seed=cfg.seed,
                model=cfg.model,
                sample_max=summary.sample_max,
                extras={'lower_bound': n - 2 * c},
                wall_time=time.perf_counter() - start,
            )
        )
    return report
