# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

"""Algorithmic predictability under priors within a factor ``2^c`` of Haar."""

import logging
import time

import numpy as np

from ..sampling.rng import SeededRng
from ..sampling.samplers import quantile_weight, rejection_sample
from ..sieve.sieves import sieve_algorithmic
from .config import ExperimentConfig
from .report import Report, ReportRow
from .runner import map_trials, summarize, worker_model
from .white_noise import pure_trial

logger = logging.getLogger(__name__)

# Appended to the trial key so biased draws do not reuse the Haar baseline's streams.
_BIASED_STREAM = 1


def biased_trial(task: tuple[int, float, float, str, int, int]) -> tuple[float, int]:
    n, c_bias, q, model_name, seed, trial = task
    rng = SeededRng(seed, (n, 0, trial, _BIASED_STREAM))
    psi, attempts = rejection_sample(n, c_bias, quantile_weight(n, c_bias, q), rng)
    return sieve_algorithmic(psi, worker_model(model_name)), attempts


def exp_biased_prior(cfg: ExperimentConfig) -> Report:
    """
    For each ``n``, ``log2`` of the mean of ``2^s`` of the algorithmic sieve score
    under a biased prior, next to the Haar baseline.

    The prior accepts Haar states whose ``|<0|psi>|^2`` lies above the
    ``cfg.bias_quantile`` Haar quantile, so its density is at most ``2^c_bias``
    times the Haar density.

    Parameters
    ----------
    cfg:
        The experiment config.
    """
    report = Report(cfg)
    q = cfg.bias_quantile
    for n in cfg.n:
        start = time.perf_counter()
        trials = range(cfg.samples)
        biased = map_trials(
            biased_trial,
            [(n, cfg.c_bias, q, cfg.model, cfg.seed, t) for t in trials],
            cfg.workers,
        )
        baseline_tasks = [(n, cfg.model, cfg.seed, t, None) for t in trials]
        baseline = summarize(map_trials(pure_trial, baseline_tasks, cfg.workers))
        summary = summarize(value for value, _ in biased)
        acceptance = cfg.samples / float(np.sum([attempts for _, attempts in biased]))
        logger.info(
            'biased prior n=%d: %.4f bits vs baseline %.4f bits, acceptance %.3f',
            n,
            summary.estimate,
            baseline.estimate,
            acceptance,
        )
        report.rows.append(
            ReportRow(
                experiment=cfg.experiment,
                n=n,
                c=0,
                estimate=summary.estimate,
                stderr=summary.stderr,
                samples=summary.samples,
                seed=cfg.seed,
                model=cfg.model,
                sample_max=summary.sample_max,
                extras={
                    'c_bias': cfg.c_bias,
                    'quantile': q,
                    'baseline': baseline.estimate,
                    'baseline_stderr': baseline.stderr,
                    'acceptance_rate': acceptance,
                },
                wall_time=time.perf_counter() - start,
            )
        )
    return report
