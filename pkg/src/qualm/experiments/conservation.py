# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

"""Self-information before and after processing by a classical channel."""

import logging
import time

import numpy as np
from scipy import stats

from ..classical.channels import apply_channel, coarsen_kernel, gaussian_convolve
from ..classical.probability import ChannelKernel, FiniteProbability, GridProbability1D
from ..core.errors import ConfigError
from ..data.factory import sparse_probability
from ..estimators.encoding import OutcomeEncoding, side_string
from ..estimators.information import self_info_hat
from ..measurement.measure import measure_pure
from ..measurement.povm import computational_pvm
from ..sampling.rng import SeededRng
from ..sampling.samplers import haar_pure
from .config import ExperimentConfig
from .report import Report, ReportRow
from .runner import map_trials, worker_model

logger = logging.getLogger(__name__)


def prepare_measure_kernel(n: int, rng: SeededRng) -> ChannelKernel:
    """
    The channel of preparing an independent Haar state for each of the ``2^n``
    inputs and measuring it in the computational basis.

    Parameters
    ----------
    n:
        Number of qubits.
    rng:
        The random stream.
    """
    pvm = computational_pvm(n)
    return ChannelKernel.from_rows(
        [measure_pure(haar_pure(n, rng), pvm) for _ in range(2**n)]
    )


def channel_input(kind: str, n: int, rng: SeededRng) -> FiniteProbability:
    """
    A random input over ``2^n`` outcomes: a point mass at a uniform index
    (``'point'``) or a sparse random probability (``'structured'``).
    """
    size = 2**n
    if kind == 'point':
        return FiniteProbability.point_mass(int(rng.generator.integers(size)), size)
    return sparse_probability(size, rng.generator)


def process(
    channel: str, p: FiniteProbability, n: int, c: int, rng: SeededRng
) -> FiniteProbability:
    """
    Pass ``p`` through the named channel.

    Parameters
    ----------
    channel:
        ``'identity'``, ``'coarsen'`` (merge blocks of ``2^c`` outcomes),
        ``'prepare-measure'`` (see :func:`prepare_measure_kernel`) or
        ``'gaussian'`` (smear over a grid with standard deviation ``2^c`` cells).
    p:
        The input probability over ``2^n`` outcomes.
    n:
        Number of qubits.
    c:
        Coarseness of the channel.
    rng:
        The random stream, for channels with random parameters.
    """
    size = 2**n
    if channel == 'identity':
        return apply_channel(ChannelKernel.identity(size), p)
    if channel == 'coarsen':
        return apply_channel(coarsen_kernel(size, 2**c), p)
    if channel == 'prepare-measure':
        return apply_channel(prepare_measure_kernel(n, rng), p)
    if channel == 'gaussian':
        grid = GridProbability1D(0.0, 1.0, p.weights)
        return gaussian_convolve(grid, float(2**c)).as_finite()
    raise ConfigError(f"Unknown channel '{channel}'.")


def self_info(p: FiniteProbability, n: int, model_name: str) -> float:
    enc = OutcomeEncoding.for_outcomes(p.size)
    return self_info_hat(worker_model(model_name), p, enc, side_string(n))


def conservation_trial(task: tuple[int, int, str, str, str, int, int]) -> float:
    n, c, channel, kind, model_name, seed, trial = task
    rng = SeededRng(seed, (n, c, trial))
    p = channel_input(kind, n, rng)
    after = process(channel, p, n, c, rng)
    return self_info(after, n, model_name) - self_info(p, n, model_name)


def sign_test(differences: np.ndarray) -> float:
    """
    One-sided sign test p-value that differences are more often negative than
    positive. Zero differences are dropped; without any nonzero difference the
    p-value is one.
    """
    negative = int(np.sum(differences < 0))
    nonzero = negative + int(np.sum(differences > 0))
    if nonzero == 0:
        return 1.0
    return float(stats.binomtest(negative, nonzero, 0.5, alternative='greater').pvalue)


def exp_channel_conservation(cfg: ExperimentConfig) -> Report:
    """
    Paired change of self-information when inputs pass through a channel.

    For each ``(n, c)``, ``cfg.samples`` random inputs are processed and the
    differences ``Ip(after) - Ip(before)`` are summarized by their median (the
    estimate), the standard error of their mean and a sign-test p-value.

    Parameters
    ----------
    cfg:
        The experiment config.
    """
    report = Report(cfg)
    for n in cfg.n:
        for c in cfg.c:
            if cfg.channel in ('coarsen', 'gaussian') and c > n:
                raise ConfigError(f'Coarseness c={c} exceeds n={n}.')
            start = time.perf_counter()
            tasks = [
                (n, c, cfg.channel, cfg.input, cfg.model, cfg.seed, trial)
                for trial in range(cfg.samples)
            ]
            diffs = np.array(map_trials(conservation_trial, tasks, cfg.workers))
            stderr = 0.0
            if diffs.size > 1:
                stderr = float(diffs.std(ddof=1) / np.sqrt(diffs.size))
            p_value = sign_test(diffs)
            median = float(np.median(diffs))
            logger.info(
                'conservation %s n=%d c=%d: median change %.4f bits, p=%.3g',
                cfg.channel,
                n,
                c,
                median,
                p_value,
            )
            report.rows.append(
                ReportRow(
                    experiment=cfg.experiment,
                    n=n,
                    c=c,
                    estimate=median,
                    stderr=stderr,
                    samples=int(diffs.size),
                    seed=cfg.seed,
                    model=cfg.model,
                    sample_max=float(diffs.max()),
                    extras={
                        'channel': cfg.channel,
                        'input': cfg.input,
                        'mean_change': float(diffs.mean()),
                        'negative': int(np.sum(diffs < 0)),
                        'positive': int(np.sum(diffs > 0)),
                        'sign_p_value': p_value,
                    },
                    wall_time=time.perf_counter() - start,
                )
            )
    return report
