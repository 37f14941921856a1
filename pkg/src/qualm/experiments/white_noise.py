# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

"""Self-information of measured Haar and mixed states, which should stay O(1)."""

import logging
import time

from ..core.errors import ConfigError
from ..core.states import DensityMatrix
from ..estimators.encoding import OutcomeEncoding, side_string
from ..estimators.information import self_info_hat
from ..estimators.models import ComplexityModel
from ..measurement.measure import measure, measure_pure
from ..measurement.povm import PovmSet, computational_pvm
from ..sampling.laws import parse_mixture
from ..sampling.rng import SeededRng
from ..sampling.samplers import haar_pure, mixed_state
from ..sieve.sieves import sieve_algorithmic
from .config import ExperimentConfig
from .report import Report, ReportRow
from .runner import map_trials, summarize, worker_model, worker_povm

logger = logging.getLogger(__name__)


def measured_self_info(
    sigma: DensityMatrix, E: PovmSet, model: ComplexityModel
) -> float:
    """
    Estimated self-information of the outcome probability of measuring ``E`` on
    ``sigma``, with outcomes written in the narrowest fixed width and the number
    of qubits as side information.

    Parameters
    ----------
    sigma:
        The state.
    E:
        The measurement.
    model:
        The complexity model.
    """
    enc = OutcomeEncoding.for_outcomes(E.outcome_count)
    return self_info_hat(model, measure(sigma, E), enc, side_string(E.qubit_count))


def _measurement(n: int, povm: str | None) -> PovmSet:
    if povm is None:
        return computational_pvm(n)
    E = worker_povm(povm)
    if E.dim != 2**n:
        raise ConfigError(
            f'The POVM in {povm} acts on dimension {E.dim}, not on {n} qubits.'
        )
    return E


def pure_trial(task: tuple[int, str, int, int, str | None]) -> float:
    n, model_name, seed, trial, povm = task
    model = worker_model(model_name)
    psi = haar_pure(n, SeededRng(seed, (n, 0, trial)))
    if povm is None:
        return sieve_algorithmic(psi, model)
    E = _measurement(n, povm)
    enc = OutcomeEncoding.for_outcomes(E.outcome_count)
    return self_info_hat(model, measure_pure(psi, E), enc, side_string(n))


def mixed_trial(task: tuple[int, str, int, int, str | None, str, int]) -> float:
    n, model_name, seed, trial, povm, eta, components = task
    spec = parse_mixture(eta, components)
    sigma = mixed_state(n, spec, SeededRng(seed, (n, 0, trial)))
    return measured_self_info(sigma, _measurement(n, povm), worker_model(model_name))


def _run(cfg: ExperimentConfig, trial, extra_task: tuple = ()) -> Report:
    report = Report(cfg)
    for n in cfg.n:
        start = time.perf_counter()
        tasks = [
            (n, cfg.model, cfg.seed, trial_index, cfg.povm, *extra_task)
            for trial_index in range(cfg.samples)
        ]
        summary = summarize(map_trials(trial, tasks, cfg.workers))
        logger.info(
            '%s n=%d: %.4f +- %.4f bits',
            cfg.experiment,
            n,
            summary.estimate,
            summary.stderr,
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
                wall_time=time.perf_counter() - start,
            )
        )
    return report


def exp_white_noise_pure(cfg: ExperimentConfig) -> Report:
    """
    For each ``n``, ``log2`` of the mean of ``2^s`` over Haar states, where ``s`` is
    the algorithmic sieve score (or, with a configured POVM, the self-information
    of the measured outcome probability).

    Parameters
    ----------
    cfg:
        The experiment config.
    """
    return _run(cfg, pure_trial)


def exp_white_noise_mixed(cfg: ExperimentConfig) -> Report:
    """
    As :func:`exp_white_noise_pure` for mixed states of ``cfg.components`` Haar
    components weighted by the simplex law ``cfg.eta``.

    Parameters
    ----------
    cfg:
        The experiment config.
    """
    spec = parse_mixture(cfg.eta, cfg.components)
    logger.info('Mixed-state weights: %s', spec.describe())
    return _run(cfg, mixed_trial, (cfg.eta, cfg.components))
