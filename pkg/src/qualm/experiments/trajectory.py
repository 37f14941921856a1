# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

import logging
import time

import pandas as pd

from ..core.errors import ConfigError
from ..data.factory import named_state
from ..estimators.models import make_model
from ..sieve.decoherence import DecoherenceParams
from ..sieve.sieves import (
    pointer_average,
    sieve_algorithmic,
    sieve_entropy,
    sieve_purity,
)
from .config import ExperimentConfig
from .report import Report, ReportRow

logger = logging.getLogger(__name__)


def exp_sieve_trajectory(cfg: ExperimentConfig) -> Report:
    """
    Purity and entropy of ``cfg.state`` at every time of ``cfg.t``, and its
    algorithmic sieve score. ``cfg.n`` must hold a single qubit count.

    Parameters
    ----------
    cfg:
        The experiment config.
    """
    if len(cfg.n) != 1:
        raise ConfigError(f'A trajectory is computed for a single n, got {cfg.n}.')
    (n,) = cfg.n
    state = named_state(cfg.state, n)
    params = DecoherenceParams(cfg.tau)
    trajectory = pd.DataFrame(
        {
            't': list(cfg.t),
            'purity': [sieve_purity(state, t, params) for t in cfg.t],
            'entropy': [sieve_entropy(state, t, params) for t in cfg.t],
        }
    )
    value = sieve_algorithmic(state, make_model(cfg.model))
    logger.info('Algorithmic sieve of %s (n=%d): %.4f bits', cfg.state, n, value)
    return Report(
        cfg, trajectory=trajectory, algorithmic={'model': cfg.model, 'value': value}
    )


def exp_pointer_average(cfg: ExperimentConfig) -> Report:
    """
    The exact average algorithmic sieve score of the ``2^n`` pointer states, for
    each ``n``.

    Parameters
    ----------
    cfg:
        The experiment config.
    """
    model = make_model(cfg.model)
    report = Report(cfg)
    for n in cfg.n:
        start = time.perf_counter()
        value = pointer_average(n, model)
        report.rows.append(
            ReportRow(
                experiment=cfg.experiment,
                n=n,
                c=0,
                estimate=value,
                stderr=0.0,
                samples=2**n,
                seed=cfg.seed,
                model=cfg.model,
                wall_time=time.perf_counter() - start,
            )
        )
    return report
