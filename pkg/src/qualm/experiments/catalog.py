# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

from ..core.registry import Registry
from .config import ExperimentConfig
from .report import Report

experiments = Registry(
    'experiment',
    {
        'white-noise': '.white_noise:exp_white_noise_pure',
        'white-noise-mixed': '.white_noise:exp_white_noise_mixed',
        'collapse': '.collapse:exp_collapse_uptake',
        'biased-prior': '.biased_prior:exp_biased_prior',
        'conservation': '.conservation:exp_channel_conservation',
        'trajectory': '.trajectory:exp_sieve_trajectory',
        'pointer-average': '.trajectory:exp_pointer_average',
    },
    package=__package__,
)


def run_experiment(cfg: ExperimentConfig) -> Report:
    """
    Run the experiment named by ``cfg.experiment``.

    Parameters
    ----------
    cfg:
        The experiment config.
    """
    return experiments.create(cfg.experiment, cfg)
