# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

import numpy as np
import pytest

from qualm.core.errors import ConfigError
from qualm.experiments.collapse import collapse_trial, exp_collapse_uptake
from qualm.experiments.config import ExperimentConfig


@pytest.mark.parametrize(('n', 'c'), [(6, 1), (6, 2), (8, 2), (10, 3)])
def test_collapsed_states_score_exactly_n_minus_c(n, c):
    cfg = ExperimentConfig('collapse', n=(n,), c=(c,), samples=30)
    (row,) = exp_collapse_uptake(cfg).rows
    assert row.estimate == n - c
    assert row.stderr == 0.0
    assert row.estimate >= row.extras['lower_bound']


def test_full_coarseness_scores_zero():
    assert collapse_trial((4, 4, 'length', 0, 0)) == 0.0


def test_codec_model_runs():
    cfg = ExperimentConfig('collapse', n=(6,), c=(2,), samples=5, model='codec')
    (row,) = exp_collapse_uptake(cfg).rows
    assert row.estimate >= 0.0
    assert row.model == 'codec'


@pytest.mark.parametrize('c', [0, 7])
def test_coarseness_out_of_range(c):
    cfg = ExperimentConfig('collapse', n=(6,), c=(c,), samples=2)
    with pytest.raises(ConfigError, match='1 <= c <= n'):
        exp_collapse_uptake(cfg)


@pytest.mark.slow
def test_codec_fresh_seed_rerun_agrees():
    cfg = ExperimentConfig('collapse', n=(8,), c=(2,), samples=200, model='codec')
    (first,) = exp_collapse_uptake(cfg).rows
    (second,) = exp_collapse_uptake(cfg.reseeded(1)).rows
    bound = 3 * np.hypot(first.stderr, second.stderr)
    assert abs(first.estimate - second.estimate) <= bound
