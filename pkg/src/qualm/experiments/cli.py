# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

"""The ``qualm`` command line."""

import argparse
import logging
import sys
from collections.abc import Sequence

from ..core.errors import QualmError
from .catalog import run_experiment
from .config import EXPERIMENTS, ExperimentConfig, load_config

logger = logging.getLogger(__name__)

_HELP = {
    'white-noise': 'Self-information of measured Haar states.',
    'white-noise-mixed': 'Self-information of measured mixed states.',
    'collapse': 'Signal strength after collapse by a block measurement.',
    'biased-prior': 'Algorithmic sieve under a prior biased by at most 2^c.',
    'conservation': 'Change of self-information through a classical channel.',
    'trajectory': 'Purity and entropy of a state while it decoheres.',
    'pointer-average': 'Exact average algorithmic sieve of the pointer states.',
}


def _common_arguments() -> argparse.ArgumentParser:
    # Defaults are None so that only flags given on the command line override
    # the config file.
    parent = argparse.ArgumentParser(add_help=False)
    add = parent.add_argument
    add('--config', help='TOML file with keys mirroring these flags.')
    add('--n', help="Qubit counts, 'a:b' (inclusive) or 'a,b,...'.")
    add('--c', help='Coarseness values, same syntax as --n.')
    add('--samples', type=int, help='Monte Carlo samples per point.')
    add('--model', help='Complexity model: zero, length, codec or tiny.')
    add('--seed', type=int, help='Root seed.')
    add('--eta', help="Simplex law of mixture weights, e.g. 'dirichlet:alpha=1'.")
    add('--components', type=int, help='Components of mixed states.')
    add('--povm', help='JSON file of the measurement for white-noise runs.')
    add('--c-bias', dest='c_bias', type=float, help='Log2 bound of the biased prior.')
    add('--quantile', type=float, help='Haar quantile favoured by the biased prior.')
    add('--channel', help='identity, coarsen, prepare-measure or gaussian.')
    add('--input', help='structured or point.')
    add('--tau', type=float, help='Decoherence time constant.')
    add('--t', help="Time grid, e.g. '0,0.5,1,inf'.")
    add('--state', help="plus, ghz or basis:<index>.")
    add('--out', help='Output file; standard output if omitted.')
    add('--format', choices=['csv', 'json'], help='Output format.')
    add('--workers', type=int, help='Worker processes.')
    add('--plot', help='Also save a figure of the report to this file.')
    add('-v', '--verbose', action='count', default=0, help='More logging.')
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='qualm',
        description='Seeded Monte Carlo experiments on algorithmic signal strength '
        'of measured and decohered quantum states.',
    )
    sub = parser.add_subparsers(dest='experiment', required=True)
    parent = _common_arguments()
    for name in EXPERIMENTS:
        sub.add_parser(name, parents=[parent], help=_HELP[name])
    return parser


def config_from_args(args: argparse.Namespace) -> ExperimentConfig:
    """Merge the config file named by ``--config`` with the given flags."""
    values = vars(args).copy()
    path = values.pop('config')
    values.pop('verbose')
    if path is not None:
        return load_config(path, **values)
    given = {k: v for k, v in values.items() if v is not None}
    return ExperimentConfig.from_mapping(given)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format='%(levelname)s %(name)s: %(message)s')
    try:
        cfg = config_from_args(args)
        report = run_experiment(cfg)
    except QualmError as err:
        logger.error('%s', err)
        return 2
    if cfg.out is None:
        sys.stdout.write(report.to_json() if cfg.format == 'json' else report.to_csv())
    else:
        report.write(cfg.out)
        logger.info('Wrote %s report to %s', cfg.format, cfg.out)
    if cfg.plot is not None:
        from ..plotting.figures import save_figure

        save_figure(report, cfg.plot)
    return 0


if __name__ == '__main__':
    sys.exit(main())
