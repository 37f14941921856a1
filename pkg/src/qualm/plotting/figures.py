# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

from io import BytesIO
from os import PathLike
from typing import Literal

import numpy as np
from matplotlib.figure import Figure

from ..experiments.report import Report


def report_figure(report: Report) -> Figure:
    """
    A figure of a report: estimates with standard-error bars against ``n``, one line
    per coarseness ``c``, or purity and entropy against time for a trajectory.

    The figure is not attached to pyplot, so nothing is shown unless requested.

    Parameters
    ----------
    report:
        The experiment report.
    """
    fig = Figure(figsize=(6.0, 4.0), layout='constrained')
    ax = fig.add_subplot()
    if report.trajectory is not None:
        _trajectory(ax, report)
    else:
        _estimates(ax, report)
    ax.set_title(report.experiment)
    return fig


def _estimates(ax, report: Report) -> None:
    frame = report.to_frame()
    for c, group in frame.groupby('c', sort=True):
        group = group.sort_values('n')
        ax.errorbar(
            group['n'],
            group['estimate'],
            yerr=group['stderr'],
            marker='o',
            capsize=3,
            label=f'c={c}',
        )
    ax.set_xlabel('n [qubits]')
    ax.set_ylabel(f'estimate [bits] ({report.config.model})')
    if frame['c'].nunique() > 1:
        ax.legend()


def _trajectory(ax, report: Report) -> None:
    frame = report.trajectory
    finite = frame[np.isfinite(frame['t'])]
    ax.plot(finite['t'], finite['purity'], marker='o', label='purity')
    ax.plot(finite['t'], finite['entropy'], marker='s', label='entropy [bits]')
    limit = frame[~np.isfinite(frame['t'])]
    for column, style in (('purity', ':'), ('entropy', '--')):
        for value in limit[column]:
            ax.axhline(value, linestyle=style, color='gray', linewidth=0.8)
    ax.set_xlabel(f't [tau = {report.config.tau}]')
    ax.legend()


def figure_to_bytes(fig: Figure, form: Literal['png', 'svg', 'pdf'] = 'png') -> bytes:
    """
    Render a figure to png (default), svg or pdf bytes.

    Parameters
    ----------
    fig:
        The figure.
    form:
        The format.
    """
    buf = BytesIO()
    fig.savefig(buf, format=form, bbox_inches='tight')
    buf.seek(0)
    return buf.getvalue()


def save_figure(report: Report, path: str | PathLike) -> None:
    """Save the figure of a report; the format follows the file extension."""
    report_figure(report).savefig(path, bbox_inches='tight')
