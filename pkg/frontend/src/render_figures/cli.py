"""Command line: render the standard figure panel sets from sweep CSVs.

Usage:
    render_figures --csv FILE [--csv FILE2] --figure {fig2|fig3|...|fig8|all} --outdir DIR

fig2 is the six-panel mixed-run figure (one CSV).  fig3..fig8 are two-panel
same-vs-opposite-helicity figures of one quantity each (two CSVs, the
same-helicity file first).  `all` renders everything the given CSV count
supports.
"""

from __future__ import annotations

import argparse
import os
import sys

import matplotlib.pyplot as plt

from .panels import (
    FIGURE_IDS,
    PAIR_FIGURES,
    RenderError,
    load_grid,
    mixed_panel_figure,
    parity_pair_figure,
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="render_figures", description=__doc__)
    parser.add_argument(
        "--csv",
        action="append",
        required=True,
        help="sweep CSV (repeat for two-panel figures: same-helicity first)",
    )
    parser.add_argument(
        "--figure", choices=FIGURE_IDS + ("all",), required=True
    )
    parser.add_argument("--outdir", required=True)
    return parser


def _figures_for(figure: str, csv_count: int) -> list[str]:
    if figure != "all":
        return [figure]
    if csv_count == 1:
        return ["fig2"]
    return sorted(PAIR_FIGURES)


def run(csvs: list[str], figure: str, outdir: str) -> list[str]:
    os.makedirs(outdir, exist_ok=True)
    written = []
    for fig_id in _figures_for(figure, len(csvs)):
        if fig_id == "fig2":
            if len(csvs) != 1:
                raise RenderError("fig2 takes exactly one (mixed-run) CSV")
            fig = mixed_panel_figure(load_grid(csvs[0]))
        else:
            if len(csvs) != 2:
                raise RenderError(
                    f"{fig_id} takes two CSVs (same-helicity first, opposite second)"
                )
            quantity = PAIR_FIGURES[fig_id]
            fig = parity_pair_figure(load_grid(csvs[0]), load_grid(csvs[1]), quantity)
        out_path = os.path.join(outdir, f"{fig_id}.png")
        fig.savefig(out_path, dpi=150)
        plt.close(fig)
        written.append(out_path)
    return written


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        for path in run(args.csv, args.figure, args.outdir):
            print(f"wrote {path}")
    except RenderError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
