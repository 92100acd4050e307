"""Heat-map figure renderer for qfim-scatter sweep CSVs."""

from .panels import (
    FIGURE_IDS,
    MIXED_PANEL_QUANTITIES,
    PAIR_FIGURES,
    PanelSpec,
    RenderError,
    SweepGrid,
    draw_panel,
    load_grid,
    mixed_panel_figure,
    parity_pair_figure,
    render,
)

__all__ = [
    "FIGURE_IDS",
    "MIXED_PANEL_QUANTITIES",
    "PAIR_FIGURES",
    "PanelSpec",
    "RenderError",
    "SweepGrid",
    "draw_panel",
    "load_grid",
    "mixed_panel_figure",
    "parity_pair_figure",
    "render",
]
