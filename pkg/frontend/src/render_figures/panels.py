"""Heat-map panels over the (p, theta) grid of a sweep CSV.

Each CSV row is one grid point; panels are rendered cell-per-grid-point with
no interpolation and axis extents equal to the grid extents.  Colour scales:
log for quantities spanning decades, symmetric-log for signed quantities,
linear otherwise.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np
from matplotlib import colors


class RenderError(Exception):
    """Malformed input or unsatisfiable panel specification."""


REQUIRED_COLUMNS = ("p_MeV", "theta_rad")

# quantity -> (axis label, colour scale)
QUANTITY_STYLES = {
    "I_pp": (r"$I_{pp}$ [MeV$^{-2}$]", "log"),
    "I_ptheta": (r"$I_{p\theta}$ [MeV$^{-1}$rad$^{-1}$]", "symlog"),
    "I_thetatheta": (r"$I_{\theta\theta}$ [rad$^{-2}$]", "log"),
    "cfi_p_helicity": (r"CFI$_p$ (helicity) [MeV$^{-2}$]", "log"),
    "cfi_theta_helicity": (r"CFI$_\theta$ (helicity) [rad$^{-2}$]", "log"),
    "cfi_p_optimal": (r"CFI$_p$ (optimal) [MeV$^{-2}$]", "log"),
    "cfi_theta_optimal": (r"CFI$_\theta$ (optimal) [rad$^{-2}$]", "log"),
    "var_p_bound": (r"Var$[\hat p]$ [MeV$^2$]", "log"),
    "var_theta_bound": (r"Var$[\hat\theta]$ [rad$^2$]", "log"),
    "cov_ptheta_bound": (r"Cov$[\hat p,\hat\theta]$ [MeV rad]", "symlog"),
    "var_p_fixed_theta": (r"Var$[\hat p]_{\rm fixed\ \theta}$ [MeV$^2$]", "log"),
    "var_theta_fixed_p": (r"Var$[\hat\theta]_{\rm fixed\ p}$ [rad$^2$]", "log"),
    "snr_p": (r"SNR$_p$", "linear"),
    "snr_theta": (r"SNR$_\theta$", "linear"),
    "snr_p_fixed_theta": (r"SNR$_{p,\rm fixed\ \theta}$", "linear"),
    "snr_theta_fixed_p": (r"SNR$_{\theta,\rm fixed\ p}$", "linear"),
    "concurrence_eplus_p": (r"$C(e_+^{(p)})$", "linear"),
    "concurrence_eminus_p": (r"$C(e_-^{(p)})$", "linear"),
    "concurrence_eplus_theta": (r"$C(e_+^{(\theta)})$", "linear"),
    "concurrence_eminus_theta": (r"$C(e_-^{(\theta)})$", "linear"),
}

# six-panel layout of a mixed-run figure, in reading order
MIXED_PANEL_QUANTITIES = (
    "I_pp",
    "I_ptheta",
    "I_thetatheta",
    "snr_p",
    "cov_ptheta_bound",
    "snr_theta",
)

# figure id -> quantity of the two-panel (same vs opposite helicity) figure
PAIR_FIGURES = {
    "fig3": "I_pp",
    "fig4": "I_ptheta",
    "fig5": "I_thetatheta",
    "fig6": "snr_p",
    "fig7": "cov_ptheta_bound",
    "fig8": "snr_theta",
}

FIGURE_IDS = ("fig2",) + tuple(sorted(PAIR_FIGURES))


@dataclass(frozen=True)
class SweepGrid:
    """A sweep CSV reshaped onto its (p, theta) grid."""

    path: str
    p_values: np.ndarray
    theta_values: np.ndarray
    quantities: dict[str, np.ndarray] = field(repr=False)  # [i_p, i_theta]


@dataclass(frozen=True)
class PanelSpec:
    """One heat-map panel: a quantity column of one or two sweep CSVs."""

    csv_paths: tuple[str, ...]
    quantity: str
    x_label: str = "p [MeV]"
    y_label: str = r"$\theta$ [rad]"
    scale: str = ""  # empty -> per-quantity default
    out_path: str = ""


def load_grid(path: str) -> SweepGrid:
    """Read a sweep CSV and reshape every numeric column onto the grid."""
    with open(path, "r", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise RenderError(f"{path}: empty file") from None
        rows = list(reader)
    if not rows:
        raise RenderError(f"{path}: no data rows")
    for name in REQUIRED_COLUMNS:
        if name not in header:
            raise RenderError(f"{path}: missing column {name!r}")
    index = {name: k for k, name in enumerate(header)}
    p_col = index["p_MeV"]
    t_col = index["theta_rad"]
    p_raw = np.array([float(r[p_col]) for r in rows])
    t_raw = np.array([float(r[t_col]) for r in rows])
    p_values = np.unique(p_raw)
    theta_values = np.unique(t_raw)
    if len(p_values) * len(theta_values) != len(rows):
        raise RenderError(f"{path}: rows do not form a full (p, theta) grid")
    p_idx = np.searchsorted(p_values, p_raw)
    t_idx = np.searchsorted(theta_values, t_raw)
    quantities: dict[str, np.ndarray] = {}
    numeric = [name for name in header if name not in ("error_flag",)]
    for name in numeric:
        col = index[name]
        grid = np.full((len(p_values), len(theta_values)), np.nan)
        for k, row in enumerate(rows):
            cell = row[col]
            if cell:
                grid[p_idx[k], t_idx[k]] = float(cell)
        quantities[name] = grid
    return SweepGrid(path, p_values, theta_values, quantities)


def _norm_for(scale: str, data: np.ndarray):
    finite = data[np.isfinite(data)]
    if finite.size == 0:
        raise RenderError("panel has no finite values")
    if scale == "log":
        positive = finite[finite > 0]
        if positive.size == 0:
            return colors.Normalize(vmin=0.0, vmax=1.0)
        vmax = float(positive.max())
        vmin = max(float(positive.min()), vmax * 1e-8)
        return colors.LogNorm(vmin=vmin, vmax=vmax)
    if scale == "symlog":
        vmax = float(np.abs(finite).max())
        if vmax == 0.0:
            return colors.Normalize(vmin=-1.0, vmax=1.0)
        return colors.SymLogNorm(
            linthresh=vmax * 1e-6, vmin=-vmax, vmax=vmax, base=10
        )
    return colors.Normalize(vmin=float(finite.min()), vmax=float(finite.max()))


def draw_panel(ax, grid: SweepGrid, quantity: str, scale: str = "") -> None:
    """One cell-rendered heat map; extents equal the grid extents exactly."""
    if quantity not in grid.quantities:
        raise RenderError(f"{grid.path}: missing column {quantity!r}")
    label, default_scale = QUANTITY_STYLES.get(quantity, (quantity, "linear"))
    data = grid.quantities[quantity]
    norm = _norm_for(scale or default_scale, data)
    extent = [
        float(grid.p_values[0]),
        float(grid.p_values[-1]),
        float(grid.theta_values[0]),
        float(grid.theta_values[-1]),
    ]
    masked = np.ma.masked_invalid(data.T)
    if isinstance(norm, colors.LogNorm):
        masked = np.ma.masked_less_equal(masked, 0.0)
    image = ax.imshow(
        masked,
        origin="lower",
        aspect="auto",
        extent=extent,
        interpolation="nearest",
        norm=norm,
        cmap="viridis",
    )
    ax.set_xlabel("p [MeV]")
    ax.set_ylabel(r"$\theta$ [rad]")
    ax.set_title(label, fontsize=10)
    ax.figure.colorbar(image, ax=ax)


def mixed_panel_figure(grid: SweepGrid):
    """Six-panel figure (QFIM elements, SNRs, covariance) of one mixed run."""
    fig, axes = plt.subplots(2, 3, figsize=(15, 8))
    for ax, quantity in zip(axes.ravel(), MIXED_PANEL_QUANTITIES):
        draw_panel(ax, grid, quantity)
    fig.tight_layout()
    return fig


def parity_pair_figure(grid_same: SweepGrid, grid_opposite: SweepGrid, quantity: str):
    """Side-by-side same-helicity vs opposite-helicity panels of one quantity."""
    fig, axes = plt.subplots(1, 2, figsize=(11, 4.2))
    for ax, grid, tag in (
        (axes[0], grid_same, "(a) same helicity"),
        (axes[1], grid_opposite, "(b) opposite helicity"),
    ):
        draw_panel(ax, grid, quantity)
        ax.set_title(f"{tag}  {ax.get_title()}", fontsize=10)
    fig.tight_layout()
    return fig


def render(panels: list[PanelSpec]) -> list[str]:
    """Render each spec to its image file; returns the written paths."""
    written = []
    for spec in panels:
        grids = [load_grid(path) for path in spec.csv_paths]
        if len(grids) == 1:
            fig, ax = plt.subplots(figsize=(6, 4.2))
            draw_panel(ax, grids[0], spec.quantity, spec.scale)
            fig.tight_layout()
        elif len(grids) == 2:
            fig = parity_pair_figure(grids[0], grids[1], spec.quantity)
        else:
            raise RenderError("a panel takes one or two CSV files")
        fig.savefig(spec.out_path, dpi=150)
        plt.close(fig)
        written.append(spec.out_path)
    return written
