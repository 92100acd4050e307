from pathlib import Path

import numpy as np
import pytest

from render_figures import (
    MIXED_PANEL_QUANTITIES,
    PAIR_FIGURES,
    PanelSpec,
    RenderError,
    load_grid,
    mixed_panel_figure,
    parity_pair_figure,
    render,
)
from render_figures.cli import main, run

SAMPLES = Path(__file__).parent.parent / "sample_data"
MIXED = str(SAMPLES / "emu_mixed_sample.csv")
SAME = str(SAMPLES / "emu_LL_sample.csv")
OPPOSITE = str(SAMPLES / "emu_LR_sample.csv")
COMPTON_MIXED = str(SAMPLES / "compton_mixed_sample.csv")


class TestLoadGrid:
    def test_grid_shape_and_values(self):
        grid = load_grid(MIXED)
        assert len(grid.p_values) * len(grid.theta_values) > 0
        assert grid.quantities["I_pp"].shape == (
            len(grid.p_values),
            len(grid.theta_values),
        )
        assert np.isfinite(grid.quantities["I_thetatheta"]).all()

    def test_empty_csv_rejected(self, tmp_path):
        empty = tmp_path / "empty.csv"
        empty.write_text("")
        with pytest.raises(RenderError, match="empty.csv"):
            load_grid(str(empty))

    def test_header_only_rejected(self, tmp_path):
        stub = tmp_path / "stub.csv"
        stub.write_text("p_MeV,theta_rad,I_pp\n")
        with pytest.raises(RenderError, match="no data rows"):
            load_grid(str(stub))

    def test_missing_quantity_detected(self):
        grid = load_grid(MIXED)
        fig = None
        with pytest.raises(RenderError, match="no_such_column"):
            import matplotlib.pyplot as plt

            fig, ax = plt.subplots()
            from render_figures import draw_panel

            try:
                draw_panel(ax, grid, "no_such_column")
            finally:
                plt.close(fig)


class TestFigures:
    def test_mixed_figure_has_six_panels_with_grid_extents(self):
        grid = load_grid(MIXED)
        fig = mixed_panel_figure(grid)
        try:
            axes = [ax for ax in fig.axes if ax.get_xlabel()]  # skip colorbars
            assert len(axes) == len(MIXED_PANEL_QUANTITIES)
            for ax in axes:
                x0, x1 = ax.get_xlim()
                y0, y1 = ax.get_ylim()
                assert x0 == grid.p_values[0] and x1 == grid.p_values[-1]
                assert y0 == grid.theta_values[0] and y1 == grid.theta_values[-1]
        finally:
            import matplotlib.pyplot as plt

            plt.close(fig)

    def test_parity_pair_figure(self):
        fig = parity_pair_figure(load_grid(SAME), load_grid(OPPOSITE), "I_thetatheta")
        try:
            axes = [ax for ax in fig.axes if ax.get_xlabel()]
            assert len(axes) == 2
            assert "same" in axes[0].get_title()
            assert "opposite" in axes[1].get_title()
        finally:
            import matplotlib.pyplot as plt

            plt.close(fig)

    def test_render_panel_specs(self, tmp_path):
        out = tmp_path / "panel.png"
        written = render(
            [PanelSpec(csv_paths=(MIXED,), quantity="snr_theta", out_path=str(out))]
        )
        assert written == [str(out)]
        assert out.stat().st_size > 0


class TestCli:
    def test_fig2_and_fig8(self, tmp_path):
        code = main(
            ["--csv", MIXED, "--figure", "fig2", "--outdir", str(tmp_path)]
        )
        assert code == 0
        assert (tmp_path / "fig2.png").stat().st_size > 0
        code = main(
            [
                "--csv", SAME, "--csv", OPPOSITE,
                "--figure", "fig8", "--outdir", str(tmp_path),
            ]
        )
        assert code == 0
        assert (tmp_path / "fig8.png").stat().st_size > 0

    def test_fig2_for_compton_mixed(self, tmp_path):
        code = main(
            ["--csv", COMPTON_MIXED, "--figure", "fig2", "--outdir", str(tmp_path)]
        )
        assert code == 0
        assert (tmp_path / "fig2.png").stat().st_size > 0

    def test_all_renders_every_pair_figure(self, tmp_path):
        paths = run([SAME, OPPOSITE], "all", str(tmp_path))
        assert [Path(p).name for p in paths] == [f"{k}.png" for k in sorted(PAIR_FIGURES)]

    def test_deterministic_output(self, tmp_path):
        a = tmp_path / "a"
        b = tmp_path / "b"
        run([MIXED], "fig2", str(a))
        run([MIXED], "fig2", str(b))
        assert (a / "fig2.png").read_bytes() == (b / "fig2.png").read_bytes()

    def test_wrong_csv_count_fails(self, tmp_path, capsys):
        code = main(
            [
                "--csv", MIXED, "--csv", SAME,
                "--figure", "fig2", "--outdir", str(tmp_path),
            ]
        )
        assert code == 2
        assert "one" in capsys.readouterr().err
