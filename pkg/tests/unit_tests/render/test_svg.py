from unittest.mock import MagicMock

import pytest

from semimod.algebra.pathmatrix import LatticePath
from semimod.render.svg import render_svg


@pytest.fixture
def path(gamma57):
    return LatticePath.from_string(gamma57, "DDRDRRDRDRRR")


class TestRenderSvg:
    def test_writes_svg(self, path, tmp_path):
        pytest.importorskip("matplotlib")
        file = tmp_path / "path.svg"

        assert render_svg(path, str(file)) == str(file)
        assert "<svg" in file.read_text()

    def test_draws_turning_points(self, path, mocker):
        figure_module = MagicMock()
        mocker.patch(
            "semimod.render.svg.import_dependency", return_value=figure_module
        )

        render_svg(path, "path.svg", cell_size=1.0)

        figure_module.Figure.assert_called_once_with(figsize=(8.0, 6.0))
        fig = figure_module.Figure.return_value
        ax = fig.add_subplot.return_value
        ax.scatter.assert_called_once()
        assert ax.annotate.call_count == 3
        fig.savefig.assert_called_once_with(
            "path.svg", format="svg", bbox_inches="tight"
        )

    def test_missing_matplotlib(self, path, mocker):
        mocker.patch(
            "semimod.render.svg.import_dependency",
            side_effect=ImportError("Missing optional dependency 'matplotlib'."),
        )

        with pytest.raises(ImportError, match="matplotlib"):
            render_svg(path, "path.svg")
