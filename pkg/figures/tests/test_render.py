import importlib.util
import subprocess
import sys

import numpy as np
import pytest

from sepfigs.cli import parse_and_dispatch
from sepfigs.render import render
from sepfigs.schemas import CURVE_HEADER
from sepfigs.specs import FIGURES

HAVE_ENTROSEP = importlib.util.find_spec("entrosep") is not None


def write(path, lines):
    path.write_text("\n".join(lines) + "\n")


def synthetic_curve_csv(path, axis="R", centers=(1.5, 2.5, 3.5)):
    rng = np.random.default_rng(0)
    lines = [",".join(CURVE_HEADER)]
    for label in ("1", "2", "inf", "ppt"):
        for c in centers:
            n = 1000
            k = int(rng.integers(100, 900))
            p = k / n
            se = (p * (1 - p) / n) ** 0.5
            lines.append(f"{label},{axis},{c},{n},{k},{p:.17g},{se:.17g}")
    write(path, lines)


def synthetic_global_csv(path):
    write(path, [
        "q,inv_q,p,std_err,n",
        "1,1,0.6428,0.00048,1000000",
        "2,0.5,0.67,0.00047,1000000",
        "10,0.1,0.73,0.00044,1000000",
        "inf,0,0.7428,0.00044,1000000",
    ])


def synthetic_scatter_csv(path):
    rng = np.random.default_rng(1)
    lines = ["delta,c_squared"]
    for _ in range(500):
        d = rng.uniform(1e-6, 0.69)
        lines.append(f"{d:.17g},{min(1.0, d * 1.2 + rng.uniform(0, 0.2)):.17g}")
    write(path, lines)


def synthetic_dimscan_csv(path):
    write(path, [
        "n_a,n_b,n_total_dim,p_entropic_inf,se_entropic,p_ppt,se_ppt,n",
        "2,2,4,0.889,0.001,0.632,0.0015,100000",
        "2,3,6,0.886,0.001,0.384,0.0015,100000",
        "2,4,8,0.864,0.0011,0.224,0.0013,100000",
        "3,3,9,0.952,0.0007,0.166,0.0012,100000",
        "3,4,12,0.941,0.0007,0.073,0.0008,100000",
        "4,4,16,0.977,0.0005,0.026,0.0005,100000",
    ])


@pytest.fixture
def synthetic(tmp_path):
    files = {
        "curve": tmp_path / "curve.csv",
        "global": tmp_path / "global.csv",
        "scatter": tmp_path / "scatter.csv",
        "dimscan": tmp_path / "dimscan.csv",
    }
    synthetic_curve_csv(files["curve"])
    synthetic_global_csv(files["global"])
    synthetic_scatter_csv(files["scatter"])
    synthetic_dimscan_csv(files["dimscan"])
    return files


class TestRender:
    @pytest.mark.parametrize("figure_id", sorted(FIGURES))
    def test_every_figure_renders(self, figure_id, synthetic, tmp_path):
        spec = FIGURES[figure_id]
        out = tmp_path / f"fig{figure_id}.png"
        render(figure_id, [synthetic[spec.kind]], out)
        assert out.exists() and out.stat().st_size > 5_000

    def test_axis_domains_match_reference(self):
        assert FIGURES[1].xlim == (1.0, 4.0)
        assert FIGURES[2].xlim == (1.0, 4.0)
        assert FIGURES[3].xlim == (0.25, 1.0)
        assert FIGURES[4].xlim == (0.25, 1.0)
        for fid in (5, 8):
            assert FIGURES[fid].xlim == (0.0, 0.5)

    def test_rendering_is_deterministic(self, synthetic, tmp_path):
        out_a = tmp_path / "a.png"
        out_b = tmp_path / "b.png"
        render(1, [synthetic["curve"]], out_a)
        render(1, [synthetic["curve"]], out_b)
        assert out_a.read_bytes() == out_b.read_bytes()

    def test_empty_csv_renders_no_data(self, tmp_path):
        empty = tmp_path / "empty.csv"
        write(empty, [",".join(CURVE_HEADER)])
        out = tmp_path / "fig.png"
        status = parse_and_dispatch(["1", "--csv", str(empty), "--out", str(out)])
        assert status == 0
        assert out.exists()

    def test_schema_mismatch_is_descriptive_failure(self, synthetic, tmp_path, capsys):
        out = tmp_path / "fig.png"
        status = parse_and_dispatch(
            ["5", "--csv", str(synthetic["curve"]), "--out", str(out)]
        )
        assert status == 2
        assert "expected header" in capsys.readouterr().err

    def test_unknown_figure_id(self, synthetic, tmp_path):
        status = parse_and_dispatch(
            ["11", "--csv", str(synthetic["curve"]), "--out", str(tmp_path / "x.png")]
        )
        assert status == 2

    def test_missing_csv(self, tmp_path):
        status = parse_and_dispatch(
            ["1", "--csv", str(tmp_path / "nope.csv"), "--out", str(tmp_path / "x.png")]
        )
        assert status == 2


@pytest.fixture(scope="module")
def produced(tmp_path_factory):
    root = tmp_path_factory.mktemp("csvs")

    def primary(*argv):
        cmd = [sys.executable, "-m", "entrosep.cli", *argv]
        subprocess.run(cmd, check=True, capture_output=True, text=True)

    common = ["--samples", "4000", "--workers", "1"]
    primary("volume-curve", "--dims", "2", "2", "--seed", "1", "--q", "1,2,5,inf",
            "--axis", "R", *common, "--out", str(root / "fig1.csv"))
    primary("coincidence-curve", "--dims", "2", "2", "--seed", "2", "--q", "1,2,5,inf",
            "--axis", "R", *common, "--out", str(root / "fig2.csv"))
    primary("volume-curve", "--dims", "2", "2", "--seed", "3", "--q", "1,2,5,inf",
            "--axis", "lmax", *common, "--out", str(root / "fig3.csv"))
    primary("coincidence-curve", "--dims", "2", "2", "--seed", "4", "--q", "1,2,5,inf",
            "--axis", "lmax", *common, "--out", str(root / "fig4.csv"))
    primary("global-vs-q", "--dims", "2", "2", "--seed", "5", *common,
            "--out", str(root / "fig5.csv"))
    primary("volume-curve", "--dims", "2", "3", "--seed", "6", "--q", "1,2,5,inf",
            "--axis", "R", *common, "--out", str(root / "fig6.csv"))
    primary("coincidence-curve", "--dims", "2", "3", "--seed", "7", "--q", "1,2,5,inf",
            "--axis", "R", *common, "--out", str(root / "fig7.csv"))
    primary("global-vs-q", "--dims", "2", "3", "--seed", "8", *common,
            "--out", str(root / "fig8.csv"))
    primary("c2-scatter", "--seed", "9", *common, "--out", str(root / "fig9.csv"))
    primary("dim-scan", "--pair", "2", "2", "--pair", "2", "3", "--pair", "2", "4",
            "--pair", "3", "3", "--pair", "3", "4", "--pair", "4", "4",
            "--samples", "1000", "--seed", "10", "--out", str(root / "fig10.csv"))
    return root


@pytest.mark.skipif(not HAVE_ENTROSEP, reason="primary package not installed")
class TestEndToEnd:
    """Drive the primary CLI (the external interface) and render all ten figures."""

    @pytest.mark.parametrize("figure_id", sorted(FIGURES))
    def test_render_from_primary_output(self, figure_id, produced, tmp_path):
        out = tmp_path / f"fig{figure_id}.png"
        status = parse_and_dispatch(
            [str(figure_id), "--csv", str(produced / f"fig{figure_id}.csv"),
             "--out", str(out)]
        )
        assert status == 0
        assert out.exists() and out.stat().st_size > 5_000
