import numpy as np
import pandas as pd
import pytest
from pydantic import ValidationError

from moba.core.exceptions import EXIT_FAILURE, EXIT_IO, EXIT_OK, ValidationException
from moba.schemas.experiment import SweepConfig, TableConfig
from moba.schemas.params import BatParams
from moba.services.experiment_service import ExperimentService, run_sweep, run_table

TINY = BatParams(population_size=5, max_iterations=12, seed=0)


def sweep_config(tmp_path, **overrides):
    values = {
        "problem": "zdt1",
        "dimension": 3,
        "params": TINY,
        "n_points": 2,
        "population_sizes": [4, 6],
        "alphas": [0.5, 0.9],
        "gammas": [0.9],
        "seeds": [0, 1],
        "out": str(tmp_path / "sweep.csv"),
    }
    values.update(overrides)
    return SweepConfig(**values)


def table_config(tmp_path, **overrides):
    values = {
        "problems": ["zdt1", "lz4"],
        "dimension": 3,
        "params": TINY,
        "n_points": 2,
        "horizons": [8, 20],
        "seeds": [3],
        "out": str(tmp_path / "table.csv"),
    }
    values.update(overrides)
    return TableConfig(**values)


class TestSweepConfig:
    def test_grid_order_and_base_params(self, tmp_path):
        grid = sweep_config(tmp_path, gammas=[0.5, 0.9]).grid()

        assert [(p.population_size, p.alpha, p.gamma) for p in grid] == [
            (4, 0.5, 0.5),
            (4, 0.5, 0.9),
            (4, 0.9, 0.5),
            (4, 0.9, 0.9),
            (6, 0.5, 0.5),
            (6, 0.5, 0.9),
            (6, 0.9, 0.5),
            (6, 0.9, 0.9),
        ]
        assert all(p.max_iterations == 12 for p in grid)

    @pytest.mark.parametrize(
        "field, values",
        [("alphas", [0.5, 1.5]), ("gammas", [0.0]), ("population_sizes", [0]), ("seeds", [-1])],
    )
    def test_axis_bounds(self, tmp_path, field, values):
        with pytest.raises(ValidationError):
            sweep_config(tmp_path, **{field: values})

    def test_empty_axis(self, tmp_path):
        with pytest.raises(ValidationError):
            sweep_config(tmp_path, alphas=[])

    def test_unknown_problem(self, tmp_path):
        with pytest.raises(ValidationError):
            sweep_config(tmp_path, problem="dtlz2")


class TestTableConfig:
    def test_defaults(self):
        cfg = TableConfig()
        assert cfg.problems == ["zdt1", "zdt2", "zdt3", "lz4"]
        assert cfg.horizons == [2000, 5000]
        assert cfg.out == "table.csv"

    def test_horizons_sorted_and_unique(self, tmp_path):
        assert table_config(tmp_path, horizons=[20, 8, 20]).horizons == [8, 20]

    def test_non_positive_horizon(self, tmp_path):
        with pytest.raises(ValidationError):
            table_config(tmp_path, horizons=[0, 10])


class TestSweep:
    def test_one_row_per_cell_and_seed(self, tmp_path):
        frame = ExperimentService.sweep(sweep_config(tmp_path))

        assert len(frame) == 2 * 2 * 1 * 2
        assert frame[["population_size", "alpha", "seed"]].iloc[:4].values.tolist() == [
            [4, 0.5, 0],
            [4, 0.5, 1],
            [4, 0.9, 0],
            [4, 0.9, 1],
        ]
        assert (frame["archive_size"] >= 1).all()
        assert (frame["archive_size"] <= 2).all()
        assert np.allclose(
            frame["front_error_per_point"], frame["front_error_raw"] / frame["archive_size"]
        )

    def test_repeatable(self, tmp_path):
        cfg = sweep_config(tmp_path, population_sizes=[4], alphas=[0.9])
        pd.testing.assert_frame_equal(ExperimentService.sweep(cfg), ExperimentService.sweep(cfg))

    def test_constrained_problem_leaves_error_blank(self, tmp_path):
        cfg = sweep_config(
            tmp_path, problem="welded-beam", dimension=None, population_sizes=[4], alphas=[0.9]
        )
        frame = ExperimentService.sweep(cfg)
        assert frame["front_error_raw"].isna().all()
        assert (frame["archive_size"] + frame["infeasible_discards"] <= 2).all()


class TestTable:
    def test_rows_per_problem_horizon_seed(self, tmp_path):
        frame = ExperimentService.table(table_config(tmp_path))

        assert frame[["problem", "iterations"]].values.tolist() == [
            ["zdt1", 8],
            ["zdt1", 20],
            ["lz4", 8],
            ["lz4", 20],
        ]
        assert frame["front_error_raw"].notna().all()

    def test_last_horizon_matches_plain_run(self, tmp_path):
        cfg = table_config(tmp_path, problems=["zdt1"], horizons=[10, 20])
        horizon_row = ExperimentService.table(cfg).iloc[-1]

        plain = sweep_config(
            tmp_path,
            params=TINY.model_copy(update={"max_iterations": 20}),
            population_sizes=[5],
            alphas=[TINY.alpha],
            gammas=[TINY.gamma],
            seeds=[3],
        )
        plain_row = ExperimentService.sweep(plain).iloc[0]
        assert horizon_row["front_error_raw"] == pytest.approx(plain_row["front_error_raw"])
        assert horizon_row["archive_size"] == plain_row["archive_size"]

    def test_problem_without_front_rejected(self, tmp_path):
        with pytest.raises(ValidationException):
            ExperimentService.table(table_config(tmp_path, problems=["welded-beam"]))


class TestSummarize:
    def test_mean_over_seeds(self):
        frame = pd.DataFrame(
            {
                "problem": ["zdt1", "zdt1", "lz4"],
                "iterations": [10, 10, 10],
                "front_error_per_point": [0.1, 0.3, 0.5],
            }
        )
        summary = ExperimentService.summarize(frame, ["problem", "iterations"])

        assert summary["problem"].tolist() == ["zdt1", "lz4"]
        assert summary["front_error_mean"].tolist() == pytest.approx([0.2, 0.5])
        assert summary["seeds"].tolist() == [2, 1]
        assert np.isnan(summary["front_error_std"].iloc[1])


class TestRunExperiments:
    def test_sweep_writes_csv_and_prints_means(self, tmp_path, capsys):
        cfg = sweep_config(tmp_path, population_sizes=[4], alphas=[0.5, 0.9])
        assert run_sweep(cfg) == EXIT_OK

        written = pd.read_csv(tmp_path / "sweep.csv")
        assert list(written.columns)[:3] == ["population_size", "alpha", "gamma"]
        assert len(written) == 4
        out = capsys.readouterr().out
        assert "front_error_mean" in out.splitlines()[0]
        assert len(out.splitlines()) == 3

    def test_table_writes_csv(self, tmp_path, capsys):
        assert run_table(table_config(tmp_path, problems=["zdt2"])) == EXIT_OK

        written = pd.read_csv(tmp_path / "table.csv")
        assert written["iterations"].tolist() == [8, 20]
        assert "zdt2" in capsys.readouterr().out

    def test_unwritable_output(self, tmp_path, capsys):
        cfg = sweep_config(tmp_path, out=str(tmp_path / "missing" / "sweep.csv"))
        assert run_sweep(cfg) == EXIT_IO
        assert "error:" in capsys.readouterr().err

    def test_unexpected_error(self, tmp_path, capsys, monkeypatch):
        def explode(cfg):
            raise RuntimeError("out of bats")

        monkeypatch.setattr(ExperimentService, "table", staticmethod(explode))
        assert run_table(table_config(tmp_path)) == EXIT_FAILURE
        assert "Experiment failed: out of bats" in capsys.readouterr().err
