"""
Command-line front end.

    moba run --problem zdt1 --points 50 --restarts 4 --seed 1
    moba sweep --problem zdt1 --pops 10 25 50 --alphas 0.5 0.9 --gammas 0.5 0.9
    moba table --problems zdt1 zdt2 zdt3 lz4 --horizons 2000 5000
    moba problems
"""

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Type, TypeVar

from pydantic import BaseModel, ValidationError

from moba.core.config import settings
from moba.core.exceptions import (
    EXIT_OK,
    EXIT_USAGE,
    ConfigurationException,
    MobaException,
    ValidationException,
    exit_code_for,
)
from moba.core.logging_config import configure_logging
from moba.schemas.experiment import TABLE_HORIZONS, TABLE_PROBLEMS, SweepConfig, TableConfig
from moba.schemas.run_config import RunConfig

ConfigT = TypeVar("ConfigT", bound=BaseModel)

# flag destination -> path inside the config document
_PARAM_PATHS: Dict[str, tuple] = {
    "pop": ("params", "population_size"),
    "iters": ("params", "max_iterations"),
    "alpha": ("params", "alpha"),
    "gamma": ("params", "gamma"),
    "fmin": ("params", "f_min"),
    "fmax": ("params", "f_max"),
}

_FLAG_PATHS: Dict[str, tuple] = {
    "problem": ("problem",),
    "dim": ("dimension",),
    "points": ("n_points",),
    "restarts": ("restarts",),
    "penalty": ("penalty",),
    "tolerance": ("constraint_tolerance",),
    "trace_every": ("trace_every",),
    "workers": ("workers",),
    "archive_improvements": ("archive_improvements",),
    "timing": ("record_wall_time",),
    "log_level": ("log_level",),
    **_PARAM_PATHS,
    "seed": ("params", "seed"),
    "out_front": ("outputs", "front"),
    "out_trace": ("outputs", "trace"),
    "out_summary": ("outputs", "summary"),
    "out_front_trace": ("outputs", "front_trace"),
}

_EXPERIMENT_PATHS: Dict[str, tuple] = {
    "dim": ("dimension",),
    "points": ("n_points",),
    "seeds": ("seeds",),
    "penalty": ("penalty",),
    "workers": ("workers",),
    "out": ("out",),
    "log_level": ("log_level",),
    **_PARAM_PATHS,
}

_SWEEP_PATHS: Dict[str, tuple] = {
    **_EXPERIMENT_PATHS,
    "problem": ("problem",),
    "pops": ("population_sizes",),
    "alphas": ("alphas",),
    "gammas": ("gammas",),
}

_TABLE_PATHS: Dict[str, tuple] = {
    **_EXPERIMENT_PATHS,
    "problems": ("problems",),
    "horizons": ("horizons",),
}


class _Parser(argparse.ArgumentParser):
    """Raises instead of exiting so callers decide the exit status."""

    def error(self, message: str):
        raise ValidationException(message, {"usage": self.format_usage()})


def _add_param_flags(p: argparse.ArgumentParser, iterations: bool = True) -> None:
    p.add_argument("--pop", type=int, help=f"Population size (default {settings.population_size})")
    if iterations:
        p.add_argument(
            "--iters", type=int, help=f"Iterations per run (default {settings.max_iterations})"
        )
    p.add_argument("--alpha", type=float, help=f"Loudness cooling (default {settings.alpha})")
    p.add_argument("--gamma", type=float, help=f"Pulse rate growth (default {settings.gamma})")
    p.add_argument("--fmin", type=float, help=f"Minimum frequency (default {settings.f_min})")
    p.add_argument("--fmax", type=float, help=f"Maximum frequency (default {settings.f_max})")


def build_run_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="moba run", description="Run a multiobjective bat algorithm benchmark.")
    p.add_argument("--config", help="JSON file with RunConfig fields")
    p.add_argument("--problem", help="zdt1, zdt2, zdt3, lz4 or welded-beam")
    p.add_argument("--dim", type=int, help="Dimension override")
    p.add_argument("--points", type=int, help=f"Weight runs per restart (default {settings.n_points})")
    p.add_argument("--restarts", type=int, help=f"Independent restarts (default {settings.restarts})")
    _add_param_flags(p)
    p.add_argument("--penalty", type=float, help=f"Penalty coefficient (default {settings.penalty:g})")
    p.add_argument("--tolerance", type=float, help="Constraint tolerance for archiving")
    p.add_argument("--seed", type=int, help=f"Random seed (default {settings.seed})")
    p.add_argument("--trace-every", type=int, help="Stride of written trace rows")
    p.add_argument("--workers", type=int, help="Worker processes for weight runs")
    p.add_argument(
        "--archive-improvements",
        action="store_true",
        default=None,
        help="Archive every improving best, not only final ones",
    )
    p.add_argument("--timing", action="store_true", default=None, help="Write wall time to the summary")
    p.add_argument("--out-front", help="Front CSV path")
    p.add_argument("--out-trace", help="Trace CSV path")
    p.add_argument("--out-summary", help="Summary JSON path")
    p.add_argument("--out-front-trace", help="Front error per checkpoint CSV path")
    p.add_argument("--log-level", help="Logging level")
    return p


def _build_experiment_parser(
    prog: str, description: str, iterations: bool = True
) -> argparse.ArgumentParser:
    p = _Parser(prog=prog, description=description)
    p.add_argument("--config", help="JSON file with experiment fields")
    p.add_argument("--dim", type=int, help="Dimension override")
    p.add_argument("--points", type=int, help=f"Weight runs per seed (default {settings.n_points})")
    p.add_argument("--seeds", type=int, nargs="+", help=f"Random seeds (default {settings.seed})")
    _add_param_flags(p, iterations)
    p.add_argument("--penalty", type=float, help=f"Penalty coefficient (default {settings.penalty:g})")
    p.add_argument("--workers", type=int, help="Worker processes for weight runs")
    p.add_argument("--out", help="Result CSV path")
    p.add_argument("--log-level", help="Logging level")
    return p


def build_sweep_parser() -> argparse.ArgumentParser:
    p = _build_experiment_parser(
        "moba sweep", "Sweep population size, loudness cooling and pulse rate growth."
    )
    p.add_argument("--problem", help="Registered problem name")
    p.add_argument("--pops", type=int, nargs="+", help="Population sizes")
    p.add_argument("--alphas", type=float, nargs="+", help="Loudness cooling factors")
    p.add_argument("--gammas", type=float, nargs="+", help="Pulse rate growth factors")
    return p


def build_table_parser() -> argparse.ArgumentParser:
    p = _build_experiment_parser(
        "moba table",
        "Front error of benchmark problems at fixed iteration horizons.",
        iterations=False,
    )
    p.add_argument("--problems", nargs="+", help=f"Problems (default {' '.join(TABLE_PROBLEMS)})")
    p.add_argument(
        "--horizons",
        type=int,
        nargs="+",
        help=f"Iteration counts (default {' '.join(map(str, TABLE_HORIZONS))})",
    )
    return p


def _load_config_file(path: str) -> Dict[str, Any]:
    try:
        document = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigurationException(f"Could not read config file {path}: {e}") from e
    if not isinstance(document, dict):
        raise ConfigurationException(f"Config file {path} must hold a JSON object")
    return document


def _set_path(document: Dict[str, Any], path: tuple, value: Any) -> None:
    node = document
    for key in path[:-1]:
        node = node.setdefault(key, {})
    node[path[-1]] = value


def _parse(
    parser: argparse.ArgumentParser,
    flag_paths: Dict[str, tuple],
    model: Type[ConfigT],
    argv: Sequence[str],
    required: Sequence[str] = (),
) -> ConfigT:
    """Flags override the config file, which overrides the built-in defaults."""
    args = parser.parse_args(list(argv))
    document: Dict[str, Any] = _load_config_file(args.config) if args.config else {}
    for dest, path in flag_paths.items():
        value = getattr(args, dest, None)
        if value is not None:
            _set_path(document, path, value)
    for field in required:
        if field not in document:
            raise ValidationException(f"--{field} is required", {"usage": parser.format_usage()})
    try:
        return model.model_validate(document)
    except ValidationError as e:
        raise ValidationException(
            "Invalid configuration", {"errors": e.errors(include_url=False)}
        ) from e


def parse_config(argv: Sequence[str]) -> RunConfig:
    return _parse(build_run_parser(), _FLAG_PATHS, RunConfig, argv, required=("problem",))


def parse_sweep_config(argv: Sequence[str]) -> SweepConfig:
    return _parse(build_sweep_parser(), _SWEEP_PATHS, SweepConfig, argv, required=("problem",))


def parse_table_config(argv: Sequence[str]) -> TableConfig:
    return _parse(build_table_parser(), _TABLE_PATHS, TableConfig, argv)


def _report(exc: MobaException) -> None:
    print(f"error: {exc.message}", file=sys.stderr)
    for error in exc.details.get("errors", []):
        location = ".".join(str(part) for part in error.get("loc", ()))
        print(f"  {location}: {error.get('msg')}", file=sys.stderr)
    if "usage" in exc.details:
        print(exc.details["usage"], file=sys.stderr, end="")


def main(argv: Optional[List[str]] = None) -> int:
    from moba.problems.registry import available_problems
    from moba.services.benchmark_service import run_benchmark
    from moba.services.experiment_service import run_sweep, run_table

    commands = {
        "run": (parse_config, run_benchmark),
        "sweep": (parse_sweep_config, run_sweep),
        "table": (parse_table_config, run_table),
    }

    argv = list(sys.argv[1:] if argv is None else argv)
    command, rest = (argv[0], argv[1:]) if argv else ("", [])

    if command == "problems":
        print("\n".join(available_problems()))
        return EXIT_OK
    if command not in commands:
        print("usage: moba {run,sweep,table,problems} [options]", file=sys.stderr)
        return EXIT_USAGE

    parse, execute = commands[command]
    try:
        cfg = parse(rest)
    except MobaException as exc:
        _report(exc)
        return exit_code_for(exc)
    configure_logging(cfg.log_level)
    return execute(cfg)


if __name__ == "__main__":
    sys.exit(main())
