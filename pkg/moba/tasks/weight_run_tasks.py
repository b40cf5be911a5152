"""
Weight-run task units.

Tasks carry everything needed to rebuild a run in another process; results
are returned in task order whatever the worker count.
"""

from concurrent.futures import ProcessPoolExecutor
from typing import List, NamedTuple

from moba.core.logging_config import get_logger
from moba.core.random import RngStream
from moba.models.problem import Problem
from moba.schemas.params import BatParams, MobaOptions

logger = get_logger(__name__)


class WeightRunTask(NamedTuple):
    problem: Problem
    params: BatParams
    seed: int
    restart: int
    run: int
    options: MobaOptions


def run_weight_task(task: WeightRunTask):
    from moba.services.moba_service import MobaService

    service = MobaService(task.problem, task.params, task.options)
    return service.run_weight(RngStream(task.seed), task.restart, task.run)


def execute_tasks(tasks: List[WeightRunTask], workers: int = 1) -> list:
    """Run tasks sequentially or in a process pool."""
    if workers <= 1 or len(tasks) <= 1:
        return [run_weight_task(task) for task in tasks]

    logger.info("Dispatching weight runs", tasks=len(tasks), workers=workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run_weight_task, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
