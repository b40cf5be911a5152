"""
Problem registry keyed by name.
"""

from functools import lru_cache
from typing import Callable, Dict, List, Optional

from moba.core.config import settings
from moba.core.exceptions import ResourceNotFoundException, ValidationException
from moba.models.front import TrueFront
from moba.models.problem import Problem
from moba.problems.lz import make_lz4
from moba.problems.welded_beam import make_welded_beam
from moba.problems.zdt import DEFAULT_DIMENSION, make_zdt1, make_zdt2, make_zdt3
from moba.services.metrics_service import MetricsService


@lru_cache(maxsize=4)
def zdt3_front(samples: int = settings.zdt3_front_samples) -> TrueFront:
    return MetricsService.build_zdt3_front(samples)


def _zdt3(dimension: int = DEFAULT_DIMENSION) -> Problem:
    return make_zdt3(dimension, front=zdt3_front())


_FACTORIES: Dict[str, Callable[..., Problem]] = {
    "zdt1": make_zdt1,
    "zdt2": make_zdt2,
    "zdt3": _zdt3,
    "lz4": make_lz4,
}


def available_problems() -> List[str]:
    return [*_FACTORIES, "welded-beam"]


def get_problem(name: str, dimension: Optional[int] = None) -> Problem:
    """Build a registered problem; ``dimension`` overrides the default d=30."""
    if name == "welded-beam":
        if dimension not in (None, 4):
            raise ValidationException(
                "welded-beam has a fixed dimension of 4", {"dimension": dimension}
            )
        return make_welded_beam()

    factory = _FACTORIES.get(name)
    if factory is None:
        raise ResourceNotFoundException(
            f"Unknown problem '{name}'", {"available": available_problems()}
        )
    if dimension is None:
        return factory()
    if dimension < 1:
        raise ValidationException("dimension must be positive", {"dimension": dimension})
    return factory(dimension)
