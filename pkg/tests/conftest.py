import numpy as np
import pytest

from moba.core.bounds import BoundsBox
from moba.core.logging_config import configure_logging
from moba.core.random import RngStream
from moba.schemas.params import BatParams


@pytest.fixture(scope="session", autouse=True)
def quiet_logging():
    """Keep service logs out of the test output."""
    configure_logging("WARNING")


@pytest.fixture
def rng():
    return RngStream(1234)


@pytest.fixture
def unit_box():
    return BoundsBox.uniform(0.0, 1.0, 1)


@pytest.fixture
def small_params():
    """Small swarm and short runs for fast tests."""
    return BatParams(population_size=10, max_iterations=30, seed=7)


@pytest.fixture
def np_rng():
    """Plain numpy generator for property-test inputs."""
    return np.random.default_rng(2024)


def pytest_configure(config):
    """Register custom markers."""
    config.addinivalue_line("markers", "core: Mark tests as Core tests")
    config.addinivalue_line("markers", "services: Mark tests as Service tests")
    config.addinivalue_line("markers", "problems: Mark tests as Problem tests")
    config.addinivalue_line("markers", "cli: Mark tests as CLI tests")
    config.addinivalue_line("markers", "tasks: Mark tests as Task tests")
    config.addinivalue_line("markers", "models: Mark tests as Model tests")


def pytest_collection_modifyitems(items):
    """Add markers based on directory structure."""
    for item in items:
        path = str(item.fspath)

        if "test_core" in path:
            item.add_marker("core")

        if "test_services" in path:
            item.add_marker("services")

        if "test_problems" in path:
            item.add_marker("problems")

        if "test_cli" in path:
            item.add_marker("cli")

        if "test_tasks" in path:
            item.add_marker("tasks")

        if "test_models" in path:
            item.add_marker("models")

        if "integration" in path:
            item.add_marker("integration")
