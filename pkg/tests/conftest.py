from pathlib import Path

import pytest

from tests.helpers import DATA_DIR


@pytest.fixture
def obstruction_dir() -> Path:
    return DATA_DIR / "obstructions"
