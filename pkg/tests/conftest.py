from __future__ import annotations

import json
from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def smells16_dir() -> Path:
    return FIXTURES / "smells16"


@pytest.fixture(scope="session")
def smells16_manifest() -> dict:
    return json.loads((FIXTURES / "smells16_manifest.json").read_text())
