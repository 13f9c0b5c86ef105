from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def mini_tlr4_bytes() -> bytes:
    return (FIXTURES / "mini_tlr4.owl").read_bytes()
