from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent


@pytest.fixture(scope="session")
def corpus_dir() -> Path:
    return ROOT / "corpus"


@pytest.fixture(scope="session")
def negative_dir() -> Path:
    return ROOT / "corpus" / "negative"


@pytest.fixture(scope="session")
def corpus_files(corpus_dir) -> list[Path]:
    files = sorted(corpus_dir.glob("*.java"))
    assert len(files) == 8
    return files


@pytest.fixture(scope="session")
def negative_files(negative_dir) -> list[Path]:
    files = sorted(negative_dir.glob("*.java"))
    assert len(files) >= 10
    return files
