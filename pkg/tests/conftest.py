from pathlib import Path

import pytest

CORPUS = Path(__file__).resolve().parent.parent / "corpus"

ACCEPTANCE_LINES: list[str] = []


def corpus_files(pattern="*.json"):
    return sorted(CORPUS.glob(pattern))


@pytest.fixture
def corpus_dir():
    return CORPUS


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
