import json
from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"

# filled by test_acceptance: criterion number -> (passed, detail)
ACCEPTANCE = {}


@pytest.fixture(scope="session")
def dictionary_entries():
    return json.loads((DATA / "dictionary.json").read_text())


@pytest.fixture(scope="session")
def sample_table_path():
    return DATA / "oeis_sample.txt"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:>2}: {'PASS' if ok else 'FAIL'}  {detail}")


@pytest.fixture(scope="session")
def census_by_size():
    """Census records keyed by size, then by canonical name (n = 2..12)."""
    from stdpuzzle.dictionary import census

    cache = {}

    def get(size):
        if size not in cache:
            cache[size] = {r.canonical: r for r in census(size, 12)}
        return cache[size]

    return get
