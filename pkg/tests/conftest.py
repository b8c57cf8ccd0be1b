import pytest

from comin.catalog import catalog_entries

# criterion number -> (passed, detail); filled in by test_acceptance
CRITERIA: dict[int, tuple[bool, str]] = {}


def spaces_up_to(max_dim, include_exceptional=True):
    return [s for s in catalog_entries(8, include_exceptional) if s.dim <= max_dim]


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("COMIN_CACHE_DIR", str(tmp_path / "cache"))


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(CRITERIA):
        ok, detail = CRITERIA[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")
