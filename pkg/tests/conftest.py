import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", deadline=None, max_examples=300,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# criterion number -> list of (label, passed); filled by tests/test_acceptance.py
ACCEPTANCE: dict[int, list[tuple[str, bool]]] = {}


@pytest.fixture
def record_criterion():
    def record(number: int, label: str, passed: bool) -> None:
        ACCEPTANCE.setdefault(number, []).append((label, bool(passed)))

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        parts = ACCEPTANCE[number]
        ok = all(p for _, p in parts)
        detail = "; ".join(f"{label}: {'ok' if p else 'failed'}" for label, p in parts)
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {number}  {detail}")
