import time

import pytest

from rqcodes.audit import run_audit

SESSION = {}


def pytest_sessionstart(session):
    SESSION["start"] = time.perf_counter()


def pytest_collection_modifyitems(session, config, items):
    # the acceptance suite runs last so criterion 10 can time the whole pipeline
    items.sort(key=lambda item: item.module.__name__.endswith("test_acceptance"))


@pytest.fixture(scope="session")
def session_start():
    return SESSION.get("start", time.perf_counter())


@pytest.fixture(scope="session")
def full_report():
    """The audit at the default budget, computed once per session."""
    return run_audit()
