import pytest

from ricciflat.generation import GenerationConfig, generate

DESK_SIZES = (10, 12, 14)


@pytest.fixture(scope="session")
def generated():
    """Generator output for the desk-scale orders, computed once per session."""
    return {n: list(generate(GenerationConfig(n, 5))) for n in DESK_SIZES}


_CRITERIA: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(tryfirst=True)
def pytest_runtest_setup(item):
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        item.user_properties.append(("criterion", tuple(marker.args)))


def pytest_runtest_logreport(report):
    tag = dict(report.user_properties).get("criterion")
    if tag is None or not (report.when == "call" or report.failed):
        return
    number, title = tag
    _, ok = _CRITERIA.get(number, (title, True))
    _CRITERIA[number] = (title, ok and not report.failed)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, ok = _CRITERIA[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}")
