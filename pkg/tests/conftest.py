import pytest

_KEY = pytest.StashKey[tuple]()
_RESULTS: dict[int, str] = {}


@pytest.fixture
def criterion(request):
    """Tag the running test with an acceptance criterion number and title."""
    def tag(number: int, title: str):
        request.node.stash[_KEY] = (number, title)
    return tag


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    rep = (yield).get_result()
    tagged = item.stash.get(_KEY, None)
    if tagged is None or rep.when != "call":
        return
    number, title = tagged
    status = "PASS" if rep.passed else "FAIL"
    line = f"[{status}] criterion {number}: {title}"
    _RESULTS[number] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if _RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(_RESULTS):
            terminalreporter.write_line(_RESULTS[n])
