import pytest

_results = {}   # criterion number -> [title, passed, failed]


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion n")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        n, title = mark.args
        row = _results.setdefault(n, [title, 0, 0])
        row[1 if rep.passed else 2] += 1


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_results):
        title, ok, bad = _results[n]
        status = "PASS" if bad == 0 and ok > 0 else "FAIL"
        tr.write_line(f"criterion {n:2d}: {status}  {title}  ({ok} passed, {bad} failed)")
