import pytest

# criterion id -> [title, passed, failed]
_CRITERIA: dict[int, list] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion this test belongs to")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        number, title = mark.args
        entry = _CRITERIA.setdefault(number, [title, 0, 0, []])
        if rep.passed:
            entry[1] += 1
        elif not rep.skipped:
            entry[2] += 1
            entry[3].append(item.name)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, ok, bad, names = _CRITERIA[number]
        status = "PASS" if bad == 0 and ok > 0 else "FAIL"
        tr.write_line(f"criterion {number:>2}: {status}  {title}  ({ok} passed, {bad} failed)")
        for name in names[:8]:
            tr.write_line(f"               failed: {name}")
        if len(names) > 8:
            tr.write_line(f"               ... and {len(names) - 8} more")
