import pytest

_criteria: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by this test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    entry = _criteria.setdefault(number, {"title": title, "failed": [], "ran": 0})
    if report.when == "call":
        entry["ran"] += 1
    if report.failed or (report.when == "call" and report.skipped):
        entry["failed"].append(item.name)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        ok = entry["ran"] > 0 and not entry["failed"]
        line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {entry['title']}"
        if not ok:
            line += f" ({', '.join(entry['failed']) or 'not run'})"
        terminalreporter.write_line(line)
