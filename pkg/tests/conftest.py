import pytest

_verdicts: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    if report.when == "call" or (report.when == "setup" and report.failed):
        ok = report.passed and _verdicts.get(number, ("PASS", ""))[0] == "PASS"
        _verdicts[number] = ("PASS" if ok else "FAIL", title)
        print(f"\ncriterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}")


def pytest_terminal_summary(terminalreporter):
    if not _verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_verdicts):
        verdict, title = _verdicts[number]
        terminalreporter.write_line(f"criterion {number:2d}: {verdict}  {title}")
