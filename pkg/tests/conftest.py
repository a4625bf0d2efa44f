import re

import pytest

_CRITERIA: dict[int, tuple[str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    m = re.match(r"test_criterion_(\d+)", item.name)
    if not m or not (report.when == "call" or report.failed):
        return
    number = int(m.group(1))
    title = (item.obj.__doc__ or item.name).strip().splitlines()[0]
    failed = report.failed or _CRITERIA.get(number, ("", "PASS"))[1] == "FAIL"
    _CRITERIA[number] = (title, "FAIL" if failed else "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(_CRITERIA):
        title, status = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {title}")
