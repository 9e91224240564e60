import pytest

_ACCEPTANCE: dict[str, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    if "test_acceptance.py" in report.nodeid and report.nodeid.split("::")[-1].startswith("test_criterion_"):
        name = report.nodeid.split("::")[-1]
        num = name.split("_")[2]
        _ACCEPTANCE[num] = ("PASS" if report.passed else "FAIL", name)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_ACCEPTANCE, key=int):
        status, name = _ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num:>2}: {status}  ({name})")
