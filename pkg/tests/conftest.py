"""Print one PASS/FAIL line per acceptance criterion at the end of the run."""

_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or report.outcome != "passed":
        previous = _acceptance.get(name)
        if previous is None or previous == "PASS":
            _acceptance[name] = report.outcome.upper().replace("PASSED", "PASS").replace("FAILED", "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance.items():
        terminalreporter.write_line(f"{outcome:<7} {name}")
