ACCEPTANCE = []


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    lines = [l for l in report.capstdout.splitlines() if l.startswith("criterion")]
    name = report.nodeid.split("::")[-1]
    ACCEPTANCE.append(lines[-1] if lines else f"{name}: {report.outcome.upper()}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
